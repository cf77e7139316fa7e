#include "torcob/io.hpp"

#include "torcob/fanlib.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace torcob {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("fan file: " + what);
}

}  // namespace

FanFile FanFile::from_fan(const Fan& fan) {
  FanFile f;
  f.name = fan.name();
  f.rank = fan.rank();
  f.rays = fan.rays();
  for (const Cone& c : fan.max_cones()) {
    std::vector<int> one_based;
    for (int r : c.rays) one_based.push_back(r + 1);
    f.max_cones.push_back(std::move(one_based));
  }
  return f;
}

std::vector<std::vector<int>> FanFile::zero_based_cones() const {
  std::vector<std::vector<int>> cones;
  for (const auto& c : max_cones) {
    std::vector<int> shifted;
    for (int r : c) shifted.push_back(r - 1);
    cones.push_back(std::move(shifted));
  }
  return cones;
}

Fan FanFile::to_fan() const { return Fan::make(rank, rays, zero_based_cones(), name); }

FanFile parse_fan_file(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");

  FanFile f;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) bad("name must be a string");
    f.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("rank") || !doc["rank"].is_number_integer())
    bad("rank must be an integer");
  f.rank = doc["rank"].get<int>();

  if (!doc.contains("rays") || !doc["rays"].is_array())
    bad("rays must be a list of integer vectors");
  for (const json& row : doc["rays"]) {
    if (!row.is_array()) bad("rays must be a list of integer vectors");
    LatticeVector v;
    for (const json& x : row) {
      if (!x.is_number_integer()) bad("ray entries must be integers");
      v.push_back(Int(x.get<long long>()));
    }
    f.rays.push_back(std::move(v));
  }

  if (!doc.contains("max_cones") || !doc["max_cones"].is_array())
    bad("max_cones must be a list of index lists");
  for (const json& row : doc["max_cones"]) {
    if (!row.is_array()) bad("max_cones must be a list of index lists");
    std::vector<int> c;
    for (const json& x : row) {
      if (!x.is_number_integer()) bad("cone entries must be 1-based ray indices");
      c.push_back(x.get<int>());
    }
    f.max_cones.push_back(std::move(c));
  }

  for (const char* key : {"name", "rank", "rays", "max_cones"}) doc.erase(key);
  if (!doc.empty()) bad("unknown field \"" + doc.begin().key() + "\"");
  return f;
}

std::string serialize_fan_file(const FanFile& f) {
  std::ostringstream out;
  out << "{\n";
  if (!f.name.empty()) out << "  \"name\": " << json(f.name).dump() << ",\n";
  out << "  \"rank\": " << f.rank << ",\n";
  auto rows = [&out](const auto& table, auto entry) {
    for (size_t i = 0; i < table.size(); ++i) {
      out << "    [";
      for (size_t j = 0; j < table[i].size(); ++j)
        out << (j ? ", " : "") << entry(table[i][j]);
      out << (i + 1 < table.size() ? "],\n" : "]\n");
    }
  };
  out << "  \"rays\": [\n";
  rows(f.rays, [](const Int& x) { return x.str(); });
  out << "  ],\n  \"max_cones\": [\n";
  rows(f.max_cones, [](int x) { return std::to_string(x); });
  out << "  ]\n}\n";
  return out.str();
}

namespace {

FanFile parse_fan_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fan file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  FanFile f = parse_fan_file(buf.str());
  if (f.name.empty())
    f.name = std::filesystem::path(path).stem().string();
  return f;
}

}  // namespace

Fan load_fan_file(const std::string& path) { return parse_fan_path(path).to_fan(); }

FanFile resolve_fan_file(const std::string& spec) {
  const char* env = std::getenv("TORCOB_FAN_PATH");
  return resolve_fan_file(spec, env ? env : "");
}

FanFile resolve_fan_file(const std::string& spec, const std::string& search_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return parse_fan_path(spec);

  const auto& names = builtin_fan_names();
  if (std::find(names.begin(), names.end(), spec) != names.end())
    return FanFile::from_fan(builtin_fan(spec));

  size_t pos = 0;
  while (pos <= search_path.size()) {
    size_t next = search_path.find(':', pos);
    if (next == std::string::npos) next = search_path.size();
    std::string dir = search_path.substr(pos, next - pos);
    pos = next + 1;
    if (dir.empty()) continue;
    std::string candidate = dir + "/" + spec + ".json";
    if (std::filesystem::is_regular_file(candidate, ec))
      return parse_fan_path(candidate);
  }
  throw std::invalid_argument("unknown fan \"" + spec +
                              "\": not a file, a built-in name, or present "
                              "on the fan search path");
}

Fan resolve_fan(const std::string& spec) {
  return resolve_fan_file(spec).to_fan();
}

Fan resolve_fan(const std::string& spec, const std::string& search_path) {
  return resolve_fan_file(spec, search_path).to_fan();
}

// --- polynomial expressions ---

namespace {

// expr := term (('+'|'-') term)*
// term := signed ('*' signed)*
// signed := '-' signed | power
// power := atom ('^' integer)?
// atom := integer | variable | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const std::string& text, const CoeffRing& ring,
             const std::vector<std::string>& vars, int poly_bound)
      : s_(text), ring_(ring), vars_(vars), pb_(poly_bound) {}

  GradedSeries run() {
    GradedSeries v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial: " + what + " at position " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  GradedSeries expr() {
    GradedSeries v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  GradedSeries term() {
    GradedSeries v = signed_factor();
    while (eat('*')) v = v * signed_factor();
    return v;
  }

  GradedSeries signed_factor() {
    if (eat('-')) return -signed_factor();
    return power();
  }

  GradedSeries power() {
    GradedSeries base = atom();
    if (!eat('^')) return base;
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("exponent must be a nonnegative integer");
    return base.pow(std::stoi(s_.substr(start, pos_ - start)));
  }

  GradedSeries atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      GradedSeries v = expr();
      if (!eat(')')) fail("missing )");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      Int n(s_.substr(start, pos_ - start));
      return GradedSeries::constant(ring_, vars_, pb_, Coeff::scalar(Rat(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable \"" + name + "\"");
      return GradedSeries::variable(ring_, vars_, pb_,
                                    static_cast<int>(it - vars_.begin()));
    }
    fail("expected a number, a variable, or (");
  }

  const std::string& s_;
  const CoeffRing& ring_;
  const std::vector<std::string>& vars_;
  int pb_;
  size_t pos_ = 0;
};

}  // namespace

GradedSeries parse_polynomial(const std::string& text, const CoeffRing& ring,
                              const std::vector<std::string>& vars,
                              int poly_bound) {
  return PolyParser(text, ring, vars, poly_bound).run();
}

// --- machine series form ---

std::string series_to_json(const GradedSeries& s) {
  json terms = json::array();
  for (const auto& [exps, coeff] : s.terms()) {
    json records = json::array();
    for (const auto& [gens, value] : coeff.terms()) {
      records.push_back({{"gens", gens},
                         {"num", boost::multiprecision::numerator(value).str()},
                         {"den", boost::multiprecision::denominator(value).str()}});
    }
    terms.push_back({{"exps", exps}, {"coeff", std::move(records)}});
  }
  return json({{"terms", std::move(terms)}}).dump();
}

GradedSeries series_from_json(const std::string& json_text,
                              const CoeffRing& ring,
                              const std::vector<std::string>& vars,
                              int poly_bound) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("series: not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw std::invalid_argument("series: expected an object with a terms list");

  GradedSeries s(ring, vars, poly_bound);
  for (const json& term : doc["terms"]) {
    std::vector<int> exps = term.at("exps").get<std::vector<int>>();
    if (exps.size() != vars.size())
      throw std::invalid_argument("series: exponent vector length mismatch");
    Coeff c;
    for (const json& rec : term.at("coeff")) {
      Int num(rec.at("num").get<std::string>());
      Int den(rec.at("den").get<std::string>());
      if (den == 0) throw std::invalid_argument("series: zero denominator");
      c.add_term(rec.at("gens").get<std::vector<int>>(), Rat(num, den));
    }
    s.add_term(std::move(exps), std::move(c));
  }
  return s;
}

}  // namespace torcob
