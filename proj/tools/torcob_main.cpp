// torcob: presentations of the cobordism rings of smooth toric varieties.
//
// Subcommands: validate, equivariant, ordinary, nf, specialize, selftest.
// Exit codes: 0 success, 1 invalid input, 2 internal failure (a relation
// whose leading coefficient is not invertible, or a broken invariant).

#include "torcob/equivariant.hpp"
#include "torcob/fanlib.hpp"
#include "torcob/io.hpp"
#include "torcob/ordinary.hpp"
#include "torcob/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

using namespace torcob;
using nlohmann::json;

namespace {

struct Options {
  std::string fan_spec;
  std::string law = "universal";
  int coeff_bound = 3;
  int base_cone = -1;
  std::string format = "human";
};

void add_common_flags(CLI::App* cmd, Options& opt, bool with_base_cone = true) {
  cmd->add_option("--fan", opt.fan_spec,
                  "fan file path, built-in name, or name on TORCOB_FAN_PATH")
      ->required();
  cmd->add_option("--law", opt.law,
                  "coefficient ring: additive, multiplicative, or universal")
      ->check(CLI::IsMember({"additive", "multiplicative", "universal"}));
  cmd->add_option("--coeff-bound", opt.coeff_bound,
                  "coefficient degree truncation depth (default 3)")
      ->check(CLI::NonNegativeNumber);
  if (with_base_cone)
    cmd->add_option("--base-cone", opt.base_cone,
                    "position in the max_cones list (0-based) whose ray "
                    "variables are eliminated");
  cmd->add_option("--format", opt.format, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}));
}

FormalGroupLaw make_law(const Options& opt, const Fan& fan) {
  CoeffKind kind = coeff_kind_from_string(opt.law);
  int d = kind == CoeffKind::additive ? 0 : opt.coeff_bound;
  return FormalGroupLaw::make(kind, d, fan.rank() + 1);
}

int checked_base_cone(const Options& opt, const Fan& fan) {
  if (opt.base_cone >= static_cast<int>(fan.max_cones().size()))
    throw std::invalid_argument(
        "base cone " + std::to_string(opt.base_cone) + " out of range: fan has " +
        std::to_string(fan.max_cones().size()) + " maximal cones");
  return opt.base_cone;
}

std::string fan_summary(const Fan& fan) {
  return "fan: " + (fan.name().empty() ? "(unnamed)" : fan.name()) + " (rank " +
         std::to_string(fan.rank()) + ", " + std::to_string(fan.num_rays()) +
         " rays, " + std::to_string(fan.max_cones().size()) +
         " maximal cones)";
}

std::string nonface_monomial(const Cone& nf) {
  std::string s;
  for (int r : nf.rays) s += (s.empty() ? "" : "*") + ("t" + std::to_string(r + 1));
  return s;
}

json fan_to_json(const Fan& fan) {
  return json::parse(serialize_fan_file(FanFile::from_fan(fan)));
}

json series_json(const GradedSeries& s) { return json::parse(series_to_json(s)); }

json torsion_json(const std::vector<Int>& torsion) {
  json out = json::array();
  for (const Int& t : torsion) out.push_back(t.str());
  return out;
}

json config_json(const char* command, const Fan& fan, const Options& opt,
                 const FormalGroupLaw& law) {
  return {{"command", command},
          {"fan", fan_to_json(fan)},
          {"law", opt.law},
          {"coeff_bound", law.ring().coeff_bound()}};
}

std::string law_summary(const Options& opt, const FormalGroupLaw& law) {
  return "law: " + opt.law + ", coefficient bound " +
         std::to_string(law.ring().coeff_bound());
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_validate(const Options& opt) {
  FanFile f = resolve_fan_file(opt.fan_spec);
  ValidationReport rep = Fan::validate(f.rank, f.rays, f.zero_based_cones());
  if (opt.format == "machine") {
    json doc = {{"command", "validate"},
                {"name", f.name},
                {"rank", f.rank},
                {"rays", f.rays.size()},
                {"max_cones", f.max_cones.size()},
                {"valid", rep.ok},
                {"violations", rep.violations}};
    if (rep.ok) doc["complete"] = f.to_fan().is_complete();
    emit(doc);
    return rep.ok ? 0 : 1;
  }
  if (!rep.ok) {
    std::cout << "fan: " << (f.name.empty() ? "(unnamed)" : f.name) << "\n"
              << "invalid:\n";
    for (const std::string& v : rep.violations) std::cout << "  " << v << "\n";
    return 1;
  }
  Fan fan = f.to_fan();
  std::cout << fan_summary(fan) << "\n"
            << "valid, smooth, complete: " << (fan.is_complete() ? "yes" : "no")
            << ", rays: " << fan.num_rays()
            << ", max cones: " << fan.max_cones().size() << "\n";
  return 0;
}

int cmd_equivariant(const Options& opt) {
  Fan fan = resolve_fan(opt.fan_spec);
  EquivariantModel model(fan, make_law(opt, fan));
  const int top_degree = 3;

  std::vector<std::array<long, 2>> ranks;
  for (int k = 0; k <= top_degree; ++k)
    ranks.push_back({static_cast<long>(model.standard_monomials(k).size()),
                     static_cast<long>(model.graded_rank_pp(k))});

  if (opt.format == "machine") {
    json doc = config_json("equivariant", fan, opt, model.law());
    doc["nonfaces"] = json::array();
    for (const Cone& nf : fan.minimal_nonfaces()) {
      json c = json::array();
      for (int r : nf.rays) c.push_back(r + 1);
      doc["nonfaces"].push_back(std::move(c));
    }
    doc["u_classes"] = json::array();
    for (int r = 0; r < fan.num_rays(); ++r) {
      json comps = json::array();
      for (const GradedSeries& comp : model.u_class(r).comps)
        comps.push_back(series_json(comp));
      doc["u_classes"].push_back({{"ray", r + 1}, {"components", comps}});
    }
    doc["ranks"] = json::array();
    for (int k = 0; k <= top_degree; ++k)
      doc["ranks"].push_back({{"degree", k},
                              {"standard_monomials", ranks[k][0]},
                              {"piecewise_rank", ranks[k][1]}});
    emit(doc);
  } else {
    std::cout << fan_summary(fan) << "\n"
              << law_summary(opt, model.law()) << "\n";
    if (fan.minimal_nonfaces().empty()) {
      std::cout << "ideal generators: none (free ring)\n";
    } else {
      std::cout << "ideal generators:";
      for (const Cone& nf : fan.minimal_nonfaces())
        std::cout << " " << nonface_monomial(nf);
      std::cout << "\n";
    }
    std::cout << "u classes:\n";
    for (int r = 0; r < fan.num_rays(); ++r)
      std::cout << "  u" << r + 1 << " = " << model.pp_to_string(model.u_class(r))
                << "\n";
    std::cout << "piecewise ranks:\n";
    for (int k = 0; k <= top_degree; ++k)
      std::cout << "  degree " << k << ": " << ranks[k][1]
                << (ranks[k][0] == ranks[k][1] ? " (matches standard monomials)"
                                               : " (MISMATCH with standard "
                                                 "monomial count)")
                << "\n";
  }
  for (int k = 0; k <= top_degree; ++k)
    if (ranks[k][0] != ranks[k][1]) return 2;
  return 0;
}

void print_rank_line(std::ostream& os, int k, const Presentation::SliceRank& r) {
  os << "  degree " << k << ": " << r.rank;
  if (!r.torsion.empty()) {
    os << " (torsion";
    for (const Int& t : r.torsion) os << " " << t.str();
    os << ")";
  }
  os << "\n";
}

int cmd_ordinary(const Options& opt) {
  Fan fan = resolve_fan(opt.fan_spec);
  Presentation p = Presentation::build(fan, make_law(opt, fan));
  if (opt.base_cone >= 0) p = p.eliminated_at(checked_base_cone(opt, fan));

  std::vector<Presentation::SliceRank> ranks;
  for (int k = 0; k <= p.dim(); ++k) ranks.push_back(p.graded_rank_info(k));

  if (opt.format == "machine") {
    json doc = config_json("ordinary", fan, opt, p.law());
    doc["vars"] = p.vars();
    doc["base_cone"] = p.is_eliminated() ? json(p.base_cone()) : json(nullptr);
    doc["relations"] = json::array();
    for (const Relation& rel : p.relations())
      doc["relations"].push_back(
          {{"name", rel.name}, {"poly", series_json(rel.poly)}});
    if (p.is_eliminated()) {
      doc["ray_images"] = json::array();
      for (const GradedSeries& img : p.ray_images())
        doc["ray_images"].push_back(series_json(img));
    }
    doc["ranks"] = json::array();
    for (int k = 0; k <= p.dim(); ++k)
      doc["ranks"].push_back({{"degree", k},
                              {"rank", ranks[k].rank},
                              {"torsion", torsion_json(ranks[k].torsion)}});
    emit(doc);
    return 0;
  }

  std::cout << fan_summary(fan) << "\n"
            << law_summary(opt, p.law()) << "\n";
  std::cout << "variables:";
  for (const std::string& v : p.vars()) std::cout << " " << v;
  if (p.is_eliminated())
    std::cout << "  (base cone "
              << fan.max_cones()[p.base_cone()].to_string() << " eliminated)";
  std::cout << "\n";
  if (p.relations().empty()) {
    std::cout << "relations: none\n";
  } else {
    std::cout << "relations:\n";
    for (const Relation& rel : p.relations())
      std::cout << "  [" << rel.name << "] "
                << (rel.poly.is_zero() ? "0" : rel.poly.to_string()) << "\n";
  }
  std::cout << "ranks:\n";
  for (int k = 0; k <= p.dim(); ++k) print_rank_line(std::cout, k, ranks[k]);
  return 0;
}

int cmd_nf(const Options& opt, const std::string& poly_text) {
  Fan fan = resolve_fan(opt.fan_spec);
  Presentation p = Presentation::build(fan, make_law(opt, fan));
  p = p.eliminated_at(opt.base_cone < 0 ? 0 : checked_base_cone(opt, fan));
  ReductionSystem rs = ReductionSystem::complete(p);

  std::vector<std::string> ray_vars;
  for (int r = 0; r < fan.num_rays(); ++r)
    ray_vars.push_back("t" + std::to_string(r + 1));
  GradedSeries input = parse_polynomial(poly_text, p.ring(), ray_vars,
                                        p.law().poly_bound());
  GradedSeries nf = rs.normal_form(input);

  if (opt.format == "machine") {
    json doc = config_json("nf", fan, opt, p.law());
    doc["base_cone"] = p.base_cone();
    doc["input"] = poly_text;
    doc["vars"] = p.vars();
    doc["normal_form"] = series_json(nf);
    doc["display"] = nf.is_zero() ? "0" : nf.to_string();
    emit(doc);
    return 0;
  }
  std::cout << (nf.is_zero() ? "0" : nf.to_string()) << "\n";
  return 0;
}

int cmd_specialize(const Options& opt, const std::string& target_name) {
  Fan fan = resolve_fan(opt.fan_spec);
  SpecializeTarget target = target_name == "chow" ? SpecializeTarget::chow
                                                  : SpecializeTarget::ktheory;
  Presentation p =
      Presentation::build(fan, make_law(opt, fan)).specialized(target);

  std::vector<Presentation::SliceRank> ranks;
  for (int k = 0; k <= p.dim(); ++k) ranks.push_back(p.graded_rank_info(k));
  long total = ReductionSystem::complete(
                   p.eliminated_at(opt.base_cone < 0 ? 0 : checked_base_cone(opt, fan)))
                   .total_rank();

  if (opt.format == "machine") {
    json doc = config_json("specialize", fan, opt, p.law());
    doc["law"] = to_string(p.law().kind());
    doc["target"] = target_name;
    doc["ranks"] = json::array();
    for (int k = 0; k <= p.dim(); ++k)
      doc["ranks"].push_back({{"degree", k},
                              {"rank", ranks[k].rank},
                              {"torsion", torsion_json(ranks[k].torsion)}});
    doc["total_rank"] = total;
    emit(doc);
    return 0;
  }
  std::cout << fan_summary(fan) << "\n" << target_name << " ranks:\n";
  for (int k = 0; k <= p.dim(); ++k) print_rank_line(std::cout, k, ranks[k]);
  std::cout << "total rank: " << total << "\n";
  return 0;
}

int cmd_selftest(int coeff_bound) {
  bool ok = true;
  for (const CheckResult& r : run_selftest(coeff_bound)) {
    ok = ok && r.pass;
    std::printf("%s %-55s %8.1f ms%s%s\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.ms, r.detail.empty() ? "" : "  ",
                r.detail.c_str());
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cobordism rings of smooth toric varieties"};
  app.require_subcommand(1);

  Options opt;
  std::string poly_text, target_name;
  int selftest_bound = 3;

  add_common_flags(app.add_subcommand("validate", "check a fan file"), opt,
                   /*with_base_cone=*/false);
  add_common_flags(
      app.add_subcommand("equivariant",
                         "equivariant presentation: ideal, u classes, ranks"),
      opt, /*with_base_cone=*/false);
  add_common_flags(
      app.add_subcommand("ordinary", "presentation and rank table"), opt);
  CLI::App* nf =
      app.add_subcommand("nf", "normal form of a polynomial in the ray variables");
  add_common_flags(nf, opt);
  nf->add_option("polynomial", poly_text, "expression in t1..tm")->required();
  CLI::App* spec = app.add_subcommand("specialize", "chow or k-theory rank table");
  add_common_flags(spec, opt);
  spec->add_option("target", target_name, "chow or ktheory")
      ->required()
      ->check(CLI::IsMember({"chow", "ktheory"}));
  app.add_subcommand("selftest", "run the acceptance checks")
      ->add_option("--coeff-bound", selftest_bound,
                   "coefficient depth for the rational-law checks");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("validate")) return cmd_validate(opt);
    if (app.got_subcommand("equivariant")) return cmd_equivariant(opt);
    if (app.got_subcommand("ordinary")) return cmd_ordinary(opt);
    if (app.got_subcommand("nf")) return cmd_nf(opt, poly_text);
    if (app.got_subcommand("specialize")) return cmd_specialize(opt, target_name);
    if (app.got_subcommand("selftest")) return cmd_selftest(selftest_bound);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const CompletionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FanError& e) {
    std::cerr << "error: invalid fan: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
