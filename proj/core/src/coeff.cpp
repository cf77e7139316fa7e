#include "torcob/coeff.hpp"

#include <sstream>

namespace torcob {

std::string to_string(CoeffKind k) {
  switch (k) {
    case CoeffKind::additive: return "additive";
    case CoeffKind::multiplicative: return "multiplicative";
    case CoeffKind::universal_rational: return "universal";
  }
  return "?";
}

CoeffKind coeff_kind_from_string(const std::string& s) {
  if (s == "additive") return CoeffKind::additive;
  if (s == "multiplicative") return CoeffKind::multiplicative;
  if (s == "universal" || s == "universal_rational")
    return CoeffKind::universal_rational;
  throw std::invalid_argument("unknown coefficient ring '" + s + "'");
}

CoeffRing::CoeffRing(CoeffKind kind, int coeff_bound)
    : kind_(kind), coeff_bound_(coeff_bound) {
  if (coeff_bound < 0)
    throw std::invalid_argument("coefficient degree bound must be >= 0");
}

int CoeffRing::num_gens() const {
  switch (kind_) {
    case CoeffKind::additive: return 0;
    case CoeffKind::multiplicative: return coeff_bound_ >= 1 ? 1 : 0;
    case CoeffKind::universal_rational: return coeff_bound_;
  }
  return 0;
}

int CoeffRing::gen_degree(int i) const {
  if (i < 0 || i >= num_gens())
    throw std::invalid_argument("generator index out of range");
  return kind_ == CoeffKind::multiplicative ? -1 : -(i + 1);
}

std::string CoeffRing::gen_name(int i) const {
  if (i < 0 || i >= num_gens())
    throw std::invalid_argument("generator index out of range");
  if (kind_ == CoeffKind::multiplicative) return "b";
  return "b" + std::to_string(i + 1);
}

CoeffRing CoeffRing::merged(const CoeffRing& a, const CoeffRing& b) {
  if (a.kind_ != b.kind_)
    throw std::invalid_argument("mixed coefficient ring kinds");
  return CoeffRing(a.kind_, std::min(a.coeff_bound_, b.coeff_bound_));
}

int coeff_monomial_degree(const CoeffRing& ring, const std::vector<int>& exps) {
  int d = 0;
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) d += exps[i] * ring.gen_degree(static_cast<int>(i));
  return d;
}

namespace {

void trim(std::vector<int>& exps) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

}  // namespace

Coeff Coeff::scalar(Rat r) {
  Coeff c;
  if (r != 0) c.t_.emplace(std::vector<int>{}, std::move(r));
  return c;
}

Coeff Coeff::gen(int i) {
  std::vector<int> e(i + 1, 0);
  e[i] = 1;
  return monomial(std::move(e), Rat(1));
}

Coeff Coeff::monomial(std::vector<int> exps, Rat c) {
  Coeff out;
  out.add_term(std::move(exps), std::move(c));
  return out;
}

bool Coeff::is_scalar() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

Rat Coeff::scalar_part() const {
  auto it = t_.find({});
  return it == t_.end() ? Rat(0) : it->second;
}

Rat Coeff::scalar_value() const {
  if (!is_scalar()) throw std::logic_error("coefficient is not a scalar");
  return scalar_part();
}

void Coeff::add_term(std::vector<int> exps, Rat c) {
  if (c == 0) return;
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative generator exponent");
  trim(exps);
  auto it = t_.find(exps);
  if (it == t_.end()) {
    t_.emplace(std::move(exps), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Coeff& Coeff::operator+=(const Coeff& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, fresh] = t_.emplace(e, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

Coeff Coeff::operator-() const {
  Coeff r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

Coeff Coeff::operator*(const Coeff& o) const {
  Coeff r;
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

Coeff& Coeff::operator*=(const Rat& r) {
  if (r == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= r;
  return *this;
}

Coeff Coeff::scaled(const Rat& r) const {
  Coeff c(*this);
  c *= r;
  return c;
}

int Coeff::min_degree(const CoeffRing& ring) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : t_) {
    int d = coeff_monomial_degree(ring, e);
    if (first || d < m) m = d;
    first = false;
  }
  return m;
}

Coeff Coeff::graded_part(const CoeffRing& ring, int degree) const {
  Coeff r;
  for (const auto& [e, c] : t_)
    if (coeff_monomial_degree(ring, e) == degree) r.t_.emplace(e, c);
  return r;
}

Coeff Coeff::truncated(const CoeffRing& ring) const {
  Coeff r;
  for (const auto& [e, c] : t_) {
    if (static_cast<int>(e.size()) > ring.num_gens()) continue;
    if (coeff_monomial_degree(ring, e) >= -ring.coeff_bound())
      r.t_.emplace(e, c);
  }
  return r;
}

std::string Coeff::to_string(const CoeffRing& ring) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.gen_name(static_cast<int>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a;
    } else if (a == 1) {
      os << mono;
    } else {
      os << a << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace torcob
