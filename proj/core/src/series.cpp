#include "torcob/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace torcob {

int poly_degree(const std::vector<int>& exps) {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

GradedSeries::GradedSeries(CoeffRing ring, std::vector<std::string> vars,
                           int poly_bound)
    : ring_(ring), vars_(std::move(vars)), poly_bound_(poly_bound) {
  if (poly_bound < 0)
    throw std::invalid_argument("monomial degree bound must be >= 0");
}

GradedSeries GradedSeries::constant(const CoeffRing& ring,
                                    std::vector<std::string> vars,
                                    int poly_bound, Coeff c) {
  GradedSeries s(ring, std::move(vars), poly_bound);
  s.add_term(std::vector<int>(s.num_vars(), 0), std::move(c));
  return s;
}

GradedSeries GradedSeries::variable(const CoeffRing& ring,
                                    std::vector<std::string> vars,
                                    int poly_bound, int index) {
  GradedSeries s(ring, std::move(vars), poly_bound);
  if (index < 0 || index >= s.num_vars())
    throw std::invalid_argument("variable index out of range");
  std::vector<int> e(s.num_vars(), 0);
  e[index] = 1;
  s.add_term(std::move(e), Coeff::scalar(1));
  return s;
}

Coeff GradedSeries::coefficient(const std::vector<int>& exps) const {
  auto it = t_.find(exps);
  return it == t_.end() ? Coeff() : it->second;
}

Coeff GradedSeries::constant_term() const {
  return coefficient(std::vector<int>(num_vars(), 0));
}

void GradedSeries::check_context(const GradedSeries& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("series variable sets differ");
  if (ring_.kind() != o.ring_.kind())
    throw std::invalid_argument("series coefficient ring kinds differ");
}

void GradedSeries::add_term(std::vector<int> exps, Coeff c) {
  if (static_cast<int>(exps.size()) != num_vars())
    throw std::invalid_argument("exponent vector length mismatch");
  if (poly_degree(exps) > poly_bound_) return;
  Coeff tc = c.truncated(ring_);
  if (tc.is_zero()) return;
  auto it = t_.find(exps);
  if (it == t_.end()) {
    t_.emplace(std::move(exps), std::move(tc));
  } else {
    it->second += tc;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void GradedSeries::normalize() {
  for (auto it = t_.begin(); it != t_.end();) {
    if (poly_degree(it->first) > poly_bound_) {
      it = t_.erase(it);
      continue;
    }
    it->second = it->second.truncated(ring_);
    it = it->second.is_zero() ? t_.erase(it) : std::next(it);
  }
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  check_context(o);
  GradedSeries r(CoeffRing::merged(ring_, o.ring_), vars_,
                 std::min(poly_bound_, o.poly_bound_));
  r.t_ = t_;
  for (const auto& [e, c] : o.t_) {
    auto it = r.t_.find(e);
    if (it == r.t_.end())
      r.t_.emplace(e, c);
    else {
      it->second += c;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  r.normalize();
  return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
  return *this + (-o);
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries r(*this);
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
  check_context(o);
  GradedSeries r(CoeffRing::merged(ring_, o.ring_), vars_,
                 std::min(poly_bound_, o.poly_bound_));
  for (const auto& [ea, ca] : t_) {
    const int da = poly_degree(ea);
    if (da > r.poly_bound_) continue;
    for (const auto& [eb, cb] : o.t_) {
      if (da + poly_degree(eb) > r.poly_bound_) continue;
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

GradedSeries GradedSeries::scaled(const Coeff& c) const {
  GradedSeries r(ring_, vars_, poly_bound_);
  for (const auto& [e, x] : t_) r.add_term(e, x * c);
  return r;
}

GradedSeries GradedSeries::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  GradedSeries r = constant(ring_, vars_, poly_bound_, Coeff::scalar(1));
  for (int i = 0; i < k; ++i) {
    r = r * (*this);
    if (r.is_zero()) break;
  }
  return r;
}

GradedSeries GradedSeries::truncated(int poly_bound, int coeff_bound) const {
  GradedSeries r(CoeffRing(ring_.kind(), std::min(coeff_bound,
                                                  ring_.coeff_bound())),
                 vars_, std::min(poly_bound, poly_bound_));
  r.t_ = t_;
  r.normalize();
  return r;
}

GradedSeries GradedSeries::substituted(
    const std::vector<GradedSeries>& images) const {
  if (num_vars() == 0)
    throw std::invalid_argument("substitution needs at least one variable");
  if (static_cast<int>(images.size()) != num_vars())
    throw std::invalid_argument("one image per variable required");
  for (const auto& im : images) {
    images[0].check_context(im);
    if (!im.constant_term().is_zero())
      throw std::invalid_argument(
          "substitution image has a nonzero constant term");
  }

  CoeffRing ring = CoeffRing::merged(ring_, images[0].ring());
  int pb = std::min(poly_bound_, images[0].poly_bound());
  for (const auto& im : images) pb = std::min(pb, im.poly_bound());
  GradedSeries result(ring, images[0].vars(), pb);

  // Per-variable power cache; images have zero constant term, so a monomial
  // of source degree > pb contributes nothing.
  std::vector<std::vector<GradedSeries>> pows(images.size());
  auto power = [&](int i, int e) -> const GradedSeries& {
    auto& cache = pows[i];
    if (cache.empty())
      cache.push_back(GradedSeries::constant(ring, result.vars_, pb,
                                             Coeff::scalar(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  for (const auto& [exps, c] : t_) {
    if (poly_degree(exps) > pb) continue;
    GradedSeries prod =
        GradedSeries::constant(ring, result.vars_, pb, Coeff::scalar(1));
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      prod = prod * power(static_cast<int>(i), exps[i]);
      if (prod.is_zero()) break;
    }
    result = result + prod.scaled(c);
  }
  return result;
}

GradedSeries GradedSeries::projected(
    std::vector<std::string> new_vars,
    const std::vector<int>& target_index) const {
  if (target_index.size() != vars_.size())
    throw std::invalid_argument("projection map length mismatch");
  GradedSeries r(ring_, std::move(new_vars), poly_bound_);
  for (const auto& [exps, c] : t_) {
    std::vector<int> e(r.num_vars(), 0);
    bool killed = false;
    for (size_t i = 0; i < exps.size() && !killed; ++i) {
      if (exps[i] == 0) continue;
      if (target_index[i] < 0)
        killed = true;
      else
        e[target_index[i]] += exps[i];
    }
    if (!killed) r.add_term(std::move(e), c);
  }
  return r;
}

int GradedSeries::min_poly_degree() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : t_) {
    int d = poly_degree(e);
    if (first || d < m) m = d;
    first = false;
  }
  return m;
}

int GradedSeries::max_poly_degree() const {
  int m = 0;
  for (const auto& [e, c] : t_) m = std::max(m, poly_degree(e));
  return m;
}

GradedSeries GradedSeries::component(int total_degree) const {
  GradedSeries r(ring_, vars_, poly_bound_);
  for (const auto& [e, c] : t_) {
    Coeff part = c.graded_part(ring_, total_degree - poly_degree(e));
    if (!part.is_zero()) r.t_.emplace(e, std::move(part));
  }
  return r;
}

std::vector<int> GradedSeries::total_degrees() const {
  std::set<int> ds;
  for (const auto& [e, c] : t_) {
    int m = poly_degree(e);
    for (const auto& [ce, cc] : c.terms())
      ds.insert(m + coeff_monomial_degree(ring_, ce));
  }
  return {ds.begin(), ds.end()};
}

bool GradedSeries::is_homogeneous(int degree) const {
  auto ds = total_degrees();
  return ds.empty() || (ds.size() == 1 && ds[0] == degree);
}

bool GradedSeries::equals(const GradedSeries& o) const {
  return ring_.kind() == o.ring_.kind() && vars_ == o.vars_ && t_ == o.t_;
}

std::string GradedSeries::to_string() const {
  if (t_.empty()) return "0";
  // Graded-lex display: degree first, then lexicographically by exponents in
  // the declared variable order, larger exponent vector first.
  std::vector<const std::pair<const std::vector<int>, Coeff>*> order;
  for (const auto& term : t_) order.push_back(&term);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = poly_degree(a->first), db = poly_degree(b->first);
    if (da != db) return da < db;
    return a->first > b->first;
  });

  std::ostringstream os;
  bool first = true;
  for (auto* term : order) {
    std::string mono;
    for (size_t i = 0; i < term->first.size(); ++i) {
      if (term->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (term->first[i] > 1) mono += "^" + std::to_string(term->first[i]);
    }
    const Coeff& c = term->second;
    std::string cs = c.to_string(ring_);
    bool negated = false;
    if (c.terms().size() == 1 && cs.size() && cs[0] == '-') {
      negated = true;
      cs = cs.substr(1);
    }
    os << (first ? (negated ? "-" : "") : (negated ? " - " : " + "));
    first = false;
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else if (c.terms().size() > 1) {
      os << "(" << c.to_string(ring_) << ")*" << mono;
    } else {
      os << cs << "*" << mono;
    }
  }
  return os.str();
}

GradedSeries augmented_scalar(const GradedSeries& s) {
  GradedSeries out(s.ring(), s.vars(), s.poly_bound());
  for (const auto& [exps, c] : s.terms()) {
    Rat r = c.scalar_part();
    if (r != 0) out.add_term(exps, Coeff::scalar(r));
  }
  return out;
}

}  // namespace torcob
