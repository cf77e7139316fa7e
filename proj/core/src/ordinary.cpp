#include "torcob/ordinary.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace torcob {

namespace {

GradedSeries monomial_series(const CoeffRing& ring,
                             const std::vector<std::string>& vars, int pb,
                             const std::vector<int>& exps, const Coeff& c) {
  GradedSeries s(ring, vars, pb);
  s.add_term(exps, c);
  return s;
}

// Rule order: lower total degree wins; ties break lexicographically with
// the last variable most significant. Breaking ties toward later rays keeps
// the substituted nonface relations monic: their top power sits on the
// highest surviving ray, while mixed monomials pick up pairing integers.
bool mono_less(const std::vector<int>& a, const std::vector<int>& b) {
  int da = poly_degree(a), db = poly_degree(b);
  if (da != db) return da > db;  // higher degree is smaller
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool divides(const std::vector<int>& lhs, const std::vector<int>& m) {
  for (size_t i = 0; i < lhs.size(); ++i)
    if (m[i] < lhs[i]) return false;
  return true;
}

void enumerate_monomials(int nvars, int degree,
                         std::vector<std::vector<int>>& out) {
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return;
  }
  std::vector<int> cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree);
}

std::string character_display(const Character& chi) {
  std::string s = "<";
  for (size_t i = 0; i < chi.size(); ++i) {
    if (i) s += ",";
    s += chi[i].str();
  }
  return s + ">";
}

}  // namespace

Presentation::Presentation(Fan fan, FormalGroupLaw law)
    : fan_(std::move(fan)), law_(std::move(law)) {}

Presentation Presentation::build(const Fan& fan, const FormalGroupLaw& law) {
  if (law.poly_bound() < fan.rank() + 1)
    throw std::invalid_argument(
        "poly bound must be at least rank+1 to carry the nilpotence relations");
  Presentation p(fan, law);
  const int m = fan.num_rays();
  const int n = fan.rank();
  for (int r = 0; r < m; ++r) {
    p.vars_.push_back("t" + std::to_string(r + 1));
    p.var_rays_.push_back(r);
  }
  for (int r = 0; r < m; ++r)
    p.ray_images_.push_back(
        GradedSeries::variable(law.ring(), p.vars_, law.poly_bound(), r));

  for (const Cone& nf : fan.minimal_nonfaces()) {
    std::vector<int> exps(m, 0);
    std::string label;
    for (int r : nf.rays) {
      exps[r] = 1;
      if (!label.empty()) label += "*";
      label += p.vars_[r];
    }
    p.relations_.push_back(
        {"nonface " + label,
         monomial_series(law.ring(), p.vars_, law.poly_bound(), exps,
                         Coeff::scalar(1))});
  }
  for (int r = 0; r < m; ++r) {
    std::vector<int> exps(m, 0);
    exps[r] = n + 1;
    p.relations_.push_back(
        {"nilpotence " + p.vars_[r] + "^" + std::to_string(n + 1),
         monomial_series(law.ring(), p.vars_, law.poly_bound(), exps,
                         Coeff::scalar(1))});
  }
  for (int i = 0; i < n; ++i) {
    Character chi(n, Int(0));
    chi[i] = 1;
    GradedSeries rel = p.character_relation(chi);
    if (!rel.is_zero())
      p.relations_.push_back({"character " + character_display(chi), rel});
  }
  return p;
}

GradedSeries Presentation::character_relation(const Character& chi) const {
  if (static_cast<int>(chi.size()) != fan_.rank())
    throw std::invalid_argument("character has wrong length");
  std::vector<std::string> rayvars;
  for (int r = 0; r < fan_.num_rays(); ++r)
    rayvars.push_back("t" + std::to_string(r + 1));
  GradedSeries acc(ring(), rayvars, law_.poly_bound());
  for (int r = 0; r < fan_.num_rays(); ++r) {
    Int mlt = dot(chi, fan_.ray(r));
    if (mlt == 0) continue;
    GradedSeries term = law_.n_series(
        static_cast<long>(mlt),
        GradedSeries::variable(ring(), rayvars, law_.poly_bound(), r));
    acc = acc.is_zero() ? term : law_.add(acc, term);
  }
  return acc;
}

Presentation Presentation::eliminated_at(int max_cone_index) const {
  if (is_eliminated())
    throw std::logic_error("presentation is already eliminated");
  if (max_cone_index < 0 ||
      max_cone_index >= static_cast<int>(fan_.max_cones().size()))
    throw std::invalid_argument("no such maximal cone");
  const Cone& sigma = fan_.max_cones()[max_cone_index];
  const OrbitData& od = fan_.orbit_data(sigma);
  const int m = fan_.num_rays();
  const int n = fan_.rank();
  const int pb = law_.poly_bound();

  Presentation out(fan_, law_);
  out.base_cone_ = max_cone_index;
  for (int r = 0; r < m; ++r) {
    if (!sigma.contains(r)) {
      out.vars_.push_back("t" + std::to_string(r + 1));
      out.var_rays_.push_back(r);
    }
  }

  // The cone's dual characters pair to delta_ij with its rays, so each
  // relation r_chi solves in closed form: t_i = inverse(F-sum outside).
  auto outside_sum = [&](const Character& chi) {
    GradedSeries acc(ring(), out.vars_, pb);
    for (size_t v = 0; v < out.var_rays_.size(); ++v) {
      Int mlt = dot(chi, fan_.ray(out.var_rays_[v]));
      if (mlt == 0) continue;
      GradedSeries term = law_.n_series(
          static_cast<long>(mlt),
          GradedSeries::variable(ring(), out.vars_, pb, static_cast<int>(v)));
      acc = acc.is_zero() ? term : law_.add(acc, term);
    }
    return acc;
  };

  out.ray_images_.assign(m, GradedSeries(ring(), out.vars_, pb));
  for (size_t v = 0; v < out.var_rays_.size(); ++v)
    out.ray_images_[out.var_rays_[v]] =
        GradedSeries::variable(ring(), out.vars_, pb, static_cast<int>(v));
  for (int i = 0; i < sigma.dim(); ++i) {
    GradedSeries s = outside_sum(od.duals[i]);
    out.ray_images_[sigma.rays[i]] =
        s.is_zero() ? s : law_.inverse(s);
  }

  for (const Cone& nf : fan_.minimal_nonfaces()) {
    GradedSeries prod =
        GradedSeries::constant(ring(), out.vars_, pb, Coeff::scalar(1));
    std::string label;
    for (int r : nf.rays) {
      prod = prod * out.ray_images_[r];
      if (!label.empty()) label += "*";
      label += "t" + std::to_string(r + 1);
    }
    if (!prod.is_zero())
      out.relations_.push_back({"nonface " + label, prod});
  }
  for (int r = 0; r < m; ++r) {
    GradedSeries pw = out.ray_images_[r].pow(n + 1);
    if (!pw.is_zero())
      out.relations_.push_back(
          {"nilpotence t" + std::to_string(r + 1) + "^" + std::to_string(n + 1),
           pw});
  }
  for (const Character& chi : od.completion_duals) {
    GradedSeries rel = outside_sum(chi);
    if (!rel.is_zero())
      out.relations_.push_back({"character " + character_display(chi), rel});
  }
  return out;
}

GradedSeries Presentation::to_current_vars(const GradedSeries& global) const {
  std::vector<std::string> rayvars;
  for (int r = 0; r < fan_.num_rays(); ++r)
    rayvars.push_back("t" + std::to_string(r + 1));
  if (global.vars() != rayvars)
    throw std::invalid_argument("expected a series in the ray variables");
  if (!is_eliminated()) return global;
  return global.substituted(ray_images_);
}

Presentation::SliceRank Presentation::graded_rank_info(int k) const {
  SliceRank out;
  if (k < 0) return out;
  std::vector<std::vector<int>> basis;
  enumerate_monomials(static_cast<int>(vars_.size()), k, basis);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); ++i)
    index[basis[i]] = static_cast<int>(i);

  // Scalar slices of each relation, grouped by monomial degree.
  std::vector<std::vector<Rat>> rows;
  for (const Relation& rel : relations_) {
    std::map<int, std::vector<std::pair<std::vector<int>, Rat>>> slices;
    for (const auto& [exps, c] : rel.poly.terms()) {
      Rat s = c.scalar_part();
      if (s != 0) slices[poly_degree(exps)].push_back({exps, s});
    }
    for (const auto& [d, terms] : slices) {
      if (d > k) continue;
      std::vector<std::vector<int>> mult;
      enumerate_monomials(static_cast<int>(vars_.size()), k - d, mult);
      for (const auto& mu : mult) {
        std::vector<Rat> row(basis.size(), Rat(0));
        for (const auto& [exps, s] : terms) {
          std::vector<int> e = exps;
          for (size_t i = 0; i < e.size(); ++i) e[i] += mu[i];
          row[index.at(e)] += s;
        }
        rows.push_back(std::move(row));
      }
    }
  }

  if (ring().kind() == CoeffKind::universal_rational) {
    out.rank = static_cast<int>(basis.size()) - rational_rank(std::move(rows));
    return out;
  }
  std::vector<std::vector<Int>> zrows;
  for (const auto& row : rows) {
    zrows.emplace_back();
    for (const Rat& r : row) {
      if (denominator(r) != 1)
        throw std::logic_error("integer mode produced a fractional slice");
      zrows.back().push_back(numerator(r));
    }
  }
  ZRankResult zr = integer_rank(zrows);
  out.rank = static_cast<int>(basis.size()) - zr.rank;
  out.torsion = zr.torsion;
  return out;
}

Presentation Presentation::specialized(SpecializeTarget target) const {
  FormalGroupLaw law =
      target == SpecializeTarget::chow
          ? FormalGroupLaw::make(CoeffKind::additive, 0, law_.poly_bound())
          : FormalGroupLaw::make(CoeffKind::multiplicative,
                                 std::max(1, ring().coeff_bound()),
                                 law_.poly_bound());
  Presentation p = build(fan_, law);
  return is_eliminated() ? p.eliminated_at(base_cone_) : p;
}

ReductionSystem ReductionSystem::complete(const Presentation& p) {
  ReductionSystem sys(p);
  const int n = p.dim();
  const int d_bound = p.ring().coeff_bound();

  auto cutoff = [&](const GradedSeries& s) { return s.truncated(n, d_bound); };
  auto lead_of = [&](const GradedSeries& s) {
    const std::vector<int>* best = nullptr;
    for (const auto& [exps, c] : s.terms()) {
      (void)c;
      if (!best || mono_less(*best, exps)) best = &exps;
    }
    return *best;
  };

  std::vector<GradedSeries> queue;
  for (const Relation& rel : p.relations())
    for (int d : rel.poly.total_degrees())
      queue.push_back(cutoff(rel.poly.component(d)));

  int steps = 0;
  while (!queue.empty()) {
    if (++steps > 20000)
      throw std::logic_error("rewrite completion did not terminate");
    GradedSeries r = sys.reduce(queue.back());
    queue.pop_back();
    if (r.is_zero()) continue;

    std::vector<int> lhs = lead_of(r);
    Coeff c = r.coefficient(lhs);
    if (!c.is_scalar())
      throw CompletionError("leading coefficient of " + r.to_string() +
                            " involves coefficient generators");
    Rat cv = c.scalar_value();
    if (p.ring().kind() != CoeffKind::universal_rational && cv != 1 && cv != -1)
      throw CompletionError("leading coefficient " + cv.str() + " of " +
                            r.to_string() + " is not a unit");
    GradedSeries monic = r.scaled(Coeff::scalar(Rat(1) / cv));
    GradedSeries rhs =
        monomial_series(p.ring(), p.vars(), r.poly_bound(), lhs,
                        Coeff::scalar(1)) -
        monic;
    for (const auto& [exps, unused] : rhs.terms()) {
      (void)unused;
      if (!mono_less(exps, lhs))
        throw std::logic_error("rewrite tail is not smaller than its head");
    }

    // Full reduction above makes every new head irreducible by the current
    // rules, so heads are pairwise distinct and the loop is bounded by the
    // number of monomials of degree <= n. Rules are never removed: once the
    // queue drains, every pair of surviving rules has had its overlap
    // discharged, which is what confluence needs.
    for (const Rule& other : sys.rules_) {
      std::vector<int> lcm(lhs.size());
      bool overlap = false;
      for (size_t i = 0; i < lhs.size(); ++i) {
        lcm[i] = std::max(lhs[i], other.lhs[i]);
        if (lhs[i] > 0 && other.lhs[i] > 0) overlap = true;
      }
      if (!overlap || poly_degree(lcm) > n) continue;  // disjoint heads agree
      std::vector<int> m1(lhs.size()), m2(lhs.size());
      for (size_t i = 0; i < lhs.size(); ++i) {
        m1[i] = lcm[i] - lhs[i];
        m2[i] = lcm[i] - other.lhs[i];
      }
      GradedSeries spoly =
          monomial_series(p.ring(), p.vars(), rhs.poly_bound(), m1,
                          Coeff::scalar(1)) *
              rhs -
          monomial_series(p.ring(), p.vars(), other.rhs.poly_bound(), m2,
                          Coeff::scalar(1)) *
              other.rhs;
      queue.push_back(cutoff(spoly));
    }
    sys.rules_.push_back({std::move(lhs), std::move(rhs)});
  }

  std::sort(sys.rules_.begin(), sys.rules_.end(),
            [](const Rule& a, const Rule& b) { return mono_less(b.lhs, a.lhs); });
  return sys;
}

bool ReductionSystem::reduce_once(GradedSeries& s) const {
  for (const auto& [exps, c] : s.terms()) {
    for (const Rule& rule : rules_) {
      if (!divides(rule.lhs, exps)) continue;
      std::vector<int> quot(exps.size());
      for (size_t i = 0; i < exps.size(); ++i) quot[i] = exps[i] - rule.lhs[i];
      GradedSeries replaced =
          monomial_series(p_.ring(), p_.vars(), s.poly_bound(), quot, c) *
          rule.rhs;
      GradedSeries term =
          monomial_series(p_.ring(), p_.vars(), s.poly_bound(), exps, c);
      s = (s - term + replaced).truncated(p_.dim(), p_.ring().coeff_bound());
      return true;
    }
  }
  return false;
}

GradedSeries ReductionSystem::reduce(GradedSeries s) const {
  if (s.vars() != p_.vars())
    throw std::invalid_argument("series is not in the presentation variables");
  s = s.truncated(p_.dim(), p_.ring().coeff_bound());
  while (reduce_once(s)) {
  }
  return s;
}

GradedSeries ReductionSystem::normal_form(const GradedSeries& global) const {
  return reduce(p_.to_current_vars(global));
}

std::vector<std::vector<int>> ReductionSystem::standard_monomials(int k) const {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > p_.dim()) return out;
  std::vector<std::vector<int>> all;
  enumerate_monomials(static_cast<int>(p_.vars().size()), k, all);
  for (const auto& m : all) {
    bool reducible = false;
    for (const Rule& rule : rules_)
      if (divides(rule.lhs, m)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(m);
  }
  return out;
}

long ReductionSystem::standard_monomial_count(int k) const {
  return static_cast<long>(standard_monomials(k).size());
}

long ReductionSystem::total_rank() const {
  long total = 0;
  for (int k = 0; k <= p_.dim(); ++k) total += standard_monomial_count(k);
  return total;
}

bool forgetful_check(const Fan& fan, const FormalGroupLaw& law, int k) {
  // Route one: normal-form count in the eliminated, completed quotient.
  long a = ReductionSystem::complete(
               Presentation::build(fan, law).eliminated_at(0))
               .standard_monomial_count(k);

  // Route two: integer slice of the nonface ideal plus the characters'
  // degree-1 parts, with no input from the rewrite machinery.
  std::vector<std::vector<int>> basis;
  enumerate_monomials(fan.num_rays(), k, basis);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); ++i)
    index[basis[i]] = static_cast<int>(i);
  std::vector<std::vector<Int>> rows;
  for (const Cone& nf : fan.minimal_nonfaces()) {
    if (nf.dim() > k) continue;
    std::vector<int> nfe(fan.num_rays(), 0);
    for (int r : nf.rays) nfe[r] = 1;
    std::vector<std::vector<int>> mult;
    enumerate_monomials(fan.num_rays(), k - nf.dim(), mult);
    for (const auto& mu : mult) {
      std::vector<Int> row(basis.size(), Int(0));
      std::vector<int> e = nfe;
      for (size_t i = 0; i < e.size(); ++i) e[i] += mu[i];
      row[index.at(e)] = 1;
      rows.push_back(std::move(row));
    }
  }
  if (k >= 1) {
    std::vector<std::vector<int>> mult;
    enumerate_monomials(fan.num_rays(), k - 1, mult);
    for (int i = 0; i < fan.rank(); ++i) {
      for (const auto& mu : mult) {
        std::vector<Int> row(basis.size(), Int(0));
        for (int r = 0; r < fan.num_rays(); ++r) {
          if (fan.ray(r)[i] == 0) continue;
          std::vector<int> e = mu;
          ++e[r];
          row[index.at(e)] += fan.ray(r)[i];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  ZRankResult zr = integer_rank(rows);
  long b = static_cast<long>(basis.size()) - zr.rank;
  return a == b && zr.torsion.empty();
}

}  // namespace torcob
