#include "torcob/equivariant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torcob {

EquivariantModel::EquivariantModel(Fan fan, FormalGroupLaw law)
    : fan_(std::move(fan)), law_(std::move(law)) {
  for (int i = 0; i < fan_.num_rays(); ++i)
    ray_vars_.push_back("t" + std::to_string(i + 1));
  for (const Cone& nf : fan_.minimal_nonfaces()) nonfaces_.push_back(nf.rays);
}

std::vector<std::string> EquivariantModel::cone_vars(const Cone& c) const {
  std::vector<std::string> out;
  for (int r : c.rays) out.push_back(ray_vars_[r]);
  return out;
}

GradedSeries EquivariantModel::sr_reduce(const GradedSeries& global) const {
  GradedSeries out(global.ring(), global.vars(), global.poly_bound());
  for (const auto& [exps, c] : global.terms()) {
    bool dead = false;
    for (const auto& nf : nonfaces_) {
      bool divides = true;
      for (int r : nf)
        if (exps[r] == 0) {
          divides = false;
          break;
        }
      if (divides) {
        dead = true;
        break;
      }
    }
    if (!dead) out.add_term(exps, c);
  }
  return out;
}

bool EquivariantModel::is_sr_reduced(const GradedSeries& global) const {
  return sr_reduce(global).equals(global);
}

GradedSeries EquivariantModel::restrict(const GradedSeries& elt, const Cone& from,
                                        const Cone& to) const {
  if (!to.is_subset_of(from))
    throw std::invalid_argument("restrict: " + to.to_string() +
                                " is not a face of " + from.to_string());
  std::vector<int> target(from.dim(), -1);
  for (int i = 0; i < from.dim(); ++i) {
    auto it = std::find(to.rays.begin(), to.rays.end(), from.rays[i]);
    if (it != to.rays.end())
      target[i] = static_cast<int>(it - to.rays.begin());
  }
  return elt.projected(cone_vars(to), target);
}

bool EquivariantModel::is_compatible(const PiecewiseElement& x,
                                     std::string* why) const {
  const auto& mc = fan_.max_cones();
  if (x.comps.size() != mc.size())
    throw std::invalid_argument("piecewise element has wrong component count");
  for (size_t i = 0; i < mc.size(); ++i) {
    if (x.comps[i].vars() != cone_vars(mc[i]))
      throw std::invalid_argument("component " + std::to_string(i) +
                                  " is not in the variables of its cone");
    for (size_t j = i + 1; j < mc.size(); ++j) {
      Cone shared = fan_.common_face(static_cast<int>(i), static_cast<int>(j));
      GradedSeries a = restrict(x.comps[i], mc[i], shared);
      GradedSeries b = restrict(x.comps[j], mc[j], shared);
      if (!a.equals(b)) {
        if (why) {
          std::ostringstream os;
          os << "components on " << mc[i].to_string() << " and "
             << mc[j].to_string() << " disagree on " << shared.to_string()
             << ": " << a.to_string() << " vs " << b.to_string();
          *why = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

PiecewiseElement EquivariantModel::zero() const {
  PiecewiseElement out;
  for (const Cone& c : fan_.max_cones())
    out.comps.emplace_back(ring(), cone_vars(c), poly_bound());
  return out;
}

PiecewiseElement EquivariantModel::constant(const Coeff& c) const {
  PiecewiseElement out;
  for (const Cone& mc : fan_.max_cones())
    out.comps.push_back(
        GradedSeries::constant(ring(), cone_vars(mc), poly_bound(), c));
  return out;
}

PiecewiseElement EquivariantModel::u_class(int ray) const {
  if (ray < 0 || ray >= fan_.num_rays())
    throw std::invalid_argument("u_class: no such ray");
  PiecewiseElement out;
  for (const Cone& mc : fan_.max_cones()) {
    auto it = std::find(mc.rays.begin(), mc.rays.end(), ray);
    if (it == mc.rays.end()) {
      out.comps.emplace_back(ring(), cone_vars(mc), poly_bound());
    } else {
      out.comps.push_back(
          GradedSeries::variable(ring(), cone_vars(mc), poly_bound(),
                                 static_cast<int>(it - mc.rays.begin())));
    }
  }
  return out;
}

PiecewiseElement EquivariantModel::pp_add(const PiecewiseElement& a,
                                          const PiecewiseElement& b) const {
  PiecewiseElement out;
  for (size_t i = 0; i < a.comps.size(); ++i)
    out.comps.push_back(a.comps[i] + b.comps[i]);
  return out;
}

PiecewiseElement EquivariantModel::pp_mul(const PiecewiseElement& a,
                                          const PiecewiseElement& b) const {
  PiecewiseElement out;
  for (size_t i = 0; i < a.comps.size(); ++i)
    out.comps.push_back(a.comps[i] * b.comps[i]);
  return out;
}

bool EquivariantModel::pp_equal(const PiecewiseElement& a,
                                const PiecewiseElement& b) const {
  for (size_t i = 0; i < a.comps.size(); ++i)
    if (!a.comps[i].equals(b.comps[i])) return false;
  return true;
}

PiecewiseElement EquivariantModel::psi(const GradedSeries& global) const {
  if (global.vars() != ray_vars_)
    throw std::invalid_argument("psi expects a series in the ray variables");
  PiecewiseElement out;
  for (const Cone& mc : fan_.max_cones()) {
    std::vector<int> target(fan_.num_rays(), -1);
    for (int i = 0; i < mc.dim(); ++i) target[mc.rays[i]] = i;
    out.comps.push_back(global.projected(cone_vars(mc), target));
  }
  return out;
}

PiecewiseElement EquivariantModel::first_chern(const Character& chi) const {
  if (static_cast<int>(chi.size()) != fan_.rank())
    throw std::invalid_argument("character has wrong length");
  PiecewiseElement out;
  for (const Cone& mc : fan_.max_cones()) {
    std::vector<std::string> vars = cone_vars(mc);
    GradedSeries acc(ring(), vars, poly_bound());
    for (int i = 0; i < mc.dim(); ++i) {
      Int m = dot(chi, fan_.ray(mc.rays[i]));
      if (m == 0) continue;
      GradedSeries term = law_.n_series(
          static_cast<long>(m), GradedSeries::variable(ring(), vars, poly_bound(), i));
      acc = acc.is_zero() ? term : law_.add(acc, term);
    }
    out.comps.push_back(acc);
  }
  return out;
}

std::vector<std::vector<int>> EquivariantModel::standard_monomials(int k) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(fan_.num_rays(), 0);
  auto support_is_face = [&]() {
    Cone s;
    for (int r = 0; r < fan_.num_rays(); ++r)
      if (cur[r] > 0) s.rays.push_back(r);
    return fan_.is_face(s);
  };
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == fan_.num_rays()) {
      if (left == 0 && support_is_face()) out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, k);
  return out;
}

namespace {

// Index of every degree-k exponent vector in nvars variables.
std::map<std::vector<int>, int> monomial_index(int nvars, int k) {
  std::map<std::vector<int>, int> out;
  std::vector<int> cur(nvars, 0);
  int next = 0;
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars) {
      if (left == 0) out.emplace(cur, next++);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  if (nvars == 0) {
    if (k == 0) out.emplace(cur, next++);
    return out;
  }
  rec(rec, 0, k);
  return out;
}

}  // namespace

int EquivariantModel::graded_rank_pp(int k) const {
  if (k < 0) return 0;
  const auto& mc = fan_.max_cones();
  std::vector<std::map<std::vector<int>, int>> basis;
  std::vector<int> offset;
  int total = 0;
  for (const Cone& c : mc) {
    offset.push_back(total);
    basis.push_back(monomial_index(c.dim(), k));
    total += static_cast<int>(basis.back().size());
  }

  // One row per shared monomial on a common face: the two cone-level
  // coordinates that restrict onto it must agree.
  std::vector<std::vector<Rat>> rows;
  for (size_t i = 0; i < mc.size(); ++i) {
    for (size_t j = i + 1; j < mc.size(); ++j) {
      Cone shared = fan_.common_face(static_cast<int>(i), static_cast<int>(j));
      for (const auto& [exps, unused] : monomial_index(shared.dim(), k)) {
        (void)unused;
        auto embed = [&](const Cone& big, int off,
                         const std::map<std::vector<int>, int>& idx) {
          std::vector<int> e(big.dim(), 0);
          for (int p = 0; p < shared.dim(); ++p) {
            auto it = std::find(big.rays.begin(), big.rays.end(), shared.rays[p]);
            e[it - big.rays.begin()] = exps[p];
          }
          return off + idx.at(e);
        };
        int a = embed(mc[i], offset[i], basis[i]);
        int b = embed(mc[j], offset[j], basis[j]);
        std::vector<Rat> row(total, Rat(0));
        row[a] += 1;
        row[b] -= 1;
        rows.push_back(std::move(row));
      }
    }
  }
  return total - rational_rank(std::move(rows));
}

std::vector<Rat> EquivariantModel::pp_coordinates(const PiecewiseElement& x,
                                                  int k) const {
  const auto& mc = fan_.max_cones();
  std::vector<Rat> out;
  for (size_t i = 0; i < mc.size(); ++i) {
    for (const auto& [exps, unused] : monomial_index(mc[i].dim(), k)) {
      (void)unused;
      Coeff c = x.comps[i].coefficient(exps);
      out.push_back(c.is_zero() ? Rat(0) : c.scalar_value());
    }
  }
  return out;
}

std::string EquivariantModel::pp_to_string(const PiecewiseElement& x) const {
  std::ostringstream os;
  const auto& mc = fan_.max_cones();
  for (size_t i = 0; i < mc.size(); ++i) {
    if (i) os << "; ";
    os << mc[i].to_string() << ": " << x.comps[i].to_string();
  }
  return os.str();
}

}  // namespace torcob
