#pragma once

#include "torcob/fan.hpp"
#include "torcob/fgl.hpp"

#include <string>
#include <vector>

namespace torcob {

// Compatible family of truncated series, one per maximal cone, each living
// in the coordinate ring of its cone (variables = the cone's rays). The
// components vector is indexed parallel to Fan::max_cones().
struct PiecewiseElement {
  std::vector<GradedSeries> comps;
};

// The two models of the equivariant ring of X(fan): globally, series in all
// ray variables reduced modulo the nonface monomial ideal; locally,
// compatible piecewise families. psi maps the first onto the second by
// restriction; at each fixed degree they are free modules of the same rank.
class EquivariantModel {
 public:
  EquivariantModel(Fan fan, FormalGroupLaw law);

  const Fan& fan() const { return fan_; }
  const FormalGroupLaw& law() const { return law_; }
  const CoeffRing& ring() const { return law_.ring(); }
  int poly_bound() const { return law_.poly_bound(); }

  // Global context: one degree-1 variable per ray, t1..tm in ray order.
  const std::vector<std::string>& ray_vars() const { return ray_vars_; }
  std::vector<std::string> cone_vars(const Cone& c) const;

  // Kill every monomial whose support is not a face. The result is the
  // canonical representative modulo the nonface ideal.
  GradedSeries sr_reduce(const GradedSeries& global) const;
  bool is_sr_reduced(const GradedSeries& global) const;

  // Face restriction: substitute 0 for the rays of `from` outside `to`.
  // `elt` lives in cone_vars(from); the result lives in cone_vars(to).
  GradedSeries restrict(const GradedSeries& elt, const Cone& from,
                        const Cone& to) const;

  bool is_compatible(const PiecewiseElement& x, std::string* why = nullptr) const;

  PiecewiseElement zero() const;
  PiecewiseElement constant(const Coeff& c) const;
  PiecewiseElement u_class(int ray) const;

  // Componentwise ring structure on compatible families.
  PiecewiseElement pp_add(const PiecewiseElement& a, const PiecewiseElement& b) const;
  PiecewiseElement pp_mul(const PiecewiseElement& a, const PiecewiseElement& b) const;
  bool pp_equal(const PiecewiseElement& a, const PiecewiseElement& b) const;

  // Restriction of a global series to every maximal cone; sends the ray
  // variable t_rho to u_class(rho) and nonface monomials to zero.
  PiecewiseElement psi(const GradedSeries& global) const;

  // Family whose component on sigma is the F-sum over rays of sigma of the
  // <chi, v_rho>-series of t_rho; equals psi of the global F-sum.
  PiecewiseElement first_chern(const Character& chi) const;

  // Degree-k monomials of the global context whose support is a face.
  std::vector<std::vector<int>> standard_monomials(int k) const;

  // Dimension of the space of compatible families that are homogeneous of
  // monomial degree k with scalar coefficients, by rational linear algebra
  // on the pairwise restriction constraints.
  int graded_rank_pp(int k) const;

  // Scalar coordinates of a degree-k family in the componentwise monomial
  // basis used by graded_rank_pp. Throws if a coefficient is not scalar.
  std::vector<Rat> pp_coordinates(const PiecewiseElement& x, int k) const;

  std::string pp_to_string(const PiecewiseElement& x) const;

 private:
  Fan fan_;
  FormalGroupLaw law_;
  std::vector<std::string> ray_vars_;
  std::vector<std::vector<int>> nonfaces_;  // sorted ray index sets
};

}  // namespace torcob
