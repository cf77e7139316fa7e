#pragma once

#include "torcob/coeff.hpp"

#include <map>
#include <string>
#include <vector>

namespace torcob {

// Element of a graded power series ring: variables of degree 1 with
// coefficients in nonpositive degrees. Two truncation bounds are carried
// everywhere: monomials above poly_bound and coefficient pieces below
// -ring().coeff_bound() are dropped on every operation, and binary
// operations take the minimum of the operand bounds. A homogeneous element
// of total degree d is therefore stored exactly in monomial degrees
// d .. min(poly_bound, d + coeff_bound).
class GradedSeries {
 public:
  GradedSeries() = default;
  GradedSeries(CoeffRing ring, std::vector<std::string> vars, int poly_bound);

  static GradedSeries constant(const CoeffRing& ring,
                               std::vector<std::string> vars, int poly_bound,
                               Coeff c);
  static GradedSeries variable(const CoeffRing& ring,
                               std::vector<std::string> vars, int poly_bound,
                               int index);

  const CoeffRing& ring() const { return ring_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int num_vars() const { return static_cast<int>(vars_.size()); }
  int poly_bound() const { return poly_bound_; }

  bool is_zero() const { return t_.empty(); }
  const std::map<std::vector<int>, Coeff>& terms() const { return t_; }
  Coeff coefficient(const std::vector<int>& exps) const;
  Coeff constant_term() const;

  GradedSeries operator+(const GradedSeries& o) const;
  GradedSeries operator-(const GradedSeries& o) const;
  GradedSeries operator-() const;
  GradedSeries operator*(const GradedSeries& o) const;
  GradedSeries scaled(const Coeff& c) const;
  GradedSeries pow(int k) const;

  // Tightened copy; loosening a bound is not possible (information is gone).
  GradedSeries truncated(int poly_bound, int coeff_bound) const;

  // Substitute images[i] for vars()[i]. Images share one context and must
  // have zero constant term; bounds of the result are the minima.
  GradedSeries substituted(const std::vector<GradedSeries>& images) const;

  // Push into another variable list: target_index[i] is the index of
  // vars()[i] in new_vars, or -1 to kill the variable (monomials using it
  // are dropped). Used for face restriction and for cone embeddings.
  GradedSeries projected(std::vector<std::string> new_vars,
                         const std::vector<int>& target_index) const;

  void add_term(std::vector<int> exps, Coeff c);

  int min_poly_degree() const;  // 0 for the zero series
  int max_poly_degree() const;
  GradedSeries component(int total_degree) const;
  std::vector<int> total_degrees() const;  // sorted degrees of nonzero parts
  bool is_homogeneous(int degree) const;

  // Structural equality of terms within the same ring kind and variable
  // list; truncation bounds are not compared.
  bool equals(const GradedSeries& o) const;

  std::string to_string() const;

 private:
  void check_context(const GradedSeries& o) const;
  void normalize();

  CoeffRing ring_;
  std::vector<std::string> vars_;
  int poly_bound_ = 0;
  std::map<std::vector<int>, Coeff> t_;
};

int poly_degree(const std::vector<int>& exps);

// Image under the augmentation sending every coefficient generator to zero;
// only the scalar part of each coefficient survives.
GradedSeries augmented_scalar(const GradedSeries& s);

}  // namespace torcob
