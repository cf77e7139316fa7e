#pragma once

#include "torcob/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace torcob {

// Coefficient ring choices: Z sitting in degree 0; Z[b] with deg b = -1
// (inverse Bott class); Q[b1..bD] with deg b_i = -i, a rational model whose
// generators are free polynomial generators in nonpositive degrees.
enum class CoeffKind { additive, multiplicative, universal_rational };

std::string to_string(CoeffKind k);
CoeffKind coeff_kind_from_string(const std::string& s);

// Descriptor of the graded coefficient ring. All generators sit in negative
// degrees; every element is supported in degrees -coeff_bound..0 and anything
// below -coeff_bound is truncated to zero by the series layer.
class CoeffRing {
 public:
  CoeffRing() = default;
  CoeffRing(CoeffKind kind, int coeff_bound);

  CoeffKind kind() const { return kind_; }
  int coeff_bound() const { return coeff_bound_; }

  int num_gens() const;
  int gen_degree(int i) const;
  std::string gen_name(int i) const;

  bool operator==(const CoeffRing&) const = default;

  // Common ring for a binary operation: kinds must agree, bounds take the min.
  static CoeffRing merged(const CoeffRing& a, const CoeffRing& b);

 private:
  CoeffKind kind_ = CoeffKind::additive;
  int coeff_bound_ = 0;
};

// Element of the coefficient ring: sparse polynomial in the generators with
// exact rational coefficients. Keys are exponent vectors with trailing zeros
// trimmed, so the representation is independent of the bound D.
class Coeff {
 public:
  Coeff() = default;  // zero

  static Coeff scalar(Rat r);
  static Coeff gen(int i);  // the i-th generator, exponent 1
  static Coeff monomial(std::vector<int> exps, Rat c);

  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const;
  Rat scalar_part() const;   // coefficient of the empty monomial
  Rat scalar_value() const;  // throws unless is_scalar()

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff operator-() const;
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  Coeff operator*(const Coeff& o) const;
  Coeff& operator*=(const Rat& r);
  Coeff scaled(const Rat& r) const;

  int min_degree(const CoeffRing& ring) const;  // 0 for the zero element
  Coeff graded_part(const CoeffRing& ring, int degree) const;
  Coeff truncated(const CoeffRing& ring) const;

  const std::map<std::vector<int>, Rat>& terms() const { return t_; }
  void add_term(std::vector<int> exps, Rat c);

  bool operator==(const Coeff&) const = default;

  std::string to_string(const CoeffRing& ring) const;

 private:
  std::map<std::vector<int>, Rat> t_;
};

int coeff_monomial_degree(const CoeffRing& ring, const std::vector<int>& exps);

}  // namespace torcob
