#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace torcob {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Point of the lattice Z^n and element of its dual, as plain coordinate rows.
using LatticeVector = std::vector<Int>;
using Character = std::vector<Int>;

Int dot(const Character& chi, const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

// Dense integer matrix, row-major. All arithmetic is exact; no modular
// shortcuts anywhere in this module.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static IntMat identity(int n);
  static IntMat from_columns(const std::vector<LatticeVector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const = default;

  // Fraction-free (Bareiss) determinant; square matrices only.
  Int det() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int i);
  void add_row(int dst, int src, const Int& f);  // row dst += f * row src
  void add_col(int dst, int src, const Int& f);  // col dst += f * col src

  LatticeVector row(int i) const;
  LatticeVector col(int j) const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> e_;
};

// d = u * a * v with u, v unimodular, d diagonal with d_0 | d_1 | ... and
// d_i >= 0. u_inv is accumulated during the reduction, so no inversion step
// is ever needed downstream.
struct SnfResult {
  IntMat u, d, v;
  IntMat u_inv;
  std::vector<Int> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMat& a);

// True iff the vectors form a subset of some Z-basis of the ambient lattice,
// i.e. all invariant factors of the column matrix are 1.
bool extends_to_basis(const std::vector<LatticeVector>& vectors);

struct DualBasisResult {
  // Canonical completion of the input to a Z-basis (columns of u_inv past the
  // input span), then the dual basis of the completed basis split in two:
  // duals[i] pairs to delta_ij with the inputs and to 0 with the completion,
  // completion_duals vice versa.
  std::vector<LatticeVector> completion;
  std::vector<Character> duals;
  std::vector<Character> completion_duals;
};

DualBasisResult dual_basis(const std::vector<LatticeVector>& vectors, int rank);

// Rank over Q by fraction-free Gaussian elimination; the input is consumed.
int rational_rank(std::vector<std::vector<Rat>> rows);

// Rank and torsion of the integer row span: rank is the number of nonzero
// invariant factors, torsion the factors different from 0 and 1.
struct ZRankResult {
  int rank = 0;
  std::vector<Int> torsion;
};
ZRankResult integer_rank(const std::vector<std::vector<Int>>& rows);

}  // namespace torcob
