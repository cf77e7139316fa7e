#include "torcob/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace torcob {

Int dot(const Character& chi, const LatticeVector& v) {
  if (chi.size() != v.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += chi[i] * v[i];
  return s;
}

bool is_primitive(const LatticeVector& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g == 1;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(const std::vector<LatticeVector>& cols, int rows) {
  IntMat m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw std::invalid_argument("from_columns: dimension mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

Int IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: square matrices only");
  int n = rows_;
  if (n == 0) return 1;
  IntMat w(*this);
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / prev;
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMat::add_row(int dst, int src, const Int& f) {
  for (int c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMat::add_col(int dst, int src, const Int& f) {
  for (int r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
}

LatticeVector IntMat::row(int i) const {
  LatticeVector r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

LatticeVector IntMat::col(int j) const {
  LatticeVector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

std::vector<Int> SnfResult::invariant_factors() const {
  std::vector<Int> f;
  for (int i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) f.push_back(d(i, i));
  return f;
}

namespace {

// Bookkeeping for d = u * a * v. Row operations on d multiply u on the left
// by the same elementary matrix and u_inv on the right by its inverse; column
// operations go to v.
struct SnfWork {
  IntMat d, u, u_inv, v;

  void swap_rows(int i, int j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(int i, int j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void negate_row(int i) {
    d.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
  void add_row(int dst, int src, const Int& f) {
    d.add_row(dst, src, f);
    u.add_row(dst, src, f);
    u_inv.add_col(src, dst, -f);  // (E)^-1 applied on the right
  }
  void add_col(int dst, int src, const Int& f) {
    d.add_col(dst, src, f);
    v.add_col(dst, src, f);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
  const int m = a.rows(), n = a.cols();
  SnfWork w{a, IntMat::identity(m), IntMat::identity(m), IntMat::identity(n)};

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    // Deterministic pivot: smallest nonzero |entry| in the trailing block,
    // earliest position on ties.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& x = w.d(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        while (w.d(i, t) != 0) {
          Int q = w.d(i, t) / w.d(t, t);
          w.add_row(i, t, -q);
          if (w.d(i, t) != 0) {
            w.swap_rows(t, i);  // remainder became the smaller pivot
            dirty = true;
          }
        }
      }
      for (int j = t + 1; j < n; ++j) {
        while (w.d(t, j) != 0) {
          Int q = w.d(t, j) / w.d(t, t);
          w.add_col(j, t, -q);
          if (w.d(t, j) != 0) {
            w.swap_cols(t, j);
            dirty = true;
          }
        }
      }
      if (dirty) continue;

      // Pivot must divide the whole trailing block for the factor chain.
      int bi = -1, bj = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (w.d(i, j) % w.d(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      w.add_row(t, bi, 1);
      (void)bj;
    }
    if (w.d(t, t) < 0) w.negate_row(t);
  }

  return SnfResult{std::move(w.u), std::move(w.d), std::move(w.v),
                   std::move(w.u_inv)};
}

bool extends_to_basis(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return true;
  const int n = static_cast<int>(vectors[0].size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("extends_to_basis: dimension mismatch");
  const int s = static_cast<int>(vectors.size());
  if (s > n) return false;
  SnfResult snf = smith_normal_form(IntMat::from_columns(vectors, n));
  std::vector<Int> f = snf.invariant_factors();
  if (static_cast<int>(f.size()) != s) return false;
  return std::all_of(f.begin(), f.end(), [](const Int& x) { return x == 1; });
}

DualBasisResult dual_basis(const std::vector<LatticeVector>& vectors, int rank) {
  const int n = rank;
  const int s = static_cast<int>(vectors.size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("dual_basis: dimension mismatch");
  if (!extends_to_basis(vectors))
    throw std::invalid_argument("dual_basis: vectors do not extend to a basis");

  SnfResult snf = smith_normal_form(IntMat::from_columns(vectors, n));

  DualBasisResult out;
  for (int j = s; j < n; ++j) out.completion.push_back(snf.u_inv.col(j));

  // With u*a*v = [I_s; 0], the completed basis matrix b = [a | tail(u_inv)]
  // satisfies b^-1 = diag(v, I) * u; its rows are the dual characters.
  IntMat bv = IntMat::identity(n);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) bv(i, j) = snf.v(i, j);
  IntMat b_inv = bv * snf.u;

  for (int i = 0; i < s; ++i) out.duals.push_back(b_inv.row(i));
  for (int i = s; i < n; ++i) out.completion_duals.push_back(b_inv.row(i));

  // Exact pairing check; a failure here is an internal bug, not bad input.
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (dot(out.duals[i], vectors[j]) != (i == j ? 1 : 0))
        throw std::logic_error("dual_basis: pairing check failed");
  for (int i = 0; i < s; ++i)
    for (const auto& c : out.completion)
      if (dot(out.duals[i], c) != 0)
        throw std::logic_error("dual_basis: completion pairing check failed");
  return out;
}


int rational_rank(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (int j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

ZRankResult integer_rank(const std::vector<std::vector<Int>>& rows) {
  ZRankResult out;
  if (rows.empty()) return out;
  IntMat a(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = rows[i][j];
  SnfResult snf = smith_normal_form(a);
  for (const Int& d : snf.invariant_factors()) {
    if (d == 0) continue;
    ++out.rank;
    if (d != 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace torcob
