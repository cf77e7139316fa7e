#pragma once

// Brute-force rank oracle for the additive Stanley-Reisner quotient
//   Z[t_1..t_m] / (nonface monomials, sum_rho <e_i, v_rho> t_rho).
// Deliberately self-contained: raw ray/cone data in, integer row
// reduction here, no dependency on the library under test.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace sr_oracle {

using Big = boost::multiprecision::cpp_int;
using Rays = std::vector<std::vector<long long>>;   // primitive generators
using Cones = std::vector<std::vector<int>>;        // 0-based ray index sets

inline bool subset_of(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

inline std::vector<std::uint64_t> cone_masks(const Cones& cones) {
  std::vector<std::uint64_t> out;
  for (const auto& c : cones) {
    std::uint64_t m = 0;
    for (int r : c) m |= std::uint64_t(1) << r;
    out.push_back(m);
  }
  return out;
}

inline bool is_face(std::uint64_t support, const std::vector<std::uint64_t>& cones) {
  for (std::uint64_t c : cones)
    if (subset_of(support, c)) return true;
  return false;
}

// Inclusion-minimal ray sets that lie in no cone, by subset enumeration.
inline std::vector<std::uint64_t> minimal_nonfaces(int nrays, const Cones& cones) {
  std::vector<std::uint64_t> masks = cone_masks(cones), out;
  for (std::uint64_t s = 1; s < (std::uint64_t(1) << nrays); ++s) {
    if (is_face(s, masks)) continue;
    bool minimal = true;
    for (int r = 0; r < nrays && minimal; ++r)
      if ((s >> r) & 1) minimal = is_face(s & ~(std::uint64_t(1) << r), masks);
    if (minimal) out.push_back(s);
  }
  return out;
}

inline void enumerate_monomials(int nvars, int degree,
                                std::vector<std::vector<int>>& out) {
  std::vector<int> cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return;
  }
  rec(rec, 0, degree);
}

// Rank of an integer matrix by Euclidean row reduction (Hermite form).
inline int hermite_rank(std::vector<std::vector<Big>> rows) {
  if (rows.empty()) return 0;
  const int ncols = int(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < int(rows.size()); ++col) {
    for (;;) {
      int best = -1;
      for (int i = rank; i < int(rows.size()); ++i)
        if (rows[i][col] != 0 &&
            (best < 0 || abs(rows[i][col]) < abs(rows[best][col])))
          best = i;
      if (best < 0) break;
      std::swap(rows[rank], rows[best]);
      bool cleared = true;
      for (int i = rank + 1; i < int(rows.size()); ++i) {
        if (rows[i][col] == 0) continue;
        Big q = rows[i][col] / rows[rank][col];
        for (int j = col; j < ncols; ++j) rows[i][j] -= q * rows[rank][j];
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) {
        ++rank;
        break;
      }
    }
  }
  return rank;
}

// Z-rank of the degree-k slice of the quotient: monomial count minus the
// rank of the span of (nonface multiples) + (linear-relation multiples).
inline int quotient_rank(const Rays& rays, const Cones& cones, int k) {
  const int m = int(rays.size());
  const int n = rays.empty() ? 0 : int(rays[0].size());
  std::vector<std::vector<int>> basis;
  enumerate_monomials(m, k, basis);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < int(basis.size()); ++i) index[basis[i]] = i;

  std::vector<std::vector<Big>> rows;
  for (std::uint64_t nf : minimal_nonfaces(m, cones)) {
    std::vector<int> nfexp(m, 0);
    int sz = 0;
    for (int r = 0; r < m; ++r)
      if ((nf >> r) & 1) nfexp[r] = 1, ++sz;
    if (sz > k) continue;
    std::vector<std::vector<int>> mult;
    enumerate_monomials(m, k - sz, mult);
    for (const auto& mu : mult) {
      std::vector<Big> row(basis.size(), 0);
      std::vector<int> e = nfexp;
      for (int r = 0; r < m; ++r) e[r] += mu[r];
      row[index.at(e)] = 1;
      rows.push_back(std::move(row));
    }
  }
  if (k >= 1) {
    std::vector<std::vector<int>> mult;
    enumerate_monomials(m, k - 1, mult);
    for (int i = 0; i < n; ++i) {
      for (const auto& mu : mult) {
        std::vector<Big> row(basis.size(), 0);
        for (int r = 0; r < m; ++r) {
          if (rays[r][i] == 0) continue;
          std::vector<int> e = mu;
          ++e[r];
          row[index.at(e)] += rays[r][i];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return int(basis.size()) - hermite_rank(std::move(rows));
}

// Number of degree-k monomials whose support is a face of the fan.
inline long standard_monomial_count(const Rays& rays, const Cones& cones, int k) {
  const int m = int(rays.size());
  std::vector<std::uint64_t> masks = cone_masks(cones);
  std::vector<std::vector<int>> all;
  enumerate_monomials(m, k, all);
  long count = 0;
  for (const auto& e : all) {
    std::uint64_t support = 0;
    for (int r = 0; r < m; ++r)
      if (e[r] > 0) support |= std::uint64_t(1) << r;
    if (is_face(support, masks)) ++count;
  }
  return count;
}

}  // namespace sr_oracle
