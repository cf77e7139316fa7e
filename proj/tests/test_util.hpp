#pragma once

#include <torcob/lattice.hpp>

#include <random>

namespace ttu {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);  // fixed seed, reproducible runs
  return gen;
}

inline int rand_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng());
}

inline torcob::IntMat rand_mat(int rows, int cols, int bound) {
  torcob::IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rand_int(-bound, bound);
  return m;
}

// Product of a few elementary matrices; always unimodular.
inline torcob::IntMat rand_unimodular(int n, int ops = 8) {
  torcob::IntMat m = torcob::IntMat::identity(n);
  for (int k = 0; k < ops; ++k) {
    int i = rand_int(0, n - 1), j = rand_int(0, n - 1);
    switch (rand_int(0, 2)) {
      case 0:
        m.swap_rows(i, j);
        break;
      case 1:
        m.negate_row(i);
        break;
      default:
        if (i != j) m.add_row(i, j, torcob::Int(rand_int(-3, 3)));
    }
  }
  return m;
}

}  // namespace ttu
