#include <torcob/lattice.hpp>

#include <doctest.h>

#include "test_util.hpp"

using namespace torcob;

namespace {

IntMat mat(std::initializer_list<std::initializer_list<int>> rows) {
  IntMat m(static_cast<int>(rows.size()),
           rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

LatticeVector vec(std::initializer_list<int> xs) {
  LatticeVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

// Defining properties of the decomposition, checked from scratch.
void check_snf(const IntMat& a) {
  SnfResult r = smith_normal_form(a);
  CHECK(r.u * a * r.v == r.d);
  CHECK(abs(r.u.det()) == 1);
  CHECK(abs(r.v.det()) == 1);
  CHECK(r.u * r.u_inv == IntMat::identity(a.rows()));
  for (int i = 0; i < r.d.rows(); ++i)
    for (int j = 0; j < r.d.cols(); ++j)
      if (i != j) CHECK(r.d(i, j) == 0);
  auto f = r.invariant_factors();
  for (size_t i = 0; i + 1 < f.size(); ++i) {
    CHECK(f[i] > 0);
    CHECK(f[i + 1] % f[i] == 0);
  }
  int nz = static_cast<int>(f.size());
  for (int i = nz; i < std::min(r.d.rows(), r.d.cols()); ++i)
    CHECK(r.d(i, i) == 0);
}

}  // namespace

TEST_CASE("smith normal form: pinned small cases") {
  {
    SnfResult r = smith_normal_form(mat({{2, 0}, {0, 3}}));
    CHECK(r.d(0, 0) == 1);
    CHECK(r.d(1, 1) == 6);
  }
  {
    SnfResult r = smith_normal_form(mat({{1, 2}, {3, 4}}));
    CHECK(r.d(0, 0) == 1);
    CHECK(r.d(1, 1) == 2);
  }
  check_snf(mat({{2, 0}, {0, 3}}));
  check_snf(mat({{1, 2}, {3, 4}}));
}

TEST_CASE("smith normal form: edge shapes") {
  check_snf(IntMat(3, 3));  // zero matrix
  CHECK(smith_normal_form(IntMat(3, 3)).invariant_factors().empty());
  check_snf(mat({{4, 6, 10}}));
  {
    SnfResult r = smith_normal_form(mat({{4, 6, 10}}));
    CHECK(r.d(0, 0) == 2);
  }
  check_snf(mat({{3}, {6}, {9}}));
}

TEST_CASE("smith normal form: randomized against defining properties") {
  for (int trial = 0; trial < 200; ++trial) {
    int m = ttu::rand_int(1, 4), n = ttu::rand_int(1, 4);
    check_snf(ttu::rand_mat(m, n, 9));
  }
}

TEST_CASE("extends_to_basis basics") {
  CHECK(extends_to_basis({}));
  CHECK(extends_to_basis({vec({1, 0})}));
  CHECK(extends_to_basis({vec({1, 0}), vec({1, 1})}));
  CHECK_FALSE(extends_to_basis({vec({2, 0})}));
  CHECK_FALSE(extends_to_basis({vec({1, 0}), vec({1, 0})}));
  CHECK_FALSE(extends_to_basis({vec({1, 0}), vec({0, 1}), vec({1, 1})}));
  CHECK_FALSE(extends_to_basis({vec({0, 0})}));
  CHECK(extends_to_basis({vec({2, 1})}));
  CHECK_THROWS_AS(extends_to_basis({vec({1, 0}), vec({1, 1, 0})}),
                  std::invalid_argument);
}

TEST_CASE("extends_to_basis is invariant under permutation and GL(n,Z)") {
  for (int trial = 0; trial < 100; ++trial) {
    int n = ttu::rand_int(1, 4);
    int s = ttu::rand_int(1, n);
    std::vector<LatticeVector> vs;
    for (int k = 0; k < s; ++k) {
      LatticeVector v(n);
      for (int i = 0; i < n; ++i) v[i] = ttu::rand_int(-4, 4);
      vs.push_back(v);
    }
    bool base = extends_to_basis(vs);

    std::vector<LatticeVector> perm = vs;
    std::shuffle(perm.begin(), perm.end(), ttu::rng());
    CHECK(extends_to_basis(perm) == base);

    IntMat g = ttu::rand_unimodular(n);
    std::vector<LatticeVector> moved;
    for (const auto& v : vs) {
      LatticeVector w(n);
      for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int j = 0; j < n; ++j) acc += g(i, j) * v[j];
        w[i] = acc;
      }
      moved.push_back(w);
    }
    CHECK(extends_to_basis(moved) == base);
  }
}

TEST_CASE("dual_basis: pinned cases") {
  {
    auto r = dual_basis({vec({1, 0}), vec({1, 1})}, 2);
    CHECK(r.completion.empty());
    REQUIRE(r.duals.size() == 2);
    CHECK(r.duals[0] == vec({1, -1}));
    CHECK(r.duals[1] == vec({0, 1}));
  }
  {
    auto r = dual_basis({vec({1, 0})}, 2);
    REQUIRE(r.completion.size() == 1);
    CHECK(r.completion[0] == vec({0, 1}));
    REQUIRE(r.duals.size() == 1);
    CHECK(r.duals[0] == vec({1, 0}));
  }
  CHECK_THROWS_AS(dual_basis({vec({2, 0})}, 2), std::invalid_argument);
}

TEST_CASE("dual_basis: pairing properties on random basis subsets") {
  for (int trial = 0; trial < 100; ++trial) {
    int n = ttu::rand_int(1, 4);
    int s = ttu::rand_int(0, n);
    IntMat g = ttu::rand_unimodular(n);
    std::vector<LatticeVector> vs;
    for (int j = 0; j < s; ++j) vs.push_back(g.col(j));
    REQUIRE(extends_to_basis(vs));
    auto r = dual_basis(vs, n);
    CHECK(static_cast<int>(r.completion.size()) == n - s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        CHECK(dot(r.duals[i], vs[j]) == (i == j ? 1 : 0));
    for (int i = 0; i < n - s; ++i) {
      for (int j = 0; j < s; ++j) CHECK(dot(r.completion_duals[i], vs[j]) == 0);
      for (int j = 0; j < n - s; ++j)
        CHECK(dot(r.completion_duals[i], r.completion[j]) == (i == j ? 1 : 0));
    }
    // Completed basis really is a basis.
    std::vector<LatticeVector> full = vs;
    full.insert(full.end(), r.completion.begin(), r.completion.end());
    CHECK(abs(IntMat::from_columns(full, n).det()) == 1);
  }
}

TEST_CASE("primitive vectors") {
  CHECK(is_primitive(vec({1, 0})));
  CHECK(is_primitive(vec({2, 1})));
  CHECK(is_primitive(vec({-1, 2})));
  CHECK_FALSE(is_primitive(vec({2, 4})));
  CHECK_FALSE(is_primitive(vec({0, 0})));
}
