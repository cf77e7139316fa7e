#include <torcob/series.hpp>

#include <doctest.h>

#include "test_util.hpp"

using namespace torcob;

namespace {

const CoeffRing kMult(CoeffKind::multiplicative, 3);
const CoeffRing kUniv(CoeffKind::universal_rational, 3);
const std::vector<std::string> kUV = {"u", "v"};

GradedSeries mult_fgl_series(int pb) {
  // u + v - b*u*v, assembled by hand.
  GradedSeries f = GradedSeries::variable(kMult, kUV, pb, 0) +
                   GradedSeries::variable(kMult, kUV, pb, 1);
  f.add_term({1, 1}, -Coeff::gen(0));
  return f;
}

GradedSeries rand_series(const CoeffRing& ring,
                         const std::vector<std::string>& vars, int pb,
                         int nterms) {
  GradedSeries s(ring, vars, pb);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> exps(vars.size(), 0);
    int budget = ttu::rand_int(0, pb);
    for (int i = 0; i < budget; ++i) ++exps[ttu::rand_int(0, int(vars.size()) - 1)];
    std::vector<int> ce;
    if (ring.num_gens() > 0) {
      ce.assign(ring.num_gens(), 0);
      int cd = ttu::rand_int(0, ring.coeff_bound());
      while (cd > 0) {
        int g = ttu::rand_int(0, ring.num_gens() - 1);
        if (-ring.gen_degree(g) <= cd) {
          ++ce[g];
          cd += ring.gen_degree(g);
        } else {
          cd = 0;
        }
      }
    }
    s.add_term(exps, Coeff::monomial(ce, Rat(ttu::rand_int(-4, 4))));
  }
  return s;
}

}  // namespace

TEST_CASE("coefficient ring descriptors") {
  CHECK(kMult.num_gens() == 1);
  CHECK(kMult.gen_degree(0) == -1);
  CHECK(kMult.gen_name(0) == "b");
  CHECK(kUniv.num_gens() == 3);
  CHECK(kUniv.gen_degree(0) == -1);
  CHECK(kUniv.gen_degree(2) == -3);
  CHECK(kUniv.gen_name(2) == "b3");
  CHECK(CoeffRing(CoeffKind::additive, 0).num_gens() == 0);
  CHECK_THROWS_AS(CoeffRing::merged(kMult, kUniv), std::invalid_argument);
  CHECK(CoeffRing::merged(kUniv, CoeffRing(CoeffKind::universal_rational, 1))
            .coeff_bound() == 1);
}

TEST_CASE("coefficient arithmetic and truncation") {
  Coeff b1 = Coeff::gen(0), b2 = Coeff::gen(1);
  Coeff x = b1 * b1 - b2.scaled(2);
  CHECK(x.min_degree(kUniv) == -2);
  CHECK(x.graded_part(kUniv, -2) == x);
  CHECK((b1 * b2).min_degree(kUniv) == -3);
  CHECK((b1 * b2 * b1).truncated(kUniv).is_zero());  // degree -4 < -3
  CHECK((x - x).is_zero());
  CHECK(Coeff::scalar(Rat(3, 2)).scalar_value() == Rat(3, 2));
  CHECK_THROWS_AS(b1.scalar_value(), std::logic_error);
  CHECK(x.to_string(kUniv) == "-2*b2 + b1^2");
}

TEST_CASE("series display is graded-lex") {
  GradedSeries f = mult_fgl_series(4);
  CHECK(f.to_string() == "u + v - b*u*v");
  GradedSeries p = f * f;
  CHECK(p.coefficient({1, 1}).to_string(kMult) == "2");
  CHECK(p.coefficient({2, 1}).to_string(kMult) == "-2*b");
  CHECK(p.coefficient({2, 2}).to_string(kMult) == "b^2");
}

TEST_CASE("substitution: v := u in u + v - b*u*v") {
  GradedSeries f = mult_fgl_series(4);
  std::vector<std::string> one = {"u"};
  GradedSeries u = GradedSeries::variable(kMult, one, 4, 0);
  GradedSeries g = f.substituted({u, u});
  CHECK(g.to_string() == "2*u - b*u^2");
}

TEST_CASE("substitution rejects nonzero constant terms") {
  GradedSeries f = mult_fgl_series(4);
  std::vector<std::string> one = {"u"};
  GradedSeries u = GradedSeries::variable(kMult, one, 4, 0);
  GradedSeries c = GradedSeries::constant(kMult, one, 4, Coeff::scalar(1));
  CHECK_THROWS_AS(f.substituted({u, u + c}), std::invalid_argument);
}

TEST_CASE("truncation bounds propagate as minima") {
  GradedSeries a = rand_series(kUniv, kUV, 5, 6);
  GradedSeries b = rand_series(kUniv, kUV, 3, 6);
  CHECK((a + b).poly_bound() == 3);
  CHECK((a * b).poly_bound() == 3);
  GradedSeries u = GradedSeries::variable(kUniv, kUV, 5, 0);
  CHECK(u.pow(6).is_zero());
  CHECK_FALSE(u.pow(5).is_zero());
}

TEST_CASE("coefficient degree bound truncates stored terms") {
  // b^k * u survives only while -k >= -3.
  GradedSeries u = GradedSeries::variable(kMult, kUV, 4, 0);
  Coeff b = Coeff::gen(0);
  GradedSeries x = u.scaled(b * b * b);
  CHECK_FALSE(x.is_zero());
  CHECK(u.scaled(b * b * b * b).is_zero());
}

TEST_CASE("truncation commutes with ring operations") {
  for (int trial = 0; trial < 40; ++trial) {
    GradedSeries a = rand_series(kUniv, kUV, 5, 5);
    GradedSeries b = rand_series(kUniv, kUV, 5, 5);
    int p = ttu::rand_int(0, 5), d = ttu::rand_int(0, 3);
    CHECK((a + b).truncated(p, d).equals(a.truncated(p, d) + b.truncated(p, d)));
    CHECK((a * b).truncated(p, d).equals(a.truncated(p, d) * b.truncated(p, d)));
  }
}

TEST_CASE("truncation commutes with substitution") {
  std::vector<std::string> one = {"u"};
  for (int trial = 0; trial < 25; ++trial) {
    GradedSeries f = rand_series(kUniv, kUV, 5, 5);
    GradedSeries x = rand_series(kUniv, one, 5, 3);
    GradedSeries y = rand_series(kUniv, one, 5, 3);
    // Force zero constant terms.
    GradedSeries xc = x - GradedSeries::constant(kUniv, one, 5, x.constant_term());
    GradedSeries yc = y - GradedSeries::constant(kUniv, one, 5, y.constant_term());
    int p = ttu::rand_int(1, 5), d = ttu::rand_int(0, 3);
    GradedSeries full = f.substituted({xc, yc});
    GradedSeries tight =
        f.truncated(p, d).substituted({xc.truncated(p, d), yc.truncated(p, d)});
    CHECK(full.truncated(p, d).equals(tight));
  }
}

TEST_CASE("projection renames and kills variables") {
  GradedSeries f = mult_fgl_series(4);
  GradedSeries fv0 = f.projected({"v"}, {-1, 0});  // u -> 0
  CHECK(fv0.to_string() == "v");
  GradedSeries swapped = f.projected({"u", "v"}, {1, 0});
  CHECK(swapped.to_string() == "u + v - b*u*v");  // symmetric here
  GradedSeries wide = f.projected({"a", "u", "v"}, {1, 2});
  CHECK(wide.vars().size() == 3);
  CHECK(wide.coefficient({0, 1, 1}) == -Coeff::gen(0));
}

TEST_CASE("homogeneous components track total degree") {
  GradedSeries f = mult_fgl_series(4);
  CHECK(f.is_homogeneous(1));
  CHECK(f.component(1).equals(f));
  CHECK(f.component(2).is_zero());
  GradedSeries sq = f * f;
  CHECK(sq.is_homogeneous(2));
  GradedSeries mixed = f + sq;
  CHECK_FALSE(mixed.is_homogeneous(1));
  CHECK(mixed.total_degrees() == std::vector<int>{1, 2});
  CHECK(mixed.component(1).equals(f));
  CHECK(mixed.component(2).equals(sq));
}

TEST_CASE("augmentation keeps the scalar slice") {
  GradedSeries f = mult_fgl_series(4);
  CHECK(augmented_scalar(f).to_string() == "u + v");
  GradedSeries z = GradedSeries::variable(kMult, kUV, 4, 0).scaled(Coeff::gen(0));
  CHECK(augmented_scalar(z).is_zero());
}
