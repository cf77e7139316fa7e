#include <torcob/fgl.hpp>

#include <doctest.h>

#include <vector>

using namespace torcob;

namespace {

const std::vector<std::string> kU = {"u"};
const std::vector<std::string> kUVW = {"u", "v", "w"};

GradedSeries var(const FormalGroupLaw& law, const std::vector<std::string>& ctx,
                 int i) {
  return GradedSeries::variable(law.ring(), ctx, law.poly_bound(), i);
}

void check_axioms(const FormalGroupLaw& law) {
  GradedSeries u = var(law, kUVW, 0);
  GradedSeries v = var(law, kUVW, 1);
  GradedSeries w = var(law, kUVW, 2);
  GradedSeries zero(law.ring(), kUVW, law.poly_bound());

  CHECK(law.add(u, zero).equals(u));
  CHECK(law.add(zero, u).equals(u));
  CHECK(law.add(u, v).equals(law.add(v, u)));
  CHECK(law.add(law.add(u, v), w).equals(law.add(u, law.add(v, w))));
  CHECK(law.add(u, law.inverse(u)).is_zero());
}

}  // namespace

TEST_CASE("additive law") {
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::additive, 0, 5);
  CHECK(law.series().to_string() == "u + v");
  GradedSeries u = var(law, kU, 0);
  CHECK(law.inverse(u).to_string() == "-u");
  CHECK(law.n_series(3, u).to_string() == "3*u");
  CHECK(law.n_series(-2, u).to_string() == "-2*u");
  CHECK(law.n_series(0, u).is_zero());
  check_axioms(law);
}

TEST_CASE("multiplicative law pinned values") {
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::multiplicative, 5, 5);
  CHECK(law.series().to_string() == "u + v - b*u*v");
  GradedSeries u = var(law, kU, 0);

  // Formal inverse is the geometric series -sum_k b^(k-1) u^k.
  GradedSeries inv = law.inverse(u);
  GradedSeries expect(law.ring(), kU, law.poly_bound());
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> ce = {k - 1};
    expect.add_term({k}, Coeff::monomial(ce, Rat(-1)));
  }
  CHECK(inv.equals(expect));

  CHECK(law.n_series(2, u).to_string() == "2*u - b*u^2");
  CHECK(law.n_series(3, u).to_string() == "3*u - 3*b*u^2 + b^2*u^3");
  check_axioms(law);
}

TEST_CASE("universal law basics") {
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational, 3, 4);
  const GradedSeries& f = law.series();
  CHECK(f.coefficient({1, 0}).scalar_value() == Rat(1));
  CHECK(f.coefficient({0, 1}).scalar_value() == Rat(1));
  CHECK(f.coefficient({1, 1}) == Coeff::gen(0).scaled(-2));

  // F - u - v is divisible by uv: no pure powers of either variable.
  for (int k = 2; k <= 4; ++k) {
    CHECK(f.coefficient({k, 0}).is_zero());
    CHECK(f.coefficient({0, k}).is_zero());
  }
  check_axioms(law);
}

TEST_CASE("universal law inverts its logarithm") {
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational, 4, 5);
  GradedSeries u = var(law, kU, 0);
  CHECK(law.log_series().substituted({law.exp_series()}).equals(u));
  CHECK(law.exp_series().substituted({law.log_series()}).equals(u));

  // log is a homomorphism to the additive law.
  std::vector<std::string> uv = {"u", "v"};
  GradedSeries lf = law.log_series().substituted({law.series()});
  GradedSeries lu = law.log_series().projected(uv, {0});
  GradedSeries lv = law.log_series().projected(uv, {1});
  CHECK(lf.equals(lu + lv));
}

TEST_CASE("universal law with generators killed is additive") {
  FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational, 3, 4);
  GradedSeries f0 = augmented_scalar(law.series());
  CHECK(f0.to_string() == "u + v");
  CHECK(augmented_scalar(law.inverse(var(law, kU, 0))).to_string() == "-u");
}

TEST_CASE("n-series compose and add") {
  for (CoeffKind kind : {CoeffKind::additive, CoeffKind::multiplicative,
                         CoeffKind::universal_rational}) {
    FormalGroupLaw law = FormalGroupLaw::make(kind, 3, 5);
    GradedSeries u = var(law, kU, 0);
    for (int m = -3; m <= 3; ++m) {
      for (int n = -3; n <= 3; ++n) {
        CHECK(law.add(law.n_series(m, u), law.n_series(n, u))
                  .equals(law.n_series(m + n, u)));
        CHECK(law.n_series(m, law.n_series(n, u)).equals(law.n_series(m * n, u)));
      }
    }
  }
}

TEST_CASE("laws are consistent across truncation bounds") {
  FormalGroupLaw wide = FormalGroupLaw::make(CoeffKind::universal_rational, 4, 6);
  FormalGroupLaw tight = FormalGroupLaw::make(CoeffKind::universal_rational, 2, 3);
  CHECK(wide.series().truncated(3, 2).equals(tight.series()));
  CHECK(wide.n_series(3).truncated(3, 2).equals(tight.n_series(3)));
  CHECK(wide.log_series().truncated(3, 2).equals(tight.log_series()));

  FormalGroupLaw mw = FormalGroupLaw::make(CoeffKind::multiplicative, 4, 6);
  FormalGroupLaw mt = FormalGroupLaw::make(CoeffKind::multiplicative, 2, 3);
  CHECK(mw.series().truncated(3, 2).equals(mt.series()));
  CHECK(mw.n_series(-2).truncated(3, 2).equals(mt.n_series(-2)));
}
