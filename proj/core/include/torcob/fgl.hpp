#pragma once

#include "torcob/series.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace torcob {

// One-dimensional commutative formal group law F(u,v) over the chosen
// coefficient ring, truncated to the carried bounds. Value type; copies
// share the memoized multiplication-by-n table.
class FormalGroupLaw {
 public:
  // additive: F = u + v over Z.
  // multiplicative: F = u + v - b*u*v over Z[b].
  // universal_rational: F = exp(log u + log v) over Q[b1..bD] with
  //   log(u) = u + sum_{i<=D} b_i u^{i+1} and exp its compositional inverse.
  static FormalGroupLaw make(CoeffKind kind, int coeff_bound, int poly_bound);

  CoeffKind kind() const { return impl_->ring.kind(); }
  const CoeffRing& ring() const { return impl_->ring; }
  int poly_bound() const { return impl_->poly_bound; }

  const GradedSeries& series() const { return impl_->f; }          // F(u,v)
  const GradedSeries& inverse_series() const { return impl_->inv; }  // i(u)
  const GradedSeries& log_series() const;  // universal only
  const GradedSeries& exp_series() const;  // universal only

  // F(x,y); the arguments share one context and have no constant term.
  GradedSeries add(const GradedSeries& x, const GradedSeries& y) const;
  GradedSeries subtract(const GradedSeries& x, const GradedSeries& y) const;
  GradedSeries inverse(const GradedSeries& x) const;

  // [n](u) on the generic variable, and composed with an argument.
  GradedSeries n_series(long n) const;
  GradedSeries n_series(long n, const GradedSeries& x) const;

 private:
  struct Impl {
    CoeffRing ring;
    int poly_bound = 0;
    GradedSeries f;
    GradedSeries inv;
    GradedSeries log, exp;  // populated for the universal law
    mutable std::mutex mu;
    mutable std::map<long, GradedSeries> nser;
  };
  std::shared_ptr<const Impl> impl_;
};

}  // namespace torcob
