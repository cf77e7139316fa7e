#include "torcob/fgl.hpp"

namespace torcob {

namespace {

const std::vector<std::string> kUV = {"u", "v"};
const std::vector<std::string> kU = {"u"};

GradedSeries var_u(const CoeffRing& ring, int pb) {
  return GradedSeries::variable(ring, kU, pb, 0);
}

// Compositional inverse of a 1-variable series g = u + O(u^2), solved order
// by order: adding c*u^m shifts the degree-m coefficient of the composite by
// exactly c because g'(0) = 1.
GradedSeries compositional_inverse(const GradedSeries& g, const CoeffRing& ring,
                                   int pb) {
  GradedSeries e = var_u(ring, pb);
  for (int m = 2; m <= pb; ++m) {
    GradedSeries comp = g.substituted({e});
    Coeff delta = comp.coefficient({m});
    if (!delta.is_zero()) e.add_term({m}, -delta);
  }
  return e;
}

}  // namespace

FormalGroupLaw FormalGroupLaw::make(CoeffKind kind, int coeff_bound,
                                    int poly_bound) {
  if (poly_bound < 1)
    throw std::invalid_argument("formal group law needs poly bound >= 1");
  auto impl = std::make_shared<Impl>();
  impl->ring = CoeffRing(kind, coeff_bound);
  impl->poly_bound = poly_bound;
  const CoeffRing& R = impl->ring;

  GradedSeries u2 = GradedSeries::variable(R, kUV, poly_bound, 0);
  GradedSeries v2 = GradedSeries::variable(R, kUV, poly_bound, 1);

  switch (kind) {
    case CoeffKind::additive:
      impl->f = u2 + v2;
      break;
    case CoeffKind::multiplicative: {
      impl->f = u2 + v2;
      impl->f.add_term({1, 1}, -Coeff::gen(0));
      break;
    }
    case CoeffKind::universal_rational: {
      GradedSeries log = var_u(R, poly_bound);
      for (int i = 1; i <= R.coeff_bound() && i + 1 <= poly_bound; ++i)
        log.add_term({i + 1}, Coeff::gen(i - 1));
      impl->log = log;
      impl->exp = compositional_inverse(log, R, poly_bound);
      GradedSeries w = log.projected(kUV, {0}) + log.projected(kUV, {1});
      impl->f = impl->exp.substituted({w});
      break;
    }
  }

  // Formal inverse, solved order by order against F(u, i(u)) = 0 using
  // dF/dv(0,0) = 1.
  GradedSeries u1 = var_u(R, poly_bound);
  GradedSeries inv = -u1;
  for (int m = 2; m <= poly_bound; ++m) {
    GradedSeries g = impl->f.substituted({u1, inv});
    Coeff delta = g.coefficient({m});
    if (!delta.is_zero()) inv.add_term({m}, -delta);
  }
  impl->inv = inv;

  FormalGroupLaw law;
  law.impl_ = std::move(impl);
  return law;
}

const GradedSeries& FormalGroupLaw::log_series() const {
  if (kind() != CoeffKind::universal_rational)
    throw std::logic_error("log series only exists for the universal law");
  return impl_->log;
}

const GradedSeries& FormalGroupLaw::exp_series() const {
  if (kind() != CoeffKind::universal_rational)
    throw std::logic_error("exp series only exists for the universal law");
  return impl_->exp;
}

GradedSeries FormalGroupLaw::add(const GradedSeries& x,
                                 const GradedSeries& y) const {
  return impl_->f.substituted({x, y});
}

GradedSeries FormalGroupLaw::subtract(const GradedSeries& x,
                                      const GradedSeries& y) const {
  return add(x, inverse(y));
}

GradedSeries FormalGroupLaw::inverse(const GradedSeries& x) const {
  return impl_->inv.substituted({x});
}

GradedSeries FormalGroupLaw::n_series(long n) const {
  std::scoped_lock lock(impl_->mu);
  auto it = impl_->nser.find(n);
  if (it != impl_->nser.end()) return it->second;

  // Fill the table without recursive locking.
  GradedSeries u1 = var_u(impl_->ring, impl_->poly_bound);
  auto get_pos = [&](long k) -> const GradedSeries& {
    for (long i = 0; i <= k; ++i) {
      if (impl_->nser.count(i)) continue;
      if (i == 0)
        impl_->nser.emplace(0, GradedSeries(impl_->ring, kU,
                                            impl_->poly_bound));
      else
        impl_->nser.emplace(
            i, impl_->f.substituted({impl_->nser.at(i - 1), u1}));
    }
    return impl_->nser.at(k);
  };

  if (n >= 0) return get_pos(n);
  GradedSeries neg = get_pos(-n).substituted({impl_->inv});
  impl_->nser.emplace(n, neg);
  return neg;
}

GradedSeries FormalGroupLaw::n_series(long n, const GradedSeries& x) const {
  GradedSeries ns = n_series(n);
  if (ns.is_zero()) {
    // [0](x) = 0 in the context of x.
    return GradedSeries(CoeffRing::merged(impl_->ring, x.ring()), x.vars(),
                        std::min(impl_->poly_bound, x.poly_bound()));
  }
  return ns.substituted({x});
}

}  // namespace torcob
