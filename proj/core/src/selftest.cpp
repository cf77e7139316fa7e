#include "torcob/selftest.hpp"

#include "torcob/equivariant.hpp"
#include "torcob/fanlib.hpp"
#include "torcob/ordinary.hpp"

#include "sr_oracle.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace torcob {

namespace {

// Checks return "" on success and the first failing comparison otherwise.
using Check = std::function<std::string(int coeff_bound)>;

std::string fail(const std::string& where, const std::string& what) {
  return where + ": " + what;
}

int cone_with_rays(const Fan& fan, std::vector<int> rays) {
  Cone want(std::move(rays));
  for (size_t i = 0; i < fan.max_cones().size(); ++i)
    if (fan.max_cones()[i] == want) return static_cast<int>(i);
  throw std::logic_error("no maximal cone " + want.to_string());
}

GradedSeries ray_monomial(const Presentation& p, std::vector<int> exps) {
  std::vector<std::string> vars;
  for (int i = 0; i < p.fan().num_rays(); ++i)
    vars.push_back("t" + std::to_string(i + 1));
  GradedSeries s(p.ring(), std::move(vars), p.law().poly_bound());
  s.add_term(std::move(exps), Coeff::scalar(1));
  return s;
}

sr_oracle::Rays oracle_rays(const Fan& fan) {
  sr_oracle::Rays out;
  for (const LatticeVector& v : fan.rays()) {
    std::vector<long long> row;
    for (const Int& x : v) row.push_back(x.convert_to<long long>());
    out.push_back(std::move(row));
  }
  return out;
}

sr_oracle::Cones oracle_cones(const Fan& fan) {
  sr_oracle::Cones out;
  for (const Cone& c : fan.max_cones()) out.push_back(c.rays);
  return out;
}

std::string check_projective_spaces(int cb) {
  for (int n = 1; n <= 4; ++n) {
    std::string name = "p" + std::to_string(n);
    Fan fan = builtin_fan(name);
    FormalGroupLaw law =
        FormalGroupLaw::make(CoeffKind::universal_rational, cb, n + 1);
    Presentation p = Presentation::build(fan, law);
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    Presentation e = p.eliminated_at(cone_with_rays(fan, base));
    for (int k = 0; k <= n + 1; ++k) {
      int want = k <= n ? 1 : 0;
      if (e.graded_rank(k) != want)
        return fail(name, "rank at degree " + std::to_string(k) + " is " +
                              std::to_string(e.graded_rank(k)));
    }
    ReductionSystem rs = ReductionSystem::complete(e);
    std::string survivor = "t" + std::to_string(n + 1);
    for (int i = 0; i < n; ++i) {
      std::vector<int> exps(n + 1, 0);
      exps[i] = 1;
      GradedSeries nf = rs.normal_form(ray_monomial(p, exps));
      if (nf.to_string() != survivor)
        return fail(name, "t" + std::to_string(i + 1) + " reduces to " +
                              nf.to_string());
    }
    std::vector<int> top(n + 1, 0);
    top[n] = n;
    if (rs.normal_form(ray_monomial(p, top)).is_zero())
      return fail(name, survivor + "^" + std::to_string(n) + " vanished");
    top[n] = n + 1;
    if (!rs.normal_form(ray_monomial(p, top)).is_zero())
      return fail(name, survivor + "^" + std::to_string(n + 1) + " nonzero");
  }
  return "";
}

std::string check_affine_spaces(int) {
  for (int s = 1; s <= 3; ++s) {
    std::string name = "a" + std::to_string(s);
    Fan fan = builtin_fan(name);
    for (CoeffKind kind : {CoeffKind::additive, CoeffKind::multiplicative,
                           CoeffKind::universal_rational}) {
      int d = kind == CoeffKind::additive ? 0 : 2;
      FormalGroupLaw law = FormalGroupLaw::make(kind, d, s + 1);
      Presentation p = Presentation::build(fan, law);
      for (int k = 0; k <= s; ++k) {
        auto info = p.graded_rank_info(k);
        int want = k == 0 ? 1 : 0;
        if (info.rank != want || !info.torsion.empty())
          return fail(name + "/" + to_string(kind),
                      "degree " + std::to_string(k) + " rank " +
                          std::to_string(info.rank));
      }
      if (ReductionSystem::complete(p.eliminated_at(0)).total_rank() != 1)
        return fail(name + "/" + to_string(kind), "total rank is not 1");
    }
  }
  return "";
}

std::string check_chow_ranks(int cb) {
  const std::vector<std::pair<std::string, std::vector<int>>> expected = {
      {"p2", {1, 1, 1, 0}},  {"f0", {1, 2, 1, 0}},   {"f1", {1, 2, 1, 0}},
      {"f2", {1, 2, 1, 0}},  {"blp2", {1, 2, 1, 0}},
  };
  for (const auto& [name, table] : expected) {
    Fan fan = builtin_fan(name);
    FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational,
                                              cb, fan.rank() + 1);
    Presentation chow =
        Presentation::build(fan, law).specialized(SpecializeTarget::chow);
    sr_oracle::Rays rays = oracle_rays(fan);
    sr_oracle::Cones cones = oracle_cones(fan);
    for (int k = 0; k < static_cast<int>(table.size()); ++k) {
      auto info = chow.graded_rank_info(k);
      if (info.rank != table[k] || !info.torsion.empty())
        return fail(name, "chow rank at degree " + std::to_string(k) +
                              " is " + std::to_string(info.rank));
      if (info.rank != sr_oracle::quotient_rank(rays, cones, k))
        return fail(name, "oracle disagrees at degree " + std::to_string(k));
    }
  }
  // The one-variable image of the plane: every class is a power of a line.
  Fan p2 = builtin_fan("p2");
  Presentation chow =
      Presentation::build(p2, FormalGroupLaw::make(CoeffKind::additive, 0, 3))
          .eliminated_at(cone_with_rays(p2, {0, 1}));
  ReductionSystem rs = ReductionSystem::complete(chow);
  if (!rs.normal_form(ray_monomial(rs.presentation(), {0, 0, 3})).is_zero())
    return fail("p2", "cube of the hyperplane class is nonzero");
  return "";
}

std::string check_ktheory_ranks(int cb) {
  const std::vector<std::pair<std::string, long>> expected = {
      {"p1", 2}, {"p2", 3}, {"f0", 4}, {"f1", 4}, {"f2", 4}, {"f3", 4}};
  for (const auto& [name, want] : expected) {
    Fan fan = builtin_fan(name);
    FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational,
                                              cb, fan.rank() + 1);
    Presentation kth = Presentation::build(fan, law)
                           .specialized(SpecializeTarget::ktheory)
                           .eliminated_at(0);
    long got = ReductionSystem::complete(kth).total_rank();
    if (got != want)
      return fail(name, "total rank " + std::to_string(got) + ", expected " +
                            std::to_string(want));
  }
  return "";
}

std::string check_fgl_axioms(int) {
  for (CoeffKind kind : {CoeffKind::additive, CoeffKind::multiplicative,
                         CoeffKind::universal_rational}) {
    int d = kind == CoeffKind::additive ? 0 : 4;
    FormalGroupLaw law = FormalGroupLaw::make(kind, d, 6);
    const GradedSeries& f = law.series();
    std::string where = to_string(kind);

    GradedSeries u = GradedSeries::variable(law.ring(), {"u", "v"}, 6, 0);
    GradedSeries v = GradedSeries::variable(law.ring(), {"u", "v"}, 6, 1);
    GradedSeries zero(law.ring(), {"u", "v"}, 6);
    if (!f.substituted({u, zero}).equals(u)) return fail(where, "F(u,0) != u");
    if (!f.substituted({v, u}).equals(f)) return fail(where, "F not commutative");

    GradedSeries x = GradedSeries::variable(law.ring(), {"u", "v", "w"}, 6, 0);
    GradedSeries y = GradedSeries::variable(law.ring(), {"u", "v", "w"}, 6, 1);
    GradedSeries z = GradedSeries::variable(law.ring(), {"u", "v", "w"}, 6, 2);
    if (!law.add(law.add(x, y), z).equals(law.add(x, law.add(y, z))))
      return fail(where, "F not associative");

    GradedSeries uu = GradedSeries::variable(law.ring(), {"u"}, 6, 0);
    if (!law.add(uu, law.inverse(uu)).is_zero())
      return fail(where, "F(u, inverse(u)) != 0");

    for (long m = -3; m <= 3; ++m)
      for (long n = -3; n <= 3; ++n)
        if (!law.n_series(m, law.n_series(n, uu)).equals(law.n_series(m * n)))
          return fail(where, "[" + std::to_string(m) + "][" +
                                 std::to_string(n) + "] != [" +
                                 std::to_string(m * n) + "]");
  }
  FormalGroupLaw univ =
      FormalGroupLaw::make(CoeffKind::universal_rational, 4, 6);
  if (augmented_scalar(univ.series()).to_string() != "u + v")
    return fail("universal", "generators-to-zero image is not the additive law");
  return "";
}

std::string check_piecewise_ranks(int cb) {
  for (const std::string& name : builtin_fan_names()) {
    Fan fan = builtin_fan(name);
    EquivariantModel model(
        fan, FormalGroupLaw::make(CoeffKind::universal_rational, cb,
                                  std::max(fan.rank(), 3) + 1));
    for (int k = 0; k <= 3; ++k) {
      auto monos = model.standard_monomials(k);
      long count = static_cast<long>(monos.size());
      if (count != model.graded_rank_pp(k))
        return fail(name, "piecewise rank at degree " + std::to_string(k) +
                              " is " + std::to_string(model.graded_rank_pp(k)) +
                              ", standard monomials " + std::to_string(count));
      std::vector<std::vector<Rat>> coords;
      for (const auto& exps : monos) {
        GradedSeries mono(model.ring(), model.ray_vars(), model.poly_bound());
        mono.add_term(exps, Coeff::scalar(1));
        PiecewiseElement img = model.psi(mono);
        std::string why;
        if (!model.is_compatible(img, &why))
          return fail(name, "standard monomial image incompatible: " + why);
        coords.push_back(model.pp_coordinates(img, k));
      }
      if (rational_rank(coords) != count)
        return fail(name, "standard monomial images dependent at degree " +
                              std::to_string(k));
    }
  }
  return "";
}

std::string check_nonface_products(int cb) {
  int nonfaces = 0;
  for (const std::string& name : builtin_fan_names()) {
    Fan fan = builtin_fan(name);
    EquivariantModel model(fan,
                           FormalGroupLaw::make(CoeffKind::universal_rational,
                                                cb, fan.rank() + 1));
    for (const Cone& nf : fan.minimal_nonfaces()) {
      PiecewiseElement prod = model.constant(Coeff::scalar(1));
      for (int r : nf.rays) prod = model.pp_mul(prod, model.u_class(r));
      for (const GradedSeries& comp : prod.comps)
        if (!comp.is_zero())
          return fail(name, "product over " + nf.to_string() + " is nonzero");
      ++nonfaces;
    }
  }
  if (nonfaces == 0) return "no nonfaces exercised";
  return "";
}

std::string check_first_chern(int cb) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (const std::string& name : builtin_fan_names()) {
    Fan fan = builtin_fan(name);
    EquivariantModel model(fan,
                           FormalGroupLaw::make(CoeffKind::universal_rational,
                                                cb, fan.rank() + 1));
    EquivariantModel add(
        fan, FormalGroupLaw::make(CoeffKind::additive, 0, fan.rank() + 1));
    for (int trial = 0; trial < 20; ++trial) {
      Character chi(fan.rank());
      for (Int& c : chi) c = entry(rng);

      GradedSeries sum(model.ring(), model.ray_vars(), model.poly_bound());
      for (int r = 0; r < fan.num_rays(); ++r) {
        long c = dot(chi, fan.ray(r)).convert_to<long>();
        if (c == 0) continue;
        GradedSeries t = GradedSeries::variable(model.ring(), model.ray_vars(),
                                                model.poly_bound(), r);
        GradedSeries piece = model.law().n_series(c, t);
        sum = sum.is_zero() ? piece : model.law().add(sum, piece);
      }
      if (!model.pp_equal(model.first_chern(chi), model.psi(sum)))
        return fail(name, "chern class of " + std::to_string(trial) +
                              "-th character mismatches its ray expansion");

      PiecewiseElement lin = add.zero();
      for (int r = 0; r < fan.num_rays(); ++r) {
        Rat c(dot(chi, fan.ray(r)));
        if (c == 0) continue;
        PiecewiseElement u = add.u_class(r);
        for (size_t i = 0; i < lin.comps.size(); ++i)
          lin.comps[i] = lin.comps[i] + u.comps[i].scaled(Coeff::scalar(c));
      }
      if (!add.pp_equal(add.first_chern(chi), lin))
        return fail(name, "additive chern class is not the linear ray sum");
    }
  }
  return "";
}

std::string check_rank_routes(int cb) {
  for (const std::string& name : builtin_fan_names()) {
    Fan fan = builtin_fan(name);
    FormalGroupLaw add = FormalGroupLaw::make(CoeffKind::additive, 0,
                                              fan.rank() + 1);
    for (int k = 0; k <= fan.rank() + 1; ++k)
      if (!forgetful_check(fan, add, k))
        return fail(name, "additive routes split at degree " + std::to_string(k));
  }
  for (const std::string& name : {"p2", "f1", "blp2"}) {
    Fan fan = builtin_fan(name);
    FormalGroupLaw univ = FormalGroupLaw::make(CoeffKind::universal_rational,
                                               cb, fan.rank() + 1);
    for (int k = 0; k <= fan.rank() + 1; ++k)
      if (!forgetful_check(fan, univ, k))
        return fail(name, "rational routes split at degree " + std::to_string(k));
  }
  return "";
}

std::string check_redundant_characters(int cb) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (const std::string& name : {"p2", "f1"}) {
    Fan fan = builtin_fan(name);
    FormalGroupLaw law = FormalGroupLaw::make(CoeffKind::universal_rational,
                                              cb, fan.rank() + 1);
    Presentation p = Presentation::build(fan, law);
    ReductionSystem rs = ReductionSystem::complete(p.eliminated_at(0));
    int done = 0;
    while (done < 10) {
      Character chi(fan.rank());
      for (Int& c : chi) c = entry(rng);
      bool basis = false;
      int nonzero = 0;
      for (const Int& c : chi) nonzero += c != 0;
      if (nonzero == 0) continue;
      if (nonzero == 1)
        for (const Int& c : chi) basis = basis || c == 1;
      if (basis) continue;
      if (!rs.normal_form(p.character_relation(chi)).is_zero())
        return fail(name, "character relation survives reduction");
      ++done;
    }
  }
  return "";
}

}  // namespace

std::vector<CheckResult> run_selftest(int coeff_bound) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"projective spaces reduce to truncated polynomial rings",
       check_projective_spaces},
      {"affine spaces have trivial quotients", check_affine_spaces},
      {"chow ranks match the integer oracle", check_chow_ranks},
      {"k-theory rank counts maximal cones", check_ktheory_ranks},
      {"formal group law axioms", check_fgl_axioms},
      {"piecewise ranks count standard monomials", check_piecewise_ranks},
      {"nonface divisor products vanish", check_nonface_products},
      {"first chern classes expand over rays", check_first_chern},
      {"equivariant and direct ranks agree", check_rank_routes},
      {"non-basis character relations are redundant", check_redundant_characters},
  };

  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      r.detail = check(coeff_bound);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace torcob
