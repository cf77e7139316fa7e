#pragma once

#include "torcob/fan.hpp"
#include "torcob/fgl.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torcob {

// Raised when a relation's leading coefficient is not invertible in the
// coefficient ring, so rewrite-rule completion cannot proceed. Over the
// integer modes this happens exactly when a leading scalar is not +-1.
struct CompletionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Relation {
  std::string name;
  GradedSeries poly;  // homogeneous in the presentation's variables
};

enum class SpecializeTarget { chow, ktheory };

// Generators and relations for the quotient ring of X(fan): one degree-1
// generator per ray, modulo nonface monomials, per-ray nilpotence t^(n+1)
// (n = lattice rank = dimension of X), and one n-series relation per
// standard basis character. Elimination solves the relations of a chosen
// maximal cone's dual characters in closed form and rewrites everything in
// the remaining variables.
class Presentation {
 public:
  static Presentation build(const Fan& fan, const FormalGroupLaw& law);

  const Fan& fan() const { return fan_; }
  const FormalGroupLaw& law() const { return law_; }
  const CoeffRing& ring() const { return law_.ring(); }
  int dim() const { return fan_.rank(); }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& var_rays() const { return var_rays_; }
  const std::vector<Relation>& relations() const { return relations_; }

  bool is_eliminated() const { return base_cone_ >= 0; }
  int base_cone() const { return base_cone_; }

  // Closed forms expressing each original ray variable in the current
  // variables; the identity when nothing has been eliminated.
  const std::vector<GradedSeries>& ray_images() const { return ray_images_; }

  Presentation eliminated_at(int max_cone_index) const;

  // Rewrite a series in the full ray variables into the current variables.
  GradedSeries to_current_vars(const GradedSeries& global) const;

  // F-sum over all rays of the <chi, v_rho>-series of t_rho (ray variables).
  GradedSeries character_relation(const Character& chi) const;

  // Rank of the scalar degree-k slice of the quotient by linear algebra on
  // relation multiples: Smith reduction over Z for the integer coefficient
  // modes (torsion reported, never rationalized away), Gaussian elimination
  // over Q for the rational mode.
  struct SliceRank {
    int rank = 0;
    std::vector<Int> torsion;
  };
  SliceRank graded_rank_info(int k) const;
  int graded_rank(int k) const { return graded_rank_info(k).rank; }

  // Same fan and elimination choice, relations reinstantiated under the
  // additive law over Z (chow) or the multiplicative law (ktheory).
  Presentation specialized(SpecializeTarget target) const;

 private:
  Presentation(Fan fan, FormalGroupLaw law);

  Fan fan_;
  FormalGroupLaw law_;
  std::vector<std::string> vars_;
  std::vector<int> var_rays_;
  std::vector<Relation> relations_;
  int base_cone_ = -1;
  std::vector<GradedSeries> ray_images_;
};

// Confluent rewrite rules for the presentation, closed under overlap
// completion. Monomials of degree above dim(X) are identified with zero
// throughout: the quotient vanishes above the dimension, so every such
// monomial lies in the ideal. Rule order: lower monomial degree beats
// higher; within a degree the later variable is the more significant one.
class ReductionSystem {
 public:
  struct Rule {
    std::vector<int> lhs;  // exponent vector of the replaced monomial
    GradedSeries rhs;      // strictly smaller terms, same total degree
  };

  static ReductionSystem complete(const Presentation& p);

  const Presentation& presentation() const { return p_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // Fully reduce a series in the presentation's current variables.
  GradedSeries reduce(GradedSeries s) const;

  // Canonical representative of a series in the full ray variables:
  // eliminate, reduce, cut above the dimension.
  GradedSeries normal_form(const GradedSeries& global) const;

  // Degree-k monomials in the current variables reducible by no rule.
  std::vector<std::vector<int>> standard_monomials(int k) const;
  long standard_monomial_count(int k) const;
  long total_rank() const;  // standard monomials across degrees 0..dim

 private:
  explicit ReductionSystem(Presentation p) : p_(std::move(p)) {}
  bool reduce_once(GradedSeries& s) const;

  Presentation p_;
  std::vector<Rule> rules_;
};

// Two independent routes to the ordinary graded rank: standard-monomial
// count of the completed system vs integer linear algebra on the
// Stanley-Reisner slice with the characters' degree-1 parts killed.
bool forgetful_check(const Fan& fan, const FormalGroupLaw& law, int k);

}  // namespace torcob
