#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "envact/group.hpp"
#include "envact/topology.hpp"

namespace envact {

/// A bijection between two subsets of a finite point set.
class PartialBijection {
 public:
  static constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

  PartialBijection() = default;

  /// `pairs` lists (x, y) with y the image of x. Throws MalformedTable when
  /// a point is out of range, repeated in the domain, or hit twice.
  static PartialBijection from_pairs(
      std::size_t size,
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// `table[x]` is the image of x or kUndefined.
  static PartialBijection from_table(std::vector<std::size_t> table);
  static PartialBijection identity(const PointSet& domain);
  static PartialBijection empty(std::size_t size);

  std::size_t size() const { return table_.size(); }
  const PointSet& domain() const { return domain_; }
  const PointSet& codomain() const { return codomain_; }
  bool defined(std::size_t x) const { return domain_.test(x); }
  std::size_t operator()(std::size_t x) const { return table_[x]; }
  const std::vector<std::size_t>& table() const { return table_; }

  /// Image of `set`; std::nullopt when `set` leaves the domain.
  std::optional<PointSet> apply(const PointSet& set) const;
  /// Image of set ∩ domain.
  PointSet image(const PointSet& set) const;

  bool operator==(const PartialBijection& other) const {
    return table_ == other.table_;
  }

 private:
  PartialBijection(std::vector<std::size_t> table, PointSet domain,
                   PointSet codomain)
      : table_(std::move(table)),
        domain_(std::move(domain)),
        codomain_(std::move(codomain)) {}

  std::vector<std::size_t> table_;
  PointSet domain_;
  PointSet codomain_;
};

/// A group acting by partial bijections on a finite space.
///
/// maps()[g] is m_g; its domain is X_{g^-1} and its codomain X_g. The
/// constructor checks only shapes, never the action laws; use validate()
/// for those. Points of G x X are indexed g * |X| + x throughout.
class PartialAction {
 public:
  PartialAction() = default;

  /// Throws MalformedTable when there is not one map per group element or a
  /// map is over the wrong number of points.
  PartialAction(FiniteGroup group, FiniteSpace space,
                std::vector<PartialBijection> maps);

  /// m_1 = id and every other map empty.
  static PartialAction trivial(FiniteGroup group, FiniteSpace space);

  const FiniteGroup& group() const { return group_; }
  const FiniteSpace& space() const { return space_; }
  const std::vector<PartialBijection>& maps() const { return maps_; }
  const PartialBijection& map(Element g) const { return maps_[g]; }

  /// X_g, the codomain of m_g.
  const PointSet& range(Element g) const { return maps_[g].codomain(); }
  /// Where g acts: the domain of m_g.
  const PointSet& domain(Element g) const { return maps_[g].domain(); }

  bool defined(Element g, std::size_t x) const { return maps_[g].defined(x); }
  std::size_t act(Element g, std::size_t x) const { return maps_[g](x); }

  std::size_t point_count() const { return space_.size(); }
  std::size_t pair_index(Element g, std::size_t x) const {
    return g * space_.size() + x;
  }

  /// Every m_g is total.
  bool is_global() const;

 private:
  FiniteGroup group_;
  FiniteSpace space_;
  std::vector<PartialBijection> maps_;
};

/// A partial action whose maps are all total and which satisfies the action
/// laws with every map a homeomorphism.
class GlobalAction {
 public:
  /// Throws MalformedTable if `action` is not a valid global action.
  explicit GlobalAction(PartialAction action);

  /// `perms[g][x]` is g.x.
  static GlobalAction from_permutations(
      FiniteGroup group, FiniteSpace space,
      const std::vector<std::vector<std::size_t>>& perms);

  const PartialAction& partial() const { return action_; }
  const FiniteGroup& group() const { return action_.group(); }
  const FiniteSpace& space() const { return action_.space(); }
  std::size_t act(Element g, std::size_t x) const { return action_.act(g, x); }

 private:
  PartialAction action_;
};

/// One counterexample to a law, naming the elements and point involved.
struct Witness {
  Element g = 0;
  Element h = 0;
  std::size_t x = 0;
  std::string detail;
};

/// Independent verdicts for the point-wise axioms and for the family form.
///
/// The three point-wise axioms are:
///  - inverse: g.x defined implies g^-1.(g.x) defined and equal to x;
///  - composition: g.(h.x) defined implies (gh).x defined and equal;
///  - unit: 1.x = x for every x.
/// The family form asks for m_1 = id (unit_map), m_g(X_{g^-1} ∩ X_h) =
/// X_g ∩ X_gh (domain_transport), and m_g m_h = m_gh on X_{h^-1} ∩
/// X_{(gh)^-1} (composition_map). The two triples are equivalent; both are
/// computed and compared.
struct ValidationReport {
  bool inverse_law = true;
  bool composition_law = true;
  bool unit_law = true;

  bool unit_map = true;
  bool domain_transport = true;
  bool composition_map = true;

  bool domains_open = true;
  bool maps_homeomorphic = true;
  /// With G discrete, m : G*X -> X is continuous exactly when each m_g is,
  /// so this mirrors maps_homeomorphic.
  bool action_continuous = true;

  std::vector<std::pair<std::string, Witness>> witnesses;

  bool pointwise_laws() const {
    return inverse_law && composition_law && unit_law;
  }
  bool family_laws() const {
    return unit_map && domain_transport && composition_map;
  }
  /// Both forms agree, as they must.
  bool forms_agree() const { return pointwise_laws() == family_laws(); }
  bool topological() const { return domains_open && maps_homeomorphic; }
  bool valid() const {
    return pointwise_laws() && family_laws() && topological();
  }
};

ValidationReport validate(const PartialAction& action);

/// Restriction of `global` to `subset`: X_g = X ∩ u_g(X), m_g = u_g on
/// X_{g^-1}, carried by the subspace topology. Points are renumbered as in
/// subspace().
PartialAction induced(const GlobalAction& global, const PointSet& subset);

/// m^(h, x) = (h g^-1, g.x) on G x X, with (G x X)_g = G x X_g.
PartialAction hat(const PartialAction& action);

/// As hat(), over H x X for an embedding G -> H; (h, x) has index
/// h * |X| + x.
PartialAction hat_over(const PartialAction& action,
                       const GroupEmbedding& embedding);

/// x ~ y iff g.x = y for some g. Throws RelationNotEquivalence if the result
/// is not an equivalence relation.
PointRelation orbit_relation(const PartialAction& action);

/// G.U = {g.u : u in U, g in G^u}.
PointSet saturation(const PartialAction& action, const PointSet& set);

/// G^x = {g : g.x defined}.
ElementSet g_set(const PartialAction& action, std::size_t x);

/// G*X as a subset of G x X.
PointSet action_domain(const PartialAction& action);

/// G x X with G discrete.
FiniteSpace pair_space(const PartialAction& action);

struct OrbitQuotient {
  QuotientSpace quotient;
  bool projection_open = false;
  /// pi^-1(pi(U)) equals the union of m_g(U ∩ X_{g^-1}) for every open U
  /// that was enumerated.
  bool saturation_formula = false;
};

/// Quotient of X by the orbit relation. Throws OpennessViolation if the
/// projection fails to be open.
OrbitQuotient orbit_quotient(const PartialAction& action);

struct FlagSet {
  bool open = false;
  bool closed = false;
  bool clopen = false;
};

struct DomainReport {
  FlagSet gstar;
  /// Flags for X_g, indexed by g.
  std::vector<FlagSet> per_element;
};

DomainReport domain_report(const PartialAction& action);

/// Continuity, openness of the action map m : G*X -> X, G*X carrying the
/// subspace topology of G x X.
MapReport action_map_report(const PartialAction& action);

/// phi is continuous, phi(X_g) ⊆ Y_g and theta_g(phi(x)) = phi(m_g(x)) for
/// x in X_{g^-1}. Both actions must be over the same group.
bool is_morphism(std::span<const std::size_t> phi, const PartialAction& from,
                 const PartialAction& to);

/// Largest carrier are_equivalent() will search over.
inline constexpr std::size_t kMaxEquivalenceSearch = 8;

/// A bijection phi with phi and its inverse both morphisms, if one exists.
/// Throws TooLarge above kMaxEquivalenceSearch points.
std::optional<std::vector<std::size_t>> are_equivalent(
    const PartialAction& lhs, const PartialAction& rhs);

/// Whether `phi` (a bijection) is an isomorphism of partial actions.
bool is_isomorphism(std::span<const std::size_t> phi,
                    const PartialAction& from, const PartialAction& to);

}  // namespace envact
