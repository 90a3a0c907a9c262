#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "envact/globalization.hpp"
#include "envact/group.hpp"
#include "envact/partial_action.hpp"
#include "envact/topology.hpp"

namespace envact {

/// A point of ({0,1}^G)^N: one subset of G per base set.
using SubsetTuple = std::vector<ElementSet>;

/// theta(g, (F_n)) = (g F_n).
SubsetTuple theta(const FiniteGroup& group, Element g,
                  const SubsetTuple& tuple);

/// The translation action of G on tuples of subsets, restricted to a finite
/// invariant family of tuples (given in any order; stored sorted).
struct ThetaOrbitSpace {
  std::vector<SubsetTuple> points;
  GlobalAction action;  // discrete carrier

  std::size_t index_of(const SubsetTuple& tuple) const;  // npos if absent
};

/// Closes `seeds` under theta and returns the resulting G-space.
ThetaOrbitSpace theta_space(const FiniteGroup& group,
                            std::vector<SubsetTuple> seeds);

enum class BaseChoice { Full, Minimal };

/// Every open set of the space. Throws TooLarge past FiniteSpace::kMaxOpens.
std::vector<PointSet> full_base(const FiniteSpace& space);
/// U(x) for every x, without repeats, in canonical order.
std::vector<PointSet> minimal_base(const FiniteSpace& space);
/// Whether every member is open and every U(x) is a member.
bool is_base(const FiniteSpace& space, const std::vector<PointSet>& base);

/// pi(x) = (pi_n(x))_n with pi_n(x) = {h^-1 : h in G^x, h.x in V_n}.
struct EmbeddingImage {
  FiniteGroup group;
  /// V_0 .. V_{N-1}; empty for the single-subset embedding.
  std::vector<PointSet> base;
  std::vector<SubsetTuple> points;
  /// Every X_g is clopen; the hypothesis under which pi is an isomorphism
  /// onto a G-invariant image's restriction.
  bool clopen_domains = false;

  std::size_t arity() const { return points.empty() ? 0 : points[0].size(); }
  /// Index of the point with image `tuple`, or npos.
  std::size_t preimage(const SubsetTuple& tuple) const;
};

/// Throws NotABase or NotInjective.
EmbeddingImage embed(const PartialAction& action,
                     const std::vector<PointSet>& base);
EmbeddingImage embed(const PartialAction& action,
                     BaseChoice choice = BaseChoice::Full);

/// {X_g} separates points.
bool separates_points(const PartialAction& action);

/// pi(x) = {h^-1 : h in G^x}. Throws DoesNotSeparate.
EmbeddingImage embed_simple(const PartialAction& action);

struct EmbeddingReport {
  bool clopen_domains = false;
  bool injective = false;
  /// x in X_{g^-1} => theta(g, pi(x)) = pi(g.x).
  bool forward_equivariant = false;
  /// theta(g, pi(x)) = pi(y) => g.x defined and equal to y.
  bool reflects = false;
  /// G^x is the union of the G^x_n.
  bool base_covers = false;
  /// The partial action theta induces on pi[X] is isomorphic to the input
  /// through pi.
  bool induced_isomorphic = false;

  bool all() const {
    return injective && forward_equivariant && reflects &&
           induced_isomorphic && base_covers;
  }
};

EmbeddingReport verify_embedding(const PartialAction& action,
                                 const EmbeddingImage& image);

struct SaturationReport {
  /// G . pi[X], sorted.
  std::vector<SubsetTuple> saturation;
  /// F([g, x]) as an index into `saturation`, per class of X_G.
  std::vector<std::size_t> classes_to_tuples;
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool equivariant = false;
  bool clopen_domains = false;

  bool bijection() const { return well_defined && injective && surjective; }
};

/// F([g, x]) = theta(g, pi(x)) from X_G onto the saturation of pi[X].
SaturationReport image_globalization(const EnvelopingSpace& env,
                                     const EmbeddingImage& image);

/// The shift on {0,1}^n restricted to W = {x : x(0) = 0}.
///
/// A word x is stored as the integer with bit k equal to x(k). The global
/// action is by Z_n with m.x = h^m(x), h(x)(k) = x(k+1 mod n). Points of the
/// returned action are the words of W in increasing order.
struct ShiftExample {
  std::size_t n = 0;
  GlobalAction shift;
  PointSet window;  // W inside {0,1}^n
  PartialAction action;
  /// Point index -> word.
  std::vector<std::uint32_t> words;

  /// "x(0)x(1)...x(n-1)".
  std::string label(std::size_t point) const;
  std::size_t point_of(std::uint32_t word) const;
};

/// Requires 2 <= n <= 10; throws OutOfRange otherwise.
ShiftExample shift_example(std::size_t n);

/// Renders a subset of Z_n (or any group) by element names.
std::vector<std::string> element_names(const FiniteGroup& group,
                                       const ElementSet& set);

}  // namespace envact
