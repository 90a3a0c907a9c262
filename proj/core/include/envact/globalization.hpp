#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "envact/group.hpp"
#include "envact/partial_action.hpp"
#include "envact/topology.hpp"

namespace envact {

/// The enveloping space X_G = (G x X)/R of a partial action together with
/// the enveloping action mu(g, [h, x]) = [gh, x] and the inclusion
/// iota(x) = [1, x].
///
/// R relates (g, x) and (h, y) when x lies in X_{g^-1 h} and
/// m_{h^-1 g}(x) = y. Classes are numbered by their least pair, pairs being
/// ordered by g first and x second.
struct EnvelopingSpace {
  PartialAction source;
  /// Quotient of G x X (G discrete) by R.
  QuotientSpace carrier;
  GlobalAction mu;
  /// Point of X -> class of (1, x).
  std::vector<std::size_t> iota;

  std::size_t size() const { return carrier.class_count(); }
  std::size_t class_of(Element g, std::size_t x) const {
    return carrier.projection[source.pair_index(g, x)];
  }
  /// Least (g, x) in class c.
  std::pair<Element, std::size_t> representative(std::size_t c) const;
  /// iota(X) as a set of classes.
  PointSet iota_image() const;
};

/// Builds X_G by union-find over the generating pairs (g, x) ~ (g f^-1, f.x)
/// for f in G^x, then certifies the closure against R itself and checks that
/// mu is well defined and q is continuous and open.
/// Throws RelationNotEquivalence, MuIllDefined or OpennessViolation; each
/// would indicate a defect in this library rather than in the input.
EnvelopingSpace envelope(const PartialAction& action);

/// R computed literally from its defining condition, pair by pair.
PointRelation enveloping_relation(const PartialAction& action);

struct EnvelopeReport {
  /// iota is a homeomorphism onto iota(X) with the subspace topology.
  bool iota_homeomorphism = false;
  /// The action is isomorphic through iota to the one mu induces on iota(X).
  bool induced_equivalent = false;
  /// R equals the orbit relation of hat(action).
  bool relation_matches_hat_orbits = false;
  /// G . iota(X) = X_G.
  bool saturation_is_everything = false;

  bool all() const {
    return iota_homeomorphism && induced_equivalent &&
           relation_matches_hat_orbits && saturation_is_everything;
  }
};

EnvelopeReport verify_enveloping(const EnvelopingSpace& env);

/// One implication or equivalence that must hold of every input. A failed
/// audit is a library defect.
struct Audit {
  std::string id;
  std::string statement;
  bool hypothesis = false;
  bool conclusion = false;
  bool passed = false;
  /// Biconditional rather than implication: passes when both sides agree.
  bool equivalence = false;
};

struct DiagnosticsReport {
  SeparationReport envelope;  // of X_G
  SeparationReport base;      // of X
  bool ehat_closed = false;   // orbit relation of hat(m), in (G x X)^2
  FlagSet gstar;
  bool all_domains_closed = false;
  bool envelope_discrete = false;
  bool q_open = false;
  std::vector<Audit> audits;
  std::vector<std::string> notes;

  bool audits_pass() const;
};

DiagnosticsReport diagnose(const EnvelopingSpace& env);

/// Extension of a global G-action along G -> H: the quotient Y of H x X by
/// the orbits of hat_over, with H acting by left translation.
struct SupergroupExtension {
  QuotientSpace carrier;
  GlobalAction action;  // of H on Y
  /// x -> [1, x].
  std::vector<std::size_t> embedding;
  bool embedding_homeomorphic = false;
  bool embedding_closed = false;
  /// b(g, [1, x]) = [1, g.x] for g in G.
  bool extends_action = false;

  bool certified() const {
    return embedding_homeomorphic && embedding_closed && extends_action;
  }
};

SupergroupExtension extend_to_supergroup(const GlobalAction& action,
                                         const GroupEmbedding& embedding);

/// Graphviz description of X_G: one node per class labelled by its least
/// pair, iota(X) highlighted, and an edge [h, x] -> [gh, x] for every
/// non-identity g.
std::string class_graph_dot(const EnvelopingSpace& env);

}  // namespace envact
