#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace envact {

/// A set of points of a finite space.
using PointSet = boost::dynamic_bitset<std::uint64_t>;

/// Indices of the members of `set`, increasing.
std::vector<std::size_t> members(const PointSet& set);

PointSet make_set(std::size_t size, std::span<const std::size_t> points);

/// A topology on the points 0..size-1.
///
/// Every finite topology is closed under arbitrary intersections, so each
/// point x has a smallest open neighbourhood U(x), and a set is open exactly
/// when it contains U(x) for each of its points. The space is stored as that
/// family of minimal neighbourhoods; the full open-set lattice is available
/// through opens() for spaces small enough to enumerate.
///
/// Invariants: x in U(x), and y in U(x) implies U(y) is a subset of U(x).
class FiniteSpace {
 public:
  /// Default upper bound on the number of open sets opens() will list.
  static constexpr std::size_t kMaxOpens = std::size_t{1} << 20;

  FiniteSpace() = default;

  /// Smallest topology containing `subbase`. Throws OutOfRange.
  static FiniteSpace from_subbase(std::size_t size,
                                  const std::vector<PointSet>& subbase);
  static FiniteSpace from_subbase(
      std::size_t size, const std::vector<std::vector<std::size_t>>& subbase);
  static FiniteSpace from_subbase(
      std::size_t size,
      std::initializer_list<std::initializer_list<std::size_t>> subbase) {
    return from_subbase(size, std::vector<std::vector<std::size_t>>(
                                  subbase.begin(), subbase.end()));
  }

  /// Takes U(x) for each x directly. Throws MalformedTable when the family
  /// does not satisfy the invariants above.
  static FiniteSpace from_neighborhoods(std::vector<PointSet> neighborhoods);

  static FiniteSpace discrete(std::size_t size);
  static FiniteSpace indiscrete(std::size_t size);
  /// Points {0, 1} with opens {}, {1}, {0, 1}.
  static FiniteSpace sierpinski();

  std::size_t size() const { return nbhd_.size(); }
  const PointSet& neighborhood(std::size_t x) const { return nbhd_[x]; }
  const std::vector<PointSet>& neighborhoods() const { return nbhd_; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return ~PointSet(size()); }

  bool is_open(const PointSet& set) const;
  bool is_closed(const PointSet& set) const { return is_open(~set); }
  bool is_clopen(const PointSet& set) const {
    return is_open(set) && is_closed(set);
  }

  /// Smallest open set containing `set`.
  PointSet open_hull(const PointSet& set) const;
  /// Largest open set inside `set`.
  PointSet interior(const PointSet& set) const;
  /// Smallest closed set containing `set`.
  PointSet closure(const PointSet& set) const;

  bool is_discrete() const;
  bool is_t0() const;

  /// All open sets in canonical (ascending bitset) order. Throws TooLarge if
  /// there are more than `limit`.
  std::vector<PointSet> opens(std::size_t limit = kMaxOpens) const;

  bool operator==(const FiniteSpace& other) const {
    return nbhd_ == other.nbhd_;
  }

 private:
  explicit FiniteSpace(std::vector<PointSet> nbhd) : nbhd_(std::move(nbhd)) {}

  std::vector<PointSet> nbhd_;
};

/// Product topology; the point (a, b) has index a * |rhs| + b.
FiniteSpace product(const FiniteSpace& lhs, const FiniteSpace& rhs);

/// Subspace topology on `subset`. Point i of the result is members(subset)[i].
FiniteSpace subspace(const FiniteSpace& space, const PointSet& subset);

/// A binary relation on the points of a finite space.
class PointRelation {
 public:
  PointRelation() = default;
  explicit PointRelation(std::size_t size)
      : rows_(size, PointSet(size)) {}

  static PointRelation diagonal(std::size_t size);
  static PointRelation full(std::size_t size);
  /// x ~ y iff they share a block. Blocks must be disjoint.
  static PointRelation from_partition(
      std::size_t size, const std::vector<std::vector<std::size_t>>& blocks);

  std::size_t size() const { return rows_.size(); }
  bool contains(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  void insert(std::size_t a, std::size_t b) { rows_[a].set(b); }
  /// {b : a ~ b}.
  const PointSet& row(std::size_t a) const { return rows_[a]; }
  std::size_t pair_count() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
  }

  /// Equivalence classes ordered by least member. Only meaningful when
  /// is_equivalence() holds.
  std::vector<std::vector<std::size_t>> classes() const;

  bool operator==(const PointRelation& other) const {
    return rows_ == other.rows_;
  }

 private:
  std::vector<PointSet> rows_;
};

/// A base space together with a partition and the quotient topology on the
/// set of blocks.
struct QuotientSpace {
  FiniteSpace base;
  /// Blocks sorted by least member; members increasing.
  std::vector<std::vector<std::size_t>> classes;
  FiniteSpace space;
  /// Base point -> class index.
  std::vector<std::size_t> projection;

  std::size_t class_count() const { return classes.size(); }
  /// Union of the blocks in `class_set`.
  PointSet preimage(const PointSet& class_set) const;
  /// Classes meeting `set`.
  PointSet image(const PointSet& set) const;
  /// Union of the blocks meeting `set`.
  PointSet saturate(const PointSet& set) const {
    return preimage(image(set));
  }
};

/// Throws BadPartition when blocks overlap, miss a point, are empty, or name
/// a point out of range.
QuotientSpace quotient(const FiniteSpace& space,
                       std::vector<std::vector<std::size_t>> partition);
inline QuotientSpace quotient(
    const FiniteSpace& space,
    std::initializer_list<std::initializer_list<std::size_t>> partition) {
  return quotient(space, std::vector<std::vector<std::size_t>>(
                             partition.begin(), partition.end()));
}
/// Quotient by an equivalence relation. Throws BadPartition if `relation` is
/// not one.
QuotientSpace quotient(const FiniteSpace& space, const PointRelation& relation);

struct SeparationReport {
  bool t1 = false;
  bool hausdorff = false;
  /// Closed sets and outside points have disjoint neighbourhoods; T1 is not
  /// assumed.
  bool regular = false;
};

SeparationReport separation_report(const FiniteSpace& space);

struct MapReport {
  bool continuous = false;
  bool open = false;
  bool homeomorphism = false;
};

/// `map[x]` is the image of point x of `source` in `target`.
MapReport map_report(std::span<const std::size_t> map,
                     const FiniteSpace& source, const FiniteSpace& target);

PointSet image(std::span<const std::size_t> map, const PointSet& set,
               std::size_t target_size);
PointSet preimage(std::span<const std::size_t> map, const PointSet& set);

/// Whether `relation` is a closed subset of space x space.
bool relation_is_closed(const PointRelation& relation,
                        const FiniteSpace& space);

}  // namespace envact
