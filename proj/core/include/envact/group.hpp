#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace envact {

/// Dense index of a group element.
using Element = std::size_t;

/// A set of group elements, indexed like the Cayley table.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// A finite group given by its Cayley table.
///
/// Construction validates the group laws exhaustively, so every other part
/// of the library may rely on them. Element names are labels only; all
/// arithmetic happens on indices.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Element>>;

  /// The trivial group.
  FiniteGroup() : names_{"0"}, mul_{{0}}, identity_(0), inv_{0} {}

  /// Validates `mul` and derives the identity and inverse tables.
  /// Throws MalformedTable, NotAssociative, NoIdentity or NoInverse.
  static FiniteGroup from_table(std::vector<std::string> names, Table mul);

  /// Z_n with names "0".."n-1". Requires n >= 1.
  static FiniteGroup cyclic(std::size_t n);

  static FiniteGroup trivial() { return cyclic(1); }

  /// Componentwise product; the pair (g, h) has index g * |H| + h.
  static FiniteGroup direct_product(const FiniteGroup& lhs,
                                    const FiniteGroup& rhs);

  std::size_t order() const { return mul_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[a][b]; }
  Element inv(Element a) const { return inv_[a]; }

  const std::string& name(Element g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  const Table& table() const { return mul_; }

  /// Smallest k >= 1 with g^k = 1.
  std::size_t element_order(Element g) const;

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet full_set() const { return ~ElementSet(order()); }

  /// {a * g : a in set}.
  ElementSet right_translate(const ElementSet& set, Element g) const;
  /// {g * a : a in set}.
  ElementSet left_translate(Element g, const ElementSet& set) const;
  /// {a^-1 : a in set}.
  ElementSet inverse_set(const ElementSet& set) const;

  bool operator==(const FiniteGroup& other) const {
    return mul_ == other.mul_;
  }

 private:
  FiniteGroup(std::vector<std::string> names, Table mul, Element identity,
              std::vector<Element> inv)
      : names_(std::move(names)),
        mul_(std::move(mul)),
        identity_(identity),
        inv_(std::move(inv)) {}

  std::vector<std::string> names_;
  Table mul_;
  Element identity_;
  std::vector<Element> inv_;
};

/// An injective homomorphism source -> target.
class GroupEmbedding {
 public:
  /// Throws MalformedTable (wrong length or index out of range),
  /// NotHomomorphism or NotInjective.
  static GroupEmbedding make(FiniteGroup source, FiniteGroup target,
                             std::vector<Element> map);

  static GroupEmbedding identity(const FiniteGroup& group);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  Element operator()(Element g) const { return map_[g]; }
  const std::vector<Element>& map() const { return map_; }

  /// The image subgroup as a subset of the target.
  ElementSet image() const;

 private:
  GroupEmbedding(FiniteGroup source, FiniteGroup target,
                 std::vector<Element> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {}

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> map_;
};

}  // namespace envact
