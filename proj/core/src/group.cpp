#include "envact/group.hpp"

#include <string>

#include "envact/error.hpp"

namespace envact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::OpennessViolation: return "OpennessViolation";
    case ErrorCode::RelationNotEquivalence: return "RelationNotEquivalence";
    case ErrorCode::MuIllDefined: return "MuIllDefined";
    case ErrorCode::NotABase: return "NotABase";
    case ErrorCode::DoesNotSeparate: return "DoesNotSeparate";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    Table mul) {
  const std::size_t n = mul.size();
  if (n == 0) throw Error(ErrorCode::MalformedTable, "empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (mul[i].size() != n)
      throw Error(ErrorCode::MalformedTable,
                  "row " + std::to_string(i) + " has length " +
                      std::to_string(mul[i].size()) + ", expected " +
                      std::to_string(n));
    for (Element e : mul[i])
      if (e >= n)
        throw Error(ErrorCode::MalformedTable,
                    "entry " + std::to_string(e) + " in row " +
                        std::to_string(i) + " is out of range");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  } else if (names.size() != n) {
    throw Error(ErrorCode::MalformedTable,
                "expected " + std::to_string(n) + " names, got " +
                    std::to_string(names.size()));
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw Error(ErrorCode::NotAssociative,
                      "(" + names[a] + "*" + names[b] + ")*" + names[c] +
                          " != " + names[a] + "*(" + names[b] + "*" +
                          names[c] + ")");

  Element identity = n;
  for (Element e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g)
      ok = mul[e][g] == g && mul[g][e] == g;
    if (ok) identity = e;
  }
  if (identity == n)
    throw Error(ErrorCode::NoIdentity, "no two-sided identity in table");

  std::vector<Element> inv(n, n);
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h)
      if (mul[g][h] == identity && mul[h][g] == identity) {
        inv[g] = h;
        break;
      }
    if (inv[g] == n)
      throw Error(ErrorCode::NoInverse,
                  "element " + names[g] + " has no two-sided inverse");
  }
  return FiniteGroup(std::move(names), std::move(mul), identity,
                     std::move(inv));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "cyclic group of order 0");
  Table mul(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  std::vector<Element> inv(n);
  for (Element i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    inv[i] = (n - i) % n;
    for (Element j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(names), std::move(mul), 0, std::move(inv));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& lhs,
                                        const FiniteGroup& rhs) {
  const std::size_t m = rhs.order();
  const std::size_t n = lhs.order() * m;
  Table mul(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  std::vector<Element> inv(n);
  for (Element a = 0; a < n; ++a) {
    names[a] = "(" + lhs.name(a / m) + "," + rhs.name(a % m) + ")";
    inv[a] = lhs.inv(a / m) * m + rhs.inv(a % m);
    for (Element b = 0; b < n; ++b)
      mul[a][b] = lhs.mul(a / m, b / m) * m + rhs.mul(a % m, b % m);
  }
  return FiniteGroup(std::move(names), std::move(mul),
                     lhs.identity() * m + rhs.identity(), std::move(inv));
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element p = g; p != identity_; p = mul(p, g)) ++k;
  return k;
}

ElementSet FiniteGroup::right_translate(const ElementSet& set,
                                        Element g) const {
  ElementSet out(order());
  for (auto a = set.find_first(); a != ElementSet::npos; a = set.find_next(a))
    out.set(mul(a, g));
  return out;
}

ElementSet FiniteGroup::left_translate(Element g, const ElementSet& set) const {
  ElementSet out(order());
  for (auto a = set.find_first(); a != ElementSet::npos; a = set.find_next(a))
    out.set(mul(g, a));
  return out;
}

ElementSet FiniteGroup::inverse_set(const ElementSet& set) const {
  ElementSet out(order());
  for (auto a = set.find_first(); a != ElementSet::npos; a = set.find_next(a))
    out.set(inv(a));
  return out;
}

GroupEmbedding GroupEmbedding::make(FiniteGroup source, FiniteGroup target,
                                    std::vector<Element> map) {
  if (map.size() != source.order())
    throw Error(ErrorCode::MalformedTable,
                "embedding map has " + std::to_string(map.size()) +
                    " entries for a group of order " +
                    std::to_string(source.order()));
  for (Element e : map)
    if (e >= target.order())
      throw Error(ErrorCode::MalformedTable,
                  "embedding target index " + std::to_string(e) +
                      " out of range");
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw Error(ErrorCode::NotHomomorphism,
                    "map(" + source.name(a) + "*" + source.name(b) +
                        ") != map(" + source.name(a) + ")*map(" +
                        source.name(b) + ")");
  ElementSet seen(target.order());
  for (Element a = 0; a < source.order(); ++a) {
    if (seen.test(map[a]))
      throw Error(ErrorCode::NotInjective,
                  "two elements map to " + target.name(map[a]));
    seen.set(map[a]);
  }
  return GroupEmbedding(std::move(source), std::move(target), std::move(map));
}

GroupEmbedding GroupEmbedding::identity(const FiniteGroup& group) {
  std::vector<Element> map(group.order());
  for (Element g = 0; g < group.order(); ++g) map[g] = g;
  return GroupEmbedding(group, group, std::move(map));
}

ElementSet GroupEmbedding::image() const {
  ElementSet out(target_.order());
  for (Element e : map_) out.set(e);
  return out;
}

}  // namespace envact
