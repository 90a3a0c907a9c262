#include "envact/topology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "envact/error.hpp"

namespace envact {

namespace {

constexpr auto npos = PointSet::npos;

// C(z) = {x : z in U(x)}, i.e. the closure of {z}.
std::vector<PointSet> point_closures(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<PointSet> closures(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    const PointSet& u = space.neighborhood(x);
    for (auto z = u.find_first(); z != npos; z = u.find_next(z))
      closures[z].set(x);
  }
  return closures;
}

void check_map(std::span<const std::size_t> map, std::size_t source_size,
               std::size_t target_size) {
  if (map.size() != source_size)
    throw Error(ErrorCode::OutOfRange,
                "map has " + std::to_string(map.size()) + " entries for " +
                    std::to_string(source_size) + " points");
  for (std::size_t y : map)
    if (y >= target_size)
      throw Error(ErrorCode::OutOfRange,
                  "map value " + std::to_string(y) + " out of range");
}

}  // namespace

std::vector<std::size_t> members(const PointSet& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for (auto x = set.find_first(); x != npos; x = set.find_next(x))
    out.push_back(x);
  return out;
}

PointSet make_set(std::size_t size, std::span<const std::size_t> points) {
  PointSet set(size);
  for (std::size_t p : points) {
    if (p >= size)
      throw Error(ErrorCode::OutOfRange,
                  "point " + std::to_string(p) + " not below " +
                      std::to_string(size));
    set.set(p);
  }
  return set;
}

FiniteSpace FiniteSpace::from_subbase(std::size_t size,
                                      const std::vector<PointSet>& subbase) {
  std::vector<PointSet> nbhd(size, ~PointSet(size));
  for (const PointSet& s : subbase) {
    if (s.size() != size)
      throw Error(ErrorCode::OutOfRange,
                  "subbase set over " + std::to_string(s.size()) +
                      " points in a space of " + std::to_string(size));
    for (auto x = s.find_first(); x != npos; x = s.find_next(x)) nbhd[x] &= s;
  }
  return FiniteSpace(std::move(nbhd));
}

FiniteSpace FiniteSpace::from_subbase(
    std::size_t size, const std::vector<std::vector<std::size_t>>& subbase) {
  std::vector<PointSet> sets;
  sets.reserve(subbase.size());
  for (const auto& s : subbase) sets.push_back(make_set(size, s));
  return from_subbase(size, sets);
}

FiniteSpace FiniteSpace::from_neighborhoods(std::vector<PointSet> nbhd) {
  const std::size_t n = nbhd.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (nbhd[x].size() != n)
      throw Error(ErrorCode::MalformedTable,
                  "neighbourhood of " + std::to_string(x) + " has wrong size");
    if (!nbhd[x].test(x))
      throw Error(ErrorCode::MalformedTable,
                  "point " + std::to_string(x) + " not in its neighbourhood");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = nbhd[x].find_first(); y != npos; y = nbhd[x].find_next(y))
      if (!nbhd[y].is_subset_of(nbhd[x]))
        throw Error(ErrorCode::MalformedTable,
                    "U(" + std::to_string(y) + ") not inside U(" +
                        std::to_string(x) + ")");
  return FiniteSpace(std::move(nbhd));
}

FiniteSpace FiniteSpace::discrete(std::size_t size) {
  std::vector<PointSet> nbhd(size, PointSet(size));
  for (std::size_t x = 0; x < size; ++x) nbhd[x].set(x);
  return FiniteSpace(std::move(nbhd));
}

FiniteSpace FiniteSpace::indiscrete(std::size_t size) {
  return FiniteSpace(std::vector<PointSet>(size, ~PointSet(size)));
}

FiniteSpace FiniteSpace::sierpinski() {
  return from_subbase(2, std::vector<std::vector<std::size_t>>{{1}});
}

bool FiniteSpace::is_open(const PointSet& set) const {
  for (auto x = set.find_first(); x != npos; x = set.find_next(x))
    if (!nbhd_[x].is_subset_of(set)) return false;
  return true;
}

PointSet FiniteSpace::open_hull(const PointSet& set) const {
  PointSet out(size());
  for (auto x = set.find_first(); x != npos; x = set.find_next(x))
    out |= nbhd_[x];
  return out;
}

PointSet FiniteSpace::interior(const PointSet& set) const {
  PointSet out(size());
  for (auto x = set.find_first(); x != npos; x = set.find_next(x))
    if (nbhd_[x].is_subset_of(set)) out.set(x);
  return out;
}

PointSet FiniteSpace::closure(const PointSet& set) const {
  PointSet out(size());
  for (std::size_t y = 0; y < size(); ++y)
    if (nbhd_[y].intersects(set)) out.set(y);
  return out;
}

bool FiniteSpace::is_discrete() const {
  return std::all_of(nbhd_.begin(), nbhd_.end(),
                     [](const PointSet& u) { return u.count() == 1; });
}

bool FiniteSpace::is_t0() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (auto y = nbhd_[x].find_first(); y != npos; y = nbhd_[x].find_next(y))
      if (y != x && nbhd_[y].test(x)) return false;
  return true;
}

std::vector<PointSet> FiniteSpace::opens(std::size_t limit) const {
  std::set<PointSet> found{empty_set()};
  for (std::size_t x = 0; x < size(); ++x) {
    std::vector<PointSet> added;
    for (const PointSet& o : found) {
      if (o.test(x)) continue;
      added.push_back(o | nbhd_[x]);
    }
    found.insert(added.begin(), added.end());
    if (found.size() > limit)
      throw Error(ErrorCode::TooLarge,
                  "more than " + std::to_string(limit) + " open sets");
  }
  return {found.begin(), found.end()};
}

FiniteSpace product(const FiniteSpace& lhs, const FiniteSpace& rhs) {
  const std::size_t m = rhs.size();
  const std::size_t n = lhs.size() * m;
  std::vector<PointSet> nbhd(n, PointSet(n));
  for (std::size_t a = 0; a < lhs.size(); ++a) {
    const auto left = members(lhs.neighborhood(a));
    for (std::size_t b = 0; b < m; ++b) {
      PointSet& u = nbhd[a * m + b];
      const PointSet& right = rhs.neighborhood(b);
      for (std::size_t a2 : left)
        for (auto b2 = right.find_first(); b2 != npos;
             b2 = right.find_next(b2))
          u.set(a2 * m + b2);
    }
  }
  return FiniteSpace::from_neighborhoods(std::move(nbhd));
}

FiniteSpace subspace(const FiniteSpace& space, const PointSet& subset) {
  if (subset.size() != space.size())
    throw Error(ErrorCode::OutOfRange, "subset over the wrong point count");
  const auto pts = members(subset);
  std::vector<std::size_t> index(space.size(), npos);
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;
  std::vector<PointSet> nbhd(pts.size(), PointSet(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const PointSet trace = space.neighborhood(pts[i]) & subset;
    for (auto y = trace.find_first(); y != npos; y = trace.find_next(y))
      nbhd[i].set(index[y]);
  }
  return FiniteSpace::from_neighborhoods(std::move(nbhd));
}

PointRelation PointRelation::diagonal(std::size_t size) {
  PointRelation r(size);
  for (std::size_t x = 0; x < size; ++x) r.insert(x, x);
  return r;
}

PointRelation PointRelation::full(std::size_t size) {
  PointRelation r(size);
  for (auto& row : r.rows_) row.set();
  return r;
}

PointRelation PointRelation::from_partition(
    std::size_t size, const std::vector<std::vector<std::size_t>>& blocks) {
  PointRelation r(size);
  for (const auto& block : blocks) {
    const PointSet set = make_set(size, block);
    for (std::size_t x : block) {
      if (r.rows_[x].any())
        throw Error(ErrorCode::BadPartition,
                    "point " + std::to_string(x) + " in two blocks");
      r.rows_[x] = set;
    }
  }
  return r;
}

std::size_t PointRelation::pair_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.count();
  return total;
}

bool PointRelation::is_reflexive() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (!rows_[x].test(x)) return false;
  return true;
}

bool PointRelation::is_symmetric() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b = rows_[a].find_first(); b != npos; b = rows_[a].find_next(b))
      if (!rows_[b].test(a)) return false;
  return true;
}

bool PointRelation::is_transitive() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b = rows_[a].find_first(); b != npos; b = rows_[a].find_next(b))
      if (!rows_[b].is_subset_of(rows_[a])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> PointRelation::classes() const {
  std::vector<std::vector<std::size_t>> out;
  PointSet assigned(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (assigned.test(x)) continue;
    out.push_back(members(rows_[x]));
    assigned |= rows_[x];
  }
  return out;
}

PointSet QuotientSpace::preimage(const PointSet& class_set) const {
  PointSet out(base.size());
  for (auto c = class_set.find_first(); c != npos;
       c = class_set.find_next(c))
    for (std::size_t x : classes[c]) out.set(x);
  return out;
}

PointSet QuotientSpace::image(const PointSet& set) const {
  PointSet out(class_count());
  for (auto x = set.find_first(); x != npos; x = set.find_next(x))
    out.set(projection[x]);
  return out;
}

QuotientSpace quotient(const FiniteSpace& space,
                       std::vector<std::vector<std::size_t>> partition) {
  const std::size_t n = space.size();
  std::vector<std::size_t> projection(n, npos);
  for (auto& block : partition) {
    if (block.empty()) throw Error(ErrorCode::BadPartition, "empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(partition.begin(), partition.end());
  for (std::size_t c = 0; c < partition.size(); ++c)
    for (std::size_t x : partition[c]) {
      if (x >= n)
        throw Error(ErrorCode::BadPartition,
                    "point " + std::to_string(x) + " out of range");
      if (projection[x] != npos)
        throw Error(ErrorCode::BadPartition,
                    "point " + std::to_string(x) + " in two blocks");
      projection[x] = c;
    }
  for (std::size_t x = 0; x < n; ++x)
    if (projection[x] == npos)
      throw Error(ErrorCode::BadPartition,
                  "point " + std::to_string(x) + " not covered");

  QuotientSpace q{space, std::move(partition), FiniteSpace{},
                  std::move(projection)};
  // U([c]) is the least saturated open set containing block c.
  std::vector<PointSet> nbhd;
  nbhd.reserve(q.class_count());
  for (std::size_t c = 0; c < q.class_count(); ++c) {
    PointSet s = make_set(n, q.classes[c]);
    for (;;) {
      PointSet next = q.saturate(space.open_hull(s));
      if (next == s) break;
      s = std::move(next);
    }
    nbhd.push_back(q.image(s));
  }
  q.space = FiniteSpace::from_neighborhoods(std::move(nbhd));
  return q;
}

QuotientSpace quotient(const FiniteSpace& space,
                       const PointRelation& relation) {
  if (relation.size() != space.size() || !relation.is_equivalence())
    throw Error(ErrorCode::BadPartition,
                "relation is not an equivalence on the space");
  return quotient(space, relation.classes());
}

SeparationReport separation_report(const FiniteSpace& space) {
  const auto closures = point_closures(space);
  SeparationReport r{true, true, true};
  for (std::size_t z = 0; z < space.size(); ++z) {
    const PointSet& cz = closures[z];
    // closure of {z} is {z}
    if (cz.count() != 1) r.t1 = false;
    // two distinct points whose minimal neighbourhoods share z
    if (cz.count() > 1) r.hausdorff = false;
    // x, y in C(z) and y outside U(x): the closed set X \ U(x) holds y, so
    // its hull meets U(x) at z
    for (auto x = cz.find_first(); x != npos; x = cz.find_next(x))
      if (!cz.is_subset_of(space.neighborhood(x))) r.regular = false;
  }
  return r;
}

PointSet image(std::span<const std::size_t> map, const PointSet& set,
               std::size_t target_size) {
  PointSet out(target_size);
  for (auto x = set.find_first(); x != npos; x = set.find_next(x))
    out.set(map[x]);
  return out;
}

PointSet preimage(std::span<const std::size_t> map, const PointSet& set) {
  PointSet out(map.size());
  for (std::size_t x = 0; x < map.size(); ++x)
    if (set.test(map[x])) out.set(x);
  return out;
}

MapReport map_report(std::span<const std::size_t> map,
                     const FiniteSpace& source, const FiniteSpace& target) {
  check_map(map, source.size(), target.size());
  MapReport r{true, true, false};
  for (std::size_t x = 0; x < source.size(); ++x) {
    const PointSet img = image(map, source.neighborhood(x), target.size());
    if (!img.is_subset_of(target.neighborhood(map[x]))) r.continuous = false;
    if (!target.is_open(img)) r.open = false;
  }
  const bool bijective =
      source.size() == target.size() &&
      image(map, source.full_set(), target.size()).all();
  r.homeomorphism = bijective && r.continuous && r.open;
  return r;
}

bool relation_is_closed(const PointRelation& relation,
                        const FiniteSpace& space) {
  const auto closures = point_closures(space);
  for (std::size_t a = 0; a < relation.size(); ++a) {
    const PointSet& row = relation.row(a);
    for (auto b = row.find_first(); b != npos; b = row.find_next(b)) {
      const PointSet& ca = closures[a];
      for (auto c = ca.find_first(); c != npos; c = ca.find_next(c))
        if (!closures[b].is_subset_of(relation.row(c))) return false;
    }
  }
  return true;
}

}  // namespace envact
