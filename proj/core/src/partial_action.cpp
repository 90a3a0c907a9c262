#include "envact/partial_action.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "envact/error.hpp"

namespace envact {

namespace {

constexpr auto npos = PointSet::npos;

std::string pt(std::size_t x) { return std::to_string(x); }

// m_g as a map between the subspaces on its domain and codomain.
bool restriction_is_homeomorphism(const FiniteSpace& space,
                                  const PartialBijection& m) {
  const auto dom = members(m.domain());
  const auto cod = members(m.codomain());
  std::vector<std::size_t> index(space.size(), npos);
  for (std::size_t i = 0; i < cod.size(); ++i) index[cod[i]] = i;
  std::vector<std::size_t> local(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) local[i] = index[m(dom[i])];
  return map_report(local, subspace(space, m.domain()),
                    subspace(space, m.codomain()))
      .homeomorphism;
}

void check_phi(std::span<const std::size_t> phi, const PartialAction& from,
               const PartialAction& to) {
  if (from.group().order() != to.group().order())
    throw Error(ErrorCode::MalformedTable,
                "partial actions are over groups of different order");
  if (phi.size() != from.point_count())
    throw Error(ErrorCode::OutOfRange, "map does not cover the source space");
  for (std::size_t y : phi)
    if (y >= to.point_count())
      throw Error(ErrorCode::OutOfRange,
                  "map value " + pt(y) + " out of range");
}

}  // namespace

// --- PartialBijection -------------------------------------------------------

PartialBijection PartialBijection::from_pairs(
    std::size_t size,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::size_t> table(size, kUndefined);
  for (auto [x, y] : pairs) {
    if (x >= size || y >= size)
      throw Error(ErrorCode::MalformedTable,
                  "pair (" + pt(x) + ", " + pt(y) + ") out of range");
    if (table[x] != kUndefined)
      throw Error(ErrorCode::MalformedTable,
                  "point " + pt(x) + " mapped twice");
    table[x] = y;
  }
  return from_table(std::move(table));
}

PartialBijection PartialBijection::from_table(std::vector<std::size_t> table) {
  const std::size_t n = table.size();
  PointSet domain(n), codomain(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = table[x];
    if (y == kUndefined) continue;
    if (y >= n)
      throw Error(ErrorCode::MalformedTable,
                  "image " + pt(y) + " of " + pt(x) + " out of range");
    if (codomain.test(y))
      throw Error(ErrorCode::MalformedTable,
                  "point " + pt(y) + " is the image of two points");
    domain.set(x);
    codomain.set(y);
  }
  return PartialBijection(std::move(table), std::move(domain),
                          std::move(codomain));
}

PartialBijection PartialBijection::identity(const PointSet& domain) {
  std::vector<std::size_t> table(domain.size(), kUndefined);
  for (auto x = domain.find_first(); x != npos; x = domain.find_next(x))
    table[x] = x;
  return PartialBijection(std::move(table), domain, domain);
}

PartialBijection PartialBijection::empty(std::size_t size) {
  return PartialBijection(std::vector<std::size_t>(size, kUndefined),
                          PointSet(size), PointSet(size));
}

std::optional<PointSet> PartialBijection::apply(const PointSet& set) const {
  if (!set.is_subset_of(domain_)) return std::nullopt;
  return image(set);
}

PointSet PartialBijection::image(const PointSet& set) const {
  PointSet out(size());
  const PointSet inside = set & domain_;
  for (auto x = inside.find_first(); x != npos; x = inside.find_next(x))
    out.set(table_[x]);
  return out;
}

// --- PartialAction ----------------------------------------------------------

PartialAction::PartialAction(FiniteGroup group, FiniteSpace space,
                             std::vector<PartialBijection> maps)
    : group_(std::move(group)), space_(std::move(space)), maps_(std::move(maps)) {
  if (maps_.size() != group_.order())
    throw Error(ErrorCode::MalformedTable,
                "expected " + std::to_string(group_.order()) + " maps, got " +
                    std::to_string(maps_.size()));
  for (Element g = 0; g < maps_.size(); ++g)
    if (maps_[g].size() != space_.size())
      throw Error(ErrorCode::MalformedTable,
                  "map for " + group_.name(g) + " is over " +
                      std::to_string(maps_[g].size()) + " points, space has " +
                      std::to_string(space_.size()));
}

PartialAction PartialAction::trivial(FiniteGroup group, FiniteSpace space) {
  std::vector<PartialBijection> maps(group.order(),
                                     PartialBijection::empty(space.size()));
  maps[group.identity()] = PartialBijection::identity(space.full_set());
  return PartialAction(std::move(group), std::move(space), std::move(maps));
}

bool PartialAction::is_global() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const PartialBijection& m) {
    return m.domain().all();
  });
}

GlobalAction::GlobalAction(PartialAction action) : action_(std::move(action)) {
  if (!action_.is_global())
    throw Error(ErrorCode::MalformedTable, "global action has a partial map");
  const ValidationReport report = validate(action_);
  if (!report.valid()) {
    std::string why = "global action fails its laws";
    if (!report.witnesses.empty())
      why += ": " + report.witnesses.front().first + " (" +
             report.witnesses.front().second.detail + ")";
    throw Error(ErrorCode::MalformedTable, why);
  }
}

GlobalAction GlobalAction::from_permutations(
    FiniteGroup group, FiniteSpace space,
    const std::vector<std::vector<std::size_t>>& perms) {
  if (perms.size() != group.order())
    throw Error(ErrorCode::MalformedTable, "one permutation per element");
  std::vector<PartialBijection> maps;
  maps.reserve(perms.size());
  for (const auto& p : perms) maps.push_back(PartialBijection::from_table(p));
  return GlobalAction(
      PartialAction(std::move(group), std::move(space), std::move(maps)));
}

// --- validation -------------------------------------------------------------

ValidationReport validate(const PartialAction& action) {
  const FiniteGroup& G = action.group();
  const std::size_t n = action.point_count();
  const Element e = G.identity();
  ValidationReport r;
  auto fail = [&r](bool& flag, const char* name, Witness w) {
    if (flag) r.witnesses.emplace_back(name, std::move(w));
    flag = false;
  };

  for (Element g = 0; g < G.order(); ++g) {
    const PartialBijection& m = action.map(g);
    const PartialBijection& back = action.map(G.inv(g));
    for (auto x = m.domain().find_first(); x != npos;
         x = m.domain().find_next(x)) {
      const std::size_t y = m(x);
      if (!back.defined(y))
        fail(r.inverse_law, "inverse_law",
             {g, G.inv(g), x,
              G.name(G.inv(g)) + "." + pt(y) + " undefined where " +
                  G.name(g) + "." + pt(x) + " = " + pt(y)});
      else if (back(y) != x)
        fail(r.inverse_law, "inverse_law",
             {g, G.inv(g), x,
              G.name(G.inv(g)) + ".(" + G.name(g) + "." + pt(x) + ") = " +
                  pt(back(y))});
    }
  }

  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) {
      const PartialBijection& mh = action.map(h);
      const PartialBijection& mg = action.map(g);
      const PartialBijection& mgh = action.map(G.mul(g, h));
      for (auto x = mh.domain().find_first(); x != npos;
           x = mh.domain().find_next(x)) {
        const std::size_t y = mh(x);
        if (!mg.defined(y)) continue;
        if (!mgh.defined(x))
          fail(r.composition_law, "composition_law",
               {g, h, x,
                G.name(g) + ".(" + G.name(h) + "." + pt(x) + ") defined but " +
                    G.name(G.mul(g, h)) + "." + pt(x) + " is not"});
        else if (mgh(x) != mg(y))
          fail(r.composition_law, "composition_law",
               {g, h, x,
                G.name(g) + ".(" + G.name(h) + "." + pt(x) + ") != " +
                    G.name(G.mul(g, h)) + "." + pt(x)});
      }
    }

  const PartialBijection& m1 = action.map(e);
  for (std::size_t x = 0; x < n; ++x)
    if (!m1.defined(x) || m1(x) != x) {
      fail(r.unit_law, "unit_law", {e, e, x, "1." + pt(x) + " != " + pt(x)});
      break;
    }

  // Family form, reading X_g as the codomain of m_g.
  if (!action.range(e).all() || !m1.domain().all() ||
      m1.table() != PartialBijection::identity(action.space().full_set())
                        .table())
    fail(r.unit_map, "unit_map", {e, e, 0, "m_1 is not the identity of X"});

  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) {
      const PointSet source = action.range(G.inv(g)) & action.range(h);
      const PointSet target = action.range(g) & action.range(G.mul(g, h));
      const auto moved = action.map(g).apply(source);
      if (!moved)
        fail(r.domain_transport, "domain_transport",
             {g, h, 0,
              "m_" + G.name(g) + " undefined on X_" + G.name(G.inv(g)) +
                  " ∩ X_" + G.name(h)});
      else if (*moved != target)
        fail(r.domain_transport, "domain_transport",
             {g, h, 0,
              "m_" + G.name(g) + "(X_" + G.name(G.inv(g)) + " ∩ X_" +
                  G.name(h) + ") != X_" + G.name(g) + " ∩ X_" +
                  G.name(G.mul(g, h))});
    }

  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) {
      const Element gh = G.mul(g, h);
      const PointSet where = action.range(G.inv(h)) & action.range(G.inv(gh));
      for (auto x = where.find_first(); x != npos; x = where.find_next(x)) {
        const bool ok = action.defined(h, x) &&
                        action.defined(g, action.act(h, x)) &&
                        action.defined(gh, x) &&
                        action.act(g, action.act(h, x)) == action.act(gh, x);
        if (!ok)
          fail(r.composition_map, "composition_map",
               {g, h, x,
                "m_" + G.name(g) + " m_" + G.name(h) + " != m_" + G.name(gh) +
                    " at " + pt(x)});
      }
    }

  for (Element g = 0; g < G.order(); ++g) {
    const PartialBijection& m = action.map(g);
    if (!action.space().is_open(m.codomain()) ||
        !action.space().is_open(m.domain()))
      fail(r.domains_open, "domains_open",
           {g, g, 0, "X_" + G.name(g) + " or its preimage is not open"});
    if (!restriction_is_homeomorphism(action.space(), m))
      fail(r.maps_homeomorphic, "maps_homeomorphic",
           {g, g, 0, "m_" + G.name(g) + " is not a homeomorphism"});
  }
  r.action_continuous = r.maps_homeomorphic;
  return r;
}

// --- constructors -----------------------------------------------------------

PartialAction induced(const GlobalAction& global, const PointSet& subset) {
  const auto pts = members(subset);
  std::vector<std::size_t> index(global.space().size(), npos);
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;

  const FiniteGroup& G = global.group();
  std::vector<PartialBijection> maps;
  maps.reserve(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    std::vector<std::size_t> table(pts.size(), PartialBijection::kUndefined);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::size_t y = global.act(g, pts[i]);
      if (subset.test(y)) table[i] = index[y];
    }
    maps.push_back(PartialBijection::from_table(std::move(table)));
  }
  return PartialAction(G, subspace(global.space(), subset), std::move(maps));
}

PartialAction hat_over(const PartialAction& action,
                       const GroupEmbedding& embedding) {
  const FiniteGroup& G = action.group();
  const FiniteGroup& H = embedding.target();
  if (!(embedding.source() == G))
    throw Error(ErrorCode::MalformedTable,
                "embedding source is not the acting group");
  const std::size_t n = action.point_count();
  std::vector<PartialBijection> maps;
  maps.reserve(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    const Element shift = H.inv(embedding(g));
    std::vector<std::size_t> table(H.order() * n,
                                   PartialBijection::kUndefined);
    for (Element h = 0; h < H.order(); ++h)
      for (std::size_t x = 0; x < n; ++x)
        if (action.defined(g, x))
          table[h * n + x] = H.mul(h, shift) * n + action.act(g, x);
    maps.push_back(PartialBijection::from_table(std::move(table)));
  }
  return PartialAction(
      G, product(FiniteSpace::discrete(H.order()), action.space()),
      std::move(maps));
}

PartialAction hat(const PartialAction& action) {
  return hat_over(action, GroupEmbedding::identity(action.group()));
}

// --- orbits -----------------------------------------------------------------

PointRelation orbit_relation(const PartialAction& action) {
  PointRelation r(action.point_count());
  for (const PartialBijection& m : action.maps())
    for (auto x = m.domain().find_first(); x != npos;
         x = m.domain().find_next(x))
      r.insert(x, m(x));
  if (!r.is_equivalence())
    throw Error(ErrorCode::RelationNotEquivalence,
                "orbit relation is not an equivalence relation");
  return r;
}

PointSet saturation(const PartialAction& action, const PointSet& set) {
  PointSet out(action.point_count());
  for (const PartialBijection& m : action.maps()) out |= m.image(set);
  return out;
}

ElementSet g_set(const PartialAction& action, std::size_t x) {
  ElementSet out(action.group().order());
  for (Element g = 0; g < action.group().order(); ++g)
    if (action.defined(g, x)) out.set(g);
  return out;
}

PointSet action_domain(const PartialAction& action) {
  const std::size_t n = action.point_count();
  PointSet out(action.group().order() * n);
  for (Element g = 0; g < action.group().order(); ++g) {
    const PointSet& d = action.domain(g);
    for (auto x = d.find_first(); x != npos; x = d.find_next(x))
      out.set(g * n + x);
  }
  return out;
}

FiniteSpace pair_space(const PartialAction& action) {
  return product(FiniteSpace::discrete(action.group().order()),
                 action.space());
}

OrbitQuotient orbit_quotient(const PartialAction& action) {
  OrbitQuotient out{quotient(action.space(), orbit_relation(action)), false,
                    true};
  const QuotientSpace& q = out.quotient;
  out.projection_open = map_report(q.projection, q.base, q.space).open;
  if (!out.projection_open)
    throw Error(ErrorCode::OpennessViolation,
                "orbit projection is not an open map");
  // Both sides of the formula commute with unions, so minimal
  // neighbourhoods suffice.
  for (const PointSet& u : action.space().neighborhoods()) {
    PointSet formula(action.point_count());
    for (const PartialBijection& m : action.maps()) formula |= m.image(u);
    if (formula != q.saturate(u)) out.saturation_formula = false;
  }
  return out;
}

DomainReport domain_report(const PartialAction& action) {
  auto flags = [](const FiniteSpace& s, const PointSet& set) {
    return FlagSet{s.is_open(set), s.is_closed(set), s.is_clopen(set)};
  };
  DomainReport r;
  r.gstar = flags(pair_space(action), action_domain(action));
  for (Element g = 0; g < action.group().order(); ++g)
    r.per_element.push_back(flags(action.space(), action.range(g)));
  return r;
}

MapReport action_map_report(const PartialAction& action) {
  const PointSet gstar = action_domain(action);
  const std::size_t n = action.point_count();
  std::vector<std::size_t> m;
  for (std::size_t p : members(gstar)) m.push_back(action.act(p / n, p % n));
  return map_report(m, subspace(pair_space(action), gstar), action.space());
}

// --- morphisms --------------------------------------------------------------

bool is_morphism(std::span<const std::size_t> phi, const PartialAction& from,
                 const PartialAction& to) {
  check_phi(phi, from, to);
  if (!map_report(phi, from.space(), to.space()).continuous) return false;
  for (Element g = 0; g < from.group().order(); ++g) {
    if (!image(phi, from.range(g), to.point_count())
             .is_subset_of(to.range(g)))
      return false;
    const PointSet& d = from.domain(g);
    for (auto x = d.find_first(); x != npos; x = d.find_next(x))
      if (!to.defined(g, phi[x]) || to.act(g, phi[x]) != phi[from.act(g, x)])
        return false;
  }
  return true;
}

bool is_isomorphism(std::span<const std::size_t> phi,
                    const PartialAction& from, const PartialAction& to) {
  check_phi(phi, from, to);
  if (from.point_count() != to.point_count()) return false;
  std::vector<std::size_t> inverse(phi.size(), npos);
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (inverse[phi[x]] != npos) return false;
    inverse[phi[x]] = x;
  }
  return is_morphism(phi, from, to) && is_morphism(inverse, to, from);
}

std::optional<std::vector<std::size_t>> are_equivalent(
    const PartialAction& lhs, const PartialAction& rhs) {
  if (lhs.group().order() != rhs.group().order() ||
      lhs.point_count() != rhs.point_count())
    return std::nullopt;
  if (lhs.point_count() > kMaxEquivalenceSearch)
    throw Error(ErrorCode::TooLarge,
                "equivalence search limited to " +
                    std::to_string(kMaxEquivalenceSearch) + " points");
  std::vector<std::size_t> phi(lhs.point_count());
  std::iota(phi.begin(), phi.end(), std::size_t{0});
  do {
    if (is_isomorphism(phi, lhs, rhs)) return phi;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return std::nullopt;
}

}  // namespace envact
