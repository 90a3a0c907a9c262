#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "envact/partial_action.hpp"
#include "envact/universal.hpp"
#include "expect.hpp"
#include "oracle.hpp"

using namespace envact;
using envact::testing::error_code;
namespace oracle = envact::testing::oracle;

namespace {

const std::vector<envact::testing::Instance>& shared_corpus() {
  static const auto c = envact::testing::corpus(30, 0x5eed);
  return c;
}

// Laws on a raw table: inverse, composition and unit.
struct Laws {
  bool inverse = true, composition = true, unit = true;
  bool all() const { return inverse && composition && unit; }
};

Laws laws_of(const FiniteGroup& G, const oracle::Table& t) {
  Laws l;
  const std::size_t n = t.empty() ? 0 : t[0].size();
  for (std::size_t x = 0; x < n; ++x) {
    l.unit &= t[G.identity()][x] == x;
    for (Element g = 0; g < G.order(); ++g) {
      if (!t[g][x]) continue;
      const auto back = t[G.inv(g)][*t[g][x]];
      l.inverse &= back && *back == x;
      for (Element h = 0; h < G.order(); ++h) {
        const auto hx = t[h][x];
        if (!hx || !t[g][*hx]) continue;
        const auto direct = t[G.mul(g, h)][x];
        l.composition &= direct && *direct == *t[g][*hx];
      }
    }
  }
  return l;
}

PartialAction from_table(const FiniteGroup& G, const FiniteSpace& X,
                         const oracle::Table& t) {
  std::vector<PartialBijection> maps;
  for (Element g = 0; g < G.order(); ++g) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < X.size(); ++x)
      if (t[g][x]) pairs.emplace_back(x, *t[g][x]);
    maps.push_back(PartialBijection::from_pairs(X.size(), pairs));
  }
  return PartialAction(G, X, std::move(maps));
}

// Random partial injection table over n points for every element of G.
oracle::Table random_table(const FiniteGroup& G, std::size_t n,
                           std::mt19937_64& rng) {
  oracle::Table t(G.order(), std::vector<std::optional<std::size_t>>(n));
  for (Element g = 0; g < G.order(); ++g) {
    std::vector<std::size_t> targets(n);
    for (std::size_t i = 0; i < n; ++i) targets[i] = i;
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t x = 0; x < n; ++x)
      if (std::bernoulli_distribution(0.6)(rng)) t[g][x] = targets[x];
  }
  return t;
}

GlobalAction swap_z2() {
  return GlobalAction::from_permutations(FiniteGroup::cyclic(2),
                                         FiniteSpace::discrete(2),
                                         {{0, 1}, {1, 0}});
}

std::vector<std::size_t> iota_into_hat(const PartialAction& pa) {
  std::vector<std::size_t> j(pa.point_count());
  for (std::size_t x = 0; x < j.size(); ++x)
    j[x] = pa.pair_index(pa.group().identity(), x);
  return j;
}

}  // namespace

TEST_CASE("validation of simple actions") {
  CHECK(validate(swap_z2().partial()).valid());
  CHECK(validate(PartialAction::trivial(FiniteGroup::cyclic(4),
                                        FiniteSpace::sierpinski()))
            .valid());
  CHECK(validate(envact::testing::sierpinski_z2_action()).valid());
  CHECK(validate(PartialAction::trivial(FiniteGroup::cyclic(3),
                                        FiniteSpace::discrete(0)))
            .valid());
}

TEST_CASE("a one-way partial map breaks the inverse law") {
  const FiniteSpace X = FiniteSpace::discrete(2);
  const PartialAction pa(FiniteGroup::cyclic(2), X,
                         {PartialBijection::identity(X.full_set()),
                          PartialBijection::from_pairs(2, {{0, 1}})});
  const ValidationReport r = validate(pa);
  CHECK_FALSE(r.inverse_law);
  CHECK_FALSE(r.valid());
  CHECK(r.forms_agree());
  REQUIRE_FALSE(r.witnesses.empty());
  bool found = false;
  for (const auto& [check, w] : r.witnesses)
    found |= check == "inverse_law" && w.g == 1 && w.x == 0;
  CHECK(found);
}

TEST_CASE("a unit map that is not the identity breaks the unit law") {
  const FiniteSpace X = FiniteSpace::discrete(2);
  const PartialAction pa(FiniteGroup::cyclic(1), X,
                         {PartialBijection::from_pairs(2, {{0, 1}, {1, 0}})});
  const ValidationReport r = validate(pa);
  CHECK_FALSE(r.unit_law);
  CHECK_FALSE(r.unit_map);
}

TEST_CASE("non-open domains and discontinuous maps are reported") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  // Swapping the points of the Sierpinski space is a global Z_2 action on
  // the underlying set but not a homeomorphism.
  const PartialAction swap(FiniteGroup::cyclic(2), s,
                           {PartialBijection::identity(s.full_set()),
                            PartialBijection::from_pairs(2, {{0, 1}, {1, 0}})});
  const ValidationReport r = validate(swap);
  CHECK(r.pointwise_laws());
  CHECK_FALSE(r.maps_homeomorphic);
  CHECK_FALSE(r.valid());
  CHECK(error_code([&] { GlobalAction{swap}; }) == ErrorCode::MalformedTable);

  // Fixing only the closed point: X_g = {0} is not open.
  const PartialAction closed(FiniteGroup::cyclic(2), s,
                             {PartialBijection::identity(s.full_set()),
                              PartialBijection::from_pairs(2, {{0, 0}})});
  CHECK_FALSE(validate(closed).domains_open);
}

TEST_CASE("pointwise and family laws agree with each other and with a raw-table oracle") {
  std::mt19937_64 rng(31);
  const auto groups = envact::testing::small_groups();
  std::size_t valid = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const FiniteGroup& G = groups[trial % groups.size()];
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    oracle::Table t = random_table(G, n, rng);
    // Bias towards lawful tables: sometimes restore the unit and inverses.
    if (trial % 2) {
      for (std::size_t x = 0; x < n; ++x) t[G.identity()][x] = x;
      for (Element g = 0; g < G.order(); ++g)
        for (std::size_t x = 0; x < n; ++x)
          if (t[g][x]) t[G.inv(g)][*t[g][x]] = x;
    }
    PartialAction pa;
    try {
      pa = from_table(G, FiniteSpace::discrete(n), t);
    } catch (const Error&) {
      continue;  // restoring inverses can break injectivity
    }
    const ValidationReport r = validate(pa);
    const Laws l = laws_of(G, t);
    CHECK(r.inverse_law == l.inverse);
    CHECK(r.composition_law == l.composition);
    CHECK(r.unit_law == l.unit);
    CHECK(r.forms_agree());
    valid += r.valid();
  }
  CHECK(valid > 20);
}

TEST_CASE("induced actions") {
  const GlobalAction u = swap_z2();
  const PartialAction all = induced(u, u.space().full_set());
  CHECK(all.is_global());
  CHECK(all.maps() == u.partial().maps());

  // {0} is not invariant; X_1 is empty.
  const PartialAction one = induced(u, PointSet(2, 0b01));
  CHECK(one.point_count() == 1);
  CHECK(one.domain(1).none());
  CHECK(validate(one).valid());
}

TEST_CASE("the truncated shift has X_m = {x in W : x(-m) = 0}") {
  const ShiftExample ex = shift_example(4);
  const PartialAction& pa = ex.action;
  CHECK(pa.point_count() == 8);
  for (Element m = 0; m < 4; ++m)
    for (std::size_t p = 0; p < 8; ++p) {
      const std::uint32_t w = ex.words[p];
      CHECK((w & 1) == 0);
      const bool expected = ((w >> ((4 - m) % 4)) & 1) == 0;
      CHECK(pa.range(m).test(p) == expected);
    }
}

TEST_CASE("induced actions always validate") {
  for (const auto& inst : shared_corpus()) {
    INFO(inst.label);
    CHECK(validate(inst.action).valid());
    CHECK(oracle::action_table(inst.action) == oracle::action_table(inst));
  }
}

TEST_CASE("hat actions") {
  const PartialAction triv =
      PartialAction::trivial(FiniteGroup::cyclic(3), FiniteSpace::discrete(2));
  const PartialAction ht = hat(triv);
  CHECK(ht.point_count() == 6);
  for (Element g = 1; g < 3; ++g) CHECK(ht.domain(g).none());
  CHECK(ht.domain(0).all());

  CHECK(hat(swap_z2().partial()).is_global());

  const PartialAction s = envact::testing::sierpinski_z2_action();
  const PartialAction hs = hat(s);
  for (Element g = 0; g < 2; ++g)
    CHECK(hs.range(g).count() == 2 * s.range(g).count());

  for (const auto& inst : shared_corpus()) {
    const PartialAction h = hat(inst.action);
    CHECK(validate(h).valid());
    const FiniteGroup& G = inst.action.group();
    const std::size_t n = inst.action.point_count();
    for (Element g = 0; g < G.order(); ++g)
      for (Element k = 0; k < G.order(); ++k)
        for (std::size_t x = 0; x < n; ++x) {
          const std::size_t p = k * n + x;
          REQUIRE(h.defined(g, p) == inst.action.defined(g, x));
          if (h.defined(g, p))
            CHECK(h.act(g, p) ==
                  G.mul(k, G.inv(g)) * n + inst.action.act(g, x));
        }
  }
}

TEST_CASE("hat over a supergroup") {
  for (std::size_t i = 0; i < shared_corpus().size(); i += 7) {
    const PartialAction& pa = shared_corpus()[i].action;
    const PartialAction over = hat_over(pa, GroupEmbedding::identity(pa.group()));
    CHECK(over.maps() == hat(pa).maps());
  }

  const FiniteGroup z2 = FiniteGroup::cyclic(2), z4 = FiniteGroup::cyclic(4);
  const PartialAction triv = PartialAction::trivial(z2, FiniteSpace::discrete(2));
  const PartialAction ht = hat_over(triv, GroupEmbedding::make(z2, z4, {0, 2}));
  CHECK(ht.point_count() == 8);
  CHECK(ht.domain(1).none());

  const PartialAction point =
      GlobalAction::from_permutations(z2, FiniteSpace::discrete(1), {{0}, {0}})
          .partial();
  const PartialAction h = hat_over(point, GroupEmbedding::make(z2, z4, {0, 2}));
  CHECK(orbit_relation(h).classes().size() == 2);
}

TEST_CASE("orbit relations") {
  const PartialAction triv =
      PartialAction::trivial(FiniteGroup::cyclic(3), FiniteSpace::discrete(3));
  CHECK(orbit_relation(triv) == PointRelation::diagonal(3));

  const GlobalAction rot = GlobalAction::from_permutations(
      FiniteGroup::cyclic(3), FiniteSpace::discrete(3),
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(orbit_relation(rot.partial()) == PointRelation::full(3));

  // Truncated shift: two words of W are related iff some rotation takes
  // one to the other.
  const ShiftExample ex = shift_example(4);
  const PointRelation r = orbit_relation(ex.action);
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q) {
      bool rotated = false;
      for (std::size_t m = 0; m < 4; ++m) {
        const std::uint32_t w = ex.words[p];
        const std::uint32_t rot_w = ((w >> m) | (w << (4 - m))) & 0xF;
        rotated |= rot_w == ex.words[q];
      }
      CHECK(r.contains(p, q) == rotated);
    }

  for (const auto& inst : shared_corpus()) CHECK(orbit_relation(inst.action).is_equivalence());
}

TEST_CASE("orbit quotients") {
  const GlobalAction rot = GlobalAction::from_permutations(
      FiniteGroup::cyclic(3), FiniteSpace::discrete(3),
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(orbit_quotient(rot.partial()).quotient.class_count() == 1);

  const FiniteSpace s3 = FiniteSpace::from_subbase(3, {{0}, {0, 1}});
  const OrbitQuotient t =
      orbit_quotient(PartialAction::trivial(FiniteGroup::cyclic(2), s3));
  CHECK(t.quotient.space == s3);

  const OrbitQuotient s = orbit_quotient(envact::testing::sierpinski_z2_action());
  CHECK(s.quotient.class_count() == 2);
  CHECK(s.quotient.space == FiniteSpace::sierpinski());

  for (const auto& inst : shared_corpus()) {
    const OrbitQuotient q = orbit_quotient(inst.action);
    CHECK(q.projection_open);
    CHECK(q.saturation_formula);
  }
}

TEST_CASE("saturation matches the union of partial translates on every open set") {
  for (const auto& inst : shared_corpus()) {
    const PartialAction& pa = inst.action;
    const std::set<testing::Mask> op = oracle::opens(pa.point_count(), oracle::trace(inst));
    const auto t = oracle::action_table(inst);
    for (testing::Mask u : op) {
      testing::Mask sat = 0;
      for (std::size_t x = 0; x < pa.point_count(); ++x)
        if ((u >> x) & 1)
          for (const auto& row : t)
            if (row[x]) sat |= testing::Mask{1} << *row[x];
      const PointSet lib = saturation(pa, PointSet(pa.point_count(), u));
      CHECK(lib == PointSet(pa.point_count(), sat));
      CHECK(op.count(sat) == 1);
    }
  }
}

TEST_CASE("saturation examples") {
  const ShiftExample ex = shift_example(4);
  const std::size_t zero = ex.point_of(0);
  CHECK(saturation(ex.action, PointSet(8)).none());
  CHECK(saturation(ex.action, ~PointSet(8)).all());
  PointSet z(8);
  z.set(zero);
  CHECK(saturation(ex.action, z) == z);
}

TEST_CASE("group element sets of points") {
  const GlobalAction u = swap_z2();
  CHECK(g_set(u.partial(), 0).all());
  const PartialAction triv =
      PartialAction::trivial(FiniteGroup::cyclic(4), FiniteSpace::discrete(2));
  CHECK(g_set(triv, 1) == ElementSet(4, 0b0001));

  const ShiftExample ex = shift_example(4);
  const std::size_t p = ex.point_of(0b1010);  // x = 0101
  CHECK(ex.label(p) == "0101");
  CHECK(g_set(ex.action, p) == ElementSet(4, 0b0101));
}

TEST_CASE("right translates of element sets follow the action") {
  // G^x g = G^(g^-1 x) whenever x lies in X_g.
  for (const auto& inst : shared_corpus()) {
    const PartialAction& pa = inst.action;
    const FiniteGroup& G = pa.group();
    for (Element g = 0; g < G.order(); ++g)
      for (std::size_t x : members(pa.range(g))) {
        const std::size_t y = pa.act(G.inv(g), x);
        CHECK(G.right_translate(g_set(pa, x), g) == g_set(pa, y));
      }
  }
}

TEST_CASE("domains transport exactly") {
  for (const auto& inst : shared_corpus()) {
    const PartialAction& pa = inst.action;
    const FiniteGroup& G = pa.group();
    for (Element g = 0; g < G.order(); ++g)
      for (Element h = 0; h < G.order(); ++h) {
        const auto img = pa.map(g).apply(pa.domain(g) & pa.range(h));
        REQUIRE(img.has_value());
        CHECK(*img == (pa.range(g) & pa.range(G.mul(g, h))));
      }
  }
}

TEST_CASE("domain flags") {
  const DomainReport d = domain_report(
      PartialAction::trivial(FiniteGroup::cyclic(2), FiniteSpace::discrete(3)));
  CHECK(d.gstar.clopen);
  for (const FlagSet& f : d.per_element) CHECK(f.clopen);

  const DomainReport s = domain_report(envact::testing::sierpinski_z2_action());
  CHECK(s.per_element[1].open);
  CHECK_FALSE(s.per_element[1].closed);
  CHECK_FALSE(s.gstar.closed);

  const PartialAction rot =
      GlobalAction::from_permutations(FiniteGroup::cyclic(2),
                                      FiniteSpace::indiscrete(2),
                                      {{0, 1}, {1, 0}})
          .partial();
  CHECK(domain_report(rot).gstar.clopen);
}

TEST_CASE("the action map is open on its domain") {
  for (const auto& inst : shared_corpus()) {
    const MapReport m = action_map_report(inst.action);
    CHECK(m.continuous);
    CHECK(m.open);
  }
}

TEST_CASE("morphisms and equivalence") {
  for (std::size_t i = 0; i < shared_corpus().size(); i += 5) {
    const PartialAction& pa = shared_corpus()[i].action;
    std::vector<std::size_t> id(pa.point_count());
    for (std::size_t x = 0; x < id.size(); ++x) id[x] = x;
    CHECK(is_morphism(id, pa, pa));
    CHECK(is_isomorphism(id, pa, pa));
    // x -> (1, x) is continuous and maps X_g into (G x X)_g, but
    // hat_g(1, x) = (g^-1, g.x) differs from (1, g.x) as soon as g != 1
    // acts anywhere, so the square commutes only in that degenerate case.
    const std::vector<std::size_t> j = iota_into_hat(pa);
    const PartialAction h = hat(pa);
    CHECK(map_report(j, pa.space(), h.space()).continuous);
    for (Element g = 0; g < pa.group().order(); ++g)
      for (std::size_t x : members(pa.range(g))) CHECK(h.range(g).test(j[x]));
    bool only_identity_acts = true;
    for (Element g = 0; g < pa.group().order(); ++g)
      if (g != pa.group().identity() && pa.domain(g).any())
        only_identity_acts = false;
    CHECK(is_morphism(j, pa, h) == only_identity_acts);
    if (pa.group().order() >= 2 && pa.point_count() >= 1 &&
        pa.point_count() <= kMaxEquivalenceSearch)
      CHECK_FALSE(are_equivalent(pa, hat(pa)).has_value());
  }
  const PartialAction big =
      PartialAction::trivial(FiniteGroup::cyclic(1), FiniteSpace::discrete(9));
  CHECK(error_code([&] { are_equivalent(big, big); }) == ErrorCode::TooLarge);

  const GlobalAction u = swap_z2();
  CHECK(are_equivalent(u.partial(), u.partial()).has_value());
  // Z_2 swap: hat_1(0, 0) = (1, 1) while (0, 1.0) = (0, 1).
  const PartialAction h = hat(u.partial());
  CHECK(h.act(1, 0) == 3);
  CHECK_FALSE(is_morphism(iota_into_hat(u.partial()), u.partial(), h));
}
