#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "envact/universal.hpp"
#include "expect.hpp"
#include "oracle.hpp"

using namespace envact;
using envact::testing::Mask;
using envact::testing::error_code;
namespace oracle = envact::testing::oracle;

namespace {

const std::vector<envact::testing::Instance>& shared_corpus() {
  static const auto c = envact::testing::corpus(25, 0xbea7);
  return c;
}

// pi_n(x) = { h^-1 : h.x defined and in V_n }, from the raw table.
std::vector<SubsetTuple> pi_by_formula(const FiniteGroup& G,
                                       const oracle::Table& t,
                                       const std::vector<Mask>& base) {
  const std::size_t n = t.empty() ? 0 : t[0].size();
  std::vector<SubsetTuple> out(n, SubsetTuple(base.size(), ElementSet(G.order())));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < base.size(); ++v)
      for (Element h = 0; h < G.order(); ++h)
        if (t[h][x] && ((base[v] >> *t[h][x]) & 1)) out[x][v].set(G.inv(h));
  return out;
}

std::vector<PointSet> as_sets(std::size_t n, const std::vector<Mask>& masks) {
  std::vector<PointSet> out;
  for (Mask m : masks) out.emplace_back(n, m);
  return out;
}

bool t0(std::size_t n, const std::set<Mask>& op) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool split = false;
      for (Mask u : op) split |= ((u >> x) & 1) != ((u >> y) & 1);
      if (!split) return false;
    }
  return true;
}

bool separates_by_domains(const PartialAction& pa) {
  const std::size_t n = pa.point_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool split = false;
      for (Element g = 0; g < pa.group().order(); ++g)
        split |= pa.range(g).test(x) != pa.range(g).test(y);
      if (!split) return false;
    }
  return true;
}

SubsetTuple single(std::size_t order, Mask m) { return {ElementSet(order, m)}; }

}  // namespace

TEST_CASE("theta is an action on subsets and on tuples of subsets") {
  std::mt19937_64 rng(41);
  for (const FiniteGroup& G : envact::testing::small_groups()) {
    const std::size_t n = G.order();
    for (Mask a = 0; a < (Mask{1} << n); ++a) {
      const SubsetTuple f = single(n, a);
      CHECK(theta(G, G.identity(), f) == f);
      for (Element g = 0; g < n; ++g) {
        // gF by definition.
        ElementSet gf(n);
        for (Element k = 0; k < n; ++k)
          if ((a >> k) & 1) gf.set(G.mul(g, k));
        CHECK(theta(G, g, f)[0] == gf);
        for (Element h = 0; h < n; ++h)
          CHECK(theta(G, g, theta(G, h, f)) == theta(G, G.mul(g, h), f));
      }
    }
    std::uniform_int_distribution<Mask> pick(0, (Mask{1} << n) - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const SubsetTuple f{ElementSet(n, pick(rng)), ElementSet(n, pick(rng)),
                          ElementSet(n, pick(rng))};
      for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h)
          CHECK(theta(G, g, theta(G, h, f)) == theta(G, G.mul(g, h), f));
    }
  }
}

TEST_CASE("theta orbit spaces are valid global actions") {
  for (const FiniteGroup& G : envact::testing::small_groups()) {
    const ThetaOrbitSpace s = theta_space(G, {single(G.order(), 1), single(G.order(), 0)});
    CHECK(validate(s.action.partial()).valid());
    CHECK(std::is_sorted(s.points.begin(), s.points.end()));
    for (const SubsetTuple& p : s.points) CHECK(s.index_of(p) < s.points.size());
  }
}

TEST_CASE("bases") {
  const FiniteSpace s = FiniteSpace::from_subbase(3, {{0}, {0, 1}});
  CHECK(full_base(s).size() == s.opens().size());
  CHECK(minimal_base(s).size() == 3);
  CHECK(is_base(s, minimal_base(s)));
  CHECK_FALSE(is_base(s, {s.full_set()}));
  const PartialAction triv = PartialAction::trivial(FiniteGroup::cyclic(2), s);
  CHECK(error_code([&] { embed(triv, std::vector<PointSet>{s.full_set()}); }) ==
        ErrorCode::NotABase);
}

TEST_CASE("embedding examples") {
  const FiniteSpace d2 = FiniteSpace::discrete(2);
  const std::vector<PointSet> singletons{PointSet(2, 0b01), PointSet(2, 0b10)};

  const EmbeddingImage t =
      embed(PartialAction::trivial(FiniteGroup::cyclic(2), d2), singletons);
  CHECK(t.points[0] == SubsetTuple{ElementSet(2, 0b01), ElementSet(2, 0b00)});
  CHECK(t.points[1] == SubsetTuple{ElementSet(2, 0b00), ElementSet(2, 0b01)});

  const PartialAction swap = GlobalAction::from_permutations(
                                 FiniteGroup::cyclic(2), d2, {{0, 1}, {1, 0}})
                                 .partial();
  const EmbeddingImage s = embed(swap, singletons);
  CHECK(s.points[0] == SubsetTuple{ElementSet(2, 0b01), ElementSet(2, 0b10)});
  CHECK(s.points[1] == SubsetTuple{ElementSet(2, 0b10), ElementSet(2, 0b01)});
  CHECK(verify_embedding(swap, s).all());
}

TEST_CASE("embedding matches the defining formula on the corpus") {
  for (const auto& inst : shared_corpus()) {
    INFO(inst.label);
    const std::size_t n = inst.points.size();
    const std::set<Mask> op = oracle::opens(n, oracle::trace(inst));
    const std::vector<Mask> base(op.begin(), op.end());
    const auto t = oracle::action_table(inst);
    if (!t0(n, op)) {
      CHECK(error_code([&] { embed(inst.action, as_sets(n, base)); }) ==
            ErrorCode::NotInjective);
      continue;
    }
    const EmbeddingImage image = embed(inst.action, as_sets(n, base));
    CHECK(image.points == pi_by_formula(inst.group, t, base));

    // Points acted on only by the identity land on {1} exactly where they
    // lie in a base set.
    for (std::size_t x = 0; x < n; ++x) {
      if (g_set(inst.action, x).count() != 1) continue;
      for (std::size_t v = 0; v < base.size(); ++v)
        CHECK(image.points[x][v] ==
              (((base[v] >> x) & 1) ? ElementSet(inst.group.order(), 1)
                                    : ElementSet(inst.group.order())));
    }

    // G^x is the union of the inverted coordinates when the base covers X.
    for (std::size_t x = 0; x < n; ++x) {
      ElementSet all(inst.group.order());
      for (const ElementSet& f : image.points[x]) all |= f;
      CHECK(inst.group.inverse_set(all) == g_set(inst.action, x));
    }
  }
}

TEST_CASE("embedding verification on the corpus") {
  std::size_t clopen = 0;
  for (const auto& inst : shared_corpus()) {
    INFO(inst.label);
    if (!inst.action.space().is_t0()) continue;
    const EmbeddingImage image = embed(inst.action, BaseChoice::Minimal);
    const EmbeddingReport r = verify_embedding(inst.action, image);
    CHECK(r.injective);
    CHECK(r.forward_equivariant);
    CHECK(r.reflects);
    CHECK(r.all());
    const SaturationReport s = image_globalization(envelope(inst.action), image);
    CHECK(s.clopen_domains == r.clopen_domains);
    if (r.clopen_domains) {
      ++clopen;
      CHECK(s.bijection());
      CHECK(s.equivariant);
    }
  }
  CHECK(clopen > 20);
}

TEST_CASE("separating domains and the single-subset embedding") {
  const PartialAction global = GlobalAction::from_permutations(
                                   FiniteGroup::cyclic(2), FiniteSpace::discrete(3),
                                   {{0, 1, 2}, {1, 0, 2}})
                                   .partial();
  CHECK_FALSE(separates_points(global));
  CHECK(error_code([&] { embed_simple(global); }) == ErrorCode::DoesNotSeparate);
  CHECK_FALSE(separates_points(
      PartialAction::trivial(FiniteGroup::cyclic(3), FiniteSpace::discrete(2))));
  for (std::size_t n = 2; n <= 6; ++n) CHECK(separates_points(shift_example(n).action));

  for (const auto& inst : shared_corpus()) {
    CHECK(separates_points(inst.action) == separates_by_domains(inst.action));
    if (!separates_points(inst.action)) continue;
    const EmbeddingImage e = embed_simple(inst.action);
    CHECK(e.arity() == 1);
    const auto expected = pi_by_formula(
        inst.group, oracle::action_table(inst),
        {(Mask{1} << inst.points.size()) - 1});
    CHECK(e.points == expected);
  }
}

TEST_CASE("saturation of the image") {
  const PartialAction triv =
      PartialAction::trivial(FiniteGroup::cyclic(2), FiniteSpace::discrete(2));
  const EmbeddingImage e =
      embed(triv, std::vector<PointSet>{PointSet(2, 0b01), PointSet(2, 0b10)});
  const SaturationReport s = image_globalization(envelope(triv), e);
  CHECK(s.saturation.size() == 4);
  CHECK(s.bijection());

  const PartialAction global = GlobalAction::from_permutations(
                                   FiniteGroup::cyclic(2), FiniteSpace::discrete(2),
                                   {{0, 1}, {1, 0}})
                                   .partial();
  const EmbeddingImage g = embed(global, BaseChoice::Minimal);
  const SaturationReport gs = image_globalization(envelope(global), g);
  std::vector<SubsetTuple> image = g.points;
  std::sort(image.begin(), image.end());
  CHECK(gs.saturation == image);
}

TEST_CASE("the truncated shift") {
  CHECK(error_code([] { shift_example(1); }) == ErrorCode::OutOfRange);
  CHECK(error_code([] { shift_example(11); }) == ErrorCode::OutOfRange);
  for (std::size_t n = 3; n <= 6; ++n) {
    INFO("n = " << n);
    const ShiftExample ex = shift_example(n);
    const PartialAction& pa = ex.action;
    CHECK(pa.point_count() == (std::size_t{1} << (n - 1)));
    CHECK(validate(pa).valid());

    const EmbeddingImage e = embed_simple(pa);
    std::set<ElementSet> image;
    for (std::size_t p = 0; p < pa.point_count(); ++p) {
      const std::uint32_t w = ex.words[p];
      ElementSet zeros(n);
      for (std::size_t m = 0; m < n; ++m)
        if (!((w >> m) & 1)) zeros.set(m);
      CHECK(g_set(pa, p) == zeros);
      image.insert(e.points[p][0]);
    }
    std::set<ElementSet> containing_zero, nonempty;
    for (Mask a = 1; a < (Mask{1} << n); ++a) {
      nonempty.emplace(n, a);
      if (a & 1) containing_zero.emplace(n, a);
    }
    CHECK(image == containing_zero);

    const EnvelopingSpace env = envelope(pa);
    CHECK(env.size() == (std::size_t{1} << n) - 1);
    const SaturationReport s = image_globalization(env, e);
    std::set<ElementSet> sat;
    for (const SubsetTuple& t : s.saturation) sat.insert(t[0]);
    CHECK(sat == nonempty);
    CHECK(s.bijection());
    CHECK(s.equivariant);
    CHECK(verify_embedding(pa, e).all());
  }

  const ShiftExample ex = shift_example(4);
  const std::size_t zero = ex.point_of(0);
  CHECK(g_set(ex.action, zero).all());
  CHECK(embed_simple(ex.action).points[zero][0].all());
  CHECK(element_names(FiniteGroup::cyclic(4), ElementSet(4, 0b0101)) ==
        std::vector<std::string>{"0", "2"});
}
