#include "envact/universal.hpp"

#include <algorithm>
#include <set>

#include "envact/error.hpp"

namespace envact {

namespace {

constexpr auto npos = PointSet::npos;

bool all_clopen(const PartialAction& action) {
  for (Element g = 0; g < action.group().order(); ++g)
    if (!action.space().is_clopen(action.range(g))) return false;
  return true;
}

SubsetTuple embed_point(const PartialAction& action,
                        const std::vector<PointSet>& base, std::size_t x) {
  const FiniteGroup& G = action.group();
  SubsetTuple tuple(base.size(), G.empty_set());
  for (Element h = 0; h < G.order(); ++h) {
    if (!action.defined(h, x)) continue;
    const std::size_t y = action.act(h, x);
    for (std::size_t k = 0; k < base.size(); ++k)
      if (base[k].test(y)) tuple[k].set(G.inv(h));
  }
  return tuple;
}

std::size_t find_sorted(const std::vector<SubsetTuple>& sorted,
                        const SubsetTuple& tuple) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), tuple);
  if (it == sorted.end() || *it != tuple) return npos;
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

SubsetTuple theta(const FiniteGroup& group, Element g,
                  const SubsetTuple& tuple) {
  SubsetTuple out;
  out.reserve(tuple.size());
  for (const ElementSet& f : tuple) out.push_back(group.left_translate(g, f));
  return out;
}

std::size_t ThetaOrbitSpace::index_of(const SubsetTuple& tuple) const {
  return find_sorted(points, tuple);
}

ThetaOrbitSpace theta_space(const FiniteGroup& group,
                            std::vector<SubsetTuple> seeds) {
  std::set<SubsetTuple> closed;
  for (const SubsetTuple& t : seeds)
    for (Element g = 0; g < group.order(); ++g)
      closed.insert(theta(group, g, t));
  std::vector<SubsetTuple> points(closed.begin(), closed.end());
  std::vector<std::vector<std::size_t>> perms(
      group.order(), std::vector<std::size_t>(points.size()));
  for (Element g = 0; g < group.order(); ++g)
    for (std::size_t i = 0; i < points.size(); ++i)
      perms[g][i] = find_sorted(points, theta(group, g, points[i]));
  GlobalAction action = GlobalAction::from_permutations(
      group, FiniteSpace::discrete(points.size()), perms);
  return ThetaOrbitSpace{std::move(points), std::move(action)};
}

std::vector<PointSet> full_base(const FiniteSpace& space) {
  return space.opens();
}

std::vector<PointSet> minimal_base(const FiniteSpace& space) {
  std::set<PointSet> distinct(space.neighborhoods().begin(),
                              space.neighborhoods().end());
  return {distinct.begin(), distinct.end()};
}

bool is_base(const FiniteSpace& space, const std::vector<PointSet>& base) {
  for (const PointSet& v : base)
    if (v.size() != space.size() || !space.is_open(v)) return false;
  for (const PointSet& u : space.neighborhoods())
    if (std::find(base.begin(), base.end(), u) == base.end()) return false;
  return true;
}

std::size_t EmbeddingImage::preimage(const SubsetTuple& tuple) const {
  for (std::size_t x = 0; x < points.size(); ++x)
    if (points[x] == tuple) return x;
  return npos;
}

EmbeddingImage embed(const PartialAction& action,
                     const std::vector<PointSet>& base) {
  if (!is_base(action.space(), base))
    throw Error(ErrorCode::NotABase,
                "sets do not form a base of open sets of the space");
  EmbeddingImage out{action.group(), base, {}, all_clopen(action)};
  for (std::size_t x = 0; x < action.point_count(); ++x)
    out.points.push_back(embed_point(action, base, x));
  std::vector<SubsetTuple> sorted = out.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::NotInjective,
                "two points have the same image; the space is not T0");
  return out;
}

EmbeddingImage embed(const PartialAction& action, BaseChoice choice) {
  return embed(action, choice == BaseChoice::Full
                           ? full_base(action.space())
                           : minimal_base(action.space()));
}

bool separates_points(const PartialAction& action) {
  // Points with the same pattern of membership in the X_g are not separated.
  std::set<ElementSet> patterns;
  for (std::size_t x = 0; x < action.point_count(); ++x) {
    ElementSet pattern = action.group().empty_set();
    for (Element g = 0; g < action.group().order(); ++g)
      if (action.range(g).test(x)) pattern.set(g);
    if (!patterns.insert(pattern).second) return false;
  }
  return true;
}

EmbeddingImage embed_simple(const PartialAction& action) {
  if (!separates_points(action))
    throw Error(ErrorCode::DoesNotSeparate,
                "the domains X_g do not separate points");
  const std::vector<PointSet> whole{action.space().full_set()};
  EmbeddingImage out{action.group(), whole, {}, all_clopen(action)};
  for (std::size_t x = 0; x < action.point_count(); ++x)
    out.points.push_back(embed_point(action, whole, x));
  return out;
}

EmbeddingReport verify_embedding(const PartialAction& action,
                                 const EmbeddingImage& image) {
  const FiniteGroup& G = action.group();
  const std::size_t n = action.point_count();
  EmbeddingReport r;
  r.clopen_domains = all_clopen(action);

  std::vector<SubsetTuple> sorted = image.points;
  std::sort(sorted.begin(), sorted.end());
  r.injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  r.forward_equivariant = true;
  r.reflects = true;
  for (Element g = 0; g < G.order(); ++g)
    for (std::size_t x = 0; x < n; ++x) {
      const SubsetTuple moved = theta(G, g, image.points[x]);
      if (action.defined(g, x) && moved != image.points[action.act(g, x)])
        r.forward_equivariant = false;
      const std::size_t y = image.preimage(moved);
      if (y != npos && (!action.defined(g, x) || action.act(g, x) != y))
        r.reflects = false;
    }

  r.base_covers = true;
  for (std::size_t x = 0; x < n; ++x) {
    ElementSet covered = G.empty_set();
    for (Element h = 0; h < G.order(); ++h) {
      if (!action.defined(h, x)) continue;
      for (const PointSet& v : image.base)
        if (v.test(action.act(h, x))) covered.set(h);
    }
    if (covered != g_set(action, x)) r.base_covers = false;
  }

  // Compare as partial actions on sets: both carriers discrete.
  if (r.injective) {
    const ThetaOrbitSpace sat = theta_space(G, image.points);
    PointSet img(sat.points.size());
    for (const SubsetTuple& t : image.points) img.set(sat.index_of(t));
    const PartialAction restricted = induced(sat.action, img);
    const PartialAction plain(G, FiniteSpace::discrete(n), action.maps());
    std::vector<std::size_t> phi(n);
    const auto order = members(img);
    for (std::size_t x = 0; x < n; ++x)
      phi[x] = static_cast<std::size_t>(
          std::lower_bound(order.begin(), order.end(),
                           sat.index_of(image.points[x])) -
          order.begin());
    r.induced_isomorphic = is_isomorphism(phi, plain, restricted);
  }
  return r;
}

SaturationReport image_globalization(const EnvelopingSpace& env,
                                     const EmbeddingImage& image) {
  const PartialAction& action = env.source;
  const FiniteGroup& G = action.group();
  const std::size_t n = action.point_count();
  const ThetaOrbitSpace sat = theta_space(G, image.points);

  SaturationReport r;
  r.clopen_domains = all_clopen(action);
  r.saturation = sat.points;
  r.classes_to_tuples.assign(env.size(), npos);
  r.well_defined = true;
  for (std::size_t c = 0; c < env.size(); ++c)
    for (std::size_t p : env.carrier.classes[c]) {
      const std::size_t t =
          sat.index_of(theta(G, p / n, image.points[p % n]));
      if (r.classes_to_tuples[c] == npos) r.classes_to_tuples[c] = t;
      if (t != r.classes_to_tuples[c]) r.well_defined = false;
    }

  PointSet hit(sat.points.size());
  r.injective = true;
  for (std::size_t t : r.classes_to_tuples) {
    if (hit.test(t)) r.injective = false;
    hit.set(t);
  }
  r.surjective = hit.all();

  r.equivariant = true;
  for (Element g = 0; g < G.order(); ++g)
    for (std::size_t c = 0; c < env.size(); ++c)
      if (r.classes_to_tuples[env.mu.act(g, c)] !=
          sat.action.act(g, r.classes_to_tuples[c]))
        r.equivariant = false;
  return r;
}

std::string ShiftExample::label(std::size_t point) const {
  std::string s(n, '0');
  for (std::size_t k = 0; k < n; ++k)
    if (words[point] >> k & 1U) s[k] = '1';
  return s;
}

std::size_t ShiftExample::point_of(std::uint32_t word) const {
  auto it = std::lower_bound(words.begin(), words.end(), word);
  if (it == words.end() || *it != word) return npos;
  return static_cast<std::size_t>(it - words.begin());
}

ShiftExample shift_example(std::size_t n) {
  if (n < 2 || n > 10)
    throw Error(ErrorCode::OutOfRange,
                "shift example needs 2 <= n <= 10, got " + std::to_string(n));
  const std::size_t words = std::size_t{1} << n;
  const std::uint32_t mask = static_cast<std::uint32_t>(words - 1);
  std::vector<std::vector<std::size_t>> perms(n,
                                              std::vector<std::size_t>(words));
  for (std::size_t m = 0; m < n; ++m)
    for (std::uint32_t w = 0; w < words; ++w) {
      // bit k of the result is bit (k + m) mod n of w
      const std::uint32_t rotated =
          m == 0 ? w : ((w >> m) | (w << (n - m))) & mask;
      perms[m][w] = rotated;
    }
  GlobalAction shift = GlobalAction::from_permutations(
      FiniteGroup::cyclic(n), FiniteSpace::discrete(words), perms);
  PointSet window(words);
  for (std::uint32_t w = 0; w < words; ++w)
    if ((w & 1U) == 0) window.set(w);
  PartialAction action = induced(shift, window);
  std::vector<std::uint32_t> labels;
  for (std::size_t w : members(window))
    labels.push_back(static_cast<std::uint32_t>(w));
  return ShiftExample{n, std::move(shift), std::move(window),
                      std::move(action), std::move(labels)};
}

std::vector<std::string> element_names(const FiniteGroup& group,
                                       const ElementSet& set) {
  std::vector<std::string> out;
  for (auto g = set.find_first(); g != ElementSet::npos; g = set.find_next(g))
    out.push_back(group.name(g));
  return out;
}

}  // namespace envact
