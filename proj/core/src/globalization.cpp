#include "envact/globalization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "envact/error.hpp"

namespace envact {

namespace {

constexpr auto npos = PointSet::npos;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::vector<std::vector<std::size_t>> blocks() {
    std::vector<std::vector<std::size_t>> by_root(parent_.size());
    for (std::size_t x = 0; x < parent_.size(); ++x)
      by_root[find(x)].push_back(x);
    std::vector<std::vector<std::size_t>> out;
    for (auto& b : by_root)
      if (!b.empty()) out.push_back(std::move(b));
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// {(h, y) : x in X_{g^-1 h} and m_{h^-1 g}(x) = y} for the pair (g, x).
PointSet literal_row(const PartialAction& action, Element g, std::size_t x) {
  const FiniteGroup& G = action.group();
  const std::size_t n = action.point_count();
  PointSet row(G.order() * n);
  for (Element h = 0; h < G.order(); ++h) {
    const Element k = G.mul(G.inv(h), g);
    if (action.range(G.inv(k)).test(x) && action.defined(k, x))
      row.set(h * n + action.act(k, x));
  }
  return row;
}

// Left translation of classes of a quotient of K x X, where K acts on the
// first factor. Throws MuIllDefined when a class is not sent to one class.
GlobalAction translation_action(const FiniteGroup& group,
                                const QuotientSpace& carrier,
                                std::size_t points) {
  std::vector<std::vector<std::size_t>> perms(
      group.order(), std::vector<std::size_t>(carrier.class_count()));
  for (Element g = 0; g < group.order(); ++g)
    for (std::size_t c = 0; c < carrier.class_count(); ++c) {
      std::size_t target = npos;
      for (std::size_t p : carrier.classes[c]) {
        const std::size_t t =
            carrier.projection[group.mul(g, p / points) * points + p % points];
        if (target == npos) target = t;
        if (t != target)
          throw Error(ErrorCode::MuIllDefined,
                      "translation by " + group.name(g) +
                          " splits class " + std::to_string(c));
      }
      perms[g][c] = target;
    }
  try {
    return GlobalAction::from_permutations(group, carrier.space, perms);
  } catch (const Error& err) {
    throw Error(ErrorCode::MuIllDefined, err.what());
  }
}

// Renumbers a map into the subspace on its image.
std::vector<std::size_t> onto_image(const std::vector<std::size_t>& map,
                                    const PointSet& image_set) {
  std::vector<std::size_t> index(image_set.size(), npos);
  std::size_t i = 0;
  for (auto c = image_set.find_first(); c != npos; c = image_set.find_next(c))
    index[c] = i++;
  std::vector<std::size_t> out(map.size());
  for (std::size_t x = 0; x < map.size(); ++x) out[x] = index[map[x]];
  return out;
}

bool injective(const std::vector<std::size_t>& map, std::size_t target) {
  PointSet seen(target);
  for (std::size_t y : map) {
    if (seen.test(y)) return false;
    seen.set(y);
  }
  return true;
}

}  // namespace

std::pair<Element, std::size_t> EnvelopingSpace::representative(
    std::size_t c) const {
  const std::size_t p = carrier.classes[c].front();
  return {p / source.point_count(), p % source.point_count()};
}

PointSet EnvelopingSpace::iota_image() const {
  PointSet out(size());
  for (std::size_t c : iota) out.set(c);
  return out;
}

PointRelation enveloping_relation(const PartialAction& action) {
  const std::size_t n = action.point_count();
  PointRelation r(action.group().order() * n);
  for (Element g = 0; g < action.group().order(); ++g)
    for (std::size_t x = 0; x < n; ++x) {
      const PointSet row = literal_row(action, g, x);
      for (auto p = row.find_first(); p != npos; p = row.find_next(p))
        r.insert(g * n + x, p);
    }
  return r;
}

EnvelopingSpace envelope(const PartialAction& action) {
  const FiniteGroup& G = action.group();
  const std::size_t n = action.point_count();
  const std::size_t pairs = G.order() * n;

  DisjointSets sets(pairs);
  for (Element g = 0; g < G.order(); ++g)
    for (Element f = 0; f < G.order(); ++f) {
      const PointSet& d = action.domain(f);
      for (auto x = d.find_first(); x != npos; x = d.find_next(x))
        sets.unite(g * n + x, G.mul(g, G.inv(f)) * n + action.act(f, x));
    }

  QuotientSpace carrier = quotient(pair_space(action), sets.blocks());

  // The closure of the generators must be R itself, pair for pair.
  for (std::size_t c = 0; c < carrier.class_count(); ++c) {
    const PointSet block = make_set(pairs, carrier.classes[c]);
    for (std::size_t p : carrier.classes[c])
      if (literal_row(action, p / n, p % n) != block)
        throw Error(ErrorCode::RelationNotEquivalence,
                    "generated class of (" + G.name(p / n) + ", " +
                        std::to_string(p % n) +
                        ") differs from its R-class");
  }

  const MapReport q = map_report(carrier.projection, carrier.base,
                                 carrier.space);
  if (!q.continuous || !q.open)
    throw Error(ErrorCode::OpennessViolation,
                "quotient map G x X -> X_G is not continuous and open");

  GlobalAction mu = translation_action(G, carrier, n);
  std::vector<std::size_t> iota(n);
  for (std::size_t x = 0; x < n; ++x)
    iota[x] = carrier.projection[G.identity() * n + x];
  return EnvelopingSpace{action, std::move(carrier), std::move(mu),
                         std::move(iota)};
}

EnvelopeReport verify_enveloping(const EnvelopingSpace& env) {
  EnvelopeReport r;
  const PointSet img = env.iota_image();
  const FiniteSpace image_space = subspace(env.carrier.space, img);
  const auto local = onto_image(env.iota, img);
  r.iota_homeomorphism =
      injective(env.iota, env.size()) &&
      map_report(local, env.source.space(), image_space).homeomorphism;

  const PartialAction restricted = induced(env.mu, img);
  r.induced_equivalent = injective(env.iota, env.size()) &&
                         is_isomorphism(local, env.source, restricted);

  r.relation_matches_hat_orbits =
      enveloping_relation(env.source) == orbit_relation(hat(env.source));
  r.saturation_is_everything = saturation(env.mu.partial(), img).all();
  return r;
}

bool DiagnosticsReport::audits_pass() const {
  return std::all_of(audits.begin(), audits.end(),
                     [](const Audit& a) { return a.passed; });
}

DiagnosticsReport diagnose(const EnvelopingSpace& env) {
  const PartialAction& m = env.source;
  DiagnosticsReport r;
  r.envelope = separation_report(env.carrier.space);
  r.base = separation_report(m.space());
  r.ehat_closed =
      relation_is_closed(orbit_relation(hat(m)), pair_space(m));
  const DomainReport domains = domain_report(m);
  r.gstar = domains.gstar;
  r.all_domains_closed =
      std::all_of(domains.per_element.begin(), domains.per_element.end(),
                  [](const FlagSet& f) { return f.closed; });
  r.envelope_discrete = env.carrier.space.is_discrete();
  r.q_open =
      map_report(env.carrier.projection, env.carrier.base, env.carrier.space)
          .open;

  auto implication = [&r](std::string id, std::string statement, bool hyp,
                          bool concl) {
    r.audits.push_back({std::move(id), std::move(statement), hyp, concl,
                        !hyp || concl});
  };
  auto equivalence = [&r](std::string id, std::string statement, bool lhs,
                          bool rhs) {
    r.audits.push_back(
        {std::move(id), std::move(statement), lhs, rhs, lhs == rhs, true});
  };

  implication("quotient-map-open", "q : G x X -> X_G is open", true, r.q_open);
  // Valid for any base space once q is open.
  equivalence("hausdorff-iff-relation-closed",
              "X_G Hausdorff <=> Ehat closed in (G x X)^2",
              r.envelope.hausdorff, r.ehat_closed);
  // A finite metric space is discrete, hence Hausdorff.
  implication("closed-domain-gives-hausdorff",
              "X metrizable and G*X closed => Ehat closed and X_G Hausdorff",
              r.base.hausdorff && r.gstar.closed,
              r.ehat_closed && r.envelope.hausdorff);
  implication("closed-domains-give-regular",
              "X regular and every X_g closed => X_G regular",
              r.base.regular && r.all_domains_closed, r.envelope.regular);
  implication("compact-hausdorff-closed-relation-gives-regular",
              "X compact Hausdorff and Ehat closed => X_G regular",
              r.base.hausdorff && r.ehat_closed, r.envelope.regular);
  equivalence("metrizable-iff-regular-t1",
              "X_G regular and T1 <=> X_G discrete (finite metrizable)",
              r.envelope.regular && r.envelope.t1, r.envelope_discrete);

  r.notes = {
      "every finite space is compact; the locally compact metric case is "
      "covered by the compact Hausdorff audit",
      "with G discrete the neighbourhood M = {1} always has x in the interior "
      "of the joint domain, so that condition holds trivially",
      "metrizability of a finite space is equivalent to discreteness",
  };
  return r;
}

SupergroupExtension extend_to_supergroup(const GlobalAction& action,
                                         const GroupEmbedding& embedding) {
  const PartialAction lifted = hat_over(action.partial(), embedding);
  QuotientSpace carrier = quotient(lifted.space(), orbit_relation(lifted));
  const FiniteGroup& H = embedding.target();
  const std::size_t n = action.space().size();
  GlobalAction b = translation_action(H, carrier, n);

  std::vector<std::size_t> into(n);
  for (std::size_t x = 0; x < n; ++x)
    into[x] = carrier.projection[H.identity() * n + x];

  PointSet img(carrier.class_count());
  for (std::size_t c : into) img.set(c);

  bool homeomorphic =
      injective(into, carrier.class_count()) &&
      map_report(onto_image(into, img), action.space(),
                 subspace(carrier.space, img))
          .homeomorphism;
  const bool closed = carrier.space.is_closed(img);
  bool extends = true;
  for (Element g = 0; g < action.group().order(); ++g)
    for (std::size_t x = 0; x < n; ++x)
      if (b.act(embedding(g), into[x]) != into[action.act(g, x)])
        extends = false;
  return SupergroupExtension{std::move(carrier), std::move(b),
                             std::move(into), homeomorphic, closed, extends};
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string class_graph_dot(const EnvelopingSpace& env) {
  const FiniteGroup& G = env.source.group();
  const PointSet img = env.iota_image();
  std::ostringstream out;
  out << "digraph envelope {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t c = 0; c < env.size(); ++c) {
    const auto [g, x] = env.representative(c);
    out << "  c" << c << " [label=\"[" << dot_escape(G.name(g)) << "," << x << "]\"";
    if (img.test(c)) out << ", style=filled, fillcolor=\"lightblue\"";
    out << "];\n";
  }
  for (std::size_t c = 0; c < env.size(); ++c)
    for (Element g = 0; g < G.order(); ++g) {
      if (g == G.identity()) continue;
      out << "  c" << c << " -> c" << env.mu.act(g, c) << " [label=\""
          << dot_escape(G.name(g)) << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace envact
