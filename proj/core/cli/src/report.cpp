#include "envact/cli/report.hpp"

#include <sstream>

namespace envact::cli {

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const json& v) {
  if (!v.is_array()) return false;
  for (const json& e : v)
    if (e.is_object()) return false;
  return true;
}

void render(std::ostringstream& out, const json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render(out, value, depth + 1);
    } else if (value.is_array() && !is_flat(value)) {
      out << pad << key << ":\n";
      for (const json& e : value) {
        out << pad << "  -\n";
        render(out, e, depth + 2);
      }
    } else {
      out << pad << key << ": " << scalar(value) << "\n";
    }
  }
}

}  // namespace

json to_json(const ValidationReport& r, const FiniteGroup& group) {
  json witnesses = json::array();
  for (const auto& [check, w] : r.witnesses)
    witnesses.push_back({{"check", check},
                         {"g", group.name(w.g)},
                         {"h", group.name(w.h)},
                         {"x", w.x},
                         {"detail", w.detail}});
  return {
      {"pointwise",
       {{"inverse_law", r.inverse_law},
        {"composition_law", r.composition_law},
        {"unit_law", r.unit_law}}},
      {"family",
       {{"unit_map", r.unit_map},
        {"domain_transport", r.domain_transport},
        {"composition_map", r.composition_map}}},
      {"topological",
       {{"domains_open", r.domains_open},
        {"maps_homeomorphic", r.maps_homeomorphic},
        {"action_continuous", r.action_continuous}}},
      {"forms_agree", r.forms_agree()},
      {"valid", r.valid()},
      {"witnesses", witnesses},
  };
}

json to_json(const SeparationReport& r) {
  return {{"t1", r.t1}, {"hausdorff", r.hausdorff}, {"regular", r.regular}};
}

json to_json(const FlagSet& f) {
  return {{"open", f.open}, {"closed", f.closed}, {"clopen", f.clopen}};
}

json to_json(const EnvelopeReport& r) {
  return {{"iota_homeomorphism", r.iota_homeomorphism},
          {"induced_equivalent", r.induced_equivalent},
          {"relation_matches_hat_orbits", r.relation_matches_hat_orbits},
          {"saturation_is_everything", r.saturation_is_everything}};
}

json to_json(const Audit& a) {
  return {{"id", a.id},
          {"kind", a.equivalence ? "equivalence" : "implication"},
          {"statement", a.statement},
          {"hypothesis", a.hypothesis},
          {"conclusion", a.conclusion},
          {"passed", a.passed}};
}

json to_json(const DiagnosticsReport& r) {
  return {{"envelope", to_json(r.envelope)},
          {"base", to_json(r.base)},
          {"hausdorff", r.envelope.hausdorff},
          {"ehat_closed", r.ehat_closed},
          {"gstar", to_json(r.gstar)},
          {"all_domains_closed", r.all_domains_closed},
          {"envelope_discrete", r.envelope_discrete},
          {"q_open", r.q_open},
          {"notes", r.notes}};
}

json to_json(const EmbeddingReport& r) {
  return {{"clopen_domains", r.clopen_domains},
          {"injective", r.injective},
          {"forward_equivariant", r.forward_equivariant},
          {"reflects", r.reflects},
          {"base_covers", r.base_covers},
          {"induced_isomorphic", r.induced_isomorphic}};
}

json class_table(const EnvelopingSpace& env) {
  const FiniteGroup& G = env.source.group();
  const std::size_t n = env.source.point_count();
  const PointSet img = env.iota_image();
  json out = json::array();
  for (std::size_t c = 0; c < env.size(); ++c) {
    const auto [g, x] = env.representative(c);
    json mem = json::array();
    for (std::size_t p : env.carrier.classes[c])
      mem.push_back(json::array({G.name(p / n), p % n}));
    out.push_back({{"label", "[" + G.name(g) + "," + std::to_string(x) + "]"},
                   {"members", mem},
                   {"iota", img.test(c)}});
  }
  return out;
}

json tuple_json(const FiniteGroup& group, const SubsetTuple& tuple) {
  json out = json::array();
  for (const ElementSet& f : tuple) out.push_back(element_names(group, f));
  return out;
}

json embedding_points(const EmbeddingImage& image) {
  json out = json::object();
  for (std::size_t x = 0; x < image.points.size(); ++x)
    out[std::to_string(x)] = tuple_json(image.group, image.points[x]);
  return out;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace envact::cli
