#include "envact/cli/commands.hpp"

#include <algorithm>
#include <set>

#include "envact/cli/document.hpp"
#include "envact/cli/report.hpp"
#include "envact/error.hpp"
#include "envact/globalization.hpp"

namespace envact::cli {

namespace {

struct Context {
  json results = json::object();
  json audits = json::array();
  std::optional<std::string> dot;

  void audit(std::string id, std::string statement, bool hypothesis,
             bool conclusion) {
    audits.push_back(to_json(Audit{std::move(id), std::move(statement),
                                   hypothesis, conclusion,
                                   !hypothesis || conclusion}));
  }
  void check(std::string id, std::string statement, bool holds) {
    audit(std::move(id), std::move(statement), true, holds);
  }
};

void require_valid(const PartialAction& action) {
  const ValidationReport r = validate(action);
  if (r.valid()) return;
  std::string why = "input is not a valid topological partial action";
  if (!r.witnesses.empty())
    why += ": " + r.witnesses.front().first + " fails (" +
           r.witnesses.front().second.detail + ")";
  throw DomainError(why);
}

void add_envelope_checks(Context& ctx, const EnvelopingSpace& env) {
  const EnvelopeReport v = verify_enveloping(env);
  ctx.results["verification"] = to_json(v);
  ctx.check("iota-homeomorphism", "iota : X -> iota(X) is a homeomorphism",
            v.iota_homeomorphism);
  ctx.check("induced-equivalent",
            "the action is equivalent to the one mu induces on iota(X)",
            v.induced_equivalent);
  ctx.check("relation-is-hat-orbits",
            "R equals the orbit relation of the hat action",
            v.relation_matches_hat_orbits);
  ctx.check("iota-saturates", "G . iota(X) = X_G",
            v.saturation_is_everything);
}

void add_embedding(Context& ctx, const std::string& key,
                   const EnvelopingSpace& env, const EmbeddingImage& image) {
  const EmbeddingReport v = verify_embedding(env.source, image);
  const SaturationReport s = image_globalization(env, image);
  json sat = json::array();
  for (const SubsetTuple& t : s.saturation)
    sat.push_back(tuple_json(image.group, t));
  ctx.results[key] = {
      {"arity", image.arity()},
      {"pi", embedding_points(image)},
      {"verification", to_json(v)},
      {"saturation", sat},
      {"saturation_size", s.saturation.size()},
      {"F",
       {{"well_defined", s.well_defined},
        {"injective", s.injective},
        {"surjective", s.surjective},
        {"equivariant", s.equivariant}}},
  };
  ctx.audit(key + "-isomorphism",
            "every X_g clopen => pi is an isomorphism onto theta on pi[X]",
            v.clopen_domains, v.all());
  ctx.audit(key + "-saturation",
            "every X_g clopen => F : X_G -> G.pi[X] is an equivariant "
            "bijection",
            s.clopen_domains, s.bijection() && s.equivariant);
}

void cmd_validate(Context& ctx, const PartialAction& action) {
  const ValidationReport r = validate(action);
  ctx.results = to_json(r, action.group());
  ctx.check("pointwise-iff-family",
            "pointwise laws hold <=> family laws hold", r.forms_agree());
}

void cmd_globalize(Context& ctx, const PartialAction& action) {
  require_valid(action);
  const EnvelopingSpace env = envelope(action);
  ctx.results["group_order"] = action.group().order();
  ctx.results["points"] = action.point_count();
  ctx.results["envelope_size"] = env.size();
  ctx.results["classes"] = class_table(env);
  ctx.results["iota"] = env.iota;
  const MapReport q =
      map_report(env.carrier.projection, env.carrier.base, env.carrier.space);
  ctx.results["q"] = {{"continuous", q.continuous}, {"open", q.open}};
  ctx.check("quotient-map-open", "q : G x X -> X_G is continuous and open",
            q.continuous && q.open);
  add_envelope_checks(ctx, env);
  ctx.dot = class_graph_dot(env);
}

void cmd_diagnose(Context& ctx, const PartialAction& action) {
  require_valid(action);
  const EnvelopingSpace env = envelope(action);
  const DiagnosticsReport d = diagnose(env);
  ctx.results = to_json(d);
  ctx.results["envelope_size"] = env.size();
  for (const Audit& a : d.audits) ctx.audits.push_back(to_json(a));
}

void cmd_embed(Context& ctx, const PartialAction& action,
               const Options& options) {
  require_valid(action);
  const EnvelopingSpace env = envelope(action);
  ctx.results["envelope_size"] = env.size();
  ctx.results["base"] = options.base == BaseChoice::Full ? "full" : "minimal";
  EmbeddingImage image = [&] {
    try {
      return embed(action, options.base);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::TooLarge) throw;
      throw DomainError(std::string(err.what()) +
                        "; rerun with --base minimal");
    }
  }();
  add_embedding(ctx, "embedding", env, image);
  const bool separates = separates_points(action);
  ctx.results["separates_points"] = separates;
  if (separates) add_embedding(ctx, "simple", env, embed_simple(action));
}

void cmd_export_dot(Context& ctx, const PartialAction& action) {
  require_valid(action);
  const EnvelopingSpace env = envelope(action);
  ctx.results["classes"] = env.size();
  ctx.results["iota_classes"] = env.iota_image().count();
  ctx.dot = class_graph_dot(env);
}

void cmd_shift_demo(Context& ctx, std::size_t n) {
  const ShiftExample ex = shift_example(n);
  const PartialAction& action = ex.action;
  const FiniteGroup& G = action.group();

  ctx.results["n"] = n;
  ctx.results["W_size"] = action.point_count();
  ctx.check("window-size", "|W| = 2^(n-1)",
            action.point_count() == (std::size_t{1} << (n - 1)));

  const ValidationReport v = validate(action);
  ctx.results["valid"] = v.valid();
  ctx.check("shift-action-valid", "the restricted shift is a partial action",
            v.valid());

  json gsets = json::object();
  for (std::size_t x = 0; x < action.point_count(); ++x)
    gsets[ex.label(x)] = element_names(G, g_set(action, x));
  ctx.results["g_sets"] = gsets;

  const EnvelopingSpace env = envelope(action);
  ctx.results["envelope_size"] = env.size();
  ctx.check("envelope-size", "|X_G| = 2^n - 1",
            env.size() == (std::size_t{1} << n) - 1);
  add_envelope_checks(ctx, env);

  const bool separates = separates_points(action);
  ctx.results["separates_points"] = separates;
  ctx.check("domains-separate", "{W_m} separates points", separates);
  if (!separates) return;

  const EmbeddingImage image = embed_simple(action);
  json pi = json::object();
  std::set<ElementSet> image_sets;
  for (std::size_t x = 0; x < action.point_count(); ++x) {
    pi[ex.label(x)] = element_names(G, image.points[x][0]);
    image_sets.insert(image.points[x][0]);
  }
  ctx.results["pi_simple"] = pi;

  std::set<ElementSet> containing_zero, nonempty;
  for (std::size_t bits = 1; bits < (std::size_t{1} << n); ++bits) {
    ElementSet a(n, bits);
    nonempty.insert(a);
    if (a.test(0)) containing_zero.insert(a);
  }
  const bool image_ok = image_sets == containing_zero;
  ctx.results["pi_image_is_sets_containing_0"] = image_ok;
  ctx.check("image-is-sets-containing-0", "pi[W] = {A : 0 in A}", image_ok);

  const EmbeddingReport ev = verify_embedding(action, image);
  ctx.results["embedding"] = to_json(ev);
  ctx.check("embedding-isomorphism",
            "pi is an isomorphism onto theta restricted to pi[W]", ev.all());

  const SaturationReport s = image_globalization(env, image);
  std::set<ElementSet> saturated;
  for (const SubsetTuple& t : s.saturation) saturated.insert(t[0]);
  const bool sat_ok = saturated == nonempty;
  ctx.results["saturation_size"] = s.saturation.size();
  ctx.results["saturation_is_nonempty_subsets"] = sat_ok;
  ctx.results["F"] = {{"well_defined", s.well_defined},
                      {"injective", s.injective},
                      {"surjective", s.surjective},
                      {"equivariant", s.equivariant}};
  ctx.check("saturation-is-nonempty-subsets",
            "G . pi[W] = nonempty subsets of Z_n", sat_ok);
  ctx.check("saturation-bijection",
            "F : X_G -> G . pi[W] is an equivariant bijection",
            s.bijection() && s.equivariant);
}

}  // namespace

Outcome run(std::string_view command, const json& document,
            const Options& options) {
  if (std::find(kCommands.begin(), kCommands.end(), command) ==
      kCommands.end())
    throw std::invalid_argument("unknown command \"" + std::string(command) +
                                "\"");
  Context ctx;
  json canonical;
  try {
    if (command == "shift-demo") {
      canonical = json{{"example", {{"shift", options.n}}}};
      cmd_shift_demo(ctx, options.n);
    } else {
      const PartialAction action = parse_action(document);
      canonical = serialize_action(action);
      if (command == "validate") cmd_validate(ctx, action);
      else if (command == "globalize") cmd_globalize(ctx, action);
      else if (command == "diagnose") cmd_diagnose(ctx, action);
      else if (command == "embed") cmd_embed(ctx, action, options);
      else cmd_export_dot(ctx, action);
    }
  } catch (const Error& err) {
    throw DomainError(err.what());
  }

  Outcome out;
  out.bug = std::any_of(ctx.audits.begin(), ctx.audits.end(),
                        [](const json& a) { return !a["passed"].get<bool>(); });
  out.report = {{"command", std::string(command)},
                {"input_digest", digest(canonical)},
                {"results", std::move(ctx.results)},
                {"audits", std::move(ctx.audits)},
                {"bug", out.bug}};
  out.dot = std::move(ctx.dot);
  return out;
}

std::string format_json(const Outcome& outcome) {
  return outcome.report.dump(2) + "\n";
}

std::string format_text(const Outcome& outcome) {
  const json& r = outcome.report;
  std::string out;
  if (outcome.bug)
    out += "*** BUG: a theorem-level audit failed; this is a defect in "
           "envact, not in the input ***\n";
  out += "command: " + r["command"].get<std::string>() + "\n";
  out += "input digest: " + r["input_digest"].get<std::string>() + "\n";
  out += render_text(r["results"]);
  for (const json& a : r["audits"])
    out += "audit " + a["id"].get<std::string>() + ": " +
           (!a["passed"].get<bool>()                  ? "VIOLATED"
            : a["kind"] == "equivalence" || a["hypothesis"].get<bool>()
                ? "consistent"
                : "vacuous") +
           "\n";
  return out;
}

}  // namespace envact::cli
