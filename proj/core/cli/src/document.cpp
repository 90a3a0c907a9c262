#include "envact/cli/document.hpp"

#include <cstdint>
#include <cstdio>
#include <optional>

#include "envact/error.hpp"
#include "envact/universal.hpp"

namespace envact::cli {

namespace {

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw SchemaError(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t as_index(const std::string& key, const std::string& path) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    throw SchemaError(path, "expected a point index, got \"" + key + "\"");
  return std::stoull(key);
}

std::vector<std::size_t> as_points(const json& v, std::size_t size,
                                   const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of points");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    const std::size_t p = as_index(v[i], at);
    if (p >= size)
      throw SchemaError(at, "point " + std::to_string(p) + " out of range");
    out.push_back(p);
  }
  return out;
}

Element element_by_key(const FiniteGroup& group, const std::string& key,
                       const std::string& path) {
  for (Element g = 0; g < group.order(); ++g)
    if (group.name(g) == key) return g;
  if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
    const std::size_t g = std::stoull(key);
    if (g < group.order()) return g;
  }
  throw SchemaError(path, "no group element \"" + key + "\"");
}

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

PartialAction parse_example(const json& ex) {
  const std::string path = "/example";
  if (!ex.is_object() || ex.size() != 1)
    throw SchemaError(path, "expected exactly one example key");
  if (ex.contains("shift")) {
    const std::size_t n = as_index(ex["shift"], path + "/shift");
    return shift_example(n).action;
  }
  if (ex.contains("sierpinski_z2")) return sierpinski_z2();
  if (ex.contains("trivial")) {
    const json& t = ex["trivial"];
    return PartialAction::trivial(
        parse_group(require(t, "group", path + "/trivial"),
                    path + "/trivial/group"),
        parse_space(require(t, "space", path + "/trivial"),
                    path + "/trivial/space"));
  }
  throw SchemaError(path, "unknown example \"" + ex.begin().key() + "\"");
}

}  // namespace

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < err.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at byte " + std::to_string(err.byte) +
                     " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + "): " + err.what());
  }
}

FiniteGroup parse_group(const json& doc, const std::string& path) {
  if (!doc.is_object()) throw SchemaError(path, "expected an object");
  if (doc.contains("cyclic")) {
    const std::size_t n = as_index(doc["cyclic"], path + "/cyclic");
    if (n == 0) throw SchemaError(path + "/cyclic", "order must be positive");
    return FiniteGroup::cyclic(n);
  }
  if (doc.contains("product")) {
    const json& factors = doc["product"];
    if (!factors.is_array() || factors.size() != 2)
      throw SchemaError(path + "/product", "expected two groups");
    return FiniteGroup::direct_product(
        parse_group(factors[0], path + "/product/0"),
        parse_group(factors[1], path + "/product/1"));
  }
  const json& mul = require(doc, "mul", path);
  if (!mul.is_array() || mul.empty())
    throw SchemaError(path + "/mul", "expected a non-empty square table");
  FiniteGroup::Table table;
  for (std::size_t i = 0; i < mul.size(); ++i) {
    const std::string row = path + "/mul/" + std::to_string(i);
    table.push_back(as_points(mul[i], mul.size(), row));
    if (table.back().size() != mul.size())
      throw SchemaError(row, "row length differs from table height");
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    const json& ns = doc["names"];
    if (!ns.is_array() || ns.size() != mul.size())
      throw SchemaError(path + "/names", "expected one name per element");
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (!ns[i].is_string())
        throw SchemaError(path + "/names/" + std::to_string(i),
                          "expected a string");
      names.push_back(ns[i].get<std::string>());
    }
  }
  return FiniteGroup::from_table(std::move(names), std::move(table));
}

FiniteSpace parse_space(const json& doc, const std::string& path) {
  if (!doc.is_object()) throw SchemaError(path, "expected an object");
  if (doc.contains("discrete"))
    return FiniteSpace::discrete(as_index(doc["discrete"], path + "/discrete"));
  if (doc.contains("indiscrete"))
    return FiniteSpace::indiscrete(
        as_index(doc["indiscrete"], path + "/indiscrete"));
  if (doc.contains("sierpinski")) {
    if (doc["sierpinski"] != true)
      throw SchemaError(path + "/sierpinski", "expected true");
    return FiniteSpace::sierpinski();
  }
  const std::size_t n = as_index(require(doc, "points", path), path + "/points");
  std::vector<std::vector<std::size_t>> subbase;
  if (doc.contains("subbase")) {
    const json& sb = doc["subbase"];
    if (!sb.is_array())
      throw SchemaError(path + "/subbase", "expected an array of sets");
    for (std::size_t i = 0; i < sb.size(); ++i)
      subbase.push_back(
          as_points(sb[i], n, path + "/subbase/" + std::to_string(i)));
  }
  return FiniteSpace::from_subbase(n, subbase);
}

PartialAction parse_action(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  if (doc.contains("example")) return parse_example(doc["example"]);

  FiniteGroup group = parse_group(require(doc, "group", ""));
  FiniteSpace space = parse_space(require(doc, "space", ""));
  const std::size_t n = space.size();

  std::vector<std::optional<PartialBijection>> maps(group.order());
  if (doc.contains("maps")) {
    const json& ms = doc["maps"];
    if (!ms.is_object()) throw SchemaError("/maps", "expected an object");
    for (const auto& [key, entry] : ms.items()) {
      const std::string at = "/maps/" + escape_pointer(key);
      const Element g = element_by_key(group, key, at);
      if (maps[g])
        throw SchemaError(at, "element " + group.name(g) + " given twice");
      const json& table = require(entry, "map", at);
      if (!table.is_object())
        throw SchemaError(at + "/map", "expected an object point -> point");
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      PointSet keys(n);
      for (const auto& [from, to] : table.items()) {
        const std::string pat = at + "/map/" + escape_pointer(from);
        const std::size_t x = as_index(from, pat);
        const std::size_t y = as_index(to, pat);
        if (x >= n || y >= n)
          throw SchemaError(pat, "point out of range");
        pairs.emplace_back(x, y);
        keys.set(x);
      }
      if (entry.contains("domain")) {
        const auto dom = as_points(entry["domain"], n, at + "/domain");
        if (make_set(n, dom) != keys)
          throw SchemaError(at + "/domain", "domain differs from map keys");
      }
      try {
        maps[g] = PartialBijection::from_pairs(n, pairs);
      } catch (const Error& err) {
        throw SchemaError(at, err.what());
      }
    }
  }
  std::vector<PartialBijection> out;
  out.reserve(group.order());
  for (Element g = 0; g < group.order(); ++g) {
    if (maps[g])
      out.push_back(std::move(*maps[g]));
    else if (g == group.identity())
      out.push_back(PartialBijection::identity(space.full_set()));
    else
      out.push_back(PartialBijection::empty(n));
  }
  return PartialAction(std::move(group), std::move(space), std::move(out));
}

json serialize_group(const FiniteGroup& group) {
  return json{{"names", group.names()}, {"mul", group.table()}};
}

json serialize_space(const FiniteSpace& space) {
  json subbase = json::array();
  for (const PointSet& u : minimal_base(space)) subbase.push_back(members(u));
  return json{{"points", space.size()}, {"subbase", subbase}};
}

json serialize_action(const PartialAction& action) {
  const FiniteGroup& G = action.group();
  json maps = json::object();
  for (Element g = 0; g < G.order(); ++g) {
    if (g == G.identity() && action.map(g) ==
                                 PartialBijection::identity(
                                     action.space().full_set()))
      continue;
    json table = json::object();
    for (std::size_t x : members(action.domain(g)))
      table[std::to_string(x)] = action.act(g, x);
    maps[G.name(g)] =
        json{{"domain", members(action.domain(g))}, {"map", table}};
  }
  return json{{"group", serialize_group(G)},
              {"space", serialize_space(action.space())},
              {"maps", maps}};
}

PartialAction sierpinski_z2() {
  const FiniteSpace s = FiniteSpace::sierpinski();
  std::vector<PartialBijection> maps{
      PartialBijection::identity(s.full_set()),
      PartialBijection::from_pairs(2, {{1, 1}})};
  return PartialAction(FiniteGroup::cyclic(2), s, std::move(maps));
}

std::string digest(const json& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace envact::cli
