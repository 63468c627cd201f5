#include "pglob/manifest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace pglob {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(where) + " is missing \"" + key + "\"");
  }
  return j.at(key);
}

std::string as_name(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> name_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a list of names");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_name(e, what));
  return out;
}

Word parse_word(const Presentation& p, const json& j) {
  Word w;
  for (const auto& name : name_list(j, "word")) w.push_back(p.id(name));
  return w;
}

PointSet point_set(const Space& s, const json& j) {
  PointSet out(s.size());
  for (const auto& name : name_list(j, "point set")) out.set(s.id(name));
  return out;
}

Distance parse_distance(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  if (!j.is_number()) throw InputError("distances must be numbers or \"inf\"");
  return j.get<double>();
}

// {"dom": [...], "map": {x: y}}; dom may be omitted and is then the key set.
PartialGenMap parse_partial_map(const Space& s, const json& j, const std::string& label) {
  PartialGenMap m(s.size());
  if (!j.is_object()) throw InputError("map of '" + label + "' must be an object");
  if (j.contains("map")) {
    const auto& map = j.at("map");
    if (!map.is_object()) throw InputError("map of '" + label + "' must be an object");
    for (const auto& [from, to] : map.items()) {
      m.image[s.id(from)] = s.id(as_name(to, "image"));
    }
  }
  if (j.contains("dom") && point_set(s, j.at("dom")) != m.dom()) {
    throw InputError("domain of '" + label + "' does not match its map");
  }
  return m;
}

Presentation parse_presentation(const json& j, const json* group) {
  auto generators = name_list(require(j, "generators", "presentation"), "generators");
  // Resolve names against a rule-free presentation first.
  const Presentation names(generators, {});
  std::vector<GenId> precedence;
  if (j.contains("precedence")) {
    for (const auto& name : name_list(j.at("precedence"), "precedence")) {
      precedence.push_back(names.id(name));
    }
  }
  std::vector<std::pair<Word, Word>> rules;
  if (j.contains("rules")) {
    if (!j.at("rules").is_array()) throw InputError("rules must be a list");
    for (const auto& r : j.at("rules")) {
      rules.push_back({parse_word(names, require(r, "lhs", "rule")),
                       parse_word(names, require(r, "rhs", "rule"))});
    }
  }
  std::optional<std::vector<GenId>> inverses;
  if (group) {
    const auto& inv = require(*group, "inverses", "group");
    if (!inv.is_object()) throw InputError("inverses must map generator names to names");
    inverses = std::vector<GenId>(generators.size(), static_cast<GenId>(generators.size()));
    for (const auto& [g, h] : inv.items()) {
      const auto gi = names.id(g);
      const auto hi = names.id(as_name(h, "inverse"));
      (*inverses)[gi] = hi;
      (*inverses)[hi] = gi;
    }
  }
  return Presentation(std::move(generators), std::move(rules), std::move(precedence),
                      std::move(inverses));
}

MonoidAction parse_monoid(const json& j, const Space& space) {
  MonoidAction m;
  m.space = space;
  m.monoid.names = name_list(require(j, "elements", "monoid"), "elements");
  const auto& table = require(j, "table", "monoid");
  if (!table.is_array()) throw InputError("monoid table must be a list of rows");
  for (const auto& row : table) {
    std::vector<std::size_t> out;
    for (const auto& name : name_list(row, "table row")) out.push_back(m.monoid.id(name));
    m.monoid.table.push_back(std::move(out));
  }
  m.monoid.unit = m.monoid.id(as_name(require(j, "unit", "monoid"), "unit"));
  const auto& acts = j.contains("element_action") ? j.at("element_action") : json::object();
  if (!acts.is_object()) throw InputError("element_action must be an object");
  for (const auto& [name, _] : acts.items()) m.monoid.id(name);
  for (std::size_t u = 0; u < m.monoid.size(); ++u) {
    const auto& name = m.monoid.names[u];
    if (acts.contains(name)) {
      m.elements.push_back(parse_partial_map(space, acts.at(name), name));
    } else if (u == m.monoid.unit) {
      PartialGenMap id(space.size());
      for (PointId x = 0; x < space.size(); ++x) id.image[x] = x;
      m.elements.push_back(std::move(id));
    } else {
      m.elements.push_back(PartialGenMap(space.size()));
    }
  }
  const auto report = validate_monoid_action(m);
  if (!report.valid) throw InputError("monoid: " + report.violations.front());
  return m;
}

}  // namespace

Space parse_space(const json& j) {
  Space s;
  s.point_names = name_list(require(j, "points", "space"), "points");
  for (const auto& name : s.point_names) {
    if (name.empty() || name.find_first_of(" \t\n") != std::string::npos) {
      throw InputError("point names must be nonempty and free of whitespace");
    }
  }
  const auto n = s.size();
  if (j.contains("metric")) {
    const auto& rows = j.at("metric");
    if (!rows.is_array() || rows.size() != n) throw InputError("metric must have one row per point");
    std::vector<std::vector<Distance>> m;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw InputError("metric must be square");
      std::vector<Distance> out;
      for (const auto& v : row) out.push_back(parse_distance(v));
      m.push_back(std::move(out));
    }
    s.metric = WeakPseudometric(m);
  }
  if (j.contains("topology")) {
    const auto& opens = require(j.at("topology"), "opens", "topology");
    if (!opens.is_array()) throw InputError("topology opens must be a list of point lists");
    std::vector<PointSet> family;
    for (const auto& o : opens) family.push_back(point_set(s, o));
    s.topology = FiniteTopology(n, std::move(family));
  }
  return s;
}

Manifest parse_manifest(const json& j, std::optional<std::size_t> step_budget) {
  if (!j.is_object()) throw InputError("manifest must be a JSON object");
  Manifest m;
  m.raw = j;
  m.space = parse_space(require(j, "space", "manifest"));
  if (j.contains("monoid")) m.monoid = parse_monoid(j.at("monoid"), m.space);

  if (j.contains("presentation")) {
    auto p = parse_presentation(j.at("presentation"),
                                j.contains("group") ? &j.at("group") : nullptr);
    if (step_budget) p = p.with_step_budget(*step_budget);
    std::vector<PartialGenMap> gens(p.num_generators(), PartialGenMap(m.space.size()));
    if (j.contains("action")) {
      const auto& acts = j.at("action");
      if (!acts.is_object()) throw InputError("action must map generator names to maps");
      for (const auto& [name, spec] : acts.items()) gens[p.id(name)] = parse_partial_map(m.space, spec, name);
    }
    m.action = PartialAction(std::move(p), m.space, std::move(gens));
  } else if (m.monoid) {
    auto a = to_partial_action(*m.monoid);
    if (step_budget) {
      a = PartialAction(a.presentation().with_step_budget(*step_budget), a.space(), a.gens());
    }
    m.action = std::move(a);
  } else if (j.contains("action")) {
    throw InputError("an action needs a presentation");
  }
  return m;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Manifest load_manifest(const std::string& path, std::optional<std::size_t> step_budget) {
  return parse_manifest(read_json(path), step_budget);
}

Config parse_config(const PartialAction& a, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  if (tokens.empty()) throw InputError("element needs at least a point name");
  Config c;
  c.point = a.space().id(tokens.back());
  tokens.pop_back();
  for (const auto& t : tokens) {
    if (t != "e") c.word.push_back(a.presentation().id(t));
  }
  return c;
}

std::string format_word(const Presentation& p, const Word& w) { return p.format(w); }

std::string format_config(const PartialAction& a, const Config& c) {
  if (c.word.empty()) return a.space().name(c.point);
  return a.presentation().format(c.word) + " " + a.space().name(c.point);
}

std::string format_element(const PartialAction& a, const NormalElement& el) {
  return format_config(a, {el.word, el.point});
}

std::string format_set(const Space& s, const PointSet& set) {
  std::string out = "{";
  bool first = true;
  for (auto x : members(set)) {
    if (!first) out += ",";
    out += s.name(x);
    first = false;
  }
  return out + "}";
}

json distance_json(Distance d) {
  if (std::isinf(d)) return "inf";
  return d;
}

json matrix_json(const std::vector<std::vector<Distance>>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (auto v : row) r.push_back(distance_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PartialGenMap> parse_maps(const Space& space, const json& j) {
  if (!j.is_array()) throw InputError("gamma must be a list of maps");
  std::vector<PartialGenMap> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_partial_map(space, json{{"map", j[i]}}, "gamma " + std::to_string(i)));
  }
  return out;
}

}  // namespace pglob
