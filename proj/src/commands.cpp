#include "pglob/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pglob/fintop.hpp"
#include "pglob/metglob.hpp"

namespace pglob {

using nlohmann::json;

json Report::to_json() const {
  return {{"command", command}, {"status", status}, {"exit_code", exit_code}, {"payload", payload}};
}

namespace {

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render(out, value, indent + 1);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
    if (flat) {
      out << pad;
      for (std::size_t i = 0; i < j.size(); ++i) {
        out << (i ? "  " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << "\n";
      return;
    }
    for (const auto& e : j) {
      out << pad << "-\n";
      render(out, e, indent + 1);
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

const PartialAction& need_action(const Manifest& m) {
  if (!m.action) throw InputError("manifest has no presentation or monoid");
  return *m.action;
}

json validation_json(const ValidationReport& r) {
  return {{"valid", r.valid}, {"violations", r.violations}};
}

}  // namespace

std::string render_pretty(const Report& r) {
  std::ostringstream out;
  out << r.command << ": " << r.status << "\n";
  render(out, r.payload, 1);
  return out.str();
}

Report cmd_validate(const Manifest& m) {
  Report r{"validate", "valid"};
  bool ok = true;
  if (m.action) {
    const auto v = validate_presentation(m.action->presentation());
    r.payload["presentation"] = validation_json(v);
    ok = ok && v.valid;
  }
  if (m.space.metric) {
    const auto v = validate_pseudometric(*m.space.metric);
    r.payload["metric"] = validation_json(v.validation);
    r.payload["metric"]["separated"] = v.separated;
    r.payload["metric"]["metric"] = v.metric;
    ok = ok && v.validation.valid;
    if (m.action) {
      const bool ne = check_nonexpansive(*m.action);
      r.payload["nonexpansive"] = ne;
      ok = ok && ne;
    }
  }
  if (m.space.topology) {
    const auto v = validate_topology(*m.space.topology);
    r.payload["topology"] = validation_json(v.validation);
    r.payload["topology"]["t1"] = v.t1;
    ok = ok && v.validation.valid;
    if (m.action && v.validation.valid) {
      const bool cont = is_continuous_action(*m.action);
      r.payload["continuous"] = cont;
      ok = ok && cont;
    }
  }
  if (m.monoid) r.payload["monoid"] = validation_json(validate_monoid_action(*m.monoid));
  if (m.action) r.payload["nowhere_degenerate"] = is_nowhere_degenerate(*m.action);
  if (!ok) {
    r.status = "invalid";
    r.exit_code = kExitCheckFailed;
  }
  return r;
}

Report cmd_confluence(const Manifest& m) {
  const auto& a = need_action(m);
  const auto& p = a.presentation();
  const auto v = validate_presentation(p);
  if (!v.valid) {
    return {"confluence", "precondition_violated", {{"presentation", validation_json(v)}},
            kExitPrecondition};
  }
  const auto report = check_action_confluence(a);
  Report r{"confluence", report.confluent() ? "Confluent" : "NotConfluent"};
  r.payload["critical_pairs"] = critical_pairs(p).size();
  r.payload["words"] = report.words.confluent() ? "Confluent" : "NotConfluent";
  json words = json::array();
  for (const auto& c : report.words.counterexamples) {
    words.push_back({{"peak", p.format(c.peak)},
                     {"reduct1", p.format(c.reduct1)},
                     {"reduct2", p.format(c.reduct2)},
                     {"nf1", p.format(c.nf1)},
                     {"nf2", p.format(c.nf2)}});
  }
  r.payload["word_counterexamples"] = words;
  json mixed = json::array();
  for (const auto& c : report.mixed) {
    const auto& rule = p.rules()[c.rule];
    mixed.push_back({{"rule", p.format(rule.lhs) + " -> " + p.format(rule.rhs)},
                     {"point", a.space().name(c.point)},
                     {"reduct1", format_config(a, c.reduct1)},
                     {"reduct2", format_config(a, c.reduct2)},
                     {"nf1", format_config(a, c.nf1)},
                     {"nf2", format_config(a, c.nf2)}});
  }
  r.payload["mixed_counterexamples"] = mixed;
  if (m.monoid) {
    const auto q = finite_monoid_globalization(*m.monoid);
    const auto& names = q.monoid().names;
    r.payload["classes"] = q.num_classes();
    json triples = json::array();
    for (const auto& t : triple_condition_check(q)) {
      triples.push_back({names[t[0]], names[t[1]], names[t[2]]});
    }
    r.payload["triple_violations"] = triples;
  }
  if (!report.confluent()) r.exit_code = kExitCheckFailed;
  return r;
}

Report cmd_distance(const Manifest& m, const std::string& el1, const std::string& el2,
                    const DistanceOptions& opts) {
  const auto a = ConfluentAction::certify(need_action(m));
  const auto& act = a.action();
  const auto a1 = normal_form(a, parse_config(act, el1));
  const auto a2 = normal_form(a, parse_config(act, el2));
  auto shown = [&](Distance d) {
    return distance_json(opts.cap_infinite && std::isinf(d) ? *opts.cap_infinite : d);
  };

  Report r{"distance", "computed"};
  const auto d = distance(a, a1, a2);
  r.payload["from"] = format_element(act, a1);
  r.payload["to"] = format_element(act, a2);
  r.payload["distance"] = shown(d);
  bool agree = true;
  auto close = [](Distance x, Distance y) {
    return (std::isinf(x) || std::isinf(y)) ? x == y : std::abs(x - y) <= kDistanceTolerance;
  };
  if (opts.oracle) {
    const auto segments = opts.oracle_segments.value_or(2 * (lg(a1) + lg(a2) + 1));
    const auto depth = opts.oracle_depth.value_or(std::max(lg(a1), lg(a2)) + 2);
    const auto o = distance_bruteforce(a, a1, a2, segments, depth);
    r.payload["oracle"] = {{"distance", shown(o)}, {"segments", segments}, {"depth", depth}};
    agree = agree && close(o, d);
  }
  if (opts.group_formula) {
    const auto g = distance_group_formula(a, a1.word, a2.word, a1.point, a2.point);
    r.payload["group_formula"] = shown(g);
    agree = agree && close(g, d);
  }
  if (opts.geodesic) {
    const auto w = geodesic(a, a1, a2);
    if (!w) {
      r.payload["geodesic"] = nullptr;
    } else {
      json segs = json::array();
      for (const auto& s : w->segments) {
        segs.push_back({{"word", act.presentation().format(s.word)},
                        {"from", act.space().name(s.from)},
                        {"to", act.space().name(s.to)},
                        {"length", distance_json((*act.space().metric)(s.from, s.to))},
                        {"pattern", segment_pattern(act, s)}});
      }
      r.payload["geodesic"] = {{"form", to_string(w->form)},
                               {"total", distance_json(w->total)},
                               {"segments", segs}};
      agree = agree && close(w->total, d);
    }
  }
  if (!agree) {
    r.status = "mismatch";
    r.exit_code = kExitCheckFailed;
  }
  return r;
}

Report cmd_truncation(const Manifest& m, std::size_t n, bool distances,
                      std::optional<double> cap) {
  const auto a = ConfluentAction::certify(need_action(m));
  const auto t = enumerate_truncation(a, n);
  Report r{"truncation", "computed"};
  r.payload["bound"] = n;
  r.payload["size"] = t.size();
  json elements = json::array();
  for (const auto& el : t.elements) {
    elements.push_back({{"element", format_element(a.action(), el)}, {"length", lg(el)}});
  }
  r.payload["elements"] = elements;
  if (distances) {
    auto matrix = distance_matrix(a, t.elements);
    if (cap) matrix = cap_infinite(std::move(matrix), *cap);
    r.payload["distances"] = matrix_json(matrix);
  }
  return r;
}

Report cmd_topology(const Manifest& m, bool embedding, bool t1) {
  if (!m.monoid) throw InputError("topology checks need a monoid table");
  if (!m.space.topology) throw InputError("topology checks need a topology on the points");
  const auto& t = *m.space.topology;
  const auto tv = validate_topology(t);
  if (!tv.validation.valid) throw InputError("topology: " + tv.validation.violations.front());
  const auto q = finite_monoid_globalization(*m.monoid);
  const auto ty = globalization_topology(q, t);
  const auto& names = q.monoid().names;

  Report r{"topology", "computed"};
  json classes = json::array();
  for (std::size_t c = 0; c < q.num_classes(); ++c) {
    json mem = json::array();
    for (const auto& [u, x] : q.members(c)) mem.push_back(names[u] + "." + m.space.name(x));
    classes.push_back({{"label", q.label(c)}, {"members", mem}});
  }
  r.payload["classes"] = classes;
  r.payload["open_sets"] = ty.opens().size();
  r.payload["axioms"] = validate_topology(ty).validation.valid;
  json closed_maps = json::array(), open_maps = json::array();
  bool continuous = true;
  for (std::size_t u = 0; u < q.monoid().size(); ++u) {
    continuous = continuous && is_continuous_into_Y(q, t, u);
    if (is_closed_map_into_Y(q, t, u)) closed_maps.push_back(names[u]);
    if (is_open_map_into_Y(q, t, u)) open_maps.push_back(names[u]);
  }
  r.payload["maps_continuous"] = continuous;
  r.payload["closed_maps"] = closed_maps;
  r.payload["open_maps"] = open_maps;
  bool ok = true;
  if (embedding) {
    const auto e = check_embedding(q, t);
    r.payload["embedding"] = {{"pass", e.pass}};
    if (e.missing) r.payload["embedding"]["missing_open"] = format_set(m.space, *e.missing);
    ok = ok && e.pass;
  }
  if (t1) {
    const auto rep = check_T1(q, t);
    r.payload["t1"] = {{"x_t1", rep.x_t1},
                       {"y_t1", rep.y_t1},
                       {"criterion", rep.criterion},
                       {"agree", rep.agree()}};
    ok = ok && rep.agree();
  }
  if (!ok) {
    r.status = "failed";
    r.exit_code = kExitCheckFailed;
  }
  return r;
}

Report cmd_glue(const json& manifest) {
  if (!manifest.is_object() || !manifest.contains("glue")) {
    throw InputError("manifest has no \"glue\" section");
  }
  const auto& g = manifest.at("glue");
  const auto x1 = parse_space(g.at("x1"));
  const auto x2 = parse_space(g.at("x2"));
  if (!x1.metric || !x2.metric) throw InputError("both glued spaces need a metric");
  std::vector<std::pair<PointId, PointId>> ident;
  if (g.contains("identify")) {
    for (const auto& pair : g.at("identify")) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("identify entries are [z1, z2]");
      ident.push_back({x1.id(pair[0].get<std::string>()), x2.id(pair[1].get<std::string>())});
    }
  }
  const auto res = glue(*x1.metric, x1.point_names, *x2.metric, x2.point_names, ident);
  Report r{"glue", "computed"};
  r.payload["points"] = res.names;
  r.payload["metric"] = matrix_json(res.metric.rows());
  return r;
}

Report cmd_homogenize(const Manifest& m, std::size_t n, const std::string& gamma) {
  if (!m.space.metric) throw InputError("homogenization needs a metric");
  std::vector<PartialGenMap> maps;
  if (gamma == "singletons") {
    maps = singleton_maps(m.space.size());
  } else {
    const auto j = read_json(gamma);
    if (!j.is_object() || !j.contains("gamma")) throw InputError("gamma file needs a \"gamma\" list");
    maps = parse_maps(m.space, j.at("gamma"));
  }
  const auto res = homogenize_step(m.space, maps, n);
  const auto& a = res.action.action();
  Report r{"homogenize", res.pass() ? "pass" : "failed"};
  r.payload["generators"] = a.presentation().generator_names();
  r.payload["rules"] = a.presentation().rules().size();
  r.payload["bound"] = n;
  json elements = json::array();
  for (const auto& el : res.truncation.elements) elements.push_back(format_element(a, el));
  r.payload["elements"] = elements;
  r.payload["distances"] = matrix_json(res.distances);
  r.payload["checks"] = {{"extends", res.extends},
                         {"lands_in_truncation", res.lands_in_truncation},
                         {"isometric_on_pairs", res.isometric_on_pairs},
                         {"embedding_isometric", res.embedding_isometric}};
  r.payload["violations"] = res.violations;
  if (!res.pass()) r.exit_code = kExitCheckFailed;
  return r;
}

}  // namespace pglob
