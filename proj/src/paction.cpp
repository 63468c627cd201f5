#include "pglob/paction.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <unordered_set>

namespace pglob {

PointId Space::id(std::string_view name) const {
  for (PointId x = 0; x < point_names.size(); ++x) {
    if (point_names[x] == name) return x;
  }
  throw InputError("unknown point '" + std::string(name) + "'");
}

PointSet PartialGenMap::dom() const {
  PointSet out(image.size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x]) out.set(x);
  }
  return out;
}

PartialAction::PartialAction(Presentation presentation, Space space,
                             std::vector<PartialGenMap> gens)
    : presentation_(std::move(presentation)), space_(std::move(space)), gens_(std::move(gens)) {
  const auto n = space_.size();
  if (gens_.size() != presentation_.num_generators()) {
    throw InputError("every generator needs exactly one partial map");
  }
  for (GenId g = 0; g < gens_.size(); ++g) {
    if (gens_[g].image.size() != n) {
      throw InputError("map of '" + presentation_.name(g) + "' does not cover the point set");
    }
    for (const auto& y : gens_[g].image) {
      if (y && *y >= n) {
        throw InputError("map of '" + presentation_.name(g) + "' leaves the point set");
      }
    }
  }
  if (space_.metric && space_.metric->size() != n) {
    throw InputError("metric size does not match the point set");
  }
  if (space_.topology && space_.topology->size() != n) {
    throw InputError("topology size does not match the point set");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : space_.point_names) {
    if (!seen.insert(name).second) throw InputError("duplicate point name '" + name + "'");
  }
}

std::optional<PointId> apply_gen(const PartialAction& a, GenId g, PointId x) {
  return a.gen(g)(x);
}

std::vector<Config> config_reducts(const PartialAction& a, const Config& c) {
  std::set<Config> out;
  for (auto& w : one_step_reducts(a.presentation(), c.word)) out.insert({std::move(w), c.point});
  if (!c.word.empty()) {
    if (auto y = apply_gen(a, c.word.back(), c.point)) {
      out.insert({imprefix(c.word), *y});
    }
  }
  return {out.begin(), out.end()};
}

Config normalize_config(const PartialAction& a, Config c) {
  const auto& p = a.presentation();
  require_terminating(p);
  const auto budget = p.step_budget();
  const auto window = p.max_lhs_length();
  std::size_t steps = 0;
  std::size_t from = 0;
  for (;;) {
    if (!c.word.empty()) {
      if (auto y = apply_gen(a, c.word.back(), c.point)) {
        c.word.pop_back();
        c.point = *y;
      } else if (auto pos = rewrite_leftmost(p, c.word, std::min(from, c.word.size()))) {
        from = *pos + 1 >= window ? *pos + 1 - window : 0;
      } else {
        break;
      }
    } else {
      break;
    }
    if (budget && ++steps > *budget) {
      throw StepBudgetExceeded("normalization exceeded the step budget of " +
                               std::to_string(*budget));
    }
  }
  return c;
}

bool is_normal_config(const PartialAction& a, const Config& c) {
  if (!is_normal_word(a.presentation(), c.word)) return false;
  return c.word.empty() || !a.gen(c.word.back()).defined_at(c.point);
}

ActionConfluenceReport check_action_confluence(const PartialAction& a) {
  ActionConfluenceReport report;
  const auto& p = a.presentation();
  report.words = check_word_confluence(p);
  for (const auto& r : p.rules()) {
    if (r.lhs.empty()) continue;
    const auto& g1 = a.gen(r.lhs.back());
    for (PointId x = 0; x < a.num_points(); ++x) {
      if (!g1.defined_at(x)) continue;
      Config c1{r.rhs, x};
      Config c2{imprefix(r.lhs), *g1(x)};
      auto nf1 = normalize_config(a, c1);
      auto nf2 = normalize_config(a, c2);
      if (nf1 != nf2) {
        report.mixed.push_back({r.index, x, std::move(c1), std::move(c2), std::move(nf1),
                                std::move(nf2)});
      }
    }
  }
  if (!report.words.confluent() || !report.mixed.empty()) {
    report.status = ConfluenceStatus::NotConfluent;
  }
  return report;
}

ConfluentAction ConfluentAction::certify(PartialAction a) {
  const auto validation = validate_presentation(a.presentation());
  if (!validation.valid) {
    throw PreconditionError("presentation is invalid: " + validation.violations.front());
  }
  if (!check_action_confluence(a).confluent()) {
    throw PreconditionError("partial action is not confluent");
  }
  return ConfluentAction(std::move(a));
}

std::optional<PointId> act(const ConfluentAction& a, const Word& u, PointId x) {
  auto nf = normalize_config(a.action(), {u, x});
  if (!nf.word.empty()) return std::nullopt;
  return nf.point;
}

PointSet dom_of(const ConfluentAction& a, const Word& u) {
  if (!is_normal_word(a.presentation(), u)) throw PreconditionError("word is not normal");
  PointSet d = full_set(a.num_points());
  for (auto g : u) {
    const auto& map = a.action().gen(g);
    PointSet next(a.num_points());
    for (PointId x = 0; x < a.num_points(); ++x) {
      if (auto y = map(x); y && d.test(*y)) next.set(x);
    }
    d = std::move(next);
  }
  return d;
}

PointSet r_set(const PartialAction& a, const Word& u) {
  if (!is_normal_word(a.presentation(), u)) throw PreconditionError("word is not normal");
  if (u.empty()) return full_set(a.num_points());
  return ~a.gen(u.back()).dom();
}

bool is_nowhere_degenerate(const PartialAction& a) {
  return std::all_of(a.gens().begin(), a.gens().end(),
                     [](const PartialGenMap& g) { return g.dom().any(); });
}

namespace {

bool zero_saturated(const WeakPseudometric& d, const PointSet& s) {
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x)) {
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (!s.test(y) && d(x, y) == 0) return false;
    }
  }
  return true;
}

template <class Pred>
bool every_domain(const PartialAction& a, Pred topological) {
  const auto& space = a.space();
  if (!space.topology && !space.metric) {
    throw PreconditionError("closed/open checks need a topology or a metric on the points");
  }
  for (const auto& g : a.gens()) {
    const auto d = g.dom();
    const bool ok = space.topology ? topological(*space.topology, d)
                                   : zero_saturated(*space.metric, d);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_closed_action(const PartialAction& a) {
  return every_domain(a, [](const FiniteTopology& t, const PointSet& d) { return t.is_closed(d); });
}

bool is_open_action(const PartialAction& a) {
  return every_domain(a, [](const FiniteTopology& t, const PointSet& d) { return t.is_open(d); });
}

std::string morphism_name(const Space& space, const PartialGenMap& map) {
  const auto dom = members(map.dom());
  if (dom.size() == 1) return "(" + space.name(*map(dom[0])) + space.name(dom[0]) + ")";
  std::string out = "[";
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (i) out += ',';
    out += space.name(dom[i]) + ">" + space.name(*map(dom[i]));
  }
  return out + "]";
}

PartialAction from_category(const Space& space, const std::vector<Morphism>& morphisms) {
  const auto n = space.size();
  std::vector<std::string> names;
  std::vector<PartialGenMap> gens;
  for (const auto& m : morphisms) {
    if (m.source.size() != n || m.target.size() != n || m.map.image.size() != n) {
      throw InputError("morphism '" + m.name + "' does not match the point set");
    }
    bool identity = m.source == m.target;
    for (PointId x = 0; x < n; ++x) {
      if (m.map.defined_at(x) != m.source.test(x)) {
        throw InputError("morphism '" + m.name + "' is not defined exactly on its source");
      }
      if (auto y = m.map(x)) {
        if (!m.target.test(*y)) throw InputError("morphism '" + m.name + "' leaves its target");
        identity = identity && *y == x;
      }
    }
    if (identity) throw InputError("identity morphism '" + m.name + "' must be left out");
    names.push_back(m.name);
    gens.push_back(m.map);
  }

  std::vector<std::pair<Word, Word>> rules;
  for (GenId f = 0; f < morphisms.size(); ++f) {
    for (GenId g = 0; g < morphisms.size(); ++g) {
      const auto& mf = morphisms[f];
      const auto& mg = morphisms[g];
      if (mg.target != mf.source) continue;
      PartialGenMap composite(n);
      bool identity = mg.source == mf.target;
      for (PointId x = 0; x < n; ++x) {
        if (auto y = mg.map(x)) {
          composite.image[x] = mf.map(*y);
          identity = identity && *composite.image[x] == x;
        }
      }
      if (identity) {
        rules.push_back({{f, g}, {}});
        continue;
      }
      std::optional<GenId> found;
      for (GenId h = 0; h < morphisms.size() && !found; ++h) {
        const auto& mh = morphisms[h];
        if (mh.source == mg.source && mh.target == mf.target && mh.map == composite) found = h;
      }
      if (!found) {
        throw InputError("composite " + mf.name + " o " + mg.name + " is missing");
      }
      rules.push_back({{f, g}, {*found}});
    }
  }
  return PartialAction(Presentation(std::move(names), std::move(rules)), space, std::move(gens));
}

PartialAction singleton_homogeneous_action(const Space& space) {
  const auto n = space.size();
  if (n < 2) throw PreconditionError("singleton maps need at least two points");
  std::vector<Morphism> morphisms;
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (x == y) continue;
      Morphism m{"", PointSet(n), PointSet(n), PartialGenMap(n)};
      m.source.set(y);
      m.target.set(x);
      m.map.image[y] = x;
      m.name = morphism_name(space, m.map);
      morphisms.push_back(std::move(m));
    }
  }
  return from_category(space, morphisms);
}

std::vector<std::array<Word, 3>> triple_condition_check(const ConfluentAction& a,
                                                        std::size_t bound) {
  const auto words = normal_words(a.presentation(), bound);
  std::vector<std::set<Config>> orbit;
  orbit.reserve(words.size());
  for (const auto& u : words) {
    std::set<Config> s;
    for (PointId x = 0; x < a.num_points(); ++x) s.insert(normalize_config(a.action(), {u, x}));
    orbit.push_back(std::move(s));
  }
  auto meet_of = [&](std::size_t i, std::size_t j) {
    std::set<Config> out;
    std::set_intersection(orbit[i].begin(), orbit[i].end(), orbit[j].begin(), orbit[j].end(),
                          std::inserter(out, out.end()));
    return out;
  };
  auto covered = [&](const std::set<Config>& need) {
    for (const auto& o : orbit) {
      if (std::includes(o.begin(), o.end(), need.begin(), need.end())) return true;
    }
    return false;
  };

  std::vector<std::array<Word, 3>> out;
  const auto k = words.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        auto need = meet_of(i, j);
        need.merge(meet_of(j, l));
        need.merge(meet_of(l, i));
        if (!covered(need)) out.push_back({words[i], words[j], words[l]});
      }
    }
  }
  return out;
}

std::size_t FiniteMonoid::id(std::string_view name) const {
  for (std::size_t u = 0; u < names.size(); ++u) {
    if (names[u] == name) return u;
  }
  throw InputError("unknown monoid element '" + std::string(name) + "'");
}

ValidationReport validate_monoid(const FiniteMonoid& m) {
  ValidationReport report;
  const auto n = m.size();
  if (n == 0) {
    report.fail("monoid has no elements");
    return report;
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : m.names) {
    if (!seen.insert(name).second) report.fail("duplicate element name '" + name + "'");
  }
  if (m.unit >= n) report.fail("unit is not an element");
  if (m.table.size() != n) {
    report.fail("multiplication table has the wrong number of rows");
    return report;
  }
  for (const auto& row : m.table) {
    if (row.size() != n) {
      report.fail("multiplication table is not square");
      return report;
    }
    for (auto p : row) {
      if (p >= n) {
        report.fail("multiplication table leaves the element set");
        return report;
      }
    }
  }
  if (!report.valid) return report;
  for (std::size_t u = 0; u < n; ++u) {
    if (m.mul(m.unit, u) != u || m.mul(u, m.unit) != u) {
      report.fail("unit law fails at '" + m.names[u] + "'");
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (m.mul(m.mul(u, v), w) != m.mul(u, m.mul(v, w))) {
          report.fail("associativity fails at (" + m.names[u] + "," + m.names[v] + "," +
                      m.names[w] + ")");
          return report;
        }
      }
    }
  }
  return report;
}

ValidationReport validate_monoid_action(const MonoidAction& m) {
  ValidationReport report = validate_monoid(m.monoid);
  if (!report.valid) return report;
  const auto n = m.space.size();
  if (m.elements.size() != m.monoid.size()) {
    report.fail("every monoid element needs exactly one partial map");
    return report;
  }
  for (std::size_t u = 0; u < m.elements.size(); ++u) {
    const auto& img = m.elements[u].image;
    if (img.size() != n ||
        std::any_of(img.begin(), img.end(), [&](const auto& y) { return y && *y >= n; })) {
      report.fail("map of '" + m.monoid.names[u] + "' does not fit the point set");
      return report;
    }
  }
  for (PointId x = 0; x < n; ++x) {
    if (m.act(m.monoid.unit, x) != x) {
      report.fail("unit does not fix '" + m.space.name(x) + "'");
    }
  }
  for (std::size_t u = 0; u < m.monoid.size(); ++u) {
    for (std::size_t v = 0; v < m.monoid.size(); ++v) {
      for (PointId x = 0; x < n; ++x) {
        const auto vx = m.act(v, x);
        if (!vx) continue;
        if (m.act(m.monoid.mul(u, v), x) != m.act(u, *vx)) {
          report.fail("(" + m.monoid.names[u] + m.monoid.names[v] + ")." + m.space.name(x) +
                      " differs from " + m.monoid.names[u] + ".(" + m.monoid.names[v] + "." +
                      m.space.name(x) + ")");
        }
      }
    }
  }
  return report;
}

namespace {

// Generator ids of the non-unit elements, in element order.
std::vector<std::optional<GenId>> generator_ids(const FiniteMonoid& m) {
  std::vector<std::optional<GenId>> out(m.size());
  GenId next = 0;
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (u != m.unit) out[u] = next++;
  }
  return out;
}

}  // namespace

Presentation trivial_presentation(const FiniteMonoid& m) {
  const auto ids = generator_ids(m);
  std::vector<std::string> names;
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (ids[u]) names.push_back(m.names[u]);
  }
  std::vector<std::pair<Word, Word>> rules;
  for (std::size_t u = 0; u < m.size(); ++u) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (!ids[u] || !ids[v]) continue;
      const auto p = m.mul(u, v);
      rules.push_back({{*ids[u], *ids[v]}, ids[p] ? Word{*ids[p]} : Word{}});
    }
  }
  return Presentation(std::move(names), std::move(rules));
}

PartialAction to_partial_action(const MonoidAction& m) {
  std::vector<PartialGenMap> gens;
  for (std::size_t u = 0; u < m.monoid.size(); ++u) {
    if (u != m.monoid.unit) gens.push_back(m.elements[u]);
  }
  return PartialAction(trivial_presentation(m.monoid), m.space, std::move(gens));
}

}  // namespace pglob
