#pragma once

// Fixture loading and random instance generators shared by the unit and
// acceptance suites.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pglob/manifest.hpp"
#include "pglob/glob.hpp"
#include "pglob/metglob.hpp"
#include "pglob/topology.hpp"

namespace pglob::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(PGLOB_FIXTURE_DIR) + "/" + name + ".json";
}

inline Manifest fixture(const std::string& name) { return load_manifest(fixture_path(name)); }

inline ConfluentAction confluent_fixture(const std::string& name) {
  return ConfluentAction::certify(*fixture(name).action);
}

/// Fixtures whose presented action is confluent and carries a metric.
inline const std::vector<std::string>& metric_fixtures() {
  static const std::vector<std::string> names = {
      "dihedral", "free_group", "free_product", "product", "singletons2", "singletons3",
      "z_gluing", "z_gluing_group", "degenerate", "category_groupoid"};
  return names;
}

inline const std::vector<std::string>& group_fixtures() {
  static const std::vector<std::string> names = {"dihedral", "free_group", "free_product",
                                                 "z_gluing_group"};
  return names;
}

inline NormalElement element(const ConfluentAction& a, const std::string& text) {
  return normal_form(a, parse_config(a.action(), text));
}

inline std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

/// Shortest-path metric of a random complete graph with integer weights.
inline WeakPseudometric random_metric(std::mt19937& rng, std::size_t n, int max_weight = 5) {
  std::uniform_int_distribution<int> w(1, max_weight);
  std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = w(rng);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return WeakPseudometric(d);
}

inline Space random_space(std::mt19937& rng, std::size_t n) {
  Space s;
  s.point_names = point_names(n);
  s.metric = random_metric(rng, n);
  return s;
}

inline bool is_isometry(const WeakPseudometric& d, const PartialGenMap& f) {
  const auto dom = members(f.dom());
  for (auto x : dom) {
    for (auto y : dom) {
      if (d(*f(x), *f(y)) != d(x, y) || (x != y && *f(x) == *f(y))) return false;
    }
  }
  return true;
}

inline bool is_nonexpansive_map(const WeakPseudometric& d, const PartialGenMap& f) {
  const auto dom = members(f.dom());
  for (auto x : dom) {
    for (auto y : dom) {
      if (d(*f(x), *f(y)) > d(x, y)) return false;
    }
  }
  return true;
}

/// A partial map with random domain, kept only if `accept` holds; falls back
/// to a single-point domain, which satisfies both predicates.
template <class Accept>
PartialGenMap random_partial_map(std::mt19937& rng, std::size_t n, bool injective,
                                 Accept&& accept) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int attempt = 0; attempt < 20; ++attempt) {
    PartialGenMap f(n);
    std::vector<PointId> targets(n);
    for (std::size_t i = 0; i < n; ++i) targets[i] = static_cast<PointId>(i);
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t x = 0; x < n; ++x) {
      if (rng() % 2 == 0) continue;
      f.image[x] = injective ? targets[x] : static_cast<PointId>(pick(rng));
    }
    if (accept(f)) return f;
  }
  PartialGenMap f(n);
  f.image[pick(rng)] = static_cast<PointId>(pick(rng));
  return f;
}

/// Free group on `gens` letters acting by random partial isometries.
inline ConfluentAction random_free_group_action(std::mt19937& rng, const Space& space,
                                                std::size_t gens) {
  std::vector<std::string> names;
  std::vector<GenId> inverses;
  std::vector<std::pair<Word, Word>> rules;
  std::vector<PartialGenMap> maps;
  for (std::size_t i = 0; i < gens; ++i) {
    names.push_back("s" + std::to_string(i));
    names.push_back("S" + std::to_string(i));
    const auto g = static_cast<GenId>(2 * i);
    inverses.push_back(g + 1);
    inverses.push_back(g);
    rules.push_back({{g, g + 1}, {}});
    rules.push_back({{g + 1, g}, {}});
    auto f = random_partial_map(rng, space.size(), true,
                                [&](const PartialGenMap& m) { return is_isometry(*space.metric, m); });
    PartialGenMap inv(space.size());
    for (auto x : members(f.dom())) inv.image[*f(x)] = x;
    maps.push_back(f);
    maps.push_back(inv);
  }
  return ConfluentAction::certify(
      PartialAction(Presentation(names, rules, {}, inverses), space, maps));
}

/// Free monoid acting by random non-expansive partial maps.
inline ConfluentAction random_free_monoid_action(std::mt19937& rng, const Space& space,
                                                 std::size_t gens) {
  std::vector<std::string> names;
  std::vector<PartialGenMap> maps;
  for (std::size_t i = 0; i < gens; ++i) {
    names.push_back("f" + std::to_string(i));
    maps.push_back(random_partial_map(rng, space.size(), false, [&](const PartialGenMap& m) {
      return is_nonexpansive_map(*space.metric, m);
    }));
  }
  return ConfluentAction::certify(PartialAction(Presentation(names, {}), space, maps));
}

/// Category action generated by random partial isometries.
inline ConfluentAction random_category_action(std::mt19937& rng, const Space& space,
                                              std::size_t gens) {
  std::vector<PartialGenMap> gamma;
  for (std::size_t i = 0; i < gens; ++i) {
    gamma.push_back(random_partial_map(rng, space.size(), true, [&](const PartialGenMap& m) {
      return m.dom().any() && is_isometry(*space.metric, m);
    }));
  }
  return homogenize_step(space, gamma, 1).action;
}

// A monoid of partial maps generated by `gens` under composition, or
// nullopt when it grows past `cap` elements.
inline std::optional<MonoidAction> transformation_monoid(const Space& space,
                                                         const std::vector<PartialGenMap>& gens,
                                                         std::size_t cap) {
  const auto n = space.size();
  PartialGenMap id(n);
  for (PointId x = 0; x < n; ++x) id.image[x] = x;
  std::vector<PartialGenMap> elems{id};
  auto index = [&](const PartialGenMap& f) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] == f) return i;
    }
    return std::nullopt;
  };
  auto compose = [&](const PartialGenMap& f, const PartialGenMap& g) {
    PartialGenMap h(n);
    for (PointId x = 0; x < n; ++x) {
      if (g(x) && f(*g(x))) h.image[x] = f(*g(x));
    }
    return h;
  };
  for (const auto& g : gens) {
    if (!index(g)) elems.push_back(g);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const auto& h : {compose(elems[i], elems[j]), compose(elems[j], elems[i])}) {
        if (!index(h)) elems.push_back(h);
        if (elems.size() > cap) return std::nullopt;
      }
    }
  }
  MonoidAction m;
  m.space = space;
  m.elements = elems;
  m.monoid.unit = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) m.monoid.names.push_back("m" + std::to_string(i));
  for (const auto& f : elems) {
    std::vector<std::size_t> row;
    for (const auto& g : elems) row.push_back(*index(compose(f, g)));
    m.monoid.table.push_back(row);
  }
  return m;
}

inline FiniteTopology random_topology(std::mt19937& rng, std::size_t n) {
  std::vector<PointSet> opens{PointSet(n), full_set(n)};
  for (int i = 0; i < 3; ++i) {
    PointSet s(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (rng() % 2) s.set(x);
    }
    opens.push_back(s);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const auto size = opens.size();
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        for (const auto& s : {opens[i] | opens[j], opens[i] & opens[j]}) {
          if (std::find(opens.begin(), opens.end(), s) == opens.end()) {
            opens.push_back(s);
            grew = true;
          }
        }
      }
    }
  }
  return FiniteTopology(n, opens);
}

}  // namespace pglob::testing
