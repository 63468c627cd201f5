#include "pglob/metglob.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pglob {

bool check_nonexpansive(const PartialAction& a) {
  if (!a.space().metric) throw PreconditionError("non-expansiveness needs a metric");
  const auto& d = *a.space().metric;
  for (const auto& g : a.gens()) {
    const auto dom = members(g.dom());
    for (auto x : dom) {
      for (auto y : dom) {
        if (d(*g(x), *g(y)) > d(x, y) + kDistanceTolerance) return false;
      }
    }
  }
  return true;
}

void require_metric_action(const PartialAction& a) {
  if (!check_nonexpansive(a)) throw PreconditionError("partial action is not non-expansive");
}

namespace {

bool same_distance(Distance a, Distance b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= kDistanceTolerance;
}

std::string format_element(const Presentation& p, const Space& s, const NormalElement& el) {
  if (el.word.empty()) return s.name(el.point);
  return p.format(el.word) + " " + s.name(el.point);
}

// Copies (w, z) of X for w among the prefixes of two words, sorted
// shortlex, so that node ids order nodes by (word, point).
class PrefixGraph {
 public:
  PrefixGraph(const PartialAction& a, const Word& w1, const Word& w2)
      : a_(a), d_(*a.space().metric), n_(a.num_points()) {
    for (const Word* w : {&w1, &w2}) {
      for (std::size_t k = 0; k <= w->size(); ++k) prefixes_.emplace_back(w->begin(), w->begin() + k);
    }
    const auto& p = a.presentation();
    std::sort(prefixes_.begin(), prefixes_.end(),
              [&](const Word& u, const Word& v) { return p.shortlex_less(u, v); });
    prefixes_.erase(std::unique(prefixes_.begin(), prefixes_.end()), prefixes_.end());
    parent_.assign(prefixes_.size(), std::nullopt);
    children_.resize(prefixes_.size());
    for (std::size_t i = 0; i < prefixes_.size(); ++i) {
      if (prefixes_[i].empty()) continue;
      const auto up = prefix_index(imprefix(prefixes_[i]));
      parent_[i] = up;
      children_[up].push_back(i);
    }
  }

  std::size_t size() const { return prefixes_.size() * n_; }
  std::size_t node(const Word& w, PointId z) const { return prefix_index(w) * n_ + z; }
  const Word& word(std::size_t v) const { return prefixes_[v / n_]; }
  PointId point(std::size_t v) const { return static_cast<PointId>(v % n_); }
  bool same_copy(std::size_t u, std::size_t v) const { return u / n_ == v / n_; }

  template <class F>
  void for_each_neighbour(std::size_t v, F&& f) const {
    const auto i = v / n_;
    const auto z = point(v);
    for (PointId y = 0; y < n_; ++y) {
      if (y != z && !std::isinf(d_(z, y))) f(i * n_ + y, d_(z, y));
    }
    if (parent_[i]) {
      if (auto y = a_.gen(prefixes_[i].back())(z)) f(*parent_[i] * n_ + *y, 0.0);
    }
    for (auto c : children_[i]) {
      const auto& g = a_.gen(prefixes_[c].back());
      for (PointId y = 0; y < n_; ++y) {
        if (g(y) == z) f(c * n_ + y, 0.0);
      }
    }
  }

 private:
  std::size_t prefix_index(const Word& w) const {
    for (std::size_t i = 0; i < prefixes_.size(); ++i) {
      if (prefixes_[i] == w) return i;
    }
    throw Error("prefix not in graph");
  }

  const PartialAction& a_;
  const WeakPseudometric& d_;
  std::size_t n_;
  std::vector<Word> prefixes_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
};

struct ShortestPath {
  Distance distance = kInfinity;
  std::vector<std::size_t> nodes;  ///< source to target; empty if unreachable
};

// Dense Dijkstra. Ties among tentative nodes go to the smaller id; the
// predecessor of a node is its smallest settled neighbour on a shortest path.
ShortestPath shortest_path(const PrefixGraph& g, std::size_t source, std::size_t target) {
  constexpr auto none = static_cast<std::size_t>(-1);
  const auto size = g.size();
  std::vector<Distance> dist(size, kInfinity);
  std::vector<char> settled(size, 0);
  std::vector<std::size_t> pred(size, none);
  dist[source] = 0;
  for (;;) {
    std::size_t v = none;
    for (std::size_t i = 0; i < size; ++i) {
      if (!settled[i] && !std::isinf(dist[i]) && (v == none || dist[i] < dist[v])) v = i;
    }
    if (v == none) break;
    settled[v] = 1;
    if (v != source) {
      g.for_each_neighbour(v, [&](std::size_t u, Distance w) {
        if (settled[u] && u != v && dist[u] + w == dist[v] && (pred[v] == none || u < pred[v])) {
          pred[v] = u;
        }
      });
    }
    if (v == target) break;
    g.for_each_neighbour(v, [&](std::size_t u, Distance w) {
      if (!settled[u] && dist[v] + w < dist[u]) dist[u] = dist[v] + w;
    });
  }

  ShortestPath out;
  out.distance = dist[target];
  if (std::isinf(out.distance)) return out;
  for (auto v = target; v != none; v = pred[v]) out.nodes.push_back(v);
  std::reverse(out.nodes.begin(), out.nodes.end());
  return out;
}

}  // namespace

Distance distance(const ConfluentAction& a, const NormalElement& el1, const NormalElement& el2) {
  require_metric_action(a.action());
  require_normal(a, el1);
  require_normal(a, el2);
  if (el1 == el2) return 0;
  const PrefixGraph g(a.action(), el1.word, el2.word);
  return shortest_path(g, g.node(el1.word, el1.point), g.node(el2.word, el2.point)).distance;
}

std::vector<std::vector<Distance>> distance_matrix(const ConfluentAction& a,
                                                   const std::vector<NormalElement>& elements) {
  const auto k = elements.size();
  std::vector<std::vector<Distance>> out(k, std::vector<Distance>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      out[i][j] = out[j][i] = distance(a, elements[i], elements[j]);
    }
  }
  return out;
}

BruteForceOracle::BruteForceOracle(const ConfluentAction& a, std::size_t depth)
    : truncation_(enumerate_truncation(a, depth)) {
  require_metric_action(a.action());
  const auto& d = *a.space().metric;
  const auto n = a.num_points();
  for (const auto& u : normal_words(a.presentation(), depth)) {
    std::vector<std::size_t> at(n);
    for (PointId x = 0; x < n; ++x) at[x] = *truncation_.find(normal_form(a, {u, x}));
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        if (x != y && at[x] != at[y] && !std::isinf(d(x, y))) {
          edges_.push_back({at[x], at[y], d(x, y)});
        }
      }
    }
  }
}

std::vector<Distance> BruteForceOracle::distances_from(const NormalElement& el,
                                                       std::size_t max_segments) const {
  const auto source = truncation_.find(el);
  if (!source) throw InputError("element lies outside the oracle truncation");
  std::vector<Distance> cur(truncation_.size(), kInfinity);
  cur[*source] = 0;
  for (std::size_t round = 0; round < max_segments; ++round) {
    auto next = cur;
    bool changed = false;
    for (const auto& e : edges_) {
      if (cur[e.from] + e.weight < next[e.to]) {
        next[e.to] = cur[e.from] + e.weight;
        changed = true;
      }
    }
    cur = std::move(next);
    if (!changed) break;
  }
  return cur;
}

Distance distance_bruteforce(const ConfluentAction& a, const NormalElement& el1,
                             const NormalElement& el2, std::size_t max_segments,
                             std::optional<std::size_t> depth) {
  require_normal(a, el1);
  require_normal(a, el2);
  const auto k = depth.value_or(std::max(lg(el1), lg(el2)) + max_segments);
  const BruteForceOracle oracle(a, k);
  const auto target = oracle.truncation().find(el2);
  if (!target) throw InputError("element lies outside the oracle truncation");
  return oracle.distances_from(el1, max_segments)[*target];
}

Distance distance_group_formula(const ConfluentAction& a, const Word& u, const Word& v,
                                PointId x, PointId y) {
  const auto& p = a.presentation();
  if (!p.is_group()) throw PreconditionError("presentation declares no group structure");
  require_metric_action(a.action());
  if (x >= a.num_points() || y >= a.num_points()) throw InputError("point out of range");
  const auto& d = *a.space().metric;
  const auto w = normalize_word(p, concat(inverse_word(p, u), v));
  const auto n = a.num_points();
  const auto k = w.size();
  if (k == 0) return d(y, x);

  // cost[z]: cheapest d(y, x_1) + ... + d(g_{i-1}(x_{i-1}), z) with z = x_i.
  auto gen = [&](std::size_t i) -> const PartialGenMap& { return a.action().gen(w[k - i]); };
  std::vector<Distance> cost(n, kInfinity);
  for (PointId z = 0; z < n; ++z) {
    if (gen(1).defined_at(z)) cost[z] = d(y, z);
  }
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<Distance> next(n, kInfinity);
    for (PointId z = 0; z < n; ++z) {
      if (!gen(i + 1).defined_at(z)) continue;
      for (PointId s = 0; s < n; ++s) {
        if (gen(i).defined_at(s)) next[z] = std::min(next[z], cost[s] + d(*gen(i)(s), z));
      }
    }
    cost = std::move(next);
  }
  Distance best = kInfinity;
  for (PointId s = 0; s < n; ++s) {
    if (gen(k).defined_at(s)) best = std::min(best, cost[s] + d(*gen(k)(s), x));
  }
  return best;
}

std::string to_string(PathForm f) {
  return "A" + std::to_string(static_cast<int>(f) + 1);
}

namespace {

bool normal_end(const PartialAction& a, const Word& w, PointId z) {
  return w.empty() || !a.gen(w.back()).defined_at(z);
}

}  // namespace

std::string segment_pattern(const PartialAction& a, const Segment& s) {
  std::string out;
  out += normal_end(a, s.word, s.from) ? 'n' : 'r';
  out += normal_end(a, s.word, s.to) ? 'n' : 'r';
  return out;
}

std::optional<PathForm> classify_path(const PartialAction& a, const std::vector<Segment>& path) {
  std::size_t i = 0;
  std::size_t leading = 0;
  std::size_t trailing = 0;
  bool middle = false;
  while (i < path.size() && segment_pattern(a, path[i]) == "nr") ++leading, ++i;
  if (i < path.size() && segment_pattern(a, path[i]) == "nn") middle = true, ++i;
  while (i < path.size() && segment_pattern(a, path[i]) == "rn") ++trailing, ++i;
  if (i != path.size() || path.empty()) return std::nullopt;
  if (middle) {
    if (leading == 0 && trailing == 0) return PathForm::A3;
    if (trailing == 0) return PathForm::A4;
    if (leading == 0) return PathForm::A5;
    return PathForm::A6;
  }
  if (trailing == 0) return PathForm::A1;
  if (leading == 0) return PathForm::A2;
  return PathForm::A7;
}

namespace {

// Applies the two reductions on paths until neither fires: a segment with
// both ends reducible moves down one copy, and adjacent segments meeting in
// the same configuration merge. Zero-length links between copies go first.
std::vector<Segment> reduce_path(const PartialAction& a, std::vector<Segment> path) {
  for (bool changed = true; changed;) {
    changed = false;
    if (path.size() > 1) {
      const auto before = path.size();
      std::erase_if(path, [](const Segment& s) { return s.from == s.to; });
      if (path.empty()) return {Segment{}};
      changed = changed || path.size() != before;
    }
    for (auto& s : path) {
      if (s.word.empty()) continue;
      const auto& g = a.gen(s.word.back());
      if (g.defined_at(s.from) && g.defined_at(s.to)) {
        s = Segment{imprefix(s.word), *g(s.from), *g(s.to)};
        changed = true;
      }
    }
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      if (path[j].word == path[j + 1].word && path[j].to == path[j + 1].from) {
        path[j].to = path[j + 1].to;
        path.erase(path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        changed = true;
        break;
      }
    }
  }
  return path;
}

}  // namespace

std::optional<GeodesicWitness> geodesic(const ConfluentAction& a, const NormalElement& el1,
                                        const NormalElement& el2) {
  require_metric_action(a.action());
  require_normal(a, el1);
  require_normal(a, el2);
  const auto& d = *a.space().metric;
  if (el1 == el2) {
    return GeodesicWitness{{Segment{el1.word, el1.point, el1.point}}, PathForm::A3, 0.0};
  }
  const PrefixGraph g(a.action(), el1.word, el2.word);
  const auto sp = shortest_path(g, g.node(el1.word, el1.point), g.node(el2.word, el2.point));
  if (std::isinf(sp.distance)) return std::nullopt;

  std::vector<Segment> path;
  Segment current{g.word(sp.nodes.front()), g.point(sp.nodes.front()), g.point(sp.nodes.front())};
  for (std::size_t i = 1; i < sp.nodes.size(); ++i) {
    const auto v = sp.nodes[i];
    if (g.same_copy(sp.nodes[i - 1], v)) {
      current.to = g.point(v);
    } else {
      path.push_back(current);
      current = Segment{g.word(v), g.point(v), g.point(v)};
    }
  }
  path.push_back(current);
  path = reduce_path(a.action(), std::move(path));

  GeodesicWitness out;
  out.segments = std::move(path);
  for (const auto& s : out.segments) out.total += d(s.from, s.to);
  const auto form = classify_path(a.action(), out.segments);
  if (!form) throw Error("geodesic reduction left an unclassified path");
  out.form = *form;
  return out;
}

SeparationReport check_separated(const ConfluentAction& a, std::size_t n) {
  const auto t = enumerate_truncation(a, n);
  SeparationReport report;
  report.elements = t.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const auto& el1 = t.elements[i];
      const auto& el2 = t.elements[j];
      const auto dist = distance(a, el1, el2);
      if (dist < report.min_distance) {
        report.min_distance = dist;
        report.closest = {el1, el2};
      }
      if (dist == 0 && el1.word != el2.word) report.zero_across_words.push_back({el1, el2});
    }
  }
  report.pass = !(report.min_distance <= 0) && report.zero_across_words.empty();
  return report;
}

LocalIsometryReport check_local_isometry(const ConfluentAction& a, const Word& u) {
  LocalIsometryReport report;
  require_metric_action(a.action());
  if (!is_closed_action(a.action())) throw PreconditionError("local isometry needs a closed action");
  if (!is_normal_word(a.presentation(), u)) throw PreconditionError("word is not normal");
  if (u.empty()) return report;

  const auto& d = *a.space().metric;
  const auto dom = a.action().gen(u.back()).dom();
  const auto r = members(r_set(a.action(), u));
  auto describe = [&](PointId x, PointId y, Distance dist, const char* what) {
    std::ostringstream s;
    s << what << " at (" << a.presentation().format(u) << "; " << a.space().name(x) << ", "
      << a.space().name(y) << "): D = " << dist << ", d = " << d(x, y);
    return s.str();
  };
  for (auto x : r) {
    const auto eps = d.to_set(x, dom);
    for (auto y : r) {
      const auto dist = distance(a, {u, x}, {u, y});
      const auto dxy = d(x, y);
      const auto lower = std::min(dxy, eps + d.to_set(y, dom));
      ++report.pairs_checked;
      if (dist > dxy + kDistanceTolerance) {
        report.violations.push_back(describe(x, y, dist, "upper bound fails"));
      }
      if (!std::isinf(lower) && dist + kDistanceTolerance < lower) {
        report.violations.push_back(describe(x, y, dist, "lower bound fails"));
      } else if (std::isinf(lower) && !std::isinf(dist)) {
        report.violations.push_back(describe(x, y, dist, "lower bound fails"));
      }
      if (eps > 0 && dxy < eps && !same_distance(dist, dxy)) {
        report.violations.push_back(describe(x, y, dist, "not isometric within epsilon"));
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

std::vector<std::vector<Distance>> cap_infinite(std::vector<std::vector<Distance>> m,
                                                Distance cap) {
  for (auto& row : m) {
    for (auto& v : row) {
      if (std::isinf(v)) v = cap;
    }
  }
  return m;
}

GlueResult glue(const WeakPseudometric& m1, const std::vector<std::string>& names1,
                const WeakPseudometric& m2, const std::vector<std::string>& names2,
                const std::vector<std::pair<PointId, PointId>>& ident) {
  const auto n1 = m1.size();
  const auto n2 = m2.size();
  if (names1.size() != n1 || names2.size() != n2) throw InputError("names do not match metrics");
  std::vector<char> used1(n1, 0), used2(n2, 0);
  for (const auto& [z1, z2] : ident) {
    if (z1 >= n1 || z2 >= n2) throw InputError("identified point out of range");
    if (used1[z1]++ || used2[z2]++) throw InputError("identification is not a partial bijection");
  }
  for (const auto& [z1, z2] : ident) {
    for (const auto& [w1, w2] : ident) {
      if (!same_distance(m1(z1, w1), m2(z2, w2))) {
        throw InputError("identification is not isometric at (" + names1[z1] + ", " +
                         names1[w1] + ")");
      }
    }
  }

  Space space;
  WeakPseudometric d(n1 + n2);
  for (std::size_t i = 0; i < n1 + n2; ++i) {
    space.point_names.push_back(i < n1 ? "1:" + names1[i] : "2:" + names2[i - n1]);
    for (std::size_t j = 0; j < n1 + n2; ++j) {
      if (i < n1 && j < n1) {
        d.set(i, j, m1(i, j));
      } else if (i >= n1 && j >= n1) {
        d.set(i, j, m2(i - n1, j - n1));
      } else {
        d.set(i, j, kInfinity);
      }
    }
  }
  space.metric = d;
  PartialGenMap u(n1 + n2), U(n1 + n2);
  for (const auto& [z1, z2] : ident) {
    u.image[z1] = static_cast<PointId>(n1 + z2);
    U.image[n1 + z2] = z1;
  }
  Presentation p({"u", "U"}, {{{0, 1}, {}}, {{1, 0}, {}}}, {}, std::vector<GenId>{1, 0});
  const auto a = ConfluentAction::certify(PartialAction(std::move(p), std::move(space), {u, U}));

  GlueResult out;
  std::vector<NormalElement> elements;
  for (PointId x = 0; x < n1; ++x) {
    elements.push_back(normal_form(a, {{0}, x}));
    out.names.push_back(names1[x]);
    out.origin.push_back({1, x});
  }
  for (PointId y = 0; y < n2; ++y) {
    if (used2[y]) continue;
    elements.push_back(embed(static_cast<PointId>(n1 + y)));
    auto name = names2[y];
    while (std::find(out.names.begin(), out.names.end(), name) != out.names.end()) name += "'";
    out.names.push_back(name);
    out.origin.push_back({2, y});
  }
  out.metric = WeakPseudometric(distance_matrix(a, elements));
  return out;
}

namespace {

bool is_identity(const PartialGenMap& m) {
  for (std::size_t x = 0; x < m.image.size(); ++x) {
    if (m.image[x] && *m.image[x] != x) return false;
  }
  return true;
}

PointSet image_set(const PartialGenMap& m) {
  PointSet out(m.image.size());
  for (const auto& y : m.image) {
    if (y) out.set(*y);
  }
  return out;
}

PartialGenMap inverse_map(const PartialGenMap& m) {
  PartialGenMap out(m.image.size());
  for (PointId x = 0; x < m.image.size(); ++x) {
    if (m.image[x]) out.image[*m.image[x]] = x;
  }
  return out;
}

// f∘g where g's image is f's domain.
PartialGenMap compose(const PartialGenMap& f, const PartialGenMap& g) {
  PartialGenMap out(g.image.size());
  for (std::size_t x = 0; x < g.image.size(); ++x) {
    if (g.image[x]) out.image[x] = f(*g.image[x]);
  }
  return out;
}

}  // namespace

std::vector<PartialGenMap> singleton_maps(std::size_t points) {
  std::vector<PartialGenMap> out;
  for (PointId x = 0; x < points; ++x) {
    for (PointId y = 0; y < points; ++y) {
      if (x == y) continue;
      PartialGenMap m(points);
      m.image[y] = x;
      out.push_back(std::move(m));
    }
  }
  return out;
}

HomogenizeResult homogenize_step(const Space& space, const std::vector<PartialGenMap>& gamma,
                                 std::size_t n) {
  if (!space.metric) throw PreconditionError("homogenization needs a metric");
  if (n == 0) throw PreconditionError("homogenization needs n >= 1");
  const auto& d = *space.metric;
  const auto size = space.size();
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const auto& g = gamma[i];
    const auto label = "gamma " + std::to_string(i);
    if (g.image.size() != size) throw InputError(label + " does not match the point set");
    if (g.dom().none()) throw InputError(label + " has an empty domain");
    for (std::size_t x = 0; x < size; ++x) {
      if (g.image[x] && *g.image[x] >= size) throw InputError(label + " leaves the point set");
    }
    const auto dom = members(g.dom());
    for (auto x : dom) {
      for (auto y : dom) {
        if (x != y && (*g(x) == *g(y) || !same_distance(d(*g(x), *g(y)), d(x, y)))) {
          throw InputError(label + " is not an isometry on its domain");
        }
      }
    }
  }

  std::vector<PartialGenMap> maps;
  auto add = [&](const PartialGenMap& m) {
    if (is_identity(m) || std::find(maps.begin(), maps.end(), m) != maps.end()) return false;
    maps.push_back(m);
    return true;
  };
  for (const auto& g : gamma) {
    add(g);
    add(inverse_map(g));
  }
  for (bool grew = true; grew;) {
    grew = false;
    const auto k = maps.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (image_set(maps[j]) == maps[i].dom()) grew = add(compose(maps[i], maps[j])) || grew;
      }
    }
  }

  std::vector<Morphism> morphisms;
  for (const auto& m : maps) {
    morphisms.push_back({morphism_name(space, m), m.dom(), image_set(m), m});
  }
  std::sort(morphisms.begin(), morphisms.end(),
            [](const Morphism& f, const Morphism& g) { return f.name < g.name; });

  HomogenizeResult r{ConfluentAction::certify(from_category(space, morphisms)), {}, {}, {}, true, true, true, true, {}};
  const auto& a = r.action;
  for (const auto& g : gamma) {
    if (is_identity(g)) {
      r.gamma_generators.push_back(std::nullopt);
    } else {
      r.gamma_generators.push_back(a.presentation().id(morphism_name(space, g)));
    }
  }
  r.truncation = enumerate_truncation(a, n);
  r.distances = distance_matrix(a, r.truncation.elements);

  const auto& t = r.truncation;
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (lg(t.elements[i]) < n) inner.push_back(i);
  }
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const auto gen = r.gamma_generators[k];
    if (!gen) continue;
    const auto label = a.presentation().name(*gen);
    for (auto x : members(gamma[k].dom())) {
      if (act(a, {*gen}, x) != gamma[k](x)) {
        r.extends = false;
        r.violations.push_back(label + " does not extend at " + space.name(x));
      }
    }
    std::vector<std::optional<std::size_t>> moved;
    for (auto i : inner) {
      moved.push_back(t.find(act_on_element(a, {*gen}, t.elements[i])));
      if (!moved.back()) {
        r.lands_in_truncation = false;
        r.violations.push_back(label + " maps " +
                               format_element(a.presentation(), space, t.elements[i]) +
                               " outside the truncation");
      }
    }
    for (std::size_t p = 0; p < inner.size(); ++p) {
      for (std::size_t q = p + 1; q < inner.size(); ++q) {
        if (!moved[p] || !moved[q]) continue;
        if (!same_distance(r.distances[*moved[p]][*moved[q]], r.distances[inner[p]][inner[q]])) {
          r.isometric_on_pairs = false;
          r.violations.push_back(label + " changes the distance of " +
                                 format_element(a.presentation(), space, t.elements[inner[p]]) +
                                 " and " +
                                 format_element(a.presentation(), space, t.elements[inner[q]]));
        }
      }
    }
  }
  for (PointId x = 0; x < size; ++x) {
    for (PointId y = 0; y < size; ++y) {
      if (!same_distance(r.distances[*t.find(embed(x))][*t.find(embed(y))], d(x, y))) {
        r.embedding_isometric = false;
        r.violations.push_back("embedding changes d(" + space.name(x) + ", " + space.name(y) + ")");
      }
    }
  }
  return r;
}

}  // namespace pglob
