// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Each criterion carries a time budget that is part of its pass condition.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pglob/fintop.hpp"
#include "pglob/metglob.hpp"
#include "support.hpp"

using namespace pglob;
using namespace pglob::testing;

namespace {

constexpr double kTol = 1e-9;

bool close(Distance a, Distance b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= kTol;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

// Collects failures; the first few are kept as the detail line.
struct Checker {
  Outcome out;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    out.pass = false;
    if (failures <= 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) {
    if (out.pass) out.detail = summary;
    else out.detail = std::to_string(failures) + " of " + std::to_string(checks) + " failed: " + out.detail;
    return out;
  }
};

std::vector<std::string> confluent_fixtures() {
  auto names = metric_fixtures();
  for (const auto* extra : {"sierpinski", "constant_maps", "group_z2_t1"}) names.push_back(extra);
  return names;
}

std::vector<std::string> topology_fixtures() {
  return {"klein_four", "constant_maps", "sierpinski", "group_z2_t1"};
}

// ---------------------------------------------------------------------------

Outcome confluence_classification() {
  Checker c;
  auto word = [](const std::string& name) {
    return check_word_confluence(fixture(name).action->presentation()).confluent();
  };
  c.expect(word("dihedral"), "dihedral");
  c.expect(!word("dihedral_nonconfluent"), "dihedral minus aB->ba");
  c.expect(word("free_group"), "free group");
  c.expect(word("free_product"), "free product");
  c.expect(word("product"), "product");
  c.expect(word("category_groupoid"), "groupoid");
  for (std::size_t n = 2; n <= 5; ++n) {
    Space s;
    s.point_names = point_names(n);
    const auto a = singleton_homogeneous_action(s);
    c.expect(check_word_confluence(a.presentation()).confluent() && check_action_confluence(a).confluent(),
             "singleton category |X|=" + std::to_string(n));
  }
  std::mt19937 rng(101);
  for (int i = 0; i < 10; ++i) {
    const auto space = random_space(rng, 3 + i % 3);
    const auto a = random_category_action(rng, space, 2);
    c.expect(check_word_confluence(a.presentation()).confluent(), "random category");
  }
  return c.done(std::to_string(c.checks) + " presentations classified as expected");
}

Outcome klein_four() {
  Checker c;
  const auto m = fixture("klein_four");
  c.expect(!check_action_confluence(*m.action).confluent(), "action reported confluent");
  const auto q = finite_monoid_globalization(*m.monoid);
  const auto& mon = q.monoid();
  const auto e = mon.id("e"), u = mon.id("u"), uv = mon.id("uv");
  const std::vector<std::pair<std::size_t, PointId>> expected{{e, 0}, {u, 0}};
  c.expect(q.members(q.class_of(e, 0)) == expected, "class of (e,0)");
  const auto triples = triple_condition_check(q);
  const std::array<std::size_t, 3> witness{e, u, uv};
  c.expect(std::find(triples.begin(), triples.end(), witness) != triples.end(), "triple (e,u,uv)");
  return c.done("NotConfluent; class(e,0) = {(e,0),(u,0)}; (e,u,uv) violates the triple condition");
}

Outcome isometric_embedding() {
  Checker c;
  std::mt19937 rng(2024);
  std::size_t instances = 0, pairs = 0;
  for (int i = 0; i < 240; ++i) {
    const auto space = random_space(rng, 1 + static_cast<std::size_t>(i) % 6);
    const auto gens = 1 + static_cast<std::size_t>(i / 6) % 2;
    ConfluentAction a = [&] {
      switch (i % 3) {
        case 0: return random_free_group_action(rng, space, gens);
        case 1: return random_free_monoid_action(rng, space, gens);
        default: return random_category_action(rng, space, gens);
      }
    }();
    ++instances;
    for (PointId x = 0; x < space.size(); ++x) {
      for (PointId y = 0; y < space.size(); ++y) {
        ++pairs;
        c.expect(close(distance(a, embed(x), embed(y)), (*space.metric)(x, y)),
                 "instance " + std::to_string(i));
      }
    }
  }
  return c.done(std::to_string(instances) + " random instances, " + std::to_string(pairs) +
                " pairs, |D - d| <= 1e-9");
}

Outcome three_way_agreement() {
  Checker c;
  std::size_t pairs = 0, group_pairs = 0;
  const auto groups = group_fixtures();
  for (const auto& name : metric_fixtures()) {
    const auto a = confluent_fixture(name);
    if (a.num_points() > 5) continue;
    const bool group = std::find(groups.begin(), groups.end(), name) != groups.end();
    const auto t = enumerate_truncation(a, 2);
    for (const auto& p : t.elements) {
      for (const auto& q : t.elements) {
        const auto d = distance(a, p, q);
        const auto segments = 2 * (lg(p) + lg(q) + 1);
        const auto depth = std::max(lg(p), lg(q)) + 2;
        ++pairs;
        c.expect(close(d, distance_bruteforce(a, p, q, segments, depth)), name + " oracle");
        if (group) {
          ++group_pairs;
          c.expect(close(d, distance_group_formula(a, p.word, q.word, p.point, q.point)),
                   name + " group formula");
        }
      }
    }
  }
  return c.done(std::to_string(pairs) + " pairs match the oracle, " + std::to_string(group_pairs) +
                " also the group formula");
}

Outcome separation() {
  Checker c;
  Distance min = kInfinity;
  for (const auto& name : metric_fixtures()) {
    const auto r = check_separated(confluent_fixture(name), 2);
    c.expect(r.pass && r.min_distance > 0 && r.zero_across_words.empty(), name);
    min = std::min(min, r.min_distance);
  }
  std::ostringstream s;
  s << metric_fixtures().size() << " metric fixtures separated on Y_2, smallest distance " << min;
  return c.done(s.str());
}

Outcome pseudometric_criterion() {
  Checker c;
  std::size_t degenerate = 0, total = 0;
  for (const auto& name : metric_fixtures()) {
    const auto a = confluent_fixture(name);
    if (!is_nowhere_degenerate(a.action())) {
      ++degenerate;
      bool any_inf = false;
      for (const auto& row : distance_matrix(a, enumerate_truncation(a, 1).elements)) {
        for (auto v : row) any_inf = any_inf || std::isinf(v);
      }
      c.expect(any_inf, name + " has no +inf in Y_1");
    } else {
      ++total;
      bool all_finite = true;
      for (const auto& row : distance_matrix(a, enumerate_truncation(a, 2).elements)) {
        for (auto v : row) all_finite = all_finite && std::isfinite(v);
      }
      c.expect(all_finite, name + " has +inf in Y_2");
    }
  }
  return c.done(std::to_string(degenerate) + " degenerate fixture(s) reach +inf in Y_1, " +
                std::to_string(total) + " nowhere-degenerate fixtures finite on Y_2");
}

Outcome gluing() {
  Checker c;
  const auto chain = glue(WeakPseudometric({{0, 1}, {1, 0}}), {"a", "z"},
                          WeakPseudometric({{0, 2}, {2, 0}}), {"z", "b"}, {{1, 0}});
  c.expect(chain.metric(0, 2) == 3.0, "chain d(a,b) != 3");

  std::mt19937 rng(77);
  std::uniform_int_distribution<int> weight(1, 6);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n1 = 2 + i % 3, k = 1 + i % 2, extra = 1 + i % 3;
    const auto d1 = random_metric(rng, n1);
    // X2 = Z ∪ pendant points, each hanging off an anchor in Z.
    const std::size_t n2 = k + extra;
    std::vector<std::vector<Distance>> d2(n2, std::vector<Distance>(n2, 0.0));
    std::vector<std::size_t> anchor(n2);
    std::vector<Distance> leg(n2, 0.0);
    for (std::size_t b = 0; b < n2; ++b) {
      anchor[b] = b < k ? b : static_cast<std::size_t>(rng() % k);
      if (b >= k) leg[b] = weight(rng);
    }
    for (std::size_t b = 0; b < n2; ++b) {
      for (std::size_t b2 = 0; b2 < n2; ++b2) {
        if (b != b2) d2[b][b2] = leg[b] + d1(anchor[b], anchor[b2]) + leg[b2];
      }
    }
    std::vector<std::pair<PointId, PointId>> ident;
    for (std::size_t z = 0; z < k; ++z) ident.push_back({static_cast<PointId>(z), static_cast<PointId>(z)});
    const auto r = glue(d1, point_names(n1), WeakPseudometric(d2), point_names(n2), ident);

    // Position of each X2 point in the glued space.
    std::vector<std::size_t> where2(n2);
    for (std::size_t z = 0; z < k; ++z) where2[z] = z;
    for (std::size_t j = 0; j < r.origin.size(); ++j) {
      if (r.origin[j].first == 2) where2[r.origin[j].second] = j;
    }
    for (std::size_t a = 0; a < n1; ++a) {
      for (std::size_t a2 = 0; a2 < n1; ++a2) c.expect(close(r.metric(a, a2), d1(a, a2)), "X1 block");
      for (std::size_t b = 0; b < n2; ++b) {
        Distance best = kInfinity;
        for (std::size_t z = 0; z < k; ++z) best = std::min(best, d1(a, z) + d2[z][b]);
        c.expect(close(r.metric(a, where2[b]), best), "cross pair, instance " + std::to_string(i));
      }
    }
    for (std::size_t b = 0; b < n2; ++b) {
      for (std::size_t b2 = 0; b2 < n2; ++b2) {
        c.expect(close(r.metric(where2[b], where2[b2]), d2[b][b2]), "X2 block");
      }
    }
  }
  return c.done("chain d(a,b) = 3 exactly; 20 random gluings match inf_z d1(a,z) + d2(z,b)");
}

Outcome geodesics() {
  Checker c;
  std::size_t witnesses = 0;
  std::set<std::string> forms;
  for (const auto& name : metric_fixtures()) {
    const auto a = confluent_fixture(name);
    const auto t = enumerate_truncation(a, 2);
    for (const auto& p : t.elements) {
      for (const auto& q : t.elements) {
        const auto d = distance(a, p, q);
        const auto w = geodesic(a, p, q);
        if (std::isinf(d)) {
          c.expect(!w.has_value(), name + " witness for an infinite distance");
          continue;
        }
        if (!w) {
          c.expect(false, name + " missing witness");
          continue;
        }
        ++witnesses;
        Distance sum = 0;
        for (const auto& s : w->segments) sum += (*a.space().metric)(s.from, s.to);
        c.expect(close(w->total, d) && close(sum, d), name + " total differs from distance");
        if (p != q) {
          c.expect(classify_path(a.action(), w->segments) == w->form, name + " form tag mismatch");
        }
        forms.insert(to_string(w->form));
      }
    }
  }
  std::string seen;
  for (const auto& f : forms) seen += (seen.empty() ? "" : ",") + f;
  return c.done(std::to_string(witnesses) + " witnesses with exact totals; forms seen: " + seen);
}

Outcome local_isometry() {
  Checker c;
  std::size_t words = 0, pairs = 0;
  for (const auto& name : metric_fixtures()) {
    const auto a = confluent_fixture(name);
    if (!is_closed_action(a.action())) continue;
    for (const auto& u : normal_words(a.presentation(), 2)) {
      if (u.empty()) continue;
      const auto r = check_local_isometry(a, u);
      ++words;
      pairs += r.pairs_checked;
      c.expect(r.pass, name + " u=" + a.presentation().format(u) +
                           (r.violations.empty() ? "" : ": " + r.violations.front()));
    }
  }
  return c.done(std::to_string(words) + " words, " + std::to_string(pairs) + " pairs within bounds");
}

Outcome topology() {
  Checker c;
  std::size_t instances = 0, embeddings = 0, skipped = 0, widest = 0;
  auto examine = [&](const MonoidAction& m, const FiniteTopology& t, const std::string& name) {
    ++instances;
    const auto q = finite_monoid_globalization(m);
    const auto ty = globalization_topology(q, t);
    c.expect(validate_topology(ty).validation.valid, name + " axioms");
    const auto t1 = check_T1(q, t);
    c.expect(t1.agree(), name + " T1 criteria disagree");

    Space s = m.space;
    s.topology = t;
    MonoidAction with_t = m;
    with_t.space = s;
    const auto a = to_partial_action(with_t);
    const bool confluent = check_action_confluence(a).confluent();
    const bool closed = is_closed_action(a);
    if (confluent && closed) {
      ++embeddings;
      c.expect(check_embedding(q, t).pass, name + " embedding");
    }
    // T1 corollaries: closed action, or a group, on a T1 space.
    bool group = true;
    for (std::size_t u = 0; u < m.monoid.size(); ++u) {
      bool invertible = false;
      for (std::size_t v = 0; v < m.monoid.size(); ++v) {
        invertible = invertible || m.monoid.mul(u, v) == m.monoid.unit;
      }
      group = group && invertible;
    }
    if (t1.x_t1 && (closed || group)) c.expect(t1.y_t1, name + " Y not T1");
  };
  for (const auto& name : topology_fixtures()) {
    const auto m = fixture(name);
    examine(*m.monoid, *m.space.topology, name);
  }
  std::mt19937 rng(5);
  for (int i = 0; instances < 60 && i < 1000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i) % 7;
    Space space;
    space.point_names = point_names(n);
    std::vector<PartialGenMap> gens;
    for (int g = 0; g < 2; ++g) {
      gens.push_back(random_partial_map(rng, n, false, [](const PartialGenMap&) { return true; }));
    }
    const auto m = transformation_monoid(space, gens, 8);
    if (!m) continue;
    // Quotients past the enumeration limit can have more opens than an
    // explicit family holds.
    if (finite_monoid_globalization(*m).num_classes() > kEnumerateLimit) {
      ++skipped;
      continue;
    }
    widest = std::max(widest, n);
    const auto t = i % 2 ? random_topology(rng, n) : FiniteTopology::discrete(n);
    examine(*m, t, "random " + std::to_string(i));
  }
  return c.done(std::to_string(instances) + " instances up to |X|=" + std::to_string(widest) +
                ", |M|<=8: axioms and T1 agreement hold, " + std::to_string(embeddings) +
                " closed confluent embeddings pass (" + std::to_string(skipped) +
                " random draws over " + std::to_string(kEnumerateLimit) + " classes skipped)");
}

Outcome newman() {
  Checker c;
  std::mt19937 rng(99);
  std::size_t runs = 0;
  for (const auto& name : confluent_fixtures()) {
    const auto a = confluent_fixture(name);
    const auto& act = a.action();
    const auto gens = a.presentation().num_generators();
    for (int k = 0; k < 100; ++k) {
      Config start;
      start.point = static_cast<PointId>(rng() % a.num_points());
      const auto len = rng() % 7;
      for (std::size_t i = 0; i < len; ++i) start.word.push_back(static_cast<GenId>(rng() % gens));
      const auto canonical = normalize_config(act, start);
      for (int s = 0; s < 100; ++s) {
        auto cur = start;
        for (;;) {
          const auto next = config_reducts(act, cur);
          if (next.empty()) break;
          cur = next[rng() % next.size()];
        }
        ++runs;
        c.expect(cur == canonical, name);
      }
    }
  }
  return c.done(std::to_string(runs) + " random reductions over " +
                std::to_string(confluent_fixtures().size()) + " fixtures reach the canonical form");
}

// Normal elements of length <= n counted by DFS over letters.
std::size_t dfs_count(const ConfluentAction& a, const Word& w, std::size_t n) {
  std::size_t here = 0;
  for (PointId x = 0; x < a.num_points(); ++x) {
    if (w.empty() || !a.action().gen(w.back()).defined_at(x)) ++here;
  }
  if (w.size() == n) return here;
  for (GenId g = 0; g < a.presentation().num_generators(); ++g) {
    auto next = w;
    next.push_back(g);
    if (is_normal_word(a.presentation(), next)) here += dfs_count(a, next, n);
  }
  return here;
}

Outcome homogenization() {
  Checker c;
  const auto space = fixture("singletons3").space;
  std::string sizes;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto r = homogenize_step(space, singleton_maps(space.size()), n);
    c.expect(r.extends && r.lands_in_truncation, "gamma extension, n=" + std::to_string(n));
    c.expect(r.isometric_on_pairs, "gamma isometric, n=" + std::to_string(n));
    c.expect(r.embedding_isometric, "embedding, n=" + std::to_string(n));
    c.expect(r.truncation.size() == dfs_count(r.action, {}, n), "|Y_n| vs DFS, n=" + std::to_string(n));
    sizes += (sizes.empty() ? "" : ",") + std::to_string(r.truncation.size());
  }
  return c.done("6 singleton maps extend, X -> Y_n isometric, |Y_1..3| = " + sizes + " (DFS agrees)");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "confluence classification", 1, confluence_classification},
      {2, "Klein four counterexample", 1, klein_four},
      {3, "isometric embedding of X", 30, isometric_embedding},
      {4, "distance = oracle = group formula", 60, three_way_agreement},
      {5, "separation of Y_2", 10, separation},
      {6, "pseudometric criterion", 10, pseudometric_criterion},
      {7, "metric gluing", 10, gluing},
      {8, "geodesic witnesses", 10, geodesics},
      {9, "local isometry and distance bounds", 10, local_isometry},
      {10, "finite topology checks", 10, topology},
      {11, "strategy independence", 10, newman},
      {12, "homogenization step", 5, homogenization},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    const bool in_time = dt.count() < cr.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %-36s %7.3fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", cr.id,
                cr.title.c_str(), dt.count(), cr.budget_s, o.detail.c_str(),
                in_time ? "" : " [over time budget]");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
