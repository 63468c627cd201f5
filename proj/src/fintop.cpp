#include "pglob/fintop.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

namespace pglob {

bool is_continuous_action(const PartialAction& a) {
  if (!a.space().topology) throw PreconditionError("continuity needs a topology");
  const auto& t = *a.space().topology;
  const auto n = a.num_points();
  for (const auto& g : a.gens()) {
    const auto dom = g.dom();
    for (const auto& u : t.opens()) {
      PointSet pre(n);
      for (PointId x = 0; x < n; ++x) {
        if (auto y = g(x); y && u.test(*y)) pre.set(x);
      }
      if ((t.smallest_open_containing(pre) & dom) != pre) return false;
    }
  }
  return true;
}

namespace {

PointSet preimage(const QuotientGlobalization& q, std::size_t u, const PointSet& v) {
  PointSet out(q.num_points());
  for (PointId x = 0; x < q.num_points(); ++x) {
    if (v.test(q.class_of(u, x))) out.set(x);
  }
  return out;
}

PointSet image(const QuotientGlobalization& q, std::size_t u, const PointSet& s) {
  PointSet out(q.num_classes());
  for (auto x : members(s)) out.set(q.class_of(u, x));
  return out;
}

}  // namespace

bool is_open_in_globalization(const QuotientGlobalization& q, const FiniteTopology& t,
                              const PointSet& v) {
  for (std::size_t u = 0; u < q.monoid().size(); ++u) {
    if (!t.is_open(preimage(q, u, v))) return false;
  }
  return true;
}

PointSet minimal_neighbourhood(const QuotientGlobalization& q, const FiniteTopology& t,
                               std::size_t c) {
  PointSet out(q.num_classes());
  out.set(c);
  std::deque<std::size_t> todo{c};
  while (!todo.empty()) {
    const auto cur = todo.front();
    todo.pop_front();
    for (const auto& [u, x] : q.members(cur)) {
      for (auto y : members(t.neighbourhood(x))) {
        const auto next = q.class_of(u, y);
        if (!out.test(next)) {
          out.set(next);
          todo.push_back(next);
        }
      }
    }
  }
  return out;
}

FiniteTopology globalization_topology(const QuotientGlobalization& q, const FiniteTopology& t,
                                      TopologyMode mode) {
  const auto k = q.num_classes();
  if (mode == TopologyMode::Auto) {
    mode = k <= kEnumerateLimit ? TopologyMode::Enumerate : TopologyMode::Generate;
  }
  std::vector<PointSet> opens;
  if (mode == TopologyMode::Enumerate) {
    if (k > kEnumerateLimit) {
      throw PreconditionError("too many classes to enumerate subsets; use generate mode");
    }
    const auto n = q.num_points();
    if (n > 64) {
      for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        PointSet v(k, mask);
        if (is_open_in_globalization(q, t, v)) opens.push_back(std::move(v));
      }
      return FiniteTopology(k, std::move(opens));
    }
    // Word-sized fast path: a preimage is open iff it contains the minimal
    // neighbourhood of each of its points.
    std::vector<std::uint64_t> around(n);
    for (PointId x = 0; x < n; ++x) around[x] = t.neighbourhood(x).to_ulong();
    const auto m = q.monoid().size();
    std::vector<std::size_t> cls(m * n);
    for (std::size_t u = 0; u < m; ++u) {
      for (PointId x = 0; x < n; ++x) cls[u * n + x] = q.class_of(u, x);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      bool open = true;
      for (std::size_t u = 0; u < m && open; ++u) {
        std::uint64_t pre = 0;
        for (PointId x = 0; x < n; ++x) {
          if (mask >> cls[u * n + x] & 1) pre |= std::uint64_t{1} << x;
        }
        for (PointId x = 0; x < n && open; ++x) {
          if ((pre >> x & 1) && (around[x] & ~pre)) open = false;
        }
      }
      if (open) opens.emplace_back(k, mask);
    }
    return FiniteTopology(k, std::move(opens));
  }

  std::set<PointSet> family{PointSet(k)};
  for (std::size_t c = 0; c < k; ++c) {
    const auto nb = minimal_neighbourhood(q, t, c);
    std::vector<PointSet> added;
    for (const auto& s : family) {
      auto joined = s | nb;
      if (!family.count(joined)) added.push_back(std::move(joined));
    }
    family.insert(added.begin(), added.end());
    if (family.size() > kMaxOpenSets) {
      throw PreconditionError("final topology has more than " + std::to_string(kMaxOpenSets) +
                              " open sets");
    }
  }
  return FiniteTopology(k, {family.begin(), family.end()});
}

EmbeddingReport check_embedding(const QuotientGlobalization& q, const FiniteTopology& t) {
  EmbeddingReport report;
  const auto n = q.num_points();
  const auto k = q.num_classes();
  std::vector<PointSet> nbhd;
  for (std::size_t c = 0; c < k; ++c) nbhd.push_back(minimal_neighbourhood(q, t, c));
  PointSet embedded(k);
  for (PointId x = 0; x < n; ++x) embedded.set(q.embed(x));

  // Opens of X are unions of minimal neighbourhoods N_x and V -> V & i(X)
  // commutes with unions, so it suffices to test U = N_x.
  for (PointId x = 0; x < n; ++x) {
    const auto& u = t.neighbourhood(x);
    if (!(nbhd[q.embed(x)] & embedded).is_subset_of(image(q, q.monoid().unit, u))) {
      report.pass = false;
      report.missing = u;
      break;
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    const auto trace = preimage(q, q.monoid().unit, nbhd[c]);
    if (!t.is_open(trace)) {
      report.pass = false;
      report.extra_trace = nbhd[c];
      break;
    }
  }
  return report;
}

T1Report check_T1(const QuotientGlobalization& q, const FiniteTopology& t) {
  T1Report report;
  report.x_t1 = t.singletons_closed();
  const auto n = q.num_points();
  const auto k = q.num_classes();

  // Y side: a finite space is T1 iff every minimal neighbourhood is a point.
  report.y_t1 = true;
  for (std::size_t c = 0; c < k && report.y_t1; ++c) {
    const auto nb = minimal_neighbourhood(q, t, c);
    if (nb.count() != 1) report.y_t1 = false;
  }

  report.criterion = true;
  for (std::size_t u = 0; u < q.monoid().size() && report.criterion; ++u) {
    for (PointId x = 0; x < n; ++x) {
      PointSet fibre(n);
      for (PointId y = 0; y < n; ++y) {
        if (q.class_of(u, y) == q.embed(x)) fibre.set(y);
      }
      if (!t.is_closed(fibre)) {
        report.criterion = false;
        break;
      }
    }
  }
  return report;
}

bool is_closed_map_into_Y(const QuotientGlobalization& q, const FiniteTopology& t, std::size_t u) {
  for (const auto& a : t.closed_sets()) {
    if (!is_open_in_globalization(q, t, ~image(q, u, a))) return false;
  }
  return true;
}

bool is_open_map_into_Y(const QuotientGlobalization& q, const FiniteTopology& t, std::size_t u) {
  for (const auto& a : t.opens()) {
    if (!is_open_in_globalization(q, t, image(q, u, a))) return false;
  }
  return true;
}

bool is_continuous_into_Y(const QuotientGlobalization& q, const FiniteTopology& t, std::size_t u) {
  for (std::size_t c = 0; c < q.num_classes(); ++c) {
    if (!t.is_open(preimage(q, u, minimal_neighbourhood(q, t, c)))) return false;
  }
  return true;
}

}  // namespace pglob
