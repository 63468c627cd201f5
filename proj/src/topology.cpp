#include "pglob/topology.hpp"

#include <algorithm>
#include <string>

namespace pglob {

FiniteTopology::FiniteTopology(std::size_t size, std::vector<PointSet> opens)
    : size_(size), opens_(std::move(opens)) {
  for (const auto& s : opens_) {
    if (s.size() != size_) throw InputError("open set has the wrong universe size");
  }
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  around_.assign(size_, full_set(size_));
  for (const auto& u : opens_) {
    for (auto x = u.find_first(); x != PointSet::npos; x = u.find_next(x)) around_[x] &= u;
  }
  if (size_ <= 64) {
    keys_.reserve(opens_.size());
    for (const auto& u : opens_) keys_.push_back(u.to_ulong());
    std::sort(keys_.begin(), keys_.end());
  }
}

FiniteTopology FiniteTopology::discrete(std::size_t size) {
  if (size > 20) throw InputError("discrete topology on more than 20 points is too large to list");
  std::vector<PointSet> opens;
  for (unsigned long mask = 0; mask < (1ul << size); ++mask) opens.emplace_back(size, mask);
  return FiniteTopology(size, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t size) {
  return FiniteTopology(size, {PointSet(size), full_set(size)});
}

bool FiniteTopology::is_open(const PointSet& s) const {
  if (s.size() != size_) return false;
  if (size_ <= 64) return std::binary_search(keys_.begin(), keys_.end(), std::uint64_t{s.to_ulong()});
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

bool FiniteTopology::singletons_closed() const {
  for (std::size_t x = 0; x < size_; ++x) {
    PointSet singleton(size_);
    singleton.set(x);
    if (!is_closed(singleton)) return false;
  }
  return true;
}

PointSet FiniteTopology::smallest_open_containing(const PointSet& s) const {
  if (s.count() == 1) return around_[s.find_first()];
  PointSet out = full_set(size_);
  for (const auto& u : opens_) {
    if (s.is_subset_of(u)) out &= u;
  }
  return out;
}

std::vector<PointSet> FiniteTopology::closed_sets() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (const auto& u : opens_) out.push_back(~u);
  std::sort(out.begin(), out.end());
  return out;
}

TopologyReport validate_topology(const FiniteTopology& t) {
  TopologyReport report;
  const auto n = t.size();
  if (!t.is_open(PointSet(n))) report.validation.fail("empty set is not open");
  if (!t.is_open(full_set(n))) report.validation.fail("full set is not open");
  // A family with X in it is a topology iff it contains the minimal
  // neighbourhood N_x of every point and is closed under U -> U | N_x.
  // This avoids the quadratic pairwise check on large families.
  const auto& opens = t.opens();
  std::vector<PointSet> around;
  bool meet_missing = false;
  for (std::size_t x = 0; x < n; ++x) {
    around.push_back(t.neighbourhood(x));
    if (!meet_missing && !t.is_open(around.back())) {
      meet_missing = true;
      report.validation.fail("family is not closed under intersections");
    }
  }
  bool union_missing = false;
  if (!t.keys_.empty()) {
    std::vector<std::uint64_t> gens;
    for (const auto& a : around) {
      if (t.is_open(a)) gens.push_back(a.to_ulong());
    }
    for (std::size_t i = 0; i < t.keys_.size() && !union_missing; ++i) {
      for (auto g : gens) {
        const auto joined = t.keys_[i] | g;
        if (joined != t.keys_[i] && !std::binary_search(t.keys_.begin(), t.keys_.end(), joined)) {
          union_missing = true;
          report.validation.fail("family is not closed under unions");
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < opens.size() && !union_missing && t.keys_.empty(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (opens[i].test(x) || !t.is_open(around[x])) continue;
      if (!t.is_open(opens[i] | around[x])) {
        union_missing = true;
        report.validation.fail("family is not closed under unions");
        break;
      }
    }
  }
  report.t1 = t.singletons_closed();
  return report;
}

}  // namespace pglob
