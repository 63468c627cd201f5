#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pglob/common.hpp"

namespace pglob {

/// Topology on a finite point set stored as its explicit family of open
/// sets, kept sorted and deduplicated.
class FiniteTopology {
 public:
  FiniteTopology() = default;
  FiniteTopology(std::size_t size, std::vector<PointSet> opens);

  static FiniteTopology discrete(std::size_t size);
  static FiniteTopology indiscrete(std::size_t size);

  std::size_t size() const { return size_; }
  const std::vector<PointSet>& opens() const { return opens_; }

  bool is_open(const PointSet& s) const;
  bool is_closed(const PointSet& s) const { return is_open(~s); }
  /// Intersection of all opens containing `s`.
  PointSet smallest_open_containing(const PointSet& s) const;
  /// smallest_open_containing({x}), precomputed.
  const PointSet& neighbourhood(PointId x) const { return around_[x]; }
  /// Every singleton is closed.
  bool singletons_closed() const;
  std::vector<PointSet> closed_sets() const;

  friend struct TopologyReport validate_topology(const FiniteTopology& t);
  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.size_ == b.size_ && a.opens_ == b.opens_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> around_;
  std::vector<std::uint64_t> keys_;  // sorted masks, only when size_ <= 64
};

struct TopologyReport {
  ValidationReport validation;
  bool t1 = false;  ///< every singleton closed
};

/// Checks that the family contains the empty and the full set and is closed
/// under binary unions and intersections.
TopologyReport validate_topology(const FiniteTopology& t);

}  // namespace pglob
