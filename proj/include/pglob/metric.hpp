#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "pglob/common.hpp"

namespace pglob {

/// Extended nonnegative distance; +infinity encodes "no path".
using Distance = double;
inline constexpr Distance kInfinity = std::numeric_limits<double>::infinity();

/// Absolute tolerance for comparing computed distances.
inline constexpr double kDistanceTolerance = 1e-9;

/// Finite symmetric distance matrix over [0, +inf]. Construction only checks
/// shape and sign; the metric axioms are checked by validate_pseudometric.
class WeakPseudometric {
 public:
  WeakPseudometric() = default;
  explicit WeakPseudometric(std::size_t n) : n_(n), d_(n * n, 0.0) {}
  explicit WeakPseudometric(const std::vector<std::vector<Distance>>& rows);

  std::size_t size() const { return n_; }
  Distance operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Distance value);

  /// min over s in `set` of d(x, s); +inf for the empty set.
  Distance to_set(PointId x, const PointSet& set) const;

  std::vector<std::vector<Distance>> rows() const;

  friend bool operator==(const WeakPseudometric&, const WeakPseudometric&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

struct PseudometricReport {
  ValidationReport validation;
  bool separated = false;  ///< no off-diagonal zero
  bool metric = false;     ///< separated and finite
};

PseudometricReport validate_pseudometric(const WeakPseudometric& m);

}  // namespace pglob
