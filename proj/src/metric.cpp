#include "pglob/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pglob {

WeakPseudometric::WeakPseudometric(const std::vector<std::vector<Distance>>& rows)
    : n_(rows.size()), d_(rows.size() * rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw InputError("distance matrix must be square");
    for (std::size_t j = 0; j < n_; ++j) set(i, j, rows[i][j]);
  }
}

void WeakPseudometric::set(std::size_t i, std::size_t j, Distance value) {
  if (std::isnan(value) || value < 0) {
    throw InputError("distances must be nonnegative numbers or +inf");
  }
  d_[i * n_ + j] = value;
}

Distance WeakPseudometric::to_set(PointId x, const PointSet& set) const {
  Distance best = kInfinity;
  for (auto s = set.find_first(); s != PointSet::npos; s = set.find_next(s)) {
    best = std::min(best, (*this)(x, s));
  }
  return best;
}

std::vector<std::vector<Distance>> WeakPseudometric::rows() const {
  std::vector<std::vector<Distance>> out(n_, std::vector<Distance>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

PseudometricReport validate_pseudometric(const WeakPseudometric& m) {
  PseudometricReport report;
  const auto n = m.size();
  bool separated = true;
  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0) report.validation.fail("d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m(i, j) != m(j, i)) {
        if (i < j) {
          report.validation.fail("asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
      if (m(i, j) == 0) separated = false;
      if (std::isinf(m(i, j))) finite = false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m(i, k) > m(i, j) + m(j, k) + kDistanceTolerance) {
          report.validation.fail("triangle inequality fails for (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  report.separated = separated;
  report.metric = separated && finite;
  return report;
}

}  // namespace pglob
