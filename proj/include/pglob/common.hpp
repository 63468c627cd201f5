#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pglob {

using GenId = std::uint32_t;
using PointId = std::uint32_t;

/// Subset of a finite point set, one bit per point.
using PointSet = boost::dynamic_bitset<>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: unknown names, ragged matrices, bad rules.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its contract, e.g. a distance query on a
/// non-confluent action.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Result of a report-style validation. `valid` is false iff `violations`
/// is nonempty.
struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;

  void fail(std::string message) {
    valid = false;
    violations.push_back(std::move(message));
  }
};

inline PointSet full_set(std::size_t n) { return PointSet(n).set(); }

inline std::vector<PointId> members(const PointSet& s) {
  std::vector<PointId> out;
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<PointId>(i));
  }
  return out;
}

}  // namespace pglob
