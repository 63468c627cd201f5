#pragma once

// Final topology on the globalization of a finite monoid action: V ⊂ Y is
// open iff {x : [u, x] ∈ V} is open in X for every u ∈ M.

#include <cstddef>
#include <optional>
#include <vector>

#include "pglob/glob.hpp"
#include "pglob/topology.hpp"

namespace pglob {

/// For each generator g and open U, g^{-1}[U] is open in the subspace
/// dom(g). Throws PreconditionError without a topology.
bool is_continuous_action(const PartialAction& a);

/// V ⊂ Y (a set of classes) is open in the final topology.
bool is_open_in_globalization(const QuotientGlobalization& q, const FiniteTopology& t,
                              const PointSet& v);

/// Smallest open set of Y containing class c.
PointSet minimal_neighbourhood(const QuotientGlobalization& q, const FiniteTopology& t,
                               std::size_t c);

enum class TopologyMode {
  Auto,       ///< Enumerate up to kEnumerateLimit classes, Generate above
  Enumerate,  ///< filter all subsets of Y
  Generate,   ///< unions of minimal neighbourhoods
};

inline constexpr std::size_t kEnumerateLimit = 20;
inline constexpr std::size_t kMaxOpenSets = std::size_t{1} << 20;

/// The final topology on the classes of q. Throws PreconditionError when
/// Enumerate is asked for more than kEnumerateLimit classes or the family
/// exceeds kMaxOpenSets.
FiniteTopology globalization_topology(const QuotientGlobalization& q, const FiniteTopology& t,
                                      TopologyMode mode = TopologyMode::Auto);

struct EmbeddingReport {
  bool pass = true;
  /// An open U of X such that no open V of Y has V ∩ i(X) = i(U).
  std::optional<PointSet> missing;
  /// An open V of Y whose trace i^{-1}[V] is not open in X.
  std::optional<PointSet> extra_trace;
};

EmbeddingReport check_embedding(const QuotientGlobalization& q, const FiniteTopology& t);

struct T1Report {
  bool x_t1 = false;          ///< the input topology is T1
  bool y_t1 = false;          ///< every class is closed in Y
  bool criterion = false;     ///< {x' : u·x' = x} closed for all u, x
  bool agree() const { return y_t1 == criterion; }
};

T1Report check_T1(const QuotientGlobalization& q, const FiniteTopology& t);

/// x ↦ [u, x] sends closed (open) sets of X to closed (open) sets of Y.
bool is_closed_map_into_Y(const QuotientGlobalization& q, const FiniteTopology& t, std::size_t u);
bool is_open_map_into_Y(const QuotientGlobalization& q, const FiniteTopology& t, std::size_t u);

/// x ↦ [u, x] is continuous from X to Y.
bool is_continuous_into_Y(const QuotientGlobalization& q, const FiniteTopology& t, std::size_t u);

}  // namespace pglob
