#pragma once

// Globalized distance D on Y for confluent non-expansive partial actions on
// a finite weak pseudometric space.
//
// D is computed as a shortest path over copies (w, z) of X, where w runs
// over the prefixes of the two endpoint words. Within a copy the edges
// carry d; (w, z) and (imprefix w, g_1(z)) are joined by a free edge when z
// lies in the domain of the rightmost letter g_1 of w.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pglob/glob.hpp"
#include "pglob/metric.hpp"

namespace pglob {

/// Every generator is non-expansive on its domain. Throws PreconditionError
/// when the space has no metric.
bool check_nonexpansive(const PartialAction& a);

/// Throws PreconditionError unless `a` has a metric and is non-expansive.
void require_metric_action(const PartialAction& a);

Distance distance(const ConfluentAction& a, const NormalElement& el1, const NormalElement& el2);

/// Distances between all pairs of `elements`, row-major.
std::vector<std::vector<Distance>> distance_matrix(const ConfluentAction& a,
                                                   const std::vector<NormalElement>& elements);

/// Path-length minimum over S-paths through a fixed truncation Y_depth,
/// used as a test oracle. Every pair (u, x), (u, y) with lg(u) <= depth is
/// an edge of weight d(x, y) between the normal forms.
class BruteForceOracle {
 public:
  BruteForceOracle(const ConfluentAction& a, std::size_t depth);

  const Truncation& truncation() const { return truncation_; }
  /// Shortest paths with at most `max_segments` segments from `el` to every
  /// element of the truncation.
  std::vector<Distance> distances_from(const NormalElement& el, std::size_t max_segments) const;

 private:
  struct Edge {
    std::size_t from;
    std::size_t to;
    Distance weight;
  };
  Truncation truncation_;
  std::vector<Edge> edges_;
};

/// Oracle distance with at most `max_segments` segments. The truncation
/// depth defaults to max(lg) + max_segments.
Distance distance_bruteforce(const ConfluentAction& a, const NormalElement& el1,
                             const NormalElement& el2, std::size_t max_segments,
                             std::optional<std::size_t> depth = std::nullopt);

/// Closed form for groups: with g_k ... g_1 the normal form of u^{-1}v,
/// D(u·x, v·y) = min d(y, x_1) + sum_i d(g_i(x_i), x_{i+1}) over
/// x_i ∈ dom(g_i), x_{k+1} = x. Throws PreconditionError without inverses.
Distance distance_group_formula(const ConfluentAction& a, const Word& u, const Word& v,
                                PointId x, PointId y);

enum class PathForm { A1, A2, A3, A4, A5, A6, A7 };
std::string to_string(PathForm f);

/// One step (u, from) to (u, to) inside the copy u·X.
struct Segment {
  Word word;
  PointId from = 0;
  PointId to = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct GeodesicWitness {
  std::vector<Segment> segments;
  PathForm form = PathForm::A3;
  Distance total = 0;
};

/// Normality pattern of a segment, e.g. "nr" when (u, from) is normal and
/// (u, to) is reducible.
std::string segment_pattern(const PartialAction& a, const Segment& s);

/// Classifies a reduced path by its normality patterns; nullopt when the
/// pattern matches none of A1 to A7.
std::optional<PathForm> classify_path(const PartialAction& a, const std::vector<Segment>& path);

/// A reduced path realizing D(el1, el2), or nullopt when D is infinite.
std::optional<GeodesicWitness> geodesic(const ConfluentAction& a, const NormalElement& el1,
                                        const NormalElement& el2);

struct SeparationReport {
  bool pass = true;
  Distance min_distance = kInfinity;
  std::optional<std::pair<NormalElement, NormalElement>> closest;
  /// Distinct normal words at distance zero, which the layer property rules out.
  std::vector<std::pair<NormalElement, NormalElement>> zero_across_words;
  std::size_t elements = 0;
};

/// Minimum distance over distinct pairs of Y_n and the layer property.
SeparationReport check_separated(const ConfluentAction& a, std::size_t n);

struct LocalIsometryReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
};

/// For x, y ∈ R_u: min{d(x,y), d(x,dom g_1) + d(y,dom g_1)} <= D(u·x, u·y)
/// <= d(x, y), with equality on the right whenever d(x, y) < d(x, dom g_1).
/// Requires a closed action; u = e passes vacuously.
LocalIsometryReport check_local_isometry(const ConfluentAction& a, const Word& u);

/// Replaces +inf entries by `cap`.
std::vector<std::vector<Distance>> cap_infinite(std::vector<std::vector<Distance>> m,
                                                Distance cap);

struct GlueResult {
  std::vector<std::string> names;
  WeakPseudometric metric;
  /// Origin of each glued point: (1, a) for a ∈ X1, (2, b) for a point of
  /// X2 outside the identified set.
  std::vector<std::pair<int, PointId>> origin;
};

/// Glues X1 and X2 along a partial bijection (z1, z2), z1 ∈ X1, z2 ∈ X2,
/// through the globalization of the free group on one generator u acting
/// by z1 -> z2 on X1 ⊔ X2. Points of X1 come first, then the points of X2
/// that are not identified. Throws InputError if the identification is not
/// an isometric partial bijection.
GlueResult glue(const WeakPseudometric& m1, const std::vector<std::string>& names1,
                const WeakPseudometric& m2, const std::vector<std::string>& names2,
                const std::vector<std::pair<PointId, PointId>>& ident);

struct HomogenizeResult {
  ConfluentAction action;
  /// Generator of each input γ; nullopt for a partial identity, which acts
  /// as the unit.
  std::vector<std::optional<GenId>> gamma_generators;
  Truncation truncation;
  std::vector<std::vector<Distance>> distances;
  bool extends = true;             ///< γ·x = γ(x) on dom(γ)
  bool lands_in_truncation = true; ///< γ maps Y_{n-1} into Y_n
  bool isometric_on_pairs = true;  ///< D(γa, γb) = D(a, b) on Y_{n-1}
  bool embedding_isometric = true; ///< D(x, y) = d(x, y) on X
  std::vector<std::string> violations;

  bool pass() const {
    return extends && lands_in_truncation && isometric_on_pairs && embedding_isometric;
  }
};

/// Closes Γ under inverses and composition, builds the category action and
/// returns Y_n with its distances. Requires n >= 1 and a metric on the
/// space. Throws InputError when some γ has an empty domain or is not an
/// isometry onto its image.
HomogenizeResult homogenize_step(const Space& space, const std::vector<PartialGenMap>& gamma,
                                 std::size_t n);

/// Every singleton map {y} -> {x}, x != y.
std::vector<PartialGenMap> singleton_maps(std::size_t points);

}  // namespace pglob
