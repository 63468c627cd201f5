#pragma once

// Partial monoid actions on finite point sets, driven by a presentation.
//
// A configuration (g_n ... g_1, x) rewrites either by a word rule inside
// g_n ... g_1 or by an action step (g_n ... g_2, g_1(x)) when x lies in the
// domain of the rightmost letter.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pglob/common.hpp"
#include "pglob/metric.hpp"
#include "pglob/topology.hpp"
#include "pglob/words.hpp"

namespace pglob {

struct Space {
  std::vector<std::string> point_names;
  std::optional<WeakPseudometric> metric;
  std::optional<FiniteTopology> topology;

  std::size_t size() const { return point_names.size(); }
  PointId id(std::string_view name) const;
  const std::string& name(PointId x) const { return point_names.at(x); }
};

/// Partial self-map of the point set; `image[x]` is empty outside the domain.
struct PartialGenMap {
  std::vector<std::optional<PointId>> image;

  PartialGenMap() = default;
  explicit PartialGenMap(std::size_t points) : image(points) {}

  std::optional<PointId> operator()(PointId x) const { return image[x]; }
  bool defined_at(PointId x) const { return image[x].has_value(); }
  PointSet dom() const;

  friend bool operator==(const PartialGenMap&, const PartialGenMap&) = default;
};

class PartialAction {
 public:
  PartialAction() = default;
  /// One map per generator, each sized to the space. Throws InputError
  /// otherwise or when an image falls outside the space.
  PartialAction(Presentation presentation, Space space, std::vector<PartialGenMap> gens);

  const Presentation& presentation() const { return presentation_; }
  const Space& space() const { return space_; }
  std::size_t num_points() const { return space_.size(); }
  const PartialGenMap& gen(GenId g) const { return gens_[g]; }
  const std::vector<PartialGenMap>& gens() const { return gens_; }

 private:
  Presentation presentation_;
  Space space_;
  std::vector<PartialGenMap> gens_;
};

struct Config {
  Word word;
  PointId point = 0;

  friend auto operator<=>(const Config&, const Config&) = default;
};

std::optional<PointId> apply_gen(const PartialAction& a, GenId g, PointId x);

/// All one-step reducts of `c`, sorted and deduplicated.
std::vector<Config> config_reducts(const PartialAction& a, const Config& c);

/// Deterministic normal reduct: the action step at the rightmost letter when
/// enabled, otherwise the leftmost word rule.
Config normalize_config(const PartialAction& a, Config c);

bool is_normal_config(const PartialAction& a, const Config& c);

struct MixedCounterexample {
  std::size_t rule = 0;
  PointId point = 0;
  Config reduct1;  ///< (rhs, x)
  Config reduct2;  ///< (lhs without its rightmost letter g_1, g_1(x))
  Config nf1;
  Config nf2;
};

struct ActionConfluenceReport {
  ConfluenceStatus status = ConfluenceStatus::Confluent;
  ConfluenceReport words;
  std::vector<MixedCounterexample> mixed;

  bool confluent() const { return status == ConfluenceStatus::Confluent; }
};

/// Word confluence plus the mixed peaks (lhs, x) with x in the domain of the
/// rightmost letter of lhs.
ActionConfluenceReport check_action_confluence(const PartialAction& a);

/// A partial action whose presentation validated and whose configuration
/// rewriting passed the confluence check. Operations that rely on unique
/// normal forms take this type.
class ConfluentAction {
 public:
  /// Throws PreconditionError if validation or the confluence check fails.
  static ConfluentAction certify(PartialAction a);

  const PartialAction& action() const { return action_; }
  const Presentation& presentation() const { return action_.presentation(); }
  const Space& space() const { return action_.space(); }
  std::size_t num_points() const { return action_.num_points(); }

 private:
  explicit ConfluentAction(PartialAction a) : action_(std::move(a)) {}
  PartialAction action_;
};

/// u·x when the normal form of (u, x) is a bare point.
std::optional<PointId> act(const ConfluentAction& a, const Word& u, PointId x);

/// Domain of a normal word u: X for e, else g_1^{-1}[dom(imprefix u)].
PointSet dom_of(const ConfluentAction& a, const Word& u);
/// Points x with (u, x) normal: X minus the domain of u's rightmost letter.
PointSet r_set(const PartialAction& a, const Word& u);

bool is_nowhere_degenerate(const PartialAction& a);
/// Generator domains closed (open) in the topology, or, without a topology,
/// saturated under zero pseudodistance. Throws PreconditionError when the
/// space has neither.
bool is_closed_action(const PartialAction& a);
bool is_open_action(const PartialAction& a);

/// A map between subsets of X; `map` is defined exactly on `source` and
/// lands in `target`.
struct Morphism {
  std::string name;
  PointSet source;
  PointSet target;
  PartialGenMap map;
};

/// Monoid of a category of partial maps with all objects identified:
/// generators are the morphisms, rules (f, g) -> (f∘g) or () when f∘g is an
/// identity, acting by evaluation. Throws InputError on identities in the
/// list or a composite that is missing from it.
PartialAction from_category(const Space& space, const std::vector<Morphism>& morphisms);

/// Canonical name of a partial map: "(xy)" for the singleton map y -> x,
/// otherwise "[s>t,...]".
std::string morphism_name(const Space& space, const PartialGenMap& map);

/// All singleton maps {y} -> {x}, x != y, as a category action. Requires at
/// least two points.
PartialAction singleton_homogeneous_action(const Space& space);

/// Triples (u1, u2, u3) of normal words of length <= bound for which no
/// normal w of length <= bound has u_i·X ∩ u_{i+1}·X ⊂ w·X for i = 1, 2, 3
/// (indices mod 3). Orbits u·X are compared as sets of normal forms.
std::vector<std::array<Word, 3>> triple_condition_check(const ConfluentAction& a,
                                                        std::size_t bound);

/// Finite monoid given by its full multiplication table.
struct FiniteMonoid {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  std::size_t unit = 0;

  std::size_t size() const { return names.size(); }
  std::size_t mul(std::size_t u, std::size_t v) const { return table[u][v]; }
  std::size_t id(std::string_view name) const;
};

/// Table shape, unit laws and associativity.
ValidationReport validate_monoid(const FiniteMonoid& m);

/// Partial action of a finite monoid given element by element.
struct MonoidAction {
  FiniteMonoid monoid;
  Space space;
  std::vector<PartialGenMap> elements;  ///< one map per monoid element

  std::optional<PointId> act(std::size_t u, PointId x) const { return elements[u](x); }
};

/// e acts as the identity and (uv)·x = u·(v·x) whenever v·x is defined, as a
/// strong equation.
ValidationReport validate_monoid_action(const MonoidAction& m);

/// Presentation with every non-unit element as a generator and rules
/// uv -> p (or -> () when uv is the unit) for all pairs.
Presentation trivial_presentation(const FiniteMonoid& m);
/// The monoid action restricted to the generators of trivial_presentation.
PartialAction to_partial_action(const MonoidAction& m);

}  // namespace pglob
