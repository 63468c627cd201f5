#pragma once

// The set-level globalization Y: normal elements (u, x) with x in R_u, the
// total action on them, truncations Y_n, and a union-find quotient of
// M × X for finite monoids given by a table.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pglob/paction.hpp"

namespace pglob {

struct NormalElement {
  Word word;
  PointId point = 0;

  /// Plain lexicographic order, for use as a map key. The canonical
  /// enumeration order is ElementOrder.
  friend auto operator<=>(const NormalElement&, const NormalElement&) = default;
};

/// Shortlex on the word under the precedence, then point index.
struct ElementOrder {
  const Presentation* presentation;
  bool operator()(const NormalElement& a, const NormalElement& b) const;
};

inline std::size_t lg(const NormalElement& a) { return a.word.size(); }

NormalElement embed(PointId x);

/// Normal form of a configuration.
NormalElement normal_form(const ConfluentAction& a, Config c);

/// u·[w, x] = [uw, x].
NormalElement act_on_element(const ConfluentAction& a, const Word& u, const NormalElement& el);

/// Throws InputError unless `el` is a normal configuration.
void require_normal(const ConfluentAction& a, const NormalElement& el);

bool is_equivalent(const ConfluentAction& a, const Config& c1, const Config& c2);

struct Truncation {
  std::size_t bound = 0;
  std::vector<NormalElement> elements;  ///< canonical order
  std::map<NormalElement, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> find(const NormalElement& el) const;
};

/// All normal elements of length <= n in canonical order.
Truncation enumerate_truncation(const ConfluentAction& a, std::size_t n);

/// M × X modulo the equivalence generated by (uv, x) ~ (u, v·x) for v·x
/// defined. Classes are numbered by first occurrence scanning elements in
/// order, points in order within each element.
class QuotientGlobalization {
 public:
  const MonoidAction& action() const { return action_; }
  const FiniteMonoid& monoid() const { return action_.monoid; }
  std::size_t num_points() const { return action_.space.size(); }
  std::size_t num_classes() const { return members_.size(); }

  std::size_t class_of(std::size_t u, PointId x) const { return class_of_[u * num_points() + x]; }
  /// Members (u, x) of a class, ascending.
  const std::vector<std::pair<std::size_t, PointId>>& members(std::size_t c) const {
    return members_[c];
  }
  /// u·[v, x] = [uv, x].
  std::size_t act(std::size_t u, std::size_t c) const { return act_[u * num_classes() + c]; }
  std::size_t embed(PointId x) const { return class_of(monoid().unit, x); }
  /// Classes of u·X.
  PointSet orbit(std::size_t u) const;

  /// Readable class label "u·x" using its first member.
  std::string label(std::size_t c) const;

 private:
  friend QuotientGlobalization finite_monoid_globalization(const MonoidAction& m);

  MonoidAction action_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::pair<std::size_t, PointId>>> members_;
  std::vector<std::size_t> act_;
};

/// Throws InputError when the action data fails validate_monoid_action.
QuotientGlobalization finite_monoid_globalization(const MonoidAction& m);

/// Triples of monoid elements with no w ∈ M such that
/// u_i·X ∩ u_{i+1}·X ⊂ w·X for i = 1, 2, 3 (indices mod 3).
std::vector<std::array<std::size_t, 3>> triple_condition_check(const QuotientGlobalization& q);

}  // namespace pglob
