#pragma once

// Monoid presentations as string rewriting systems.
//
// A word (g_n, ..., g_1) is stored left to right, so the rightmost letter
// g_1 is the one that acts first on a point. Termination is certified by a
// shortlex order induced from a total precedence on the generators.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pglob/common.hpp"

namespace pglob {

using Word = std::vector<GenId>;

struct Rule {
  Word lhs;
  Word rhs;
  std::size_t index = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Raised by normalization when a presentation accepted through the
/// step-budget escape hatch fails to terminate within that budget.
class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class Presentation {
 public:
  Presentation() = default;

  /// `precedence` lists every generator exactly once, greatest first. An
  /// empty list means declaration order (first declared is greatest).
  /// Throws InputError on duplicate or empty names, out-of-range letters,
  /// or a malformed precedence / inverse table.
  Presentation(std::vector<std::string> generators,
               std::vector<std::pair<Word, Word>> rules,
               std::vector<GenId> precedence = {},
               std::optional<std::vector<GenId>> inverses = std::nullopt);

  std::size_t num_generators() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& name(GenId g) const { return names_.at(g); }
  GenId id(std::string_view name) const;

  const std::vector<Rule>& rules() const { return rules_; }

  /// Precedence rank of a generator; greater rank means greater letter.
  std::size_t rank(GenId g) const { return rank_[g]; }
  /// Generators ordered greatest first.
  std::vector<GenId> precedence() const;

  /// Designated inverse of each generator when the presentation is
  /// declared to present a group.
  const std::optional<std::vector<GenId>>& inverses() const { return inverses_; }
  bool is_group() const { return inverses_.has_value(); }

  /// Allow presentations without a shortlex certificate; normalization then
  /// throws StepBudgetExceeded after this many steps.
  std::optional<std::size_t> step_budget() const { return step_budget_; }
  Presentation with_step_budget(std::size_t steps) const;

  /// Every rule is strictly shortlex-decreasing.
  bool shortlex_certified() const { return certified_; }
  std::size_t max_lhs_length() const { return max_lhs_; }

  /// Strict shortlex comparison under the precedence.
  bool shortlex_less(const Word& u, const Word& v) const;

  /// Rule indices whose left side starts with `g`, ascending.
  const std::vector<std::size_t>& rules_starting_with(GenId g) const {
    return by_first_[g];
  }
  /// Rule indices whose left side ends with `g`, ascending.
  const std::vector<std::size_t>& rules_ending_with(GenId g) const {
    return by_last_[g];
  }

  bool valid_word(const Word& w) const;
  std::string format(const Word& w) const;
  /// Parses whitespace-separated generator names.
  Word parse(std::string_view text) const;

 private:
  std::vector<std::string> names_;
  std::vector<Rule> rules_;
  std::vector<std::size_t> rank_;
  std::optional<std::vector<GenId>> inverses_;
  std::optional<std::size_t> step_budget_;
  bool certified_ = true;
  std::size_t max_lhs_ = 0;
  std::vector<std::vector<std::size_t>> by_first_;
  std::vector<std::vector<std::size_t>> by_last_;
};

struct CriticalPair {
  Word peak;
  Word reduct1;
  Word reduct2;
  std::size_t rule1 = 0;
  std::size_t rule2 = 0;
};

enum class ConfluenceStatus { Confluent, NotConfluent };

struct WordCounterexample {
  Word peak;
  Word reduct1;
  Word reduct2;
  Word nf1;
  Word nf2;
};

struct ConfluenceReport {
  ConfluenceStatus status = ConfluenceStatus::Confluent;
  std::vector<WordCounterexample> counterexamples;

  bool confluent() const { return status == ConfluenceStatus::Confluent; }
};

/// Accepts iff every left side has length >= 2, rules are pairwise distinct
/// and each rule is strictly shortlex-decreasing. With a step budget set the
/// shortlex requirement is waived.
ValidationReport validate_presentation(const Presentation& p);

/// Does `lhs` occur in `w` starting at `pos`?
bool occurs_at(const Word& w, std::size_t pos, const Word& lhs);

/// True iff no rule left side occurs in `w`.
bool is_normal_word(const Presentation& p, const Word& w);

/// Every w1·rhs·w2 with w = w1·lhs·w2, sorted and deduplicated.
std::vector<Word> one_step_reducts(const Presentation& p, const Word& w);

/// Applies the leftmost redex (lowest rule index at that position) in place,
/// scanning from `from`. Returns the position of the rewrite, or nullopt
/// when `w` is normal from `from` on.
std::optional<std::size_t> rewrite_leftmost(const Presentation& p, Word& w,
                                            std::size_t from = 0);

/// Throws PreconditionError unless normalization is known to stop: either a
/// shortlex certificate or a step budget.
void require_terminating(const Presentation& p);

/// Leftmost redex first, lowest rule index among redexes at that position.
Word normalize_word(const Presentation& p, Word w);

/// Peaks from proper overlaps and containments of left sides, including a
/// rule overlapping itself. `reduct1` comes from the lower-indexed rule.
std::vector<CriticalPair> critical_pairs(const Presentation& p);

ConfluenceReport check_word_confluence(const Presentation& p);

/// Normal words of length <= max_length in shortlex order, built by
/// extending normal words one letter at a time.
std::vector<Word> normal_words(const Presentation& p, std::size_t max_length);

// Prefix order on normal forms.
bool is_prefix(const Word& u, const Word& v);
Word meet(const Word& u, const Word& v);
/// Drops the rightmost letter. Throws PreconditionError on the empty word.
Word imprefix(const Word& u);
inline std::size_t lg(const Word& u) { return u.size(); }

Word concat(const Word& u, const Word& v);
Word multiply_normal(const Presentation& p, const Word& u, const Word& v);

/// Formal inverse of a word in a group presentation.
Word inverse_word(const Presentation& p, const Word& u);

}  // namespace pglob
