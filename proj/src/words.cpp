#include "pglob/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace pglob {

namespace {

bool shortlex_certified(const Presentation& p, const Rule& r) {
  return p.shortlex_less(r.rhs, r.lhs);
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& repl) {
  Word out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
  return out;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<std::pair<Word, Word>> rules,
                           std::vector<GenId> precedence,
                           std::optional<std::vector<GenId>> inverses)
    : names_(std::move(generators)), inverses_(std::move(inverses)) {
  const auto n = names_.size();
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InputError("generator names must be nonempty");
    if (!seen.insert(name).second) {
      throw InputError("duplicate generator name '" + name + "'");
    }
  }

  if (precedence.empty()) {
    for (GenId g = 0; g < n; ++g) precedence.push_back(g);
  }
  if (precedence.size() != n) {
    throw InputError("precedence must list every generator exactly once");
  }
  rank_.assign(n, n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const GenId g = precedence[pos];
    if (g >= n || rank_[g] != n) {
      throw InputError("precedence must list every generator exactly once");
    }
    rank_[g] = n - 1 - pos;
  }

  if (inverses_) {
    const auto& inv = *inverses_;
    if (inv.size() != n) throw InputError("inverse table must cover every generator");
    for (GenId g = 0; g < n; ++g) {
      if (inv[g] >= n || inv[inv[g]] != g) {
        throw InputError("inverse of '" + names_[g] + "' is not an involution");
      }
    }
  }

  by_first_.resize(n);
  by_last_.resize(n);
  for (auto& [lhs, rhs] : rules) {
    if (!valid_word(lhs) || !valid_word(rhs)) {
      throw InputError("rule uses a letter outside the generator set");
    }
    const auto index = rules_.size();
    if (!lhs.empty()) {
      by_first_[lhs.front()].push_back(index);
      by_last_[lhs.back()].push_back(index);
    }
    rules_.push_back(Rule{std::move(lhs), std::move(rhs), index});
  }
  for (const auto& r : rules_) {
    certified_ = certified_ && shortlex_less(r.rhs, r.lhs);
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
}

GenId Presentation::id(std::string_view name) const {
  for (GenId g = 0; g < names_.size(); ++g) {
    if (names_[g] == name) return g;
  }
  throw InputError("unknown generator '" + std::string(name) + "'");
}

std::vector<GenId> Presentation::precedence() const {
  std::vector<GenId> order(names_.size());
  for (GenId g = 0; g < names_.size(); ++g) order[names_.size() - 1 - rank_[g]] = g;
  return order;
}

Presentation Presentation::with_step_budget(std::size_t steps) const {
  Presentation copy = *this;
  copy.step_budget_ = steps;
  return copy;
}

bool Presentation::shortlex_less(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return rank_[u[i]] < rank_[v[i]];
  }
  return false;
}

bool Presentation::valid_word(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](GenId g) { return g < names_.size(); });
}

std::string Presentation::format(const Word& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names_.at(w[i]);
  }
  return out;
}

Word Presentation::parse(std::string_view text) const {
  std::istringstream in{std::string(text)};
  Word w;
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    w.push_back(id(token));
  }
  return w;
}

ValidationReport validate_presentation(const Presentation& p) {
  ValidationReport report;
  const auto& rules = p.rules();
  for (const auto& r : rules) {
    const auto label = "rule " + std::to_string(r.index) + " (" + p.format(r.lhs) +
                       " -> " + p.format(r.rhs) + ")";
    if (r.lhs.size() < 2) {
      report.fail(label + ": left side must have at least two letters");
    }
    if (!p.step_budget() && !shortlex_certified(p, r)) {
      report.fail(label + ": not shortlex-decreasing under the precedence");
    }
    for (std::size_t j = 0; j < r.index; ++j) {
      if (rules[j].lhs == r.lhs && rules[j].rhs == r.rhs) {
        report.fail(label + ": duplicates rule " + std::to_string(j));
      }
    }
  }
  return report;
}

bool occurs_at(const Word& w, std::size_t pos, const Word& lhs) {
  if (pos + lhs.size() > w.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool is_normal_word(const Presentation& p, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (auto r : p.rules_starting_with(w[i])) {
      if (occurs_at(w, i, p.rules()[r].lhs)) return false;
    }
  }
  // Empty left sides are rejected by validation but may still be present.
  for (const auto& r : p.rules()) {
    if (r.lhs.empty()) return false;
  }
  return true;
}

std::vector<Word> one_step_reducts(const Presentation& p, const Word& w) {
  std::set<Word> out;
  for (const auto& r : p.rules()) {
    if (r.lhs.size() > w.size()) continue;
    for (std::size_t pos = 0; pos + r.lhs.size() <= w.size(); ++pos) {
      if (occurs_at(w, pos, r.lhs)) out.insert(splice(w, pos, r.lhs.size(), r.rhs));
    }
  }
  return {out.begin(), out.end()};
}

std::optional<std::size_t> rewrite_leftmost(const Presentation& p, Word& w,
                                            std::size_t from) {
  for (std::size_t i = from; i < w.size(); ++i) {
    for (auto ri : p.rules_starting_with(w[i])) {
      const auto& r = p.rules()[ri];
      if (occurs_at(w, i, r.lhs)) {
        w = splice(w, i, r.lhs.size(), r.rhs);
        return i;
      }
    }
  }
  return std::nullopt;
}

void require_terminating(const Presentation& p) {
  if (!p.shortlex_certified() && !p.step_budget()) {
    throw PreconditionError(
        "presentation lacks a shortlex termination certificate; set a step budget");
  }
}

Word normalize_word(const Presentation& p, Word w) {
  require_terminating(p);
  const auto budget = p.step_budget();
  const auto window = p.max_lhs_length();
  std::size_t steps = 0;
  std::size_t from = 0;
  while (auto pos = rewrite_leftmost(p, w, from)) {
    // A new redex can only start where the replacement could reach.
    from = *pos + 1 >= window ? *pos + 1 - window : 0;
    if (budget && ++steps > *budget) {
      throw StepBudgetExceeded("normalization exceeded the step budget of " +
                               std::to_string(*budget));
    }
  }
  return w;
}

std::vector<CriticalPair> critical_pairs(const Presentation& p) {
  std::vector<CriticalPair> out;
  const auto& rules = p.rules();
  auto emit = [&](Word peak, std::size_t i, Word via_i, std::size_t j, Word via_j) {
    if (j < i) {
      std::swap(i, j);
      std::swap(via_i, via_j);
    }
    out.push_back({std::move(peak), std::move(via_i), std::move(via_j), i, j});
  };

  for (const auto& ri : rules) {
    const auto& li = ri.lhs;
    for (const auto& rj : rules) {
      const auto& lj = rj.lhs;
      // Proper overlap: a suffix of li of length k is a prefix of lj.
      const auto kmax = std::min(li.size(), lj.size());
      for (std::size_t k = 1; k < kmax; ++k) {
        if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) {
          continue;
        }
        Word tail(lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
        Word head(li.begin(), li.end() - static_cast<std::ptrdiff_t>(k));
        emit(concat(li, tail), ri.index, concat(ri.rhs, tail), rj.index,
             concat(head, rj.rhs));
      }
      // Containment: lj occurs inside li.
      if (ri.index == rj.index || lj.empty()) continue;
      if (lj.size() > li.size()) continue;
      if (lj.size() == li.size() && rj.index < ri.index) continue;
      for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
        if (occurs_at(li, pos, lj)) {
          emit(li, ri.index, ri.rhs, rj.index, splice(li, pos, lj.size(), rj.rhs));
        }
      }
    }
  }
  return out;
}

ConfluenceReport check_word_confluence(const Presentation& p) {
  ConfluenceReport report;
  for (const auto& cp : critical_pairs(p)) {
    auto nf1 = normalize_word(p, cp.reduct1);
    auto nf2 = normalize_word(p, cp.reduct2);
    if (nf1 != nf2) {
      report.status = ConfluenceStatus::NotConfluent;
      report.counterexamples.push_back(
          {cp.peak, cp.reduct1, cp.reduct2, std::move(nf1), std::move(nf2)});
    }
  }
  return report;
}

std::vector<Word> normal_words(const Presentation& p, std::size_t max_length) {
  std::vector<GenId> ascending = p.precedence();
  std::reverse(ascending.begin(), ascending.end());

  std::vector<Word> all{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (auto g : ascending) {
        Word ext = w;
        ext.push_back(g);
        bool normal = true;
        for (auto ri : p.rules_ending_with(g)) {
          const auto& lhs = p.rules()[ri].lhs;
          if (lhs.size() <= ext.size() && occurs_at(ext, ext.size() - lhs.size(), lhs)) {
            normal = false;
            break;
          }
        }
        if (normal) next.push_back(std::move(ext));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.empty()) break;
  }
  return all;
}

bool is_prefix(const Word& u, const Word& v) {
  return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

Word meet(const Word& u, const Word& v) {
  auto [iu, iv] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
  return Word(u.begin(), iu);
}

Word imprefix(const Word& u) {
  if (u.empty()) throw PreconditionError("imprefix of the empty word");
  return Word(u.begin(), u.end() - 1);
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word multiply_normal(const Presentation& p, const Word& u, const Word& v) {
  return normalize_word(p, concat(u, v));
}

Word inverse_word(const Presentation& p, const Word& u) {
  if (!p.inverses()) throw PreconditionError("presentation declares no group structure");
  const auto& inv = *p.inverses();
  Word out(u.rbegin(), u.rend());
  for (auto& g : out) g = inv[g];
  return out;
}

}  // namespace pglob
