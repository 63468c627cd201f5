#include "pglob/glob.hpp"

#include <algorithm>
#include <numeric>

namespace pglob {

bool ElementOrder::operator()(const NormalElement& a, const NormalElement& b) const {
  if (presentation->shortlex_less(a.word, b.word)) return true;
  if (presentation->shortlex_less(b.word, a.word)) return false;
  return a.point < b.point;
}

NormalElement embed(PointId x) { return {{}, x}; }

NormalElement normal_form(const ConfluentAction& a, Config c) {
  auto nf = normalize_config(a.action(), std::move(c));
  return {std::move(nf.word), nf.point};
}

NormalElement act_on_element(const ConfluentAction& a, const Word& u, const NormalElement& el) {
  if (!a.presentation().valid_word(u)) throw InputError("word uses an unknown generator");
  return normal_form(a, {concat(u, el.word), el.point});
}

void require_normal(const ConfluentAction& a, const NormalElement& el) {
  if (el.point >= a.num_points() || !a.presentation().valid_word(el.word) ||
      !is_normal_config(a.action(), {el.word, el.point})) {
    throw InputError("element is not a normal configuration");
  }
}

bool is_equivalent(const ConfluentAction& a, const Config& c1, const Config& c2) {
  return normalize_config(a.action(), c1) == normalize_config(a.action(), c2);
}

std::optional<std::size_t> Truncation::find(const NormalElement& el) const {
  auto it = index.find(el);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Truncation enumerate_truncation(const ConfluentAction& a, std::size_t n) {
  Truncation t;
  t.bound = n;
  for (const auto& u : normal_words(a.presentation(), n)) {
    for (auto x : members(r_set(a.action(), u))) {
      t.index.emplace(NormalElement{u, x}, t.elements.size());
      t.elements.push_back({u, x});
    }
  }
  return t;
}

PointSet QuotientGlobalization::orbit(std::size_t u) const {
  PointSet out(num_classes());
  for (PointId x = 0; x < num_points(); ++x) out.set(class_of(u, x));
  return out;
}

std::string QuotientGlobalization::label(std::size_t c) const {
  const auto [u, x] = members_[c].front();
  const auto& point = action_.space.name(x);
  if (u == monoid().unit) return point;
  return monoid().names[u] + "." + point;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  }
};

}  // namespace

QuotientGlobalization finite_monoid_globalization(const MonoidAction& m) {
  const auto report = validate_monoid_action(m);
  if (!report.valid) throw InputError("inconsistent action data: " + report.violations.front());

  QuotientGlobalization q;
  q.action_ = m;
  const auto size = m.monoid.size();
  const auto n = m.space.size();
  UnionFind uf(size * n);
  for (std::size_t u = 0; u < size; ++u) {
    for (std::size_t v = 0; v < size; ++v) {
      for (PointId x = 0; x < n; ++x) {
        if (auto vx = m.act(v, x)) uf.unite(m.monoid.mul(u, v) * n + x, u * n + *vx);
      }
    }
  }

  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_class(size * n, unset);
  q.class_of_.resize(size * n);
  for (std::size_t u = 0; u < size; ++u) {
    for (PointId x = 0; x < n; ++x) {
      auto& c = root_class[uf.find(u * n + x)];
      if (c == unset) {
        c = q.members_.size();
        q.members_.emplace_back();
      }
      q.class_of_[u * n + x] = c;
      q.members_[c].push_back({u, x});
    }
  }

  const auto k = q.members_.size();
  q.act_.assign(size * k, unset);
  for (std::size_t u = 0; u < size; ++u) {
    for (std::size_t c = 0; c < k; ++c) {
      for (const auto& [v, x] : q.members_[c]) {
        const auto target = q.class_of(m.monoid.mul(u, v), x);
        auto& slot = q.act_[u * k + c];
        if (slot == unset) slot = target;
        if (slot != target) throw Error("induced action on classes is not well defined");
      }
    }
  }
  return q;
}

std::vector<std::array<std::size_t, 3>> triple_condition_check(const QuotientGlobalization& q) {
  const auto size = q.monoid().size();
  std::vector<PointSet> orbits;
  for (std::size_t u = 0; u < size; ++u) orbits.push_back(q.orbit(u));

  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t l = 0; l < size; ++l) {
        const PointSet need = (orbits[i] & orbits[j]) | (orbits[j] & orbits[l]) |
                              (orbits[l] & orbits[i]);
        bool covered = false;
        for (const auto& o : orbits) {
          if (need.is_subset_of(o)) {
            covered = true;
            break;
          }
        }
        if (!covered) out.push_back({i, j, l});
      }
    }
  }
  return out;
}

}  // namespace pglob
