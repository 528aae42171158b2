#pragma once

// Finite groups as Cayley tables over element indices 0..n-1, written
// additively. Index 0 is always the identity.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "catgrp/error.hpp"

namespace catgrp {

namespace detail {

// Elements reachable from 0 by right-multiplying with `gens`, as a mask.
template <class Op>
std::vector<char> right_closure(std::size_t n, const std::vector<elem_t>& gens,
                                Op op) {
  std::vector<char> seen(n, 0);
  std::vector<elem_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    elem_t x = queue[head];
    for (elem_t g : gens) {
      elem_t y = op(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace detail

class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup() : FiniteGroup(from_table("1", 1, {0})) {}

  // Validates the table (flattened row-major, table[i*n+j] = i+j) and throws
  // ValidationError naming the first failing axiom with a witness.
  static FiniteGroup from_table(std::string name, std::size_t n,
                                std::vector<elem_t> table) {
    if (n == 0 || table.size() != n * n) {
      throw ValidationError("group", "table shape", {},
                            "expected " + std::to_string(n) + "x" +
                                std::to_string(n) + " entries");
    }
    auto at = [&](elem_t a, elem_t b) { return table[a * n + b]; };
    for (std::size_t i = 0; i < n * n; ++i) {
      if (table[i] >= n) {
        throw ValidationError("group", "entries in range",
                              {elem_t(i / n), elem_t(i % n)});
      }
    }
    for (elem_t x = 0; x < n; ++x) {
      if (at(0, x) != x || at(x, 0) != x) {
        throw ValidationError("group", "identity at index 0", {x});
      }
    }
    std::vector<char> seen(n);
    for (elem_t x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (elem_t y = 0; y < n; ++y) {
        if (seen[at(x, y)]++) {
          throw ValidationError("group", "latin square (rows)", {x, y});
        }
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (elem_t y = 0; y < n; ++y) {
        if (seen[at(y, x)]++) {
          throw ValidationError("group", "latin square (columns)", {y, x});
        }
      }
    }
    std::vector<elem_t> inverse(n);
    for (elem_t x = 0; x < n; ++x) {
      elem_t y = 0;
      while (at(x, y) != 0) {
        ++y;
      }
      if (at(y, x) != 0) {
        throw ValidationError("group", "two-sided inverse", {x, y});
      }
      inverse[x] = y;
    }
    if (n <= 64) {
      for (elem_t x = 0; x < n; ++x) {
        for (elem_t y = 0; y < n; ++y) {
          for (elem_t z = 0; z < n; ++z) {
            if (at(at(x, y), z) != at(x, at(y, z))) {
              throw ValidationError("group", "associativity", {x, y, z});
            }
          }
        }
      }
    } else {
      // Light's test: the elements g with (x+y)+g = x+(y+g) for all x, y
      // are closed under the operation, so checking a set that generates
      // the table by right multiplication covers every triple.
      std::vector<elem_t> gens;
      auto op = [&](elem_t a, elem_t b) { return at(a, b); };
      auto closure = detail::right_closure(n, gens, op);
      for (elem_t x = 0; x < n; ++x) {
        if (!closure[x]) {
          gens.push_back(x);
          closure = detail::right_closure(n, gens, op);
        }
      }
      for (elem_t g : gens) {
        for (elem_t x = 0; x < n; ++x) {
          for (elem_t y = 0; y < n; ++y) {
            if (at(at(x, y), g) != at(x, at(y, g))) {
              throw ValidationError("group", "associativity", {x, y, g});
            }
          }
        }
      }
    }

    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->n = n;
    d->table = std::move(table);
    d->inverse = std::move(inverse);
    d->orders.resize(n);
    for (elem_t x = 0; x < n; ++x) {
      elem_t k = 1;
      for (elem_t p = x; p != 0; p = d->table[p * n + x]) {
        ++k;
      }
      d->orders[x] = k;
    }
    // Greedy generating set: prefer elements of large order.
    std::vector<elem_t> by_order(n);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(), [&](elem_t a, elem_t b) {
      return d->orders[a] > d->orders[b];
    });
    auto op = [&](elem_t a, elem_t b) { return d->table[a * n + b]; };
    auto closure = detail::right_closure(n, d->gens, op);
    for (elem_t x : by_order) {
      if (!closure[x]) {
        d->gens.push_back(x);
        closure = detail::right_closure(n, d->gens, op);
      }
    }
    return FiniteGroup(std::move(d));
  }

  std::size_t order() const noexcept { return d_->n; }
  const std::string& name() const noexcept { return d_->name; }

  elem_t op(elem_t a, elem_t b) const { return d_->table[a * d_->n + b]; }
  elem_t inv(elem_t a) const { return d_->inverse[a]; }
  // a - b
  elem_t sub(elem_t a, elem_t b) const { return op(a, inv(b)); }
  // a + b - a
  elem_t conj(elem_t a, elem_t b) const { return op(op(a, b), inv(a)); }

  std::span<const elem_t> table() const noexcept { return d_->table; }
  elem_t element_order(elem_t a) const { return d_->orders[a]; }
  const std::vector<elem_t>& generators() const noexcept { return d_->gens; }

  std::optional<std::pair<elem_t, elem_t>> noncommuting_pair() const {
    for (elem_t x = 0; x < order(); ++x) {
      for (elem_t y = x + 1; y < order(); ++y) {
        if (op(x, y) != op(y, x)) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }
  bool is_abelian() const { return !noncommuting_pair(); }
  bool is_trivial() const noexcept { return order() == 1; }

  FiniteGroup renamed(std::string name) const {
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    return FiniteGroup(std::move(d));
  }

  // Equality of the underlying tables; names are labels only.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.d_ == b.d_ || a.d_->table == b.d_->table;
  }

 private:
  struct Data {
    std::string name;
    std::size_t n = 0;
    std::vector<elem_t> table;
    std::vector<elem_t> inverse;
    std::vector<elem_t> orders;
    std::vector<elem_t> gens;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

class GroupHom;
GroupHom validate_hom(FiniteGroup src, FiniteGroup dst, std::vector<elem_t> map);

namespace detail {
struct trusted_t {};
inline constexpr trusted_t trusted{};
}  // namespace detail

// A total element map between two finite groups that preserves the
// operation. Only obtainable through validate_hom or from operations whose
// output is a homomorphism by construction.
class GroupHom {
 public:
  GroupHom() : map_{0} {}
  GroupHom(detail::trusted_t, FiniteGroup src, FiniteGroup dst,
           std::vector<elem_t> map)
      : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {}

  const FiniteGroup& src() const noexcept { return src_; }
  const FiniteGroup& dst() const noexcept { return dst_; }
  const std::vector<elem_t>& map() const noexcept { return map_; }
  elem_t operator()(elem_t x) const { return map_[x]; }

  bool is_injective() const {
    std::vector<char> used(dst_.order(), 0);
    for (elem_t y : map_) {
      if (used[y]++) {
        return false;
      }
    }
    return true;
  }
  bool is_surjective() const {
    std::vector<char> used(dst_.order(), 0);
    for (elem_t y : map_) {
      used[y] = 1;
    }
    return std::all_of(used.begin(), used.end(), [](char c) { return c; });
  }
  bool is_bijective() const {
    return src_.order() == dst_.order() && is_injective();
  }

  static GroupHom identity(const FiniteGroup& g) {
    std::vector<elem_t> m(g.order());
    std::iota(m.begin(), m.end(), 0);
    return GroupHom(detail::trusted, g, g, std::move(m));
  }
  static GroupHom zero(const FiniteGroup& src, const FiniteGroup& dst) {
    return GroupHom(detail::trusted, src, dst,
                    std::vector<elem_t>(src.order(), 0));
  }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.map_ == b.map_ && a.src_ == b.src_ && a.dst_ == b.dst_;
  }

 private:
  FiniteGroup src_;
  FiniteGroup dst_;
  std::vector<elem_t> map_;
};

// Throws ValidationError with witness (x, y) where map[x+y] != map[x]+map[y].
inline GroupHom validate_hom(FiniteGroup src, FiniteGroup dst,
                             std::vector<elem_t> map) {
  if (map.size() != src.order()) {
    throw ValidationError("hom", "map is total", {},
                          "map has " + std::to_string(map.size()) +
                              " entries for a group of order " +
                              std::to_string(src.order()));
  }
  for (elem_t x = 0; x < map.size(); ++x) {
    if (map[x] >= dst.order()) {
      throw ValidationError("hom", "image in range", {x});
    }
  }
  for (elem_t x = 0; x < src.order(); ++x) {
    for (elem_t y = 0; y < src.order(); ++y) {
      if (map[src.op(x, y)] != dst.op(map[x], map[y])) {
        throw ValidationError("hom", "map[x+y] = map[x]+map[y]", {x, y});
      }
    }
  }
  return GroupHom(detail::trusted, std::move(src), std::move(dst),
                  std::move(map));
}

// outer after inner
inline GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.dst() == outer.src())) {
    throw PreconditionError("compose: codomain/domain mismatch");
  }
  std::vector<elem_t> m(inner.src().order());
  for (elem_t x = 0; x < m.size(); ++x) {
    m[x] = outer(inner(x));
  }
  return GroupHom(detail::trusted, inner.src(), outer.dst(), std::move(m));
}

inline GroupHom inverse(const GroupHom& h) {
  if (!h.is_bijective()) {
    throw PreconditionError("inverse of a non-bijective homomorphism");
  }
  std::vector<elem_t> m(h.src().order());
  for (elem_t x = 0; x < m.size(); ++x) {
    m[h(x)] = x;
  }
  return GroupHom(detail::trusted, h.dst(), h.src(), std::move(m));
}

class Subgroup {
 public:
  Subgroup() : members_{0} {}

  // Validates containment of 0 and closure.
  static Subgroup make(FiniteGroup parent, std::vector<elem_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.front() != 0) {
      throw ValidationError("subgroup", "contains identity", {});
    }
    Subgroup s(std::move(parent), std::move(members));
    for (elem_t a : s.members_) {
      if (a >= s.parent_.order()) {
        throw ValidationError("subgroup", "member in range", {a});
      }
    }
    for (elem_t a : s.members_) {
      for (elem_t b : s.members_) {
        if (!s.contains(s.parent_.op(a, b))) {
          throw ValidationError("subgroup", "closed under operation", {a, b});
        }
      }
    }
    return s;
  }

  static Subgroup generated(const FiniteGroup& parent,
                            const std::vector<elem_t>& gens) {
    auto mask = detail::right_closure(
        parent.order(), gens, [&](elem_t a, elem_t b) { return parent.op(a, b); });
    std::vector<elem_t> m;
    for (elem_t x = 0; x < parent.order(); ++x) {
      if (mask[x]) {
        m.push_back(x);
      }
    }
    return Subgroup(parent, std::move(m));
  }

  static Subgroup whole(const FiniteGroup& g) {
    std::vector<elem_t> m(g.order());
    std::iota(m.begin(), m.end(), 0);
    return Subgroup(g, std::move(m));
  }
  static Subgroup trivial(const FiniteGroup& g) { return Subgroup(g, {0}); }

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<elem_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(elem_t x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }
  bool is_whole() const { return size() == parent_.order(); }
  bool is_trivial() const { return size() == 1; }

  // (g, n) with g + n - g outside the subgroup.
  std::optional<std::pair<elem_t, elem_t>> normality_witness() const {
    for (elem_t g = 0; g < parent_.order(); ++g) {
      for (elem_t n : members_) {
        if (!contains(parent_.conj(g, n))) {
          return std::pair{g, n};
        }
      }
    }
    return std::nullopt;
  }
  bool is_normal() const { return !normality_witness(); }

  // Position of a member in the sorted member list.
  elem_t index_of(elem_t x) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x) {
      throw PreconditionError("element " + std::to_string(x) +
                              " is not in the subgroup");
    }
    return elem_t(it - members_.begin());
  }

  // The subgroup as a standalone group: element i is members()[i].
  FiniteGroup as_group(std::string name = {}) const {
    std::size_t k = size();
    std::vector<elem_t> t(k * k);
    for (elem_t i = 0; i < k; ++i) {
      for (elem_t j = 0; j < k; ++j) {
        t[i * k + j] = index_of(parent_.op(members_[i], members_[j]));
      }
    }
    if (name.empty()) {
      name = "sub(" + parent_.name() + ")";
    }
    return FiniteGroup::from_table(std::move(name), k, std::move(t));
  }

  GroupHom embedding(const FiniteGroup& as_group) const {
    return GroupHom(detail::trusted, as_group, parent_, members_);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  Subgroup(FiniteGroup parent, std::vector<elem_t> members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  FiniteGroup parent_;
  std::vector<elem_t> members_;
};

inline Subgroup kernel(const GroupHom& h) {
  std::vector<elem_t> m;
  for (elem_t x = 0; x < h.src().order(); ++x) {
    if (h(x) == 0) {
      m.push_back(x);
    }
  }
  return Subgroup::make(h.src(), std::move(m));
}

inline Subgroup image(const GroupHom& h) {
  return Subgroup::make(h.dst(), h.map());
}

inline Subgroup center(const FiniteGroup& g) {
  std::vector<elem_t> m;
  for (elem_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (elem_t x = 0; x < g.order() && central; ++x) {
      central = g.op(z, x) == g.op(x, z);
    }
    if (central) {
      m.push_back(z);
    }
  }
  return Subgroup::make(g, std::move(m));
}

// Subgroup generated by all h1 + h2 - h1 - h2.
inline Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h1,
                                    const Subgroup& h2) {
  std::vector<elem_t> comms;
  for (elem_t a : h1.members()) {
    for (elem_t b : h2.members()) {
      comms.push_back(g.sub(g.sub(g.op(a, b), a), b));
    }
  }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return Subgroup::generated(g, comms);
}

struct QuotientGroup {
  FiniteGroup group;
  GroupHom projection;
  // Minimal representative of each coset, in coset index order.
  std::vector<elem_t> representatives;
};

// Cosets are indexed by increasing minimal representative.
inline QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n,
                              std::string name = {}) {
  if (auto w = n.normality_witness()) {
    throw ValidationError("quotient", "normal subgroup",
                          {w->first, w->second},
                          "g + n - g leaves the subgroup");
  }
  constexpr elem_t unset = ~elem_t{0};
  std::vector<elem_t> coset(g.order(), unset);
  std::vector<elem_t> reps;
  for (elem_t x = 0; x < g.order(); ++x) {
    if (coset[x] != unset) {
      continue;
    }
    elem_t c = elem_t(reps.size());
    reps.push_back(x);
    for (elem_t m : n.members()) {
      coset[g.op(x, m)] = c;
    }
  }
  std::size_t k = reps.size();
  std::vector<elem_t> t(k * k);
  for (elem_t i = 0; i < k; ++i) {
    for (elem_t j = 0; j < k; ++j) {
      t[i * k + j] = coset[g.op(reps[i], reps[j])];
    }
  }
  if (name.empty()) {
    name = g.name() + "/N";
  }
  auto q = FiniteGroup::from_table(std::move(name), k, std::move(t));
  auto proj = validate_hom(g, q, std::move(coset));
  return {q, proj, std::move(reps)};
}

// Element (n, m) of a product on pairs has index n*|M| + m.
inline elem_t pair_index(elem_t n, elem_t m, std::size_t m_order) {
  return elem_t(n * m_order + m);
}

// Checks that act (flattened |M| x |N|, act[m*|N|+n] = m.n) is an action of
// M on N by automorphisms.
inline void validate_action(const FiniteGroup& n, const FiniteGroup& m,
                            const std::vector<elem_t>& act,
                            const char* kind = "action") {
  std::size_t nn = n.order();
  if (act.size() != m.order() * nn) {
    throw ValidationError(kind, "table shape", {});
  }
  for (elem_t x = 0; x < nn; ++x) {
    if (act[x] != x) {
      throw ValidationError(kind, "identity acts trivially", {0, x});
    }
  }
  for (elem_t g = 0; g < m.order(); ++g) {
    std::vector<elem_t> row(act.begin() + g * nn, act.begin() + (g + 1) * nn);
    std::vector<char> used(nn, 0);
    for (elem_t x = 0; x < nn; ++x) {
      if (row[x] >= nn || used[row[x]]++) {
        throw ValidationError(kind, "each element acts bijectively", {g, x});
      }
      for (elem_t y = 0; y < nn; ++y) {
        if (row[n.op(x, y)] != n.op(row[x], row[y])) {
          throw ValidationError(kind, "each element acts by a homomorphism",
                                {g, x, y});
        }
      }
    }
  }
  for (elem_t g = 0; g < m.order(); ++g) {
    for (elem_t h = 0; h < m.order(); ++h) {
      for (elem_t x = 0; x < nn; ++x) {
        if (act[m.op(g, h) * nn + x] != act[g * nn + act[h * nn + x]]) {
          throw ValidationError(kind, "(g+h).x = g.(h.x)", {g, h, x});
        }
      }
    }
  }
}

// N x| M on pairs (n, m): (n,m) + (n',m') = (n + m.n', m + m').
inline FiniteGroup semidirect_product_groups(const FiniteGroup& n,
                                             const FiniteGroup& m,
                                             const std::vector<elem_t>& act,
                                             std::string name = {}) {
  validate_action(n, m, act);
  std::size_t nn = n.order();
  std::size_t mm = m.order();
  std::size_t k = nn * mm;
  std::vector<elem_t> t(k * k);
  for (elem_t a = 0; a < nn; ++a) {
    for (elem_t b = 0; b < mm; ++b) {
      for (elem_t c = 0; c < nn; ++c) {
        for (elem_t d = 0; d < mm; ++d) {
          t[pair_index(a, b, mm) * k + pair_index(c, d, mm)] =
              pair_index(n.op(a, act[b * nn + c]), m.op(b, d), mm);
        }
      }
    }
  }
  if (name.empty()) {
    name = n.name() + "x|" + m.name();
  }
  return FiniteGroup::from_table(std::move(name), k, std::move(t));
}

inline std::vector<elem_t> trivial_action(const FiniteGroup& n,
                                          const FiniteGroup& m) {
  std::vector<elem_t> act(m.order() * n.order());
  for (elem_t g = 0; g < m.order(); ++g) {
    for (elem_t x = 0; x < n.order(); ++x) {
      act[g * n.order() + x] = x;
    }
  }
  return act;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::string name = {}) {
  if (name.empty()) {
    name = a.name() + "x" + b.name();
  }
  return semidirect_product_groups(a, b, trivial_action(a, b), std::move(name));
}

namespace detail {

// Materializes a group whose elements are `elems` (identity first) under
// `compose`. Throws InternalError if the set is not closed.
template <class Key, class Compose>
FiniteGroup group_from_elements(std::string name, const std::vector<Key>& elems,
                                Compose compose) {
  std::map<Key, elem_t> index;
  for (elem_t i = 0; i < elems.size(); ++i) {
    index.emplace(elems[i], i);
  }
  std::size_t n = elems.size();
  std::vector<elem_t> t(n * n);
  for (elem_t i = 0; i < n; ++i) {
    for (elem_t j = 0; j < n; ++j) {
      auto it = index.find(compose(elems[i], elems[j]));
      if (it == index.end()) {
        internal_failure(name + ": element set not closed under composition");
      }
      t[i * n + j] = it->second;
    }
  }
  return FiniteGroup::from_table(std::move(name), n, std::move(t));
}

}  // namespace detail
}  // namespace catgrp
