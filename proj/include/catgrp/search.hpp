#pragma once

// Generator-image backtracking. A map out of a finite group is fixed by the
// images of a generating set; images are extended along right
// multiplication by generators, and any clash prunes the branch. When every
// pair (x, g) with g a generator is consistent, the extended map satisfies
// the extension rule on all pairs, so the leaves are exactly the valid maps.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "catgrp/group.hpp"

namespace catgrp {
namespace detail {

inline constexpr elem_t unset = ~elem_t{0};

// `next(x, image_of_x, i)` returns the image of x + gens[i] under the rule
// being extended. Fills `map` on the subgroup generated by gens[0..count).
template <class Next>
bool extend_images(const FiniteGroup& src, const std::vector<elem_t>& gens,
                   std::size_t count, std::size_t dst_order, bool injective,
                   Next&& next, std::vector<elem_t>& map) {
  map.assign(src.order(), unset);
  std::vector<char> used(injective ? dst_order : 0, 0);
  map[0] = 0;
  if (injective) {
    used[0] = 1;
  }
  std::vector<elem_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    elem_t x = queue[head];
    for (std::size_t i = 0; i < count; ++i) {
      elem_t y = src.op(x, gens[i]);
      elem_t img = next(x, map[x], i);
      if (map[y] == unset) {
        if (injective && used[img]++) {
          return false;
        }
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return false;
      }
    }
  }
  return true;
}

// Enumerates every assignment images[i] in candidates[i] that extends
// consistently to the whole of `src`; `visit(map)` returns false to stop.
template <class Next, class Visit>
void search_generator_images(const FiniteGroup& src,
                             const std::vector<elem_t>& gens,
                             const std::vector<std::vector<elem_t>>& candidates,
                             std::size_t dst_order, bool injective,
                             Next&& next, Visit&& visit, const Config& cfg,
                             const std::string& what) {
  std::vector<elem_t> images(gens.size(), 0);
  std::vector<elem_t> map;
  std::uint64_t nodes = 0;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) {
      return;
    }
    if (++nodes > cfg.max_search_nodes) {
      throw CapExceeded(what + ": search exceeds " +
                        std::to_string(cfg.max_search_nodes) + " nodes");
    }
    if (depth == gens.size()) {
      bool ok = extend_images(
          src, gens, depth, dst_order, injective,
          [&](elem_t x, elem_t mx, std::size_t i) { return next(x, mx, i, images); },
          map);
      if (ok) {
        check_internal(std::none_of(map.begin(), map.end(),
                                    [](elem_t v) { return v == unset; }),
                       "generators do not generate the source group");
        stop = !visit(map);
      }
      return;
    }
    for (elem_t c : candidates[depth]) {
      images[depth] = c;
      if (depth + 1 < gens.size()) {
        bool ok = extend_images(
            src, gens, depth + 1, dst_order, injective,
            [&](elem_t x, elem_t mx, std::size_t i) {
              return next(x, mx, i, images);
            },
            map);
        if (!ok) {
          continue;
        }
      }
      self(self, depth + 1);
      if (stop) {
        return;
      }
    }
  };
  rec(rec, 0);
}

inline std::vector<elem_t> order_profile(const FiniteGroup& g) {
  std::vector<elem_t> p(g.order());
  for (elem_t x = 0; x < g.order(); ++x) {
    p[x] = g.element_order(x);
  }
  std::sort(p.begin(), p.end());
  return p;
}

inline std::vector<elem_t> compose_maps(const std::vector<elem_t>& outer,
                                        const std::vector<elem_t>& inner) {
  std::vector<elem_t> m(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) {
    m[x] = outer[inner[x]];
  }
  return m;
}

}  // namespace detail

// Homomorphisms src -> dst that are bijective, found by generator-image
// backtracking with element-order pruning. At most `limit` are returned.
inline std::vector<GroupHom> group_isomorphisms(const FiniteGroup& src,
                                                const FiniteGroup& dst,
                                                const Config& cfg = {},
                                                std::size_t limit = SIZE_MAX) {
  std::vector<GroupHom> out;
  if (src.order() != dst.order() ||
      detail::order_profile(src) != detail::order_profile(dst)) {
    return out;
  }
  const auto& gens = src.generators();
  std::vector<std::vector<elem_t>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (elem_t y = 0; y < dst.order(); ++y) {
      if (dst.element_order(y) == src.element_order(gens[i])) {
        cand[i].push_back(y);
      }
    }
  }
  detail::search_generator_images(
      src, gens, cand, dst.order(), true,
      [&](elem_t, elem_t mx, std::size_t i, const std::vector<elem_t>& img) {
        return dst.op(mx, img[i]);
      },
      [&](const std::vector<elem_t>& map) {
        out.push_back(validate_hom(src, dst, map));
        return out.size() < limit;
      },
      cfg, "isomorphism search " + src.name() + " -> " + dst.name());
  return out;
}

struct AutGroup {
  FiniteGroup group;
  // Automorphisms in lexicographic order of their maps; element i of
  // `group` is elements[i], and i+j is elements[i] after elements[j].
  std::vector<GroupHom> elements;
  std::map<std::vector<elem_t>, elem_t> index;

  elem_t index_of(const GroupHom& f) const { return index_of(f.map()); }
  elem_t index_of(const std::vector<elem_t>& map) const {
    auto it = index.find(map);
    if (it == index.end()) {
      throw PreconditionError("map is not an automorphism in this list");
    }
    return it->second;
  }
};

inline AutGroup automorphism_group(const FiniteGroup& g, const Config& cfg = {}) {
  if (g.order() > cfg.max_order) {
    throw CapExceeded("automorphism_group: |" + g.name() + "| = " +
                      std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cfg.max_order));
  }
  auto isos = group_isomorphisms(g, g, cfg);
  std::sort(isos.begin(), isos.end(), [](const GroupHom& a, const GroupHom& b) {
    return a.map() < b.map();
  });
  std::vector<std::vector<elem_t>> maps;
  for (const auto& f : isos) {
    maps.push_back(f.map());
  }
  AutGroup out{detail::group_from_elements("Aut(" + g.name() + ")", maps,
                                           detail::compose_maps),
               std::move(isos),
               {}};
  for (elem_t i = 0; i < maps.size(); ++i) {
    out.index.emplace(maps[i], i);
  }
  detail::check_internal(out.elements.front() == GroupHom::identity(g),
                         "identity automorphism is not first");
  return out;
}

}  // namespace catgrp
