#pragma once

// Group-groupoids: groupoids (G1 arrows, G0 objects) whose structural maps
// d0 (source), d1 (target) and eps (identities) are homomorphisms.
// Composition is never stored; it is always derived from the group
// operation as b o a = b - 1_y + a for a: x -> y, b: y -> z.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catgrp/builtins.hpp"
#include "catgrp/group.hpp"
#include "catgrp/search.hpp"

namespace catgrp {

class GroupGroupoid;
GroupGroupoid validate_gpgd(FiniteGroup arrows, FiniteGroup objects, GroupHom d0,
                            GroupHom d1, GroupHom eps, std::string name,
                            const Config& cfg);

class GroupGroupoid {
 public:
  // The zero group-groupoid: one object, one arrow.
  GroupGroupoid();

  const FiniteGroup& arrows() const noexcept { return d_->arrows; }
  const FiniteGroup& objects() const noexcept { return d_->objects; }
  const GroupHom& d0() const noexcept { return d_->d0; }
  const GroupHom& d1() const noexcept { return d_->d1; }
  const GroupHom& eps() const noexcept { return d_->eps; }
  const std::string& name() const noexcept { return d_->name; }

  elem_t source(elem_t a) const { return d_->d0(a); }
  elem_t target(elem_t a) const { return d_->d1(a); }
  elem_t identity(elem_t x) const { return d_->eps(x); }
  bool is_identity_arrow(elem_t a) const { return identity(source(a)) == a; }
  bool composable(elem_t b, elem_t a) const { return source(b) == target(a); }

  // b o a = b - 1_y + a; callers guarantee composability.
  elem_t compose(elem_t b, elem_t a) const {
    const auto& g = arrows();
    return g.op(g.sub(b, identity(target(a))), a);
  }
  // a^-1 = 1_x - a + 1_y
  elem_t inverse_arrow(elem_t a) const {
    const auto& g = arrows();
    return g.op(g.sub(identity(source(a)), a), identity(target(a)));
  }

  bool is_zero() const { return arrows().is_trivial(); }

  GroupGroupoid renamed(std::string name) const {
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    return GroupGroupoid(std::move(d));
  }

  friend bool operator==(const GroupGroupoid& g, const GroupGroupoid& h) {
    return g.d_ == h.d_ || (g.d_->d0 == h.d_->d0 && g.d_->d1 == h.d_->d1 &&
                            g.d_->eps == h.d_->eps);
  }

 private:
  struct Data {
    FiniteGroup arrows;
    FiniteGroup objects;
    GroupHom d0;
    GroupHom d1;
    GroupHom eps;
    std::string name;
  };
  explicit GroupGroupoid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  friend GroupGroupoid validate_gpgd(FiniteGroup, FiniteGroup, GroupHom,
                                     GroupHom, GroupHom, std::string,
                                     const Config&);

  std::shared_ptr<const Data> d_;
};

namespace detail {

// Arrows grouped by source and by target object.
struct Fibers {
  std::vector<std::vector<elem_t>> by_source;
  std::vector<std::vector<elem_t>> by_target;

  Fibers(const GroupHom& d0, const GroupHom& d1, std::size_t n_objects)
      : by_source(n_objects), by_target(n_objects) {
    for (elem_t a = 0; a < d0.src().order(); ++a) {
      by_source[d0(a)].push_back(a);
      by_target[d1(a)].push_back(a);
    }
  }

  // Calls f(b, a) for every pair with source(b) = target(a).
  template <class F>
  void for_each_composable(F&& f) const {
    for (std::size_t y = 0; y < by_source.size(); ++y) {
      for (elem_t b : by_source[y]) {
        for (elem_t a : by_target[y]) {
          f(b, a);
        }
      }
    }
  }
};

}  // namespace detail

// Checks, in order: d0 eps = d1 eps = 1; elements of Ker d0 commute with
// elements of Ker d1; b - 1_y + a = a - 1_y + b on composable pairs; source
// and target of composites; identity laws; groupoid inverses; associativity
// of composition; and the interchange law (b o a) + (d o c) = (b+d) o (a+c).
inline GroupGroupoid validate_gpgd(FiniteGroup arrows, FiniteGroup objects,
                                   GroupHom d0, GroupHom d1, GroupHom eps,
                                   std::string name = {},
                                   const Config& cfg = {}) {
  const char* kind = "gpgd";
  if (!(d0.src() == arrows) || !(d0.dst() == objects) ||
      !(d1.src() == arrows) || !(d1.dst() == objects) ||
      !(eps.src() == objects) || !(eps.dst() == arrows)) {
    throw ValidationError(kind, "structural map domains", {});
  }
  const auto& g = arrows;
  for (elem_t x = 0; x < objects.order(); ++x) {
    if (d0(eps(x)) != x || d1(eps(x)) != x) {
      throw ValidationError(kind, "(i) d0 eps = d1 eps = 1", {x});
    }
  }
  std::vector<elem_t> k0, k1;
  for (elem_t a = 0; a < g.order(); ++a) {
    if (d0(a) == 0) k0.push_back(a);
    if (d1(a) == 0) k1.push_back(a);
  }
  for (elem_t a : k0) {
    for (elem_t b : k1) {
      if (g.op(a, b) != g.op(b, a)) {
        throw ValidationError(kind, "Ker d0 commutes with Ker d1", {a, b});
      }
    }
  }
  auto comp = [&](elem_t b, elem_t a) {
    return g.op(g.sub(b, eps(d1(a))), a);
  };
  detail::Fibers fib(d0, d1, objects.order());
  fib.for_each_composable([&](elem_t b, elem_t a) {
    elem_t c = comp(b, a);
    if (c != g.op(g.sub(a, eps(d1(a))), b)) {
      throw ValidationError(kind, "b-1_y+a = a-1_y+b", {b, a});
    }
    if (d0(c) != d0(a) || d1(c) != d1(b)) {
      throw ValidationError(kind, "(ii) d0 m = d0 pi2, d1 m = d1 pi1", {b, a});
    }
  });
  for (elem_t a = 0; a < g.order(); ++a) {
    if (comp(a, eps(d0(a))) != a || comp(eps(d1(a)), a) != a) {
      throw ValidationError(kind, "(iv) identity laws", {a});
    }
    elem_t inv = g.op(g.sub(eps(d0(a)), a), eps(d1(a)));
    if (d0(inv) != d1(a) || d1(inv) != d0(a) || comp(inv, a) != eps(d0(a)) ||
        comp(a, inv) != eps(d1(a))) {
      throw ValidationError(kind, "groupoid inverse 1_x-a+1_y", {a});
    }
  }
  for (std::size_t y = 0; y < objects.order(); ++y) {
    for (elem_t b : fib.by_source[y]) {
      for (elem_t a : fib.by_target[y]) {
        for (elem_t c : fib.by_source[d1(b)]) {
          if (comp(c, comp(b, a)) != comp(comp(c, b), a)) {
            throw ValidationError(kind, "(iii) associativity of composition",
                                  {c, b, a});
          }
        }
      }
    }
  }

  std::vector<std::pair<elem_t, elem_t>> pairs;
  fib.for_each_composable([&](elem_t b, elem_t a) { pairs.emplace_back(b, a); });
  auto interchange_fails = [&](std::pair<elem_t, elem_t> p,
                               std::pair<elem_t, elem_t> q) {
    auto [b, a] = p;
    auto [d, c] = q;
    return g.op(comp(b, a), comp(d, c)) != comp(g.op(b, d), g.op(a, c));
  };
  double quads = double(pairs.size()) * double(pairs.size());
  if (quads <= double(cfg.max_quadruples)) {
    for (const auto& p : pairs) {
      for (const auto& q : pairs) {
        if (interchange_fails(p, q)) {
          throw ValidationError(kind, "interchange law",
                                {p.first, p.second, q.first, q.second});
        }
      }
    }
  } else {
    // Composable pairs form a subgroup P of G1 x G1 and composition is a map
    // P -> G1. It is a homomorphism iff m(p+s) = m(p)+m(s) for all p in P and
    // s in a set generating P by right multiplication.
    std::size_t n = g.order();
    auto key = [n](std::pair<elem_t, elem_t> p) {
      return std::size_t(p.first) * n + p.second;
    };
    auto add = [&](std::pair<elem_t, elem_t> p, std::pair<elem_t, elem_t> q) {
      return std::pair{g.op(p.first, q.first), g.op(p.second, q.second)};
    };
    std::vector<std::pair<elem_t, elem_t>> gens;
    std::vector<char> reached(n * n, 0);
    auto close = [&] {
      std::fill(reached.begin(), reached.end(), 0);
      std::vector<std::pair<elem_t, elem_t>> queue{{0, 0}};
      reached[0] = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (const auto& s : gens) {
          auto r = add(queue[h], s);
          if (!reached[key(r)]) {
            reached[key(r)] = 1;
            queue.push_back(r);
          }
        }
      }
    };
    close();
    for (const auto& p : pairs) {
      if (!reached[key(p)]) {
        gens.push_back(p);
        close();
      }
    }
    for (const auto& p : pairs) {
      for (const auto& s : gens) {
        if (interchange_fails(p, s)) {
          throw ValidationError(kind, "interchange law",
                                {p.first, p.second, s.first, s.second});
        }
      }
    }
  }

  if (name.empty()) {
    name = "(" + arrows.name() + "," + objects.name() + ")";
  }
  using D = GroupGroupoid::Data;
  return GroupGroupoid(std::make_shared<const D>(
      D{std::move(arrows), std::move(objects), std::move(d0), std::move(d1),
        std::move(eps), std::move(name)}));
}

// G1 = G0 = G, all structural maps the identity.
inline GroupGroupoid discrete_gpgd(const FiniteGroup& g) {
  auto id = GroupHom::identity(g);
  return validate_gpgd(g, g, id, id, id, "discrete(" + g.name() + ")");
}

inline GroupGroupoid::GroupGroupoid()
    : GroupGroupoid(discrete_gpgd(FiniteGroup()).renamed("0")) {}

inline GroupGroupoid zero_gpgd() { return GroupGroupoid(); }

// G1 = G x G with (x,y): x -> y, identities (x,x).
inline GroupGroupoid pair_gpgd(const FiniteGroup& g) {
  FiniteGroup g1 = direct_product(g, g);
  std::size_t n = g.order();
  std::vector<elem_t> s(n * n), t(n * n), e(n);
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      s[pair_index(x, y, n)] = x;
      t[pair_index(x, y, n)] = y;
    }
    e[x] = pair_index(x, x, n);
  }
  return validate_gpgd(g1, g, validate_hom(g1, g, s), validate_hom(g1, g, t),
                       validate_hom(g, g1, e), "pair(" + g.name() + ")");
}

// b o a with both composition formulas evaluated; throws PreconditionError
// when source(b) != target(a).
inline elem_t compose_arrows(const GroupGroupoid& g, elem_t b, elem_t a) {
  if (!g.composable(b, a)) {
    throw PreconditionError("compose_arrows: source of " + std::to_string(b) +
                            " differs from target of " + std::to_string(a));
  }
  const auto& ar = g.arrows();
  elem_t one_y = g.identity(g.target(a));
  elem_t first = ar.op(ar.sub(b, one_y), a);
  elem_t second = ar.op(ar.sub(a, one_y), b);
  detail::check_internal(first == second, "b-1_y+a differs from a-1_y+b");
  return first;
}

inline elem_t arrow_inverse(const GroupGroupoid& g, elem_t a) {
  elem_t inv = g.inverse_arrow(a);
  detail::check_internal(g.compose(inv, a) == g.identity(g.source(a)),
                         "arrow inverse");
  return inv;
}

struct GpGdMorphism {
  GroupGroupoid src;
  GroupGroupoid dst;
  GroupHom f1;
  GroupHom f0;

  bool is_bijective() const { return f1.is_bijective() && f0.is_bijective(); }
  friend bool operator==(const GpGdMorphism& p, const GpGdMorphism& q) {
    return p.f1 == q.f1 && p.f0 == q.f0 && p.src == q.src && p.dst == q.dst;
  }
};

// d0 f1 = f0 d0, d1 f1 = f0 d1, f1 eps = eps f0.
inline GpGdMorphism make_gpgd_morphism(const GroupGroupoid& src,
                                       const GroupGroupoid& dst, GroupHom f1,
                                       GroupHom f0) {
  const char* kind = "gpgd morphism";
  if (!(f1.src() == src.arrows()) || !(f1.dst() == dst.arrows()) ||
      !(f0.src() == src.objects()) || !(f0.dst() == dst.objects())) {
    throw ValidationError(kind, "component domains", {});
  }
  for (elem_t a = 0; a < src.arrows().order(); ++a) {
    if (dst.source(f1(a)) != f0(src.source(a))) {
      throw ValidationError(kind, "d0 f1 = f0 d0", {a});
    }
    if (dst.target(f1(a)) != f0(src.target(a))) {
      throw ValidationError(kind, "d1 f1 = f0 d1", {a});
    }
  }
  for (elem_t x = 0; x < src.objects().order(); ++x) {
    if (f1(src.identity(x)) != dst.identity(f0(x))) {
      throw ValidationError(kind, "f1 eps = eps f0", {x});
    }
  }
  return {src, dst, std::move(f1), std::move(f0)};
}

inline GpGdMorphism identity_morphism(const GroupGroupoid& g) {
  return {g, g, GroupHom::identity(g.arrows()), GroupHom::identity(g.objects())};
}

inline GpGdMorphism zero_morphism(const GroupGroupoid& src,
                                  const GroupGroupoid& dst) {
  return {src, dst, GroupHom::zero(src.arrows(), dst.arrows()),
          GroupHom::zero(src.objects(), dst.objects())};
}

inline GpGdMorphism compose(const GpGdMorphism& outer, const GpGdMorphism& inner) {
  if (!(inner.dst == outer.src)) {
    throw PreconditionError("compose: group-groupoid mismatch");
  }
  return {inner.src, outer.dst, compose(outer.f1, inner.f1),
          compose(outer.f0, inner.f0)};
}

inline GpGdMorphism inverse(const GpGdMorphism& f) {
  return {f.dst, f.src, inverse(f.f1), inverse(f.f0)};
}

struct SubGroupGroupoid {
  GroupGroupoid parent;
  Subgroup arrows;
  Subgroup objects;
  bool normal = false;

  bool is_zero() const { return arrows.is_trivial(); }
  bool is_whole() const { return arrows.is_whole(); }

  // The sub-group-groupoid as a standalone value plus its inclusion.
  std::pair<GroupGroupoid, GpGdMorphism> as_gpgd(std::string name = {}) const {
    FiniteGroup a = arrows.as_group(parent.arrows().name() + "'");
    FiniteGroup o = objects.as_group(parent.objects().name() + "'");
    std::vector<elem_t> s(a.order()), t(a.order()), e(o.order());
    for (elem_t i = 0; i < a.order(); ++i) {
      s[i] = objects.index_of(parent.source(arrows.members()[i]));
      t[i] = objects.index_of(parent.target(arrows.members()[i]));
    }
    for (elem_t i = 0; i < o.order(); ++i) {
      e[i] = arrows.index_of(parent.identity(objects.members()[i]));
    }
    if (name.empty()) {
      name = "sub(" + parent.name() + ")";
    }
    auto h = validate_gpgd(a, o, validate_hom(a, o, s), validate_hom(a, o, t),
                           validate_hom(o, a, e), std::move(name));
    auto inc = make_gpgd_morphism(h, parent, arrows.embedding(a),
                                  objects.embedding(o));
    return {h, inc};
  }

  friend bool operator==(const SubGroupGroupoid& p, const SubGroupGroupoid& q) {
    return p.arrows == q.arrows && p.objects == q.objects && p.parent == q.parent;
  }
};

// Validates closure under d0, d1, eps, arrow inverse and composition, and
// records whether both levels are normal.
inline SubGroupGroupoid make_subgpgd(const GroupGroupoid& g, Subgroup arrows,
                                     Subgroup objects) {
  const char* kind = "sub-group-groupoid";
  if (!(arrows.parent() == g.arrows()) || !(objects.parent() == g.objects())) {
    throw ValidationError(kind, "subgroups of the arrow and object groups", {});
  }
  for (elem_t a : arrows.members()) {
    if (!objects.contains(g.source(a)) || !objects.contains(g.target(a))) {
      throw ValidationError(kind, "closed under d0, d1", {a});
    }
    if (!arrows.contains(g.inverse_arrow(a))) {
      throw ValidationError(kind, "closed under arrow inverse", {a});
    }
  }
  for (elem_t x : objects.members()) {
    if (!arrows.contains(g.identity(x))) {
      throw ValidationError(kind, "closed under eps", {x});
    }
  }
  for (elem_t b : arrows.members()) {
    for (elem_t a : arrows.members()) {
      if (g.composable(b, a) && !arrows.contains(g.compose(b, a))) {
        throw ValidationError(kind, "closed under composition", {b, a});
      }
    }
  }
  bool normal = arrows.is_normal() && objects.is_normal();
  return {g, std::move(arrows), std::move(objects), normal};
}

inline SubGroupGroupoid whole_subgpgd(const GroupGroupoid& g) {
  return make_subgpgd(g, Subgroup::whole(g.arrows()), Subgroup::whole(g.objects()));
}

inline SubGroupGroupoid zero_subgpgd(const GroupGroupoid& g) {
  return make_subgpgd(g, Subgroup::trivial(g.arrows()),
                      Subgroup::trivial(g.objects()));
}

inline SubGroupGroupoid kernel_gpgd(const GpGdMorphism& f) {
  return make_subgpgd(f.src, kernel(f.f1), kernel(f.f0));
}

inline SubGroupGroupoid image_gpgd(const GpGdMorphism& f) {
  return make_subgpgd(f.dst, image(f.f1), image(f.f0));
}

// An additive natural transformation f => g between parallel morphisms
// C -> D; comp[x] is an arrow f(x) -> g(x) of D.
struct NatTransf {
  GpGdMorphism f;
  GpGdMorphism g;
  std::vector<elem_t> comp;

  elem_t operator()(elem_t x) const { return comp[x]; }
  const GroupGroupoid& domain() const { return f.src; }
  const GroupGroupoid& codomain() const { return f.dst; }

  friend bool operator==(const NatTransf& p, const NatTransf& q) {
    return p.comp == q.comp && p.f == q.f && p.g == q.g;
  }
};

namespace detail {

// First violated condition of a candidate transformation, if any.
inline std::optional<ValidationError> nat_transf_failure(
    const GpGdMorphism& f, const GpGdMorphism& g,
    const std::vector<elem_t>& comp) {
  const char* kind = "natural transformation";
  const auto& c = f.src;
  const auto& d = f.dst;
  if (comp.size() != c.objects().order()) {
    return ValidationError(kind, "one component per object", {});
  }
  for (elem_t x = 0; x < comp.size(); ++x) {
    if (comp[x] >= d.arrows().order() || d.source(comp[x]) != f.f0(x) ||
        d.target(comp[x]) != g.f0(x)) {
      return ValidationError(kind, "eta(x): f(x) -> g(x)", {x});
    }
  }
  for (elem_t a = 0; a < c.arrows().order(); ++a) {
    if (d.compose(comp[c.target(a)], f.f1(a)) !=
        d.compose(g.f1(a), comp[c.source(a)])) {
      return ValidationError(kind, "naturality eta(y) o f(a) = g(a) o eta(x)",
                             {a});
    }
  }
  const auto& c0 = c.objects();
  for (elem_t x = 0; x < comp.size(); ++x) {
    for (elem_t y = 0; y < comp.size(); ++y) {
      if (comp[c0.op(x, y)] != d.arrows().op(comp[x], comp[y])) {
        return ValidationError(kind, "additivity eta(x+y) = eta(x)+eta(y)",
                               {x, y});
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline NatTransf make_nat_transf(const GpGdMorphism& f, const GpGdMorphism& g,
                                 std::vector<elem_t> comp) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) {
    throw PreconditionError("natural transformation between non-parallel morphisms");
  }
  if (auto e = detail::nat_transf_failure(f, g, comp)) {
    throw *e;
  }
  return {f, g, std::move(comp)};
}

// x |-> 1_{f(x)}
inline NatTransf identity_transformation(const GpGdMorphism& f) {
  std::vector<elem_t> comp(f.src.objects().order());
  for (elem_t x = 0; x < comp.size(); ++x) {
    comp[x] = f.dst.identity(f.f0(x));
  }
  return {f, f, std::move(comp)};
}

// All additive natural transformations f => g in lexicographic order of
// their component arrays. Components are chosen on generators of the source
// object group, extended additively, then checked for naturality.
inline std::vector<NatTransf> nat_transfs_between(const GpGdMorphism& f,
                                                  const GpGdMorphism& g,
                                                  const Config& cfg = {}) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) {
    throw PreconditionError("nat_transfs_between: morphisms are not parallel");
  }
  const auto& c0 = f.src.objects();
  const auto& d = f.dst;
  if (c0.order() > cfg.max_order) {
    throw CapExceeded("nat_transfs_between: object group exceeds cap");
  }
  const auto& gens = c0.generators();
  std::vector<std::vector<elem_t>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (elem_t h = 0; h < d.arrows().order(); ++h) {
      if (d.source(h) == f.f0(gens[i]) && d.target(h) == g.f0(gens[i])) {
        cand[i].push_back(h);
      }
    }
  }
  std::vector<NatTransf> out;
  detail::search_generator_images(
      c0, gens, cand, d.arrows().order(), false,
      [&](elem_t, elem_t cx, std::size_t i, const std::vector<elem_t>& img) {
        return d.arrows().op(cx, img[i]);
      },
      [&](const std::vector<elem_t>& comp) {
        if (!detail::nat_transf_failure(f, g, comp)) {
          out.push_back({f, g, comp});
        }
        return true;
      },
      cfg, "nat_transfs_between");
  std::sort(out.begin(), out.end(), [](const NatTransf& p, const NatTransf& q) {
    return p.comp < q.comp;
  });
  return out;
}

// (z o_v e)(x) = z(x) o e(x) for e: f => g, z: g => h.
inline NatTransf vertical_comp(const NatTransf& z, const NatTransf& e) {
  if (!(e.g == z.f)) {
    throw PreconditionError("vertical_comp: target functor of the first "
                            "differs from source functor of the second");
  }
  std::vector<elem_t> comp(e.comp.size());
  for (elem_t x = 0; x < comp.size(); ++x) {
    comp[x] = e.codomain().compose(z(x), e(x));
  }
  return make_nat_transf(e.f, z.g, std::move(comp));
}

namespace detail {

// Components of e2 o_h e1 where e1: f => g (C -> D), e2: f' => g' (D -> E):
// x |-> e2(g(x)) o f'(e1(x)).
inline std::vector<elem_t> hcomp_components(const NatTransf& e2,
                                            const NatTransf& e1) {
  const auto& e = e2.codomain();
  std::vector<elem_t> comp(e1.comp.size());
  for (elem_t x = 0; x < comp.size(); ++x) {
    comp[x] = e.compose(e2(e1.g.f0(x)), e2.f.f1(e1(x)));
  }
  return comp;
}

}  // namespace detail

inline NatTransf horizontal_comp(const NatTransf& e2, const NatTransf& e1) {
  if (!(e1.codomain() == e2.domain())) {
    throw PreconditionError("horizontal_comp: codomain of the inner "
                            "transformation differs from domain of the outer");
  }
  return make_nat_transf(compose(e2.f, e1.f), compose(e2.g, e1.g),
                         detail::hcomp_components(e2, e1));
}

// x |-> [f^-1(e(g^-1(x)))]^-1, a transformation f^-1 => g^-1.
inline NatTransf horizontal_inverse(const NatTransf& e) {
  if (!e.f.is_bijective() || !e.g.is_bijective()) {
    throw PreconditionError("horizontal_inverse: endpoint functors are not "
                            "isomorphisms (transformation is not regular)");
  }
  GpGdMorphism finv = inverse(e.f);
  GpGdMorphism ginv = inverse(e.g);
  std::vector<elem_t> comp(e.codomain().objects().order());
  for (elem_t x = 0; x < comp.size(); ++x) {
    comp[x] = e.domain().inverse_arrow(finv.f1(e(ginv.f0(x))));
  }
  return make_nat_transf(finv, ginv, std::move(comp));
}

// F^eta(a) = g(a) o eta(d0 a) = eta(d1 a) o f(a), an automorphism of G1.
inline GroupHom F_eta(const NatTransf& e) {
  const auto& g = e.domain();
  if (!(g == e.codomain())) {
    throw PreconditionError("F_eta: transformation is not between endomorphisms");
  }
  if (!e.f.is_bijective() || !e.g.is_bijective()) {
    throw PreconditionError("F_eta: transformation is not regular");
  }
  std::vector<elem_t> m(g.arrows().order());
  for (elem_t a = 0; a < m.size(); ++a) {
    m[a] = g.compose(e.g.f1(a), e(g.source(a)));
    detail::check_internal(m[a] == g.compose(e(g.target(a)), e.f.f1(a)),
                           "the two expressions for F^eta disagree");
  }
  GroupHom h;
  try {
    h = validate_hom(g.arrows(), g.arrows(), std::move(m));
  } catch (const ValidationError& err) {
    detail::internal_failure(std::string("F^eta: ") + err.what());
  }
  detail::check_internal(h.is_bijective(), "F^eta is not bijective");
  return h;
}

namespace detail {

using ArrowKey = std::tuple<elem_t, elem_t, elem_t, bool, bool, bool>;

inline ArrowKey arrow_key(const GroupGroupoid& g, elem_t a) {
  return {g.arrows().element_order(a),
          g.objects().element_order(g.source(a)),
          g.objects().element_order(g.target(a)),
          g.is_identity_arrow(a),
          g.source(a) == 0,
          g.target(a) == 0};
}

inline std::vector<ArrowKey> key_profile(const GroupGroupoid& g) {
  std::vector<ArrowKey> p;
  for (elem_t a = 0; a < g.arrows().order(); ++a) {
    p.push_back(arrow_key(g, a));
  }
  std::sort(p.begin(), p.end());
  return p;
}

// Generators of G1: identities over generators of G0 first, then source-zero
// arrows, then anything still missing.
inline std::vector<elem_t> structured_generators(const GroupGroupoid& g) {
  const auto& ar = g.arrows();
  std::vector<elem_t> gens;
  auto op = [&](elem_t a, elem_t b) { return ar.op(a, b); };
  for (elem_t x : g.objects().generators()) {
    gens.push_back(g.identity(x));
  }
  auto closure = right_closure(ar.order(), gens, op);
  auto add_from = [&](auto pred) {
    std::vector<elem_t> pool;
    for (elem_t a = 0; a < ar.order(); ++a) {
      if (pred(a)) pool.push_back(a);
    }
    std::stable_sort(pool.begin(), pool.end(), [&](elem_t p, elem_t q) {
      return ar.element_order(p) > ar.element_order(q);
    });
    for (elem_t a : pool) {
      if (!closure[a]) {
        gens.push_back(a);
        closure = right_closure(ar.order(), gens, op);
      }
    }
  };
  add_from([&](elem_t a) { return g.source(a) == 0; });
  add_from([](elem_t) { return true; });
  return gens;
}

}  // namespace detail

// Bijective morphisms G -> H by backtracking over images of a generating set
// of G1 with f0 induced as f0(x) = d0(f1(1_x)); candidates must agree in
// element order, endpoint orders and identity/kernel membership.
inline std::vector<GpGdMorphism> gpgd_isomorphisms(const GroupGroupoid& g,
                                                   const GroupGroupoid& h,
                                                   const Config& cfg = {},
                                                   std::size_t limit = SIZE_MAX) {
  std::vector<GpGdMorphism> out;
  if (g.arrows().order() != h.arrows().order() ||
      g.objects().order() != h.objects().order() ||
      detail::key_profile(g) != detail::key_profile(h)) {
    return out;
  }
  auto gens = detail::structured_generators(g);
  std::vector<std::vector<elem_t>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto k = detail::arrow_key(g, gens[i]);
    for (elem_t b = 0; b < h.arrows().order(); ++b) {
      if (detail::arrow_key(h, b) == k) {
        cand[i].push_back(b);
      }
    }
  }
  const auto& h1 = h.arrows();
  detail::search_generator_images(
      g.arrows(), gens, cand, h1.order(), true,
      [&](elem_t, elem_t mx, std::size_t i, const std::vector<elem_t>& img) {
        return h1.op(mx, img[i]);
      },
      [&](const std::vector<elem_t>& map) {
        std::vector<elem_t> m0(g.objects().order());
        for (elem_t x = 0; x < m0.size(); ++x) {
          m0[x] = h.source(map[g.identity(x)]);
        }
        try {
          auto f1 = validate_hom(g.arrows(), h.arrows(), map);
          auto f0 = validate_hom(g.objects(), h.objects(), std::move(m0));
          if (!f0.is_bijective()) {
            return true;
          }
          out.push_back(make_gpgd_morphism(g, h, std::move(f1), std::move(f0)));
        } catch (const ValidationError&) {
        }
        return out.size() < limit;
      },
      cfg, "group-groupoid isomorphism search");
  return out;
}

inline std::optional<GpGdMorphism> is_isomorphic(const GroupGroupoid& g,
                                                 const GroupGroupoid& h,
                                                 const Config& cfg = {}) {
  auto isos = gpgd_isomorphisms(g, h, cfg, 1);
  if (isos.empty()) {
    return std::nullopt;
  }
  return isos.front();
}

struct GpGdAutGroup {
  FiniteGroup group;  // i+j = elements[i] after elements[j]
  std::vector<GpGdMorphism> elements;
  std::map<std::vector<elem_t>, elem_t> index;  // keyed by the f1 map

  elem_t index_of(const GpGdMorphism& f) const { return index_of(f.f1.map()); }
  elem_t index_of(const std::vector<elem_t>& f1_map) const {
    auto it = index.find(f1_map);
    if (it == index.end()) {
      throw PreconditionError("not an automorphism of the group-groupoid");
    }
    return it->second;
  }
};

// Aut(G) under composition, lexicographic on f1 (which determines f0).
inline GpGdAutGroup gpgd_automorphisms(const GroupGroupoid& g,
                                       const Config& cfg = {}) {
  if (g.arrows().order() > cfg.max_order) {
    throw CapExceeded("gpgd_automorphisms: |G1| = " +
                      std::to_string(g.arrows().order()) + " exceeds cap " +
                      std::to_string(cfg.max_order));
  }
  GpGdAutGroup out;
  out.elements = gpgd_isomorphisms(g, g, cfg);
  std::sort(out.elements.begin(), out.elements.end(),
            [](const GpGdMorphism& p, const GpGdMorphism& q) {
              return p.f1.map() < q.f1.map();
            });
  std::vector<std::vector<elem_t>> maps;
  for (const auto& f : out.elements) {
    maps.push_back(f.f1.map());
  }
  for (elem_t i = 0; i < maps.size(); ++i) {
    out.index.emplace(maps[i], i);
  }
  out.group = detail::group_from_elements("Aut(" + g.name() + ")", maps,
                                          detail::compose_maps);
  detail::check_internal(out.elements.front() == identity_morphism(g),
                         "identity functor is not first");
  return out;
}

}  // namespace catgrp
