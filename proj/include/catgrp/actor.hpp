#pragma once

// The actor A(G) of a group-groupoid: arrows W(G) (regular natural
// transformations under horizontal composition), objects Aut(G). Also the
// canonical morphism G -> A(G), centre, abelianization, inner and outer
// actors, completeness and the actor tower.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catgrp/gpgd.hpp"

namespace catgrp {

inline GpGdAutGroup gpgd_aut_group(const GroupGroupoid& g, const Config& cfg = {}) {
  return gpgd_automorphisms(g, cfg);
}

struct WGroup {
  using Key = std::tuple<std::vector<elem_t>, elem_t, elem_t>;

  GroupGroupoid base;
  GpGdAutGroup aut;
  // i+j = elements[i] o_h elements[j]; index 0 is the identity 1_id.
  FiniteGroup group;
  std::vector<NatTransf> elements;
  std::vector<elem_t> src;  // Aut index of the source functor
  std::vector<elem_t> tgt;  // Aut index of the target functor
  std::map<Key, elem_t> index;

  elem_t index_of(const std::vector<elem_t>& comp, elem_t f, elem_t g) const {
    auto it = index.find(Key{comp, f, g});
    if (it == index.end()) {
      throw PreconditionError("not an element of W(" + base.name() + ")");
    }
    return it->second;
  }
  elem_t index_of(const NatTransf& e) const {
    return index_of(e.comp, aut.index_of(e.f), aut.index_of(e.g));
  }
};

// W(G): every natural transformation between automorphisms of G, keyed by
// (components, source functor, target functor). Sorted lexicographically by
// key with the identity transformation of the identity functor moved first.
inline WGroup W_group(const GroupGroupoid& g, const Config& cfg = {}) {
  WGroup w{g, gpgd_aut_group(g, cfg), {}, {}, {}, {}, {}};
  const auto& autos = w.aut.elements;
  std::vector<std::pair<WGroup::Key, NatTransf>> all;
  for (elem_t i = 0; i < autos.size(); ++i) {
    for (elem_t j = 0; j < autos.size(); ++j) {
      for (auto& e : nat_transfs_between(autos[i], autos[j], cfg)) {
        all.emplace_back(WGroup::Key{e.comp, i, j}, std::move(e));
      }
    }
  }
  std::sort(all.begin(), all.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  WGroup::Key id_key{identity_transformation(autos[0]).comp, 0, 0};
  auto id_pos = std::find_if(all.begin(), all.end(),
                             [&](const auto& p) { return p.first == id_key; });
  detail::check_internal(id_pos != all.end(), "identity transformation missing");
  std::rotate(all.begin(), id_pos, id_pos + 1);

  std::size_t n = all.size();
  for (elem_t i = 0; i < n; ++i) {
    w.index.emplace(all[i].first, i);
    w.src.push_back(std::get<1>(all[i].first));
    w.tgt.push_back(std::get<2>(all[i].first));
    w.elements.push_back(std::move(all[i].second));
  }
  const auto& ag = w.aut.group;
  std::vector<elem_t> table(n * n);
  for (elem_t i = 0; i < n; ++i) {
    for (elem_t j = 0; j < n; ++j) {
      auto comp = detail::hcomp_components(w.elements[i], w.elements[j]);
      auto it = w.index.find(WGroup::Key{std::move(comp), ag.op(w.src[i], w.src[j]),
                                         ag.op(w.tgt[i], w.tgt[j])});
      if (it == w.index.end()) {
        detail::internal_failure("W(" + g.name() +
                                 ") not closed under horizontal composition");
      }
      table[i * n + j] = it->second;
    }
  }
  w.group = FiniteGroup::from_table("W(" + g.name() + ")", n, std::move(table));
  return w;
}

struct Actor {
  GroupGroupoid gpgd;  // arrows W(G), objects Aut(G)
  WGroup w;

  const GroupGroupoid& base() const { return w.base; }
  const GpGdAutGroup& aut() const { return w.aut; }
};

// A(G) with w_d0(eta) = f, w_d1(eta) = g, w_eps(f) = 1_f. The composition
// derived from the group structure is checked against vertical composition.
inline Actor actor_gpgd(const GroupGroupoid& g, const Config& cfg = {}) {
  WGroup w = W_group(g, cfg);
  const auto& wg = w.group;
  const auto& ag = w.aut.group;
  std::vector<elem_t> e(ag.order());
  for (elem_t k = 0; k < e.size(); ++k) {
    e[k] = w.index_of(identity_transformation(w.aut.elements[k]).comp, k, k);
  }
  GroupGroupoid a;
  try {
    a = validate_gpgd(wg, ag, validate_hom(wg, ag, w.src),
                      validate_hom(wg, ag, w.tgt), validate_hom(ag, wg, e),
                      "A(" + g.name() + ")", cfg);
  } catch (const ValidationError& err) {
    detail::internal_failure(std::string("actor structure: ") + err.what());
  }
  for (elem_t i = 0; i < wg.order(); ++i) {
    for (elem_t j = 0; j < wg.order(); ++j) {
      if (w.src[j] == w.tgt[i]) {
        elem_t v = w.index_of(vertical_comp(w.elements[j], w.elements[i]));
        detail::check_internal(a.compose(j, i) == v,
                               "actor composition differs from vertical composition");
      }
    }
  }
  return {std::move(a), std::move(w)};
}

namespace detail {

// f^z: b |-> 1_z + b - 1_z on arrows, w |-> z + w - z on objects.
inline std::vector<elem_t> conj_by_identity(const GroupGroupoid& g, elem_t z) {
  std::vector<elem_t> m(g.arrows().order());
  for (elem_t b = 0; b < m.size(); ++b) {
    m[b] = g.arrows().conj(g.identity(z), b);
  }
  return m;
}

}  // namespace detail

// phi: G -> A(G), phi0(z) = f^z, phi1(a) = eta^a: f^x => f^y with
// eta^a(z) = a + 1_z - a.
inline GpGdMorphism inner_phi(const Actor& act) {
  const auto& g = act.base();
  const auto& w = act.w;
  std::vector<elem_t> m0(g.objects().order()), m1(g.arrows().order());
  for (elem_t z = 0; z < m0.size(); ++z) {
    m0[z] = w.aut.index_of(detail::conj_by_identity(g, z));
  }
  for (elem_t a = 0; a < m1.size(); ++a) {
    std::vector<elem_t> comp(g.objects().order());
    for (elem_t z = 0; z < comp.size(); ++z) {
      comp[z] = g.arrows().conj(a, g.identity(z));
    }
    m1[a] = w.index_of(comp, m0[g.source(a)], m0[g.target(a)]);
  }
  try {
    auto f1 = validate_hom(g.arrows(), act.gpgd.arrows(), std::move(m1));
    auto f0 = validate_hom(g.objects(), act.gpgd.objects(), std::move(m0));
    return make_gpgd_morphism(g, act.gpgd, std::move(f1), std::move(f0));
  } catch (const ValidationError& err) {
    detail::internal_failure(std::string("canonical morphism G -> A(G): ") +
                             err.what());
  }
}

// Ker phi, computed from the formulas for phi: x with 1_x central in G1;
// a with a + 1_z - a = 1_z for all z whose endpoints lie in Ker phi0.
inline SubGroupGroupoid center_gpgd(const GroupGroupoid& g) {
  const auto& ar = g.arrows();
  auto central_identity = [&](elem_t x) {
    for (elem_t b = 0; b < ar.order(); ++b) {
      if (ar.op(g.identity(x), b) != ar.op(b, g.identity(x))) {
        return false;
      }
    }
    return true;
  };
  std::vector<char> obj_central(g.objects().order());
  std::vector<elem_t> objs, arrs;
  for (elem_t x = 0; x < obj_central.size(); ++x) {
    obj_central[x] = central_identity(x);
    if (obj_central[x]) objs.push_back(x);
  }
  for (elem_t a = 0; a < ar.order(); ++a) {
    if (!obj_central[g.source(a)] || !obj_central[g.target(a)]) {
      continue;
    }
    bool fixes = true;
    for (elem_t z = 0; z < g.objects().order() && fixes; ++z) {
      fixes = ar.conj(a, g.identity(z)) == g.identity(z);
    }
    if (fixes) arrs.push_back(a);
  }
  auto z = make_subgpgd(g, Subgroup::make(ar, std::move(arrs)),
                        Subgroup::make(g.objects(), std::move(objs)));
  detail::check_internal(z.normal, "centre is not normal");
  return z;
}

// The element-wise centre conditions: arrows a with a + 1_x = 1_x + a for
// all objects x, and objects x with a + 1_x = 1_x + a for all arrows a.
struct CenterConditions {
  std::vector<elem_t> arrows;
  std::vector<elem_t> objects;
  bool arrows_agree = true;   // matches Ker phi1
  bool objects_agree = true;  // matches Ker phi0
};

inline CenterConditions center_conditions(const GroupGroupoid& g) {
  const auto& ar = g.arrows();
  CenterConditions c;
  for (elem_t a = 0; a < ar.order(); ++a) {
    bool ok = true;
    for (elem_t x = 0; x < g.objects().order() && ok; ++x) {
      ok = ar.op(a, g.identity(x)) == ar.op(g.identity(x), a);
    }
    if (ok) c.arrows.push_back(a);
  }
  for (elem_t x = 0; x < g.objects().order(); ++x) {
    bool ok = true;
    for (elem_t a = 0; a < ar.order() && ok; ++a) {
      ok = ar.op(a, g.identity(x)) == ar.op(g.identity(x), a);
    }
    if (ok) c.objects.push_back(x);
  }
  auto z = center_gpgd(g);
  c.arrows_agree = c.arrows == z.arrows.members();
  c.objects_agree = c.objects == z.objects.members();
  return c;
}

// Z(G) = G, equivalently G1 abelian.
inline bool is_abelian(const GroupGroupoid& g) {
  bool by_center = center_gpgd(g).is_whole();
  bool by_arrows = g.arrows().is_abelian();
  detail::check_internal(by_center == by_arrows,
                         "Z(G) = G disagrees with G1 abelian");
  detail::check_internal(!by_arrows || g.objects().is_abelian(),
                         "G1 abelian but G0 not");
  return by_arrows;
}

// [H, K] = ([H1, K1], [H0, K0]).
inline SubGroupGroupoid commutator_subgpgd(const GroupGroupoid& g,
                                           const SubGroupGroupoid& h,
                                           const SubGroupGroupoid& k) {
  if (!(h.parent == g) || !(k.parent == g)) {
    throw PreconditionError("commutator_subgpgd: subgroup-groupoids of another parent");
  }
  return make_subgpgd(g, commutator_subgroup(g.arrows(), h.arrows, k.arrows),
                      commutator_subgroup(g.objects(), h.objects, k.objects));
}

inline SubGroupGroupoid derived_subgpgd(const GroupGroupoid& g) {
  auto w = whole_subgpgd(g);
  return commutator_subgpgd(g, w, w);
}

struct QuotientGpGd {
  GroupGroupoid gpgd;
  GpGdMorphism projection;
};

// G/N with the induced structural maps; they are checked to be well defined
// on cosets before validation.
inline QuotientGpGd quotient_gpgd(const GroupGroupoid& g, const SubGroupGroupoid& n,
                                  std::string name = {}, const Config& cfg = {}) {
  if (!(n.parent == g)) {
    throw PreconditionError("quotient_gpgd: subgroup-groupoid of another parent");
  }
  if (!n.normal) {
    throw ValidationError("quotient gpgd", "normal subgroup-groupoid", {});
  }
  auto q1 = quotient(g.arrows(), n.arrows, g.arrows().name() + "/N1");
  auto q0 = quotient(g.objects(), n.objects, g.objects().name() + "/N0");
  auto induce = [](const char* what, const QuotientGroup& from, const GroupHom& h,
                   const QuotientGroup& to) {
    std::vector<elem_t> m(from.group.order());
    for (elem_t c = 0; c < m.size(); ++c) {
      m[c] = to.projection(h(from.representatives[c]));
    }
    for (elem_t x = 0; x < h.src().order(); ++x) {
      if (m[from.projection(x)] != to.projection(h(x))) {
        throw ValidationError("quotient gpgd", std::string("induced ") + what +
                                                   " well defined",
                              {from.projection(x), x});
      }
    }
    return validate_hom(from.group, to.group, std::move(m));
  };
  auto d0 = induce("d0", q1, g.d0(), q0);
  auto d1 = induce("d1", q1, g.d1(), q0);
  auto eps = induce("eps", q0, g.eps(), q1);
  if (name.empty()) {
    name = g.name() + "/N";
  }
  auto qg = validate_gpgd(q1.group, q0.group, std::move(d0), std::move(d1),
                          std::move(eps), std::move(name), cfg);
  auto proj = make_gpgd_morphism(g, qg, q1.projection, q0.projection);
  return {std::move(qg), std::move(proj)};
}

// G / [G, G]
inline QuotientGpGd abelianization(const GroupGroupoid& g, const Config& cfg = {}) {
  auto q = quotient_gpgd(g, derived_subgpgd(g), g.name() + "^ab", cfg);
  detail::check_internal(is_abelian(q.gpgd), "abelianization is not abelian");
  return q;
}

struct InnerOuter {
  Actor actor;
  GpGdMorphism phi;
  SubGroupGroupoid center;  // Z(G)
  SubGroupGroupoid inner;   // I(G) = Im phi in A(G)
  QuotientGpGd outer;       // O(G) = A(G)/I(G)
  // 0 -> Z(G) -> G -> A(G) -> O(G) -> 0, checked componentwise.
  bool exact_at_center = false;
  bool exact_at_base = false;
  bool exact_at_actor = false;
  bool exact_at_outer = false;

  bool exact() const {
    return exact_at_center && exact_at_base && exact_at_actor && exact_at_outer;
  }
};

inline InnerOuter inner_outer_actor(const GroupGroupoid& g, const Config& cfg = {}) {
  Actor act = actor_gpgd(g, cfg);
  GpGdMorphism phi = inner_phi(act);
  SubGroupGroupoid z = center_gpgd(g);
  SubGroupGroupoid inner = image_gpgd(phi);
  detail::check_internal(inner.normal, "Im phi is not normal in A(G)");
  QuotientGpGd outer = quotient_gpgd(act.gpgd, inner, "O(" + g.name() + ")", cfg);
  InnerOuter r{act, phi, z, inner, outer};
  // Z(G) is a subgroup-groupoid, so its inclusion is injective by construction.
  r.exact_at_center = z.arrows.parent() == g.arrows() &&
                      z.objects.parent() == g.objects();
  auto ker_phi = kernel_gpgd(phi);
  r.exact_at_base = ker_phi.arrows == z.arrows && ker_phi.objects == z.objects;
  auto ker_proj = kernel_gpgd(outer.projection);
  r.exact_at_actor = ker_proj.arrows == inner.arrows && ker_proj.objects == inner.objects;
  r.exact_at_outer = outer.projection.f1.is_surjective() &&
                     outer.projection.f0.is_surjective();
  return r;
}

// Z(G) = 0 and phi: G -> A(G) bijective on both levels.
inline bool is_complete(const GroupGroupoid& g, const Config& cfg = {}) {
  if (!center_gpgd(g).is_zero()) {
    return false;
  }
  Actor act = actor_gpgd(g, cfg);
  return inner_phi(act).is_bijective();
}

struct ActorTower {
  std::vector<GroupGroupoid> stages;   // stages[k+1] = A(stages[k])
  std::optional<std::size_t> complete_at;
};

// Iterates A until a complete stage or max_steps further stages. Requires a
// trivial centre; each new stage is checked to have trivial centre too.
inline ActorTower actor_tower(const GroupGroupoid& g, std::size_t max_steps,
                              const Config& cfg = {}) {
  if (!center_gpgd(g).is_zero()) {
    throw PreconditionError("actor_tower: centre of " + g.name() +
                            " is nontrivial");
  }
  ActorTower t;
  t.stages.push_back(g);
  for (std::size_t k = 0;; ++k) {
    const GroupGroupoid& cur = t.stages.back();
    Actor act = actor_gpgd(cur, cfg);
    detail::check_internal(center_gpgd(act.gpgd).is_zero(),
                           "trivial centre but nontrivial actor centre");
    if (inner_phi(act).is_bijective()) {
      t.complete_at = k;
      break;
    }
    if (k == max_steps) {
      break;
    }
    t.stages.push_back(act.gpgd);
  }
  return t;
}

}  // namespace catgrp
