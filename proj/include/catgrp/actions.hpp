#pragma once

// Actions of one group-groupoid on another (morphisms H -> A(G)),
// semidirect products, split extensions, crossed modules over
// group-groupoids, the holomorph and characteristic sub-group-groupoids.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catgrp/actor.hpp"
#include "catgrp/bridge.hpp"

namespace catgrp {

struct GpGdAction {
  GroupGroupoid acting;  // H
  Actor actor;           // A(G); actor.base() is the target G
  GpGdMorphism theta;    // H -> A(G)
  std::vector<elem_t> induced1;  // |H1| x |G1|, b.a = F^{theta1(b)}(a)
  std::vector<elem_t> induced0;  // |H0| x |G0|, x.z = theta0(x)_0(z)

  const GroupGroupoid& target() const { return actor.base(); }
  elem_t act1(elem_t b, elem_t a) const {
    return induced1[b * target().arrows().order() + a];
  }
  elem_t act0(elem_t x, elem_t z) const {
    return induced0[x * target().objects().order() + z];
  }
};

// Builds both induced group actions and checks, exhaustively:
//   d0(b.a) = d0(b).d0(a), d1(b.a) = d1(b).d1(a), eps(y.x) = 1_y.1_x,
//   (b' o b).(a' o a) = (b'.a') o (b.a).
inline GpGdAction make_action(const GroupGroupoid& h, const Actor& actor,
                              GpGdMorphism theta) {
  const char* kind = "gpgd action";
  if (!(theta.src == h) || !(theta.dst == actor.gpgd)) {
    throw ValidationError(kind, "theta: H -> A(G)", {});
  }
  theta = make_gpgd_morphism(h, actor.gpgd, theta.f1, theta.f0);
  const auto& g = actor.base();
  std::size_t n1 = g.arrows().order(), n0 = g.objects().order();

  std::vector<std::vector<elem_t>> f_cache(actor.w.elements.size());
  GpGdAction act{h, actor, theta, std::vector<elem_t>(h.arrows().order() * n1),
                 std::vector<elem_t>(h.objects().order() * n0)};
  for (elem_t b = 0; b < h.arrows().order(); ++b) {
    elem_t w = theta.f1(b);
    if (f_cache[w].empty()) {
      f_cache[w] = F_eta(actor.w.elements[w]).map();
    }
    std::copy(f_cache[w].begin(), f_cache[w].end(), act.induced1.begin() + b * n1);
  }
  for (elem_t x = 0; x < h.objects().order(); ++x) {
    const auto& f0 = actor.aut().elements[theta.f0(x)].f0;
    for (elem_t z = 0; z < n0; ++z) {
      act.induced0[x * n0 + z] = f0(z);
    }
  }
  try {
    validate_action(g.arrows(), h.arrows(), act.induced1, "induced arrow action");
    validate_action(g.objects(), h.objects(), act.induced0, "induced object action");
  } catch (const ValidationError& err) {
    detail::internal_failure(std::string("induced action: ") + err.what());
  }

  for (elem_t b = 0; b < h.arrows().order(); ++b) {
    for (elem_t a = 0; a < n1; ++a) {
      elem_t ba = act.act1(b, a);
      if (g.source(ba) != act.act0(h.source(b), g.source(a))) {
        throw InternalError("action condition (i) d0(b.a) = d0(b).d0(a) fails at (" +
                            std::to_string(b) + ", " + std::to_string(a) + ")");
      }
      if (g.target(ba) != act.act0(h.target(b), g.target(a))) {
        throw InternalError("action condition (ii) d1(b.a) = d1(b).d1(a) fails at (" +
                            std::to_string(b) + ", " + std::to_string(a) + ")");
      }
    }
  }
  for (elem_t y = 0; y < h.objects().order(); ++y) {
    for (elem_t x = 0; x < n0; ++x) {
      if (g.identity(act.act0(y, x)) != act.act1(h.identity(y), g.identity(x))) {
        throw InternalError("action condition (iii) eps(y.x) = 1_y.1_x fails at (" +
                            std::to_string(y) + ", " + std::to_string(x) + ")");
      }
    }
  }
  detail::Fibers hf(h.d0(), h.d1(), h.objects().order());
  detail::Fibers gf(g.d0(), g.d1(), n0);
  std::vector<std::pair<elem_t, elem_t>> gpairs;
  gf.for_each_composable([&](elem_t a2, elem_t a) { gpairs.emplace_back(a2, a); });
  hf.for_each_composable([&](elem_t b2, elem_t b) {
    elem_t bb = h.compose(b2, b);
    for (auto [a2, a] : gpairs) {
      if (act.act1(bb, g.compose(a2, a)) !=
          g.compose(act.act1(b2, a2), act.act1(b, a))) {
        throw InternalError(
            "action condition (iv) (b'ob).(a'oa) = (b'.a')o(b.a) fails at (" +
            std::to_string(b2) + ", " + std::to_string(b) + ", " +
            std::to_string(a2) + ", " + std::to_string(a) + ")");
      }
    }
  });
  return act;
}

// theta = 1_{A(G)}: A(G) acting on G by evaluation.
inline GpGdAction identity_action(const Actor& actor) {
  return make_action(actor.gpgd, actor, identity_morphism(actor.gpgd));
}

// theta sends everything to identities.
inline GpGdAction trivial_action(const GroupGroupoid& h, const Actor& actor) {
  return make_action(h, actor, zero_morphism(h, actor.gpgd));
}

struct ConjugationAction {
  GroupGroupoid n;        // N as a standalone group-groupoid
  GroupGroupoid m;        // M as a standalone group-groupoid
  GpGdMorphism n_incl;    // N -> G
  GpGdMorphism m_incl;    // M -> G
  GpGdAction action;      // M acting on N by m.n = m + n - m
};

// The action of a sub-group-groupoid M on a sub-group-groupoid N of the same
// parent by conjugation; N must be invariant under it.
inline ConjugationAction conjugation_action(const SubGroupGroupoid& nsub,
                                            const SubGroupGroupoid& msub,
                                            const Config& cfg = {}) {
  if (!(nsub.parent == msub.parent)) {
    throw PreconditionError("conjugation_action: different parents");
  }
  const auto& g = nsub.parent;
  const auto& ar = g.arrows();
  for (elem_t mm : msub.arrows.members()) {
    for (elem_t nn : nsub.arrows.members()) {
      if (!nsub.arrows.contains(ar.conj(mm, nn))) {
        throw PreconditionError("conjugation by " + std::to_string(mm) +
                                " does not preserve the subgroup-groupoid (moves " +
                                std::to_string(nn) + ")");
      }
    }
  }
  auto [ng, ninc] = nsub.as_gpgd("N");
  auto [mg, minc] = msub.as_gpgd("M");
  Actor an = actor_gpgd(ng, cfg);
  const auto& n1 = nsub.arrows;

  std::vector<elem_t> t0(mg.objects().order()), t1(mg.arrows().order());
  for (elem_t y = 0; y < t0.size(); ++y) {
    elem_t one = g.identity(msub.objects.members()[y]);
    std::vector<elem_t> f(ng.arrows().order());
    for (elem_t i = 0; i < f.size(); ++i) {
      f[i] = n1.index_of(ar.conj(one, n1.members()[i]));
    }
    t0[y] = an.aut().index_of(f);
  }
  for (elem_t j = 0; j < t1.size(); ++j) {
    elem_t mm = msub.arrows.members()[j];
    std::vector<elem_t> comp(ng.objects().order());
    for (elem_t k = 0; k < comp.size(); ++k) {
      elem_t x = nsub.objects.members()[k];
      comp[k] = n1.index_of(ar.conj(mm, g.identity(x)));
    }
    t1[j] = an.w.index_of(comp, t0[mg.source(j)], t0[mg.target(j)]);
  }
  auto tau = make_gpgd_morphism(
      mg, an.gpgd, validate_hom(mg.arrows(), an.gpgd.arrows(), std::move(t1)),
      validate_hom(mg.objects(), an.gpgd.objects(), std::move(t0)));
  GpGdAction act = make_action(mg, an, std::move(tau));
  for (elem_t j = 0; j < mg.arrows().order(); ++j) {
    for (elem_t i = 0; i < ng.arrows().order(); ++i) {
      detail::check_internal(
          n1.members()[act.act1(j, i)] ==
              ar.conj(msub.arrows.members()[j], n1.members()[i]),
          "F^eta of a conjugation transformation is not conjugation");
    }
  }
  return {ng, mg, ninc, minc, std::move(act)};
}

struct Semidirect {
  GroupGroupoid gpgd;  // G x| H; (a,b) at index a*|H1| + b, likewise objects
  GpGdMorphism i;      // G -> G x| H, a |-> (a,0)
  GpGdMorphism p;      // G x| H -> H, (a,b) |-> b
  GpGdMorphism s;      // H -> G x| H, b |-> (0,b)
};

inline Semidirect semidirect_gpgd(const GpGdAction& act, std::string name = {},
                                  const Config& cfg = {}) {
  const auto& g = act.target();
  const auto& h = act.acting;
  std::size_t h1 = h.arrows().order(), h0 = h.objects().order();
  FiniteGroup arrows = semidirect_product_groups(g.arrows(), h.arrows(), act.induced1,
                                                 g.arrows().name() + "x|" +
                                                     h.arrows().name());
  FiniteGroup objects = semidirect_product_groups(g.objects(), h.objects(),
                                                  act.induced0,
                                                  g.objects().name() + "x|" +
                                                      h.objects().name());
  std::vector<elem_t> s(arrows.order()), t(arrows.order()), e(objects.order());
  for (elem_t a = 0; a < g.arrows().order(); ++a) {
    for (elem_t b = 0; b < h1; ++b) {
      elem_t k = pair_index(a, b, h1);
      s[k] = pair_index(g.source(a), h.source(b), h0);
      t[k] = pair_index(g.target(a), h.target(b), h0);
    }
  }
  for (elem_t x = 0; x < g.objects().order(); ++x) {
    for (elem_t y = 0; y < h0; ++y) {
      e[pair_index(x, y, h0)] = pair_index(g.identity(x), h.identity(y), h1);
    }
  }
  if (name.empty()) {
    name = g.name() + "x|" + h.name();
  }
  GroupGroupoid sd;
  try {
    sd = validate_gpgd(arrows, objects, validate_hom(arrows, objects, std::move(s)),
                       validate_hom(arrows, objects, std::move(t)),
                       validate_hom(objects, arrows, std::move(e)), std::move(name),
                       cfg);
  } catch (const ValidationError& err) {
    detail::internal_failure(std::string("semidirect product: ") + err.what());
  }
  std::vector<elem_t> i1(g.arrows().order()), i0(g.objects().order());
  std::vector<elem_t> p1(arrows.order()), p0(objects.order());
  std::vector<elem_t> s1(h1), s0(h0);
  for (elem_t a = 0; a < i1.size(); ++a) i1[a] = pair_index(a, 0, h1);
  for (elem_t x = 0; x < i0.size(); ++x) i0[x] = pair_index(x, 0, h0);
  for (elem_t k = 0; k < p1.size(); ++k) p1[k] = elem_t(k % h1);
  for (elem_t k = 0; k < p0.size(); ++k) p0[k] = elem_t(k % h0);
  for (elem_t b = 0; b < h1; ++b) s1[b] = pair_index(0, b, h1);
  for (elem_t y = 0; y < h0; ++y) s0[y] = pair_index(0, y, h0);
  auto im = make_gpgd_morphism(g, sd, validate_hom(g.arrows(), arrows, std::move(i1)),
                               validate_hom(g.objects(), objects, std::move(i0)));
  auto pm = make_gpgd_morphism(sd, h, validate_hom(arrows, h.arrows(), std::move(p1)),
                               validate_hom(objects, h.objects(), std::move(p0)));
  auto sm = make_gpgd_morphism(h, sd, validate_hom(h.arrows(), arrows, std::move(s1)),
                               validate_hom(h.objects(), objects, std::move(s0)));
  return {std::move(sd), std::move(im), std::move(pm), std::move(sm)};
}

// G1 = N1 + M1 and N1 meet M1 = 0; then N x| M under conjugation is
// isomorphic to G via (n, m) |-> n + m.
inline BridgeReport internal_semidirect(const GroupGroupoid& g,
                                        const SubGroupGroupoid& n,
                                        const SubGroupGroupoid& m,
                                        const Config& cfg = {}) {
  BridgeReport r{ReportKind::internal_semidirect};
  if (!(n.parent == g) || !(m.parent == g)) {
    throw PreconditionError("internal_semidirect: subgroup-groupoids of another parent");
  }
  if (!n.normal) {
    r.note("N is not normal");
    return r;
  }
  const auto& ar = g.arrows();
  std::vector<char> hit(ar.order(), 0);
  for (elem_t a : n.arrows.members()) {
    for (elem_t b : m.arrows.members()) {
      hit[ar.op(a, b)] = 1;
    }
  }
  bool sum_ok = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  std::size_t meet = 0;
  for (elem_t a : n.arrows.members()) {
    meet += m.arrows.contains(a);
  }
  r.note(std::string("(i) G1 = N1 + M1: ") + (sum_ok ? "yes" : "no"));
  r.note(std::string("(ii) N1 meet M1 = 0: ") + (meet == 1 ? "yes" : "no"));
  if (!sum_ok || meet != 1) {
    return r;
  }
  ConjugationAction ca = conjugation_action(n, m, cfg);
  Semidirect sd = semidirect_gpgd(ca.action, "NxM", cfg);
  std::size_t m1 = ca.m.arrows().order(), m0 = ca.m.objects().order();
  std::vector<elem_t> f1(sd.gpgd.arrows().order()), f0(sd.gpgd.objects().order());
  for (elem_t k = 0; k < f1.size(); ++k) {
    f1[k] = ar.op(ca.n_incl.f1(elem_t(k / m1)), ca.m_incl.f1(elem_t(k % m1)));
  }
  for (elem_t k = 0; k < f0.size(); ++k) {
    f0[k] = g.objects().op(ca.n_incl.f0(elem_t(k / m0)), ca.m_incl.f0(elem_t(k % m0)));
  }
  try {
    auto iso = make_gpgd_morphism(sd.gpgd, g, validate_hom(sd.gpgd.arrows(), ar, f1),
                                  validate_hom(sd.gpgd.objects(), g.objects(), f0));
    if (iso.is_bijective()) {
      r.pass = true;
      r.gpgd_witness = std::move(iso);
      r.note("(n, m) |-> n + m is an isomorphism N x| M -> G");
      return r;
    }
    r.note("(n, m) |-> n + m is not bijective");
  } catch (const ValidationError& err) {
    r.note(std::string("(n, m) |-> n + m: ") + err.what());
  }
  if (auto iso = is_isomorphic(sd.gpgd, g, cfg)) {
    r.pass = true;
    r.gpgd_witness = std::move(iso);
    r.note("isomorphism found by search");
  }
  return r;
}

// 0 -> N -i-> G -p-> H -> 0 with section s. Checks i mono, p epi,
// Ker p = Im i and p s = 1 componentwise. With an action of G on N it also
// checks the ladder into 0 -> I(N) -> A(N) -> O(N) -> 0: the left square
// theta i = phi_N and the right square, where H -> O(N) is h |-> [theta(s h)].
inline BridgeReport verify_extension(const GpGdMorphism& i, const GpGdMorphism& p,
                                     const GpGdMorphism& s,
                                     const GpGdAction* action = nullptr,
                                     const Config& cfg = {}) {
  BridgeReport r{ReportKind::extension};
  if (!(i.dst == p.src) || !(s.src == p.dst) || !(s.dst == p.src)) {
    throw PreconditionError("verify_extension: morphisms do not form a sequence");
  }
  auto fail = [&](std::string what) {
    r.note(std::move(what));
    return r;
  };
  if (!i.f1.is_injective() || !i.f0.is_injective()) return fail("i is not mono");
  if (!p.f1.is_surjective() || !p.f0.is_surjective()) return fail("p is not epi");
  auto ker = kernel_gpgd(p);
  auto im = image_gpgd(i);
  if (!(ker.arrows == im.arrows) || !(ker.objects == im.objects)) {
    return fail("Ker p differs from Im i");
  }
  auto ps = compose(p, s);
  for (elem_t b = 0; b < ps.src.arrows().order(); ++b) {
    if (ps.f1(b) != b) {
      return fail("p s = 1 fails at arrow " + std::to_string(b));
    }
  }
  for (elem_t y = 0; y < ps.src.objects().order(); ++y) {
    if (ps.f0(y) != y) {
      return fail("p s = 1 fails at object " + std::to_string(y));
    }
  }
  r.note("i mono, p epi, Ker p = Im i, p s = 1");
  if (action != nullptr) {
    if (!(action->acting == i.dst) || !(action->target() == i.src)) {
      throw PreconditionError("verify_extension: action is not of G on N");
    }
    InnerOuter io = inner_outer_actor(i.src, cfg);
    const auto& th = action->theta;
    for (elem_t a = 0; a < i.src.arrows().order(); ++a) {
      if (th.f1(i.f1(a)) != io.phi.f1(a)) {
        return fail("left square theta i = phi fails at arrow " + std::to_string(a));
      }
    }
    for (elem_t x = 0; x < i.src.objects().order(); ++x) {
      if (th.f0(i.f0(x)) != io.phi.f0(x)) {
        return fail("left square theta i = phi fails at object " + std::to_string(x));
      }
    }
    const auto& q = io.outer.projection;
    for (elem_t a = 0; a < p.src.arrows().order(); ++a) {
      if (q.f1(th.f1(a)) != q.f1(th.f1(s.f1(p.f1(a))))) {
        return fail("right square into O(N) fails at arrow " + std::to_string(a));
      }
    }
    for (elem_t x = 0; x < p.src.objects().order(); ++x) {
      if (q.f0(th.f0(x)) != q.f0(th.f0(s.f0(p.f0(x))))) {
        return fail("right square into O(N) fails at object " + std::to_string(x));
      }
    }
    r.note("ladder into I(N), A(N), O(N) commutes");
  }
  r.pass = true;
  r.gpgd_witness = s;
  return r;
}

struct GpGdXModCheck {
  bool pass = false;
  std::optional<ValidationError> failure;  // first CM1/CM2 violation on arrows
  bool objects_level = false;              // the same identities for alpha0
};

// alpha1: G1 -> H1 with the induced H1-action is a crossed module of groups.
inline GpGdXModCheck is_gpgd_xmod(const GpGdMorphism& alpha, const GpGdAction& act) {
  if (!(alpha.src == act.target()) || !(alpha.dst == act.acting)) {
    throw PreconditionError("is_gpgd_xmod: alpha and the action do not match");
  }
  GpGdXModCheck c;
  const auto& g = alpha.src;
  const auto& h = alpha.dst;
  try {
    validate_xmod(g.arrows(), h.arrows(), alpha.f1, act.induced1);
    c.pass = true;
  } catch (const ValidationError& err) {
    c.failure = err;
  }
  c.objects_level = true;
  const auto& g0 = g.objects();
  const auto& h0 = h.objects();
  for (elem_t y = 0; y < h0.order() && c.objects_level; ++y) {
    for (elem_t x = 0; x < g0.order() && c.objects_level; ++x) {
      c.objects_level = alpha.f0(act.act0(y, x)) == h0.conj(y, alpha.f0(x));
    }
  }
  for (elem_t x = 0; x < g0.order() && c.objects_level; ++x) {
    for (elem_t x1 = 0; x1 < g0.order() && c.objects_level; ++x1) {
      c.objects_level = act.act0(alpha.f0(x), x1) == g0.conj(x, x1);
    }
  }
  return c;
}

struct Holomorph {
  Actor actor;
  GpGdAction action;  // theta = 1_{A(G)}
  Semidirect sd;      // G x| A(G)

  const GroupGroupoid& gpgd() const { return sd.gpgd; }
};

inline Holomorph holomorph(const GroupGroupoid& g, const Config& cfg = {}) {
  Actor act = actor_gpgd(g, cfg);
  GpGdAction a = identity_action(act);
  Semidirect sd = semidirect_gpgd(a, "Hol(" + g.name() + ")", cfg);
  return {std::move(act), std::move(a), std::move(sd)};
}

// H is invariant under every automorphism (both levels) and every eta in
// W(G) has eta(x) in H1 for x in H0; the restrictions are then looked up in
// A(H) and assembled into a morphism A(G) -> A(H), which is revalidated.
inline bool is_characteristic(const GroupGroupoid& g, const SubGroupGroupoid& h,
                              const Config& cfg = {}) {
  if (!(h.parent == g)) {
    throw PreconditionError("is_characteristic: subgroup-groupoid of another parent");
  }
  Actor ag = actor_gpgd(g, cfg);
  for (const auto& f : ag.aut().elements) {
    for (elem_t a : h.arrows.members()) {
      if (!h.arrows.contains(f.f1(a))) return false;
    }
    for (elem_t x : h.objects.members()) {
      if (!h.objects.contains(f.f0(x))) return false;
    }
  }
  for (const auto& eta : ag.w.elements) {
    for (elem_t x : h.objects.members()) {
      if (!h.arrows.contains(eta(x))) return false;
    }
  }
  auto [hg, inc] = h.as_gpgd("H");
  Actor ah = actor_gpgd(hg, cfg);
  std::vector<elem_t> r0(ag.aut().elements.size()), r1(ag.w.elements.size());
  for (elem_t k = 0; k < r0.size(); ++k) {
    const auto& f1 = ag.aut().elements[k].f1;
    std::vector<elem_t> m(hg.arrows().order());
    for (elem_t i = 0; i < m.size(); ++i) {
      m[i] = h.arrows.index_of(f1(h.arrows.members()[i]));
    }
    r0[k] = ah.aut().index_of(m);
  }
  for (elem_t k = 0; k < r1.size(); ++k) {
    const auto& eta = ag.w.elements[k];
    std::vector<elem_t> comp(hg.objects().order());
    for (elem_t i = 0; i < comp.size(); ++i) {
      comp[i] = h.arrows.index_of(eta(h.objects.members()[i]));
    }
    r1[k] = ah.w.index_of(comp, r0[ag.w.src[k]], r0[ag.w.tgt[k]]);
  }
  try {
    make_gpgd_morphism(ag.gpgd, ah.gpgd,
                       validate_hom(ag.gpgd.arrows(), ah.gpgd.arrows(), std::move(r1)),
                       validate_hom(ag.gpgd.objects(), ah.gpgd.objects(), std::move(r0)));
  } catch (const ValidationError& err) {
    detail::internal_failure(std::string("restriction A(G) -> A(H): ") + err.what());
  }
  return true;
}

// Embeds H in Hol(G) as {(h, 0)} and compares its normality with
// is_characteristic.
inline BridgeReport characteristic_iff_hol_normal(const GroupGroupoid& g,
                                                  const SubGroupGroupoid& h,
                                                  const Config& cfg = {}) {
  BridgeReport r{ReportKind::characteristic};
  bool ch = is_characteristic(g, h, cfg);
  Holomorph hol = holomorph(g, cfg);
  std::vector<elem_t> a, o;
  for (elem_t x : h.arrows.members()) a.push_back(hol.sd.i.f1(x));
  for (elem_t x : h.objects.members()) o.push_back(hol.sd.i.f0(x));
  auto emb = make_subgpgd(hol.gpgd(), Subgroup::make(hol.gpgd().arrows(), a),
                          Subgroup::make(hol.gpgd().objects(), o));
  r.note(std::string("characteristic: ") + (ch ? "yes" : "no"));
  r.note(std::string("normal in Hol: ") + (emb.normal ? "yes" : "no"));
  if (!emb.normal) {
    if (auto w = emb.arrows.normality_witness()) {
      r.note("arrow witness (" + std::to_string(w->first) + ", " +
             std::to_string(w->second) + ")");
    } else if (auto w0 = emb.objects.normality_witness()) {
      r.note("object witness (" + std::to_string(w0->first) + ", " +
             std::to_string(w0->second) + ")");
    }
  }
  r.pass = ch == emb.normal;
  return r;
}

}  // namespace catgrp
