#pragma once

// Crossed modules alpha: A -> B with a left action of B on A, derivations,
// the Whitehead monoid and group, and the actor crossed module
// (RD(B,A), Aut(A,B,alpha), Delta).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catgrp/group.hpp"
#include "catgrp/search.hpp"

namespace catgrp {

class CrossedModule;
CrossedModule validate_xmod(FiniteGroup top, FiniteGroup base, GroupHom alpha,
                            std::vector<elem_t> action, std::string name);

class CrossedModule {
 public:
  // The trivial crossed module 1 -> 1.
  CrossedModule()
      : CrossedModule(validate_xmod(FiniteGroup(), FiniteGroup(), GroupHom(),
                                    {0}, "trivial")) {}

  const FiniteGroup& top() const noexcept { return d_->top; }
  const FiniteGroup& base() const noexcept { return d_->base; }
  const GroupHom& alpha() const noexcept { return d_->alpha; }
  // b . a
  elem_t act(elem_t b, elem_t a) const {
    return d_->action[b * d_->top.order() + a];
  }
  const std::vector<elem_t>& action() const noexcept { return d_->action; }
  const std::string& name() const noexcept { return d_->name; }

  friend bool operator==(const CrossedModule& x, const CrossedModule& y) {
    return x.d_ == y.d_ ||
           (x.d_->alpha == y.d_->alpha && x.d_->action == y.d_->action);
  }

 private:
  struct Data {
    FiniteGroup top;
    FiniteGroup base;
    GroupHom alpha;
    std::vector<elem_t> action;
    std::string name;
  };
  explicit CrossedModule(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  friend CrossedModule validate_xmod(FiniteGroup, FiniteGroup, GroupHom,
                                     std::vector<elem_t>, std::string);

  std::shared_ptr<const Data> d_;
};

// Checks the action, then CM1 alpha(b.a) = b + alpha(a) - b, then
// CM2 alpha(a).a1 = a + a1 - a, reporting the first failure with witnesses.
inline CrossedModule validate_xmod(FiniteGroup top, FiniteGroup base,
                                   GroupHom alpha, std::vector<elem_t> action,
                                   std::string name = {}) {
  if (!(alpha.src() == top) || !(alpha.dst() == base)) {
    throw ValidationError("xmod", "alpha: top -> base", {});
  }
  validate_action(top, base, action, "xmod action");
  std::size_t na = top.order();
  for (elem_t b = 0; b < base.order(); ++b) {
    for (elem_t a = 0; a < na; ++a) {
      if (alpha(action[b * na + a]) != base.conj(b, alpha(a))) {
        throw ValidationError("xmod", "CM1 alpha(b.a) = b+alpha(a)-b", {b, a});
      }
    }
  }
  for (elem_t a = 0; a < na; ++a) {
    for (elem_t a1 = 0; a1 < na; ++a1) {
      if (action[alpha(a) * na + a1] != top.conj(a, a1)) {
        throw ValidationError("xmod", "CM2 alpha(a).a1 = a+a1-a", {a, a1});
      }
    }
  }
  using D = CrossedModule::Data;
  return CrossedModule(std::make_shared<const D>(
      D{std::move(top), std::move(base), std::move(alpha), std::move(action),
        std::move(name)}));
}

// Inclusion of a normal subgroup with the conjugation action.
inline CrossedModule xmod_from_normal_inclusion(const FiniteGroup& g,
                                                const Subgroup& n) {
  if (!(n.parent() == g)) {
    throw PreconditionError("subgroup of a different group");
  }
  if (auto w = n.normality_witness()) {
    throw ValidationError("xmod_from_normal_inclusion", "normal subgroup",
                          {w->first, w->second});
  }
  FiniteGroup top = n.as_group("N(" + g.name() + ")");
  std::vector<elem_t> act(g.order() * n.size());
  for (elem_t b = 0; b < g.order(); ++b) {
    for (elem_t i = 0; i < n.size(); ++i) {
      act[b * n.size() + i] = n.index_of(g.conj(b, n.members()[i]));
    }
  }
  return validate_xmod(top, g, n.embedding(top), std::move(act),
                       "incl(" + top.name() + "," + g.name() + ")");
}

// G -> Aut(G), g |-> conjugation by g, with evaluation action.
inline CrossedModule inner_automorphism_xmod(const FiniteGroup& g,
                                             const Config& cfg = {}) {
  AutGroup aut = automorphism_group(g, cfg);
  std::vector<elem_t> inner(g.order());
  for (elem_t x = 0; x < g.order(); ++x) {
    std::vector<elem_t> m(g.order());
    for (elem_t y = 0; y < g.order(); ++y) {
      m[y] = g.conj(x, y);
    }
    inner[x] = aut.index_of(m);
  }
  std::vector<elem_t> act;
  for (const auto& f : aut.elements) {
    act.insert(act.end(), f.map().begin(), f.map().end());
  }
  return validate_xmod(g, aut.group, validate_hom(g, aut.group, inner),
                       std::move(act), "inner(" + g.name() + ")");
}

// The zero map M -> G for a G-module M.
inline CrossedModule module_xmod(const FiniteGroup& m, const FiniteGroup& g,
                                 std::vector<elem_t> action) {
  return validate_xmod(m, g, GroupHom::zero(m, g), std::move(action),
                       "module(" + m.name() + "," + g.name() + ")");
}

// G -> G identity with conjugation.
inline CrossedModule identity_xmod(const FiniteGroup& g) {
  return xmod_from_normal_inclusion(g, Subgroup::whole(g));
}

// 1 -> G.
inline CrossedModule trivial_top_xmod(const FiniteGroup& g) {
  return xmod_from_normal_inclusion(g, Subgroup::trivial(g));
}

struct Derivation {
  CrossedModule parent;
  std::vector<elem_t> map;  // B -> A

  elem_t operator()(elem_t b) const { return map[b]; }
  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.map == b.map && a.parent == b.parent;
  }
};

// Throws ValidationError with witness (b, b1) where
// d(b+b1) != d(b) + b.d(b1).
inline Derivation make_derivation(const CrossedModule& x,
                                  std::vector<elem_t> map) {
  const auto& a = x.top();
  const auto& b = x.base();
  if (map.size() != b.order()) {
    throw ValidationError("derivation", "map is total", {});
  }
  for (elem_t v : map) {
    if (v >= a.order()) {
      throw ValidationError("derivation", "image in range", {v});
    }
  }
  for (elem_t u = 0; u < b.order(); ++u) {
    for (elem_t v = 0; v < b.order(); ++v) {
      if (map[b.op(u, v)] != a.op(map[u], x.act(u, map[v]))) {
        throw ValidationError("derivation", "d(b+b1) = d(b)+b.d(b1)", {u, v});
      }
    }
  }
  return {x, std::move(map)};
}

inline Derivation zero_derivation(const CrossedModule& x) {
  return {x, std::vector<elem_t>(x.base().order(), 0)};
}

// All derivations in lexicographic order of their maps (zero map first).
// Images of a generating set of B are extended through
// d(b+g) = d(b) + b.d(g); each survivor is then checked on all pairs.
inline std::vector<Derivation> derivations(const CrossedModule& x,
                                           const Config& cfg = {}) {
  const auto& a = x.top();
  const auto& b = x.base();
  if (a.order() > cfg.max_order || b.order() > cfg.max_order) {
    throw CapExceeded("derivations: group order exceeds cap " +
                      std::to_string(cfg.max_order));
  }
  const auto& gens = b.generators();
  double space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    space *= double(a.order());
  }
  if (space > double(cfg.max_search_nodes)) {
    throw CapExceeded("derivations: |A|^gens(B) exceeds search cap");
  }
  std::vector<std::vector<elem_t>> cand(gens.size());
  for (auto& c : cand) {
    for (elem_t v = 0; v < a.order(); ++v) {
      c.push_back(v);
    }
  }
  std::vector<Derivation> out;
  detail::search_generator_images(
      b, gens, cand, a.order(), false,
      [&](elem_t u, elem_t du, std::size_t i, const std::vector<elem_t>& img) {
        return a.op(du, x.act(u, img[i]));
      },
      [&](const std::vector<elem_t>& map) {
        out.push_back(make_derivation(x, map));
        return true;
      },
      cfg, "derivations");
  std::sort(out.begin(), out.end(),
            [](const Derivation& p, const Derivation& q) { return p.map < q.map; });
  return out;
}

struct XModMorphism {
  CrossedModule src;
  CrossedModule dst;
  GroupHom fA;
  GroupHom fB;

  friend bool operator==(const XModMorphism& p, const XModMorphism& q) {
    return p.fA == q.fA && p.fB == q.fB && p.src == q.src && p.dst == q.dst;
  }
};

// fB alpha = alpha' fA and fA(b.a) = fB(b).fA(a).
inline XModMorphism make_xmod_morphism(const CrossedModule& src,
                                       const CrossedModule& dst, GroupHom fA,
                                       GroupHom fB) {
  if (!(fA.src() == src.top()) || !(fA.dst() == dst.top()) ||
      !(fB.src() == src.base()) || !(fB.dst() == dst.base())) {
    throw ValidationError("xmod morphism", "component domains", {});
  }
  for (elem_t a = 0; a < src.top().order(); ++a) {
    if (fB(src.alpha()(a)) != dst.alpha()(fA(a))) {
      throw ValidationError("xmod morphism", "fB alpha = alpha' fA", {a});
    }
  }
  for (elem_t b = 0; b < src.base().order(); ++b) {
    for (elem_t a = 0; a < src.top().order(); ++a) {
      if (fA(src.act(b, a)) != dst.act(fB(b), fA(a))) {
        throw ValidationError("xmod morphism", "fA(b.a) = fB(b).fA(a)", {b, a});
      }
    }
  }
  return {src, dst, std::move(fA), std::move(fB)};
}

inline XModMorphism compose(const XModMorphism& outer, const XModMorphism& inner) {
  return make_xmod_morphism(inner.src, outer.dst, compose(outer.fA, inner.fA),
                            compose(outer.fB, inner.fB));
}

inline XModMorphism identity_morphism(const CrossedModule& x) {
  return {x, x, GroupHom::identity(x.top()), GroupHom::identity(x.base())};
}

// theta_d(a) = d(alpha(a)) + a and sigma_d(b) = alpha(d(b)) + b, both
// validated; (theta_d, sigma_d) is checked to be a morphism X -> X.
inline std::pair<GroupHom, GroupHom> theta_sigma(const Derivation& d) {
  const auto& x = d.parent;
  const auto& a = x.top();
  const auto& b = x.base();
  std::vector<elem_t> th(a.order()), si(b.order());
  for (elem_t u = 0; u < a.order(); ++u) {
    th[u] = a.op(d(x.alpha()(u)), u);
  }
  for (elem_t v = 0; v < b.order(); ++v) {
    si[v] = b.op(x.alpha()(d(v)), v);
  }
  try {
    auto theta = validate_hom(a, a, std::move(th));
    auto sigma = validate_hom(b, b, std::move(si));
    make_xmod_morphism(x, x, theta, sigma);
    return {theta, sigma};
  } catch (const ValidationError& e) {
    detail::internal_failure(std::string("theta/sigma of a derivation: ") +
                             e.what());
  }
}

// (d1 o d2)(b) = d1(sigma_{d2}(b)) + d2(b); the equal form
// theta_{d1}(d2(b)) + d1(b) is evaluated as a cross-check.
inline Derivation whitehead_mul(const Derivation& d1, const Derivation& d2) {
  if (!(d1.parent == d2.parent)) {
    throw PreconditionError("whitehead_mul: derivations of different crossed modules");
  }
  const auto& x = d1.parent;
  const auto& a = x.top();
  const auto& b = x.base();
  auto [theta1, sigma1] = theta_sigma(d1);
  auto [theta2, sigma2] = theta_sigma(d2);
  (void)sigma1;
  (void)theta2;
  std::vector<elem_t> m(b.order());
  for (elem_t v = 0; v < b.order(); ++v) {
    m[v] = a.op(d1(sigma2(v)), d2(v));
    detail::check_internal(m[v] == a.op(theta1(d2(v)), d1(v)),
                           "the two Whitehead product formulas disagree");
  }
  try {
    return make_derivation(x, std::move(m));
  } catch (const ValidationError& e) {
    detail::internal_failure(std::string("Whitehead product: ") + e.what());
  }
}

struct WhiteheadMonoid {
  std::vector<Derivation> elements;  // canonical order, zero map first
  std::vector<std::size_t> table;    // table[i*n+j] = index of d_i o d_j

  std::size_t size() const { return elements.size(); }
  std::size_t mul(std::size_t i, std::size_t j) const {
    return table[i * size() + j];
  }
};

inline WhiteheadMonoid whitehead_monoid(const CrossedModule& x,
                                        const Config& cfg = {}) {
  WhiteheadMonoid m{derivations(x, cfg), {}};
  std::map<std::vector<elem_t>, std::size_t> index;
  for (std::size_t i = 0; i < m.size(); ++i) {
    index.emplace(m.elements[i].map, i);
  }
  m.table.resize(m.size() * m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      auto it = index.find(whitehead_mul(m.elements[i], m.elements[j]).map);
      detail::check_internal(it != index.end(),
                             "Whitehead product left the derivation set");
      m.table[i * m.size() + j] = it->second;
    }
  }
  return m;
}

struct RegularDerivations {
  FiniteGroup group;  // Whitehead group; i+j = d_i o d_j
  std::vector<Derivation> elements;
  std::map<std::vector<elem_t>, elem_t> index;

  elem_t index_of(const std::vector<elem_t>& map) const {
    auto it = index.find(map);
    if (it == index.end()) {
      throw PreconditionError("not a regular derivation");
    }
    return it->second;
  }
};

// Units of the Whitehead monoid. Each derivation is classified three ways
// (monoid unit, theta_d bijective, sigma_d bijective) and the answers must
// agree.
inline RegularDerivations regular_derivations(const CrossedModule& x,
                                              const Config& cfg = {}) {
  WhiteheadMonoid mon = whitehead_monoid(x, cfg);
  std::size_t n = mon.size();
  RegularDerivations rd;
  for (std::size_t i = 0; i < n; ++i) {
    bool unit = false;
    for (std::size_t j = 0; j < n && !unit; ++j) {
      unit = mon.mul(i, j) == 0 && mon.mul(j, i) == 0;
    }
    auto [theta, sigma] = theta_sigma(mon.elements[i]);
    bool tb = theta.is_bijective();
    bool sb = sigma.is_bijective();
    if (unit != tb || tb != sb) {
      detail::internal_failure(
          "regularity criteria disagree for derivation " + std::to_string(i));
    }
    if (unit) {
      rd.elements.push_back(mon.elements[i]);
    }
  }
  std::vector<std::vector<elem_t>> maps;
  for (const auto& d : rd.elements) {
    maps.push_back(d.map);
  }
  for (elem_t i = 0; i < maps.size(); ++i) {
    rd.index.emplace(maps[i], i);
  }
  rd.group = detail::group_from_elements(
      "RD(" + x.name() + ")", maps,
      [&](const std::vector<elem_t>& p, const std::vector<elem_t>& q) {
        return whitehead_mul({x, p}, {x, q}).map;
      });
  return rd;
}

struct XModAutGroup {
  FiniteGroup group;  // i+j = elements[i] after elements[j]
  std::vector<XModMorphism> elements;
  std::map<std::pair<std::vector<elem_t>, std::vector<elem_t>>, elem_t> index;

  elem_t index_of(const GroupHom& fA, const GroupHom& fB) const {
    auto it = index.find({fA.map(), fB.map()});
    if (it == index.end()) {
      throw PreconditionError("not an automorphism of the crossed module");
    }
    return it->second;
  }
};

// Pairs in Aut(A) x Aut(B) compatible with alpha and the action, ordered
// lexicographically on (fA, fB).
inline XModAutGroup xmod_aut_group(const CrossedModule& x, const Config& cfg = {}) {
  AutGroup aa = automorphism_group(x.top(), cfg);
  AutGroup ab = automorphism_group(x.base(), cfg);
  XModAutGroup out;
  for (const auto& fA : aa.elements) {
    for (const auto& fB : ab.elements) {
      bool ok = true;
      for (elem_t a = 0; a < x.top().order() && ok; ++a) {
        ok = fB(x.alpha()(a)) == x.alpha()(fA(a));
      }
      for (elem_t b = 0; b < x.base().order() && ok; ++b) {
        for (elem_t a = 0; a < x.top().order() && ok; ++a) {
          ok = fA(x.act(b, a)) == x.act(fB(b), fA(a));
        }
      }
      if (ok) {
        out.elements.push_back(make_xmod_morphism(x, x, fA, fB));
      }
    }
  }
  using Key = std::pair<std::vector<elem_t>, std::vector<elem_t>>;
  std::vector<Key> keys;
  for (const auto& f : out.elements) {
    keys.emplace_back(f.fA.map(), f.fB.map());
  }
  for (elem_t i = 0; i < keys.size(); ++i) {
    out.index.emplace(keys[i], i);
  }
  out.group = detail::group_from_elements(
      "Aut(" + x.name() + ")", keys, [](const Key& p, const Key& q) {
        return Key{detail::compose_maps(p.first, q.first),
                   detail::compose_maps(p.second, q.second)};
      });
  return out;
}

struct ActorXMod {
  CrossedModule xmod;  // (RD(B,A), Aut(A,B,alpha), Delta)
  RegularDerivations rd;
  XModAutGroup aut;

  bool delta_injective() const { return xmod.alpha().is_injective(); }
};

// Delta(d) = <theta_d, sigma_d> and <f,g>.d = f d g^-1; the result is run
// through validate_xmod.
inline ActorXMod actor_xmod(const CrossedModule& x, const Config& cfg = {}) {
  RegularDerivations rd = regular_derivations(x, cfg);
  XModAutGroup aut = xmod_aut_group(x, cfg);
  std::vector<elem_t> delta(rd.elements.size());
  for (elem_t i = 0; i < delta.size(); ++i) {
    auto [theta, sigma] = theta_sigma(rd.elements[i]);
    delta[i] = aut.index_of(theta, sigma);
  }
  std::size_t nr = rd.elements.size();
  std::vector<elem_t> act(aut.elements.size() * nr);
  for (elem_t k = 0; k < aut.elements.size(); ++k) {
    const auto& f = aut.elements[k].fA;
    GroupHom ginv = inverse(aut.elements[k].fB);
    for (elem_t i = 0; i < nr; ++i) {
      const auto& d = rd.elements[i];
      std::vector<elem_t> m(x.base().order());
      for (elem_t b = 0; b < m.size(); ++b) {
        m[b] = f(d(ginv(b)));
      }
      act[k * nr + i] = rd.index_of(m);
    }
  }
  auto alpha = validate_hom(rd.group, aut.group, std::move(delta));
  auto xm = validate_xmod(rd.group, aut.group, std::move(alpha), std::move(act),
                          "Act(" + x.name() + ")");
  return {std::move(xm), std::move(rd), std::move(aut)};
}

// An isomorphism of crossed modules X -> Y, if any.
inline std::optional<XModMorphism> xmod_isomorphism(const CrossedModule& x,
                                                    const CrossedModule& y,
                                                    const Config& cfg = {}) {
  auto fas = group_isomorphisms(x.top(), y.top(), cfg);
  if (fas.empty()) {
    return std::nullopt;
  }
  for (const auto& fB : group_isomorphisms(x.base(), y.base(), cfg)) {
    for (const auto& fA : fas) {
      try {
        return make_xmod_morphism(x, y, fA, fB);
      } catch (const ValidationError&) {
      }
    }
  }
  return std::nullopt;
}

}  // namespace catgrp
