// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every check is exhaustive over the catalog.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "oracles.hpp"

using namespace catgrp;

namespace {

// Collects the first failure of a criterion.
struct Check {
  std::string failure;

  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  bool ok() const { return failure.empty(); }
};

template <class F>
bool rejects_with_witness(F&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return !e.witness().empty();
  }
  return false;
}

std::vector<elem_t> table_of(const FiniteGroup& g) {
  return {g.table().begin(), g.table().end()};
}

// The four compatibility conditions of an action of H on G, evaluated
// directly on the induced actions.
bool action_conditions_hold(const GpGdAction& act) {
  const auto& g = act.target();
  const auto& h = act.acting;
  for (elem_t b = 0; b < h.arrows().order(); ++b) {
    for (elem_t a = 0; a < g.arrows().order(); ++a) {
      elem_t ba = act.act1(b, a);
      if (g.source(ba) != act.act0(h.source(b), g.source(a))) return false;
      if (g.target(ba) != act.act0(h.target(b), g.target(a))) return false;
    }
  }
  for (elem_t y = 0; y < h.objects().order(); ++y) {
    for (elem_t x = 0; x < g.objects().order(); ++x) {
      if (g.identity(act.act0(y, x)) != act.act1(h.identity(y), g.identity(x))) return false;
    }
  }
  std::vector<std::pair<elem_t, elem_t>> gp, hp;
  for (elem_t a2 = 0; a2 < g.arrows().order(); ++a2)
    for (elem_t a = 0; a < g.arrows().order(); ++a)
      if (g.composable(a2, a)) gp.emplace_back(a2, a);
  for (elem_t b2 = 0; b2 < h.arrows().order(); ++b2)
    for (elem_t b = 0; b < h.arrows().order(); ++b)
      if (h.composable(b2, b)) hp.emplace_back(b2, b);
  for (auto [b2, b] : hp) {
    for (auto [a2, a] : gp) {
      if (act.act1(h.compose(b2, b), g.compose(a2, a)) !=
          g.compose(act.act1(b2, a2), act.act1(b, a)))
        return false;
    }
  }
  return true;
}

Check criterion1() {
  Check c;
  for (const auto& [name, g] : catalog::gpgds()) {
    c.require(oracle::interchange_holds(g), name + ": interchange law");
    bool revalid = true;
    try {
      validate_gpgd(g.arrows(), g.objects(), g.d0(), g.d1(), g.eps(), name);
    } catch (const Error&) {
      revalid = false;
    }
    c.require(revalid, name + ": revalidation");

    auto t = table_of(g.arrows());
    std::size_t n = g.arrows().order();
    auto corrupt = t;
    std::size_t at = n > 1 ? n + 1 : 0;
    corrupt[at] = elem_t((corrupt[at] + 1) % (n > 1 ? n : 2));
    if (n == 1) corrupt[0] = 1;
    c.require(rejects_with_witness([&] { FiniteGroup::from_table("mut", n, corrupt); }),
              name + ": corrupted arrow table accepted");

    if (g.objects().order() > 1) {
      auto zero_eps = GroupHom::zero(g.objects(), g.arrows());
      c.require(rejects_with_witness([&] {
                  validate_gpgd(g.arrows(), g.objects(), g.d0(), g.d1(), zero_eps);
                }),
                name + ": corrupted eps accepted");
    }
    if (n > 2) {
      for (elem_t a = 1; a < n; ++a) {
        auto m = g.d1().map();
        m[a] = elem_t((m[a] + 1) % g.objects().order());
        if (g.objects().order() == 1) break;
        c.require(rejects_with_witness([&] {
                    validate_gpgd(g.arrows(), g.objects(), g.d0(),
                                  validate_hom(g.arrows(), g.objects(), m), g.eps());
                  }),
                  name + ": corrupted d1 accepted");
      }
    }
  }
  return c;
}

Check criterion2() {
  Check c;
  for (const auto& [name, x] : catalog::xmods()) {
    if (oracle::power(x.top().order(), x.base().order()) > (std::uint64_t{1} << 20)) continue;
    std::vector<std::vector<elem_t>> lib;
    for (const auto& d : derivations(x)) lib.push_back(d.map);
    c.require(lib == oracle::derivations(x), name + ": derivations differ from brute force");
  }
  c.require(derivations(catalog::z2_in_z4()).size() == 2, "Der(Z2 in Z4) != 2");
  c.require(derivations(catalog::z3_identity()).size() == 3, "Der(Z3,Z3,id,trivial) != 3");
  return c;
}

Check criterion3() {
  Check c;
  for (const auto& [name, x] : catalog::xmods()) {
    auto m = whitehead_monoid(x);
    std::size_t n = m.size();
    c.require(m.elements[0].map == std::vector<elem_t>(x.base().order(), 0),
              name + ": zero derivation not first");
    std::size_t units = 0;
    for (std::size_t i = 0; i < n; ++i) {
      c.require(m.mul(0, i) == i && m.mul(i, 0) == i, name + ": identity law");
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          c.require(m.mul(m.mul(i, j), k) == m.mul(i, m.mul(j, k)), name + ": associativity");
      bool unit = false;
      for (std::size_t j = 0; j < n; ++j) unit |= m.mul(i, j) == 0 && m.mul(j, i) == 0;
      auto [theta, sigma] = theta_sigma(m.elements[i]);
      c.require(unit == theta.is_bijective() && unit == sigma.is_bijective(),
                name + ": regularity criteria disagree");
      units += unit;
    }
    c.require(regular_derivations(x).group.order() == units, name + ": |RD|");
  }
  c.require(regular_derivations(catalog::z2_in_z4()).group.order() == 2, "|RD(Z2 in Z4)| != 2");
  c.require(regular_derivations(catalog::z3_identity()).group.order() == 2,
            "|RD(Z3,Z3,id,trivial)| != 2");
  return c;
}

Check criterion4() {
  Check c;
  for (const auto& g : {cyclic(2), cyclic(3), klein4(), symmetric(3)}) {
    std::size_t a = oracle::automorphisms(g).size();
    c.require(W_group(pair_gpgd(g)).group.order() == a * a, "|W(pair " + g.name() + ")|");
    c.require(gpgd_automorphisms(pair_gpgd(g)).group.order() == a,
              "|Aut(pair " + g.name() + ")|");
    c.require(W_group(discrete_gpgd(g)).group.order() == a, "|W(discrete " + g.name() + ")|");
  }
  c.require(W_group(pair_gpgd(symmetric(3))).group.order() == 36, "|W(pair S3)| != 36");
  return c;
}

Check criterion5() {
  Check c;
  for (const auto& [name, g] : catalog::gpgds()) {
    auto r = roundtrip_check(g);
    c.require(r.pass && r.gpgd_witness && r.gpgd_witness->is_bijective(),
              name + ": psi(phi(G)) not isomorphic to G");
  }
  for (const auto& [name, x] : catalog::xmods()) {
    auto r = roundtrip_check(x);
    c.require(r.pass && r.xmod_witness && r.xmod_witness->fA.is_bijective() &&
                  r.xmod_witness->fB.is_bijective(),
              name + ": phi(psi(X)) not isomorphic to X");
  }
  return c;
}

Check criterion6() {
  Check c;
  for (const auto& [name, g] : catalog::gpgds()) {
    auto r = verify_isoact(g);
    c.require(r.pass && r.xmod_witness, name + ": <xi, lambda> is not an isomorphism");
    c.require(verify_actor_corollary(g).pass, name + ": actor corollary");
  }
  return c;
}

Check criterion7() {
  Check c;
  c.require(center_gpgd(discrete_gpgd(symmetric(3))).is_zero(), "Z(discrete S3) != 0");
  c.require(center_gpgd(pair_gpgd(cyclic(3))).is_whole(), "Z(pair Z3) != pair Z3");
  for (const auto& [name, g] : catalog::gpgds()) {
    const auto& ar = g.arrows();
    auto z = center_gpgd(g);
    for (elem_t a = 0; a < ar.order(); ++a)
      for (elem_t w : z.arrows.members())
        c.require(ar.op(a, w) == ar.op(w, a), name + ": arrow does not commute with Z(G)");
    c.require(z == kernel_gpgd(inner_phi(actor_gpgd(g))), name + ": Z(G) != Ker phi");
    auto ab = abelianization(g);
    c.require(ab.gpgd.arrows().is_abelian() && ab.gpgd.objects().is_abelian(),
              name + ": G/G' not abelian");
  }
  c.require(is_isomorphic(abelianization(pair_gpgd(symmetric(3))).gpgd, pair_gpgd(cyclic(2)))
                .has_value(),
            "abelianization(pair S3) not isomorphic to pair Z2");
  return c;
}

Check criterion8() {
  Check c;
  for (const auto& [name, g] : catalog::gpgds()) {
    auto io = inner_outer_actor(g);
    c.require(io.exact_at_center, name + ": not exact at Z(G)");
    c.require(io.exact_at_base, name + ": not exact at G");
    c.require(io.exact_at_actor, name + ": not exact at A(G)");
    c.require(io.exact_at_outer, name + ": not exact at O(G)");
  }
  return c;
}

Check criterion9() {
  Check c;
  for (auto g : {pair_gpgd(symmetric(3)), discrete_gpgd(symmetric(3))}) {
    c.require(center_gpgd(g).is_zero(), g.name() + ": centre");
    c.require(center_gpgd(actor_gpgd(g).gpgd).is_zero(), g.name() + ": actor centre");
    c.require(is_complete(g), g.name() + ": not complete");
    auto t = actor_tower(g, 3);
    c.require(t.complete_at && *t.complete_at == 0, g.name() + ": tower");
  }
  auto z3 = discrete_gpgd(cyclic(3));
  c.require(!is_complete(z3), "discrete Z3 reported complete");
  bool refused = false;
  try {
    actor_tower(z3, 3);
  } catch (const PreconditionError&) {
    refused = true;
  }
  c.require(refused, "tower on discrete Z3 not refused");
  return c;
}

Check criterion10() {
  Check c;
  for (const auto& [name, g] : catalog::gpgds()) {
    auto act = actor_gpgd(g);
    c.require(action_conditions_hold(identity_action(act)), name + ": identity action");
    auto w = whole_subgpgd(g);
    c.require(action_conditions_hold(conjugation_action(w, w).action),
              name + ": conjugation action");
  }
  auto p = pair_gpgd(symmetric(3));
  c.require(action_conditions_hold(conjugation_action(derived_subgpgd(p), whole_subgpgd(p)).action),
            "pair S3: conjugation on the derived sub-group-groupoid");
  std::vector<elem_t> pa;
  for (elem_t x : {0, 1})
    for (elem_t y : {0, 1}) pa.push_back(pair_index(x, y, 6));
  auto m = make_subgpgd(p, Subgroup::make(p.arrows(), pa), Subgroup::make(p.objects(), {0, 1}));
  auto r = internal_semidirect(p, derived_subgpgd(p), m);
  c.require(r.pass && r.gpgd_witness && r.gpgd_witness->is_bijective(),
            "pair S3: internal semidirect reconstruction");
  auto act = actor_gpgd(p);
  auto x = is_gpgd_xmod(inner_phi(act), identity_action(act));
  c.require(x.pass && x.objects_level, "pair S3: phi is not a crossed module");
  return c;
}

bool says(const BridgeReport& r, const std::string& line) {
  return std::find(r.diagnostics.begin(), r.diagnostics.end(), line) != r.diagnostics.end();
}

Check criterion11() {
  Check c;
  auto hol = holomorph(discrete_gpgd(cyclic(3)));
  c.require(hol.gpgd().arrows().order() == 6, "|Hol(discrete Z3)_1| != 6");
  c.require(!group_isomorphisms(hol.gpgd().arrows(), symmetric(3), {}, 1).empty(),
            "Hol(discrete Z3)_1 not isomorphic to S3");

  auto p = pair_gpgd(symmetric(3));
  auto pd = derived_subgpgd(p);
  c.require(is_characteristic(p, pd), "pair S3: derived not characteristic");
  auto rp = characteristic_iff_hol_normal(p, pd);
  c.require(rp.pass && says(rp, "normal in Hol: yes"), "pair S3: derived not normal in Hol");

  auto k = discrete_gpgd(klein4());
  auto v = make_subgpgd(k, Subgroup::make(k.arrows(), {0, 1}), Subgroup::make(k.objects(), {0, 1}));
  c.require(!is_characteristic(k, v), "klein4: Z2 factor reported characteristic");
  auto r = characteristic_iff_hol_normal(k, v);
  c.require(r.pass && says(r, "normal in Hol: no"), "klein4: Z2 factor normal in Hol");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"validators and mutation rejection", criterion1},
      {"derivation oracle equivalence", criterion2},
      {"Whitehead monoid and regular derivations", criterion3},
      {"W and Aut counts for pair and discrete", criterion4},
      {"round trips between group-groupoids and crossed modules", criterion5},
      {"actor isomorphism and its corollary", criterion6},
      {"centre, commutation and abelianization", criterion7},
      {"exactness of the inner/outer sequence", criterion8},
      {"trivial actor centre, completeness and towers", criterion9},
      {"actions, semidirect products and phi as a crossed module", criterion10},
      {"holomorph and characteristic sub-group-groupoids", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.failure = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %zu: %s%s%s\n", c.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].first, c.ok() ? "" : " -- ", c.failure.c_str());
    failed += !c.ok();
  }
  return failed == 0 ? 0 : 1;
}
