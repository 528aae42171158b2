#include <catch_amalgamated.hpp>

#include "catalog.hpp"
#include "oracles.hpp"

using namespace catgrp;

namespace {

struct Expected {
  std::size_t w, aut, center_arrows, center_objects, ab_arrows;
};

// Frozen from the brute-force oracles (transformations over all endpoint
// respecting component maps, automorphisms over all permutations).
const std::map<std::string, Expected>& expected() {
  static const std::map<std::string, Expected> e{
      {"zero", {1, 1, 1, 1, 1}},
      {"discrete Z3", {2, 2, 3, 3, 3}},
      {"discrete S3", {6, 6, 1, 1, 2}},
      {"discrete klein4", {6, 6, 4, 4, 4}},
      {"pair Z2", {1, 1, 4, 2, 4}},
      {"pair Z3", {4, 2, 9, 3, 9}},
      {"pair S3", {36, 6, 1, 1, 4}},
      {"psi(Z2 in Z4)", {4, 2, 8, 4, 8}},
      {"psi(Z3,Z3,id,trivial)", {4, 2, 9, 3, 9}},
  };
  return e;
}

// psi of Z3 -> Z2 (zero map) with Z2 acting by inversion.
GroupGroupoid inversion_module_gpgd() {
  auto x = module_xmod(cyclic(3), cyclic(2), {0, 1, 2, 0, 2, 1});
  return psi_to_gpgd(x);
}

}  // namespace

TEST_CASE("W and Aut orders") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto w = W_group(g);
    CHECK(w.group.order() == expected().at(name).w);
    CHECK(w.aut.group.order() == expected().at(name).aut);
  }
}

TEST_CASE("W elements agree with brute-force transformations") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto w = W_group(g);
    std::set<std::tuple<elem_t, elem_t, std::vector<elem_t>>> lib, brute;
    for (elem_t i = 0; i < w.group.order(); ++i) {
      lib.emplace(w.src[i], w.tgt[i], w.elements[i].comp);
    }
    const auto& autos = w.aut.elements;
    for (elem_t f = 0; f < autos.size(); ++f) {
      for (elem_t h = 0; h < autos.size(); ++h) {
        for (auto& c : oracle::nat_transfs(autos[f], autos[h])) brute.emplace(f, h, c);
      }
    }
    CHECK(lib == brute);
  }
}

TEST_CASE("W addition is horizontal composition") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto w = W_group(g);
    CHECK(w.elements[0] == identity_transformation(identity_morphism(g)));
    for (elem_t i = 0; i < w.group.order(); ++i) {
      for (elem_t j = 0; j < w.group.order(); ++j) {
        CHECK(w.group.op(i, j) == w.index_of(horizontal_comp(w.elements[i], w.elements[j])));
      }
    }
  }
}

TEST_CASE("pair and discrete group-groupoids: W and Aut in terms of Aut G") {
  for (const auto& g : {cyclic(2), cyclic(3), klein4(), symmetric(3)}) {
    INFO(g.name());
    std::size_t a = automorphism_group(g).group.order();
    CHECK(W_group(pair_gpgd(g)).group.order() == a * a);
    CHECK(gpgd_aut_group(pair_gpgd(g)).group.order() == a);
    CHECK(W_group(discrete_gpgd(g)).group.order() == a);
  }
}

TEST_CASE("actor group-groupoid") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto act = actor_gpgd(g);
    CHECK(act.gpgd.name() == "A(" + g.name() + ")");
    CHECK(oracle::interchange_holds(act.gpgd));
    const auto& a = act.gpgd;
    for (elem_t i = 0; i < a.arrows().order(); ++i) {
      CHECK(act.w.elements[i].f == act.aut().elements[a.source(i)]);
      CHECK(act.w.elements[i].g == act.aut().elements[a.target(i)]);
    }
  }
}

TEST_CASE("centre is the kernel of the canonical morphism") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto z = center_gpgd(g);
    auto ker = kernel_gpgd(inner_phi(actor_gpgd(g)));
    CHECK(z == ker);
    CHECK(z.arrows.size() == expected().at(name).center_arrows);
    CHECK(z.objects.size() == expected().at(name).center_objects);
    auto c = center_conditions(g);
    CHECK(c.arrows_agree);
    CHECK(c.objects_agree);
  }
}

TEST_CASE("element-wise arrow condition can differ from the kernel") {
  auto g = inversion_module_gpgd();
  auto c = center_conditions(g);
  CHECK(c.objects_agree);
  CHECK_FALSE(c.arrows_agree);
  CHECK(center_gpgd(g) == kernel_gpgd(inner_phi(actor_gpgd(g))));
}

TEST_CASE("arrows commute with the centre") {
  auto all = catalog::gpgds();
  all.emplace_back("inversion module", inversion_module_gpgd());
  for (const auto& [name, g] : all) {
    INFO(name);
    const auto& ar = g.arrows();
    auto centre = center_gpgd(g);
    for (elem_t z : centre.arrows.members()) {
      for (elem_t a = 0; a < ar.order(); ++a) CHECK(ar.op(a, z) == ar.op(z, a));
    }
  }
}

TEST_CASE("abelian group-groupoids") {
  CHECK(is_abelian(pair_gpgd(cyclic(3))));
  CHECK(is_abelian(discrete_gpgd(klein4())));
  CHECK_FALSE(is_abelian(pair_gpgd(symmetric(3))));
  CHECK(is_abelian(zero_gpgd()));
}

TEST_CASE("derived sub-group-groupoid and abelianization") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto d = derived_subgpgd(g);
    auto o = oracle::derived_subgroup(g.arrows());
    CHECK(d.arrows.members() == std::vector<elem_t>(o.begin(), o.end()));
    CHECK(d.normal);
    auto ab = abelianization(g);
    CHECK(ab.gpgd.arrows().is_abelian());
    CHECK(ab.gpgd.arrows().order() == expected().at(name).ab_arrows);
    CHECK(kernel_gpgd(ab.projection) == d);
  }
  CHECK(is_isomorphic(abelianization(pair_gpgd(symmetric(3))).gpgd, pair_gpgd(cyclic(2))));
}

TEST_CASE("quotients require normal sub-group-groupoids") {
  auto p = pair_gpgd(symmetric(3));
  std::vector<elem_t> pa;
  for (elem_t x : {0, 1})
    for (elem_t y : {0, 1}) pa.push_back(pair_index(x, y, 6));
  auto m = make_subgpgd(p, Subgroup::make(p.arrows(), pa),
                        Subgroup::make(p.objects(), {0, 1}));
  CHECK_THROWS(quotient_gpgd(p, m));
}

TEST_CASE("inner/outer actor sequence is exact") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto io = inner_outer_actor(g);
    CHECK(io.exact_at_center);
    CHECK(io.exact_at_base);
    CHECK(io.exact_at_actor);
    CHECK(io.exact_at_outer);
    CHECK(io.outer.gpgd.arrows().order() * io.inner.arrows.size() ==
          io.actor.gpgd.arrows().order());
  }
}

TEST_CASE("trivial centre passes to the actor") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    if (!center_gpgd(g).is_zero()) continue;
    CHECK(center_gpgd(actor_gpgd(g).gpgd).is_zero());
  }
}

TEST_CASE("completeness and the actor tower") {
  CHECK(is_complete(discrete_gpgd(symmetric(3))));
  CHECK(is_complete(pair_gpgd(symmetric(3))));
  CHECK(is_complete(zero_gpgd()));
  CHECK_FALSE(is_complete(discrete_gpgd(cyclic(3))));
  auto t = actor_tower(discrete_gpgd(symmetric(3)), 3);
  REQUIRE(t.complete_at);
  CHECK(*t.complete_at == 0);
  CHECK(t.stages.size() == 1);
  CHECK_THROWS_AS(actor_tower(discrete_gpgd(cyclic(3)), 3), PreconditionError);
}
