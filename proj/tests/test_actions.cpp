#include <catch_amalgamated.hpp>

#include "catalog.hpp"
#include "oracles.hpp"

using namespace catgrp;

namespace {

SubGroupGroupoid discrete_sub(const GroupGroupoid& g, std::vector<elem_t> members) {
  return make_subgpgd(g, Subgroup::make(g.arrows(), members),
                      Subgroup::make(g.objects(), members));
}

// Pairs (x, y) with x, y in {0, 1}: a copy of pair(Z2) inside pair(S3).
SubGroupGroupoid pair_z2_in_pair_s3(const GroupGroupoid& p) {
  std::vector<elem_t> pa;
  for (elem_t x : {0, 1})
    for (elem_t y : {0, 1}) pa.push_back(pair_index(x, y, 6));
  return make_subgpgd(p, Subgroup::make(p.arrows(), pa),
                      Subgroup::make(p.objects(), {0, 1}));
}

}  // namespace

TEST_CASE("identity and trivial actions satisfy the action conditions") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto act = actor_gpgd(g);
    auto id = identity_action(act);
    for (elem_t a = 0; a < g.arrows().order(); ++a) CHECK(id.act1(0, a) == a);
    // Evaluation: eta acts on a by F^eta.
    for (elem_t k = 0; k < act.gpgd.arrows().order(); ++k) {
      auto f = F_eta(act.w.elements[k]);
      for (elem_t a = 0; a < g.arrows().order(); ++a) CHECK(id.act1(k, a) == f(a));
    }
    auto tr = trivial_action(zero_gpgd(), act);
    CHECK(tr.act1(0, 0) == 0);
  }
}

TEST_CASE("action conditions hold on every pair and composable quadruple") {
  auto g = pair_gpgd(cyclic(3));
  auto act = identity_action(actor_gpgd(g));
  const auto& h = act.acting;
  for (elem_t b = 0; b < h.arrows().order(); ++b) {
    for (elem_t a = 0; a < g.arrows().order(); ++a) {
      CHECK(g.source(act.act1(b, a)) == act.act0(h.source(b), g.source(a)));
      CHECK(g.target(act.act1(b, a)) == act.act0(h.target(b), g.target(a)));
    }
  }
  for (elem_t y = 0; y < h.objects().order(); ++y) {
    for (elem_t x = 0; x < g.objects().order(); ++x) {
      CHECK(g.identity(act.act0(y, x)) == act.act1(h.identity(y), g.identity(x)));
    }
  }
}

TEST_CASE("conjugation action") {
  auto p = pair_gpgd(symmetric(3));
  auto ca = conjugation_action(derived_subgpgd(p), whole_subgpgd(p));
  CHECK(ca.n.arrows().order() == 9);
  CHECK(ca.m.arrows().order() == 36);
  CHECK_THROWS_AS(conjugation_action(pair_z2_in_pair_s3(p), whole_subgpgd(p)),
                  PreconditionError);
}

TEST_CASE("semidirect product and its split extension") {
  auto g = discrete_gpgd(cyclic(3));
  auto act = identity_action(actor_gpgd(g));
  auto sd = semidirect_gpgd(act, "Z3xAut");
  CHECK(sd.gpgd.arrows().order() == 6);
  CHECK(group_isomorphisms(sd.gpgd.arrows(), symmetric(3), {}, 1).size() == 1);
  CHECK(oracle::interchange_holds(sd.gpgd));
  auto r = verify_extension(sd.i, sd.p, sd.s);
  CHECK(r.pass);

  auto ca = conjugation_action(image_gpgd(sd.i), whole_subgpgd(sd.gpgd));
  auto ladder = verify_extension(sd.i, sd.p, sd.s, &ca.action);
  CHECK(ladder.pass);
}

TEST_CASE("extension checks reject a bad section") {
  auto z2 = discrete_gpgd(cyclic(2));
  auto z4 = discrete_gpgd(cyclic(4));
  auto i = make_gpgd_morphism(z2, z4, validate_hom(cyclic(2), cyclic(4), {0, 2}),
                              validate_hom(cyclic(2), cyclic(4), {0, 2}));
  auto p = make_gpgd_morphism(z4, z2, validate_hom(cyclic(4), cyclic(2), {0, 1, 0, 1}),
                              validate_hom(cyclic(4), cyclic(2), {0, 1, 0, 1}));
  // Z4 does not split over Z2; the only homomorphisms Z2 -> Z4 miss p s = 1.
  for (auto m : {std::vector<elem_t>{0, 2}, std::vector<elem_t>{0, 0}}) {
    auto s = make_gpgd_morphism(z2, z4, validate_hom(cyclic(2), cyclic(4), m),
                                validate_hom(cyclic(2), cyclic(4), m));
    auto r = verify_extension(i, p, s);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.diagnostics.empty());
    CHECK(r.diagnostics.back().find("p s = 1") != std::string::npos);
  }
}

TEST_CASE("internal semidirect decomposition") {
  auto p = pair_gpgd(symmetric(3));
  auto r = internal_semidirect(p, derived_subgpgd(p), pair_z2_in_pair_s3(p));
  CHECK(r.pass);
  REQUIRE(r.gpgd_witness);
  CHECK(r.gpgd_witness->is_bijective());
  auto bad = internal_semidirect(p, derived_subgpgd(p), derived_subgpgd(p));
  CHECK_FALSE(bad.pass);
}

TEST_CASE("canonical morphism into the actor is a crossed module") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto act = actor_gpgd(g);
    auto c = is_gpgd_xmod(inner_phi(act), identity_action(act));
    CHECK(c.pass);
    CHECK(c.objects_level);
  }
}

TEST_CASE("inclusion of a non-normal subgroup is not a crossed module") {
  auto s3 = discrete_gpgd(symmetric(3));
  auto [h, inc] = discrete_sub(s3, {0, 1}).as_gpgd();
  auto c = is_gpgd_xmod(inc, trivial_action(s3, actor_gpgd(h)));
  CHECK_FALSE(c.pass);
  REQUIRE(c.failure);
  CHECK(c.failure->axiom() == "CM1 alpha(b.a) = b+alpha(a)-b");
}

TEST_CASE("holomorph") {
  auto hol = holomorph(discrete_gpgd(cyclic(3)));
  CHECK(hol.gpgd().arrows().order() == 6);
  CHECK(group_isomorphisms(hol.gpgd().arrows(), symmetric(3), {}, 1).size() == 1);
  auto hk = holomorph(discrete_gpgd(klein4()));
  CHECK(hk.gpgd().arrows().order() == 24);
  CHECK(group_isomorphisms(hk.gpgd().arrows(), symmetric(4), {}, 1).size() == 1);
}

TEST_CASE("characteristic iff normal in the holomorph") {
  auto s3 = discrete_gpgd(symmetric(3));
  auto a3 = discrete_sub(s3, {0, 3, 4});
  CHECK(is_characteristic(s3, a3));
  CHECK(characteristic_iff_hol_normal(s3, a3).pass);
  auto c2 = discrete_sub(s3, {0, 1});
  CHECK_FALSE(is_characteristic(s3, c2));
  CHECK(characteristic_iff_hol_normal(s3, c2).pass);

  auto k4 = discrete_gpgd(klein4());
  auto v = discrete_sub(k4, {0, 1});
  CHECK_FALSE(is_characteristic(k4, v));
  CHECK(characteristic_iff_hol_normal(k4, v).pass);
  CHECK(is_characteristic(k4, whole_subgpgd(k4)));
  CHECK(characteristic_iff_hol_normal(k4, zero_subgpgd(k4)).pass);

  auto ps3 = pair_gpgd(symmetric(3));
  CHECK(is_characteristic(ps3, derived_subgpgd(ps3)));
  CHECK(characteristic_iff_hol_normal(ps3, derived_subgpgd(ps3)).pass);
  CHECK_FALSE(is_characteristic(ps3, pair_z2_in_pair_s3(ps3)));

  auto p = pair_gpgd(cyclic(3));
  CHECK(is_characteristic(p, center_gpgd(p)));
  CHECK(characteristic_iff_hol_normal(p, derived_subgpgd(p)).pass);
}
