#include <catch_amalgamated.hpp>

#include "catalog.hpp"

using namespace catgrp;

namespace {

std::vector<std::pair<std::string, CrossedModule>> extra_xmods() {
  auto s3 = symmetric(3);
  return {
      {"inner(S3)", inner_automorphism_xmod(s3)},
      {"incl(A3,S3)", xmod_from_normal_inclusion(s3, Subgroup::make(s3, {0, 3, 4}))},
      {"identity(S3)", identity_xmod(s3)},
      {"module(Z3,Z2,inversion)", module_xmod(cyclic(3), cyclic(2), {0, 1, 2, 0, 2, 1})},
      {"trivial top over D4", trivial_top_xmod(dihedral(4))},
  };
}

}  // namespace

TEST_CASE("phi of the basic group-groupoids") {
  auto s3 = symmetric(3);
  auto px = phi_to_xmod(pair_gpgd(s3));
  CHECK(px.top().order() == 6);
  CHECK(px.alpha().is_bijective());
  CHECK(xmod_isomorphism(px, identity_xmod(s3)));
  auto dx = phi_to_xmod(discrete_gpgd(s3));
  CHECK(dx.top().is_trivial());
  CHECK(dx.base().order() == 6);
  auto kx = phi_data(pair_gpgd(cyclic(3)));
  for (elem_t i = 0; i < kx.xmod.top().order(); ++i) {
    CHECK(pair_gpgd(cyclic(3)).source(kx.embedding(i)) == 0);
  }
}

TEST_CASE("psi builds the semidirect group-groupoid") {
  auto x = catalog::z2_in_z4();
  auto g = psi_to_gpgd(x);
  CHECK(g.arrows().order() == 8);
  CHECK(g.objects().order() == 4);
  for (elem_t a = 0; a < 2; ++a) {
    for (elem_t b = 0; b < 4; ++b) {
      elem_t p = pair_index(a, b, 4);
      CHECK(g.source(p) == b);
      CHECK(g.target(p) == cyclic(4).op(x.alpha()(a), b));
    }
  }
  CHECK(g.identity(3) == pair_index(0, 3, 4));
}

TEST_CASE("round trips on group-groupoids") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto r = roundtrip_check(g);
    CHECK(r.pass);
    REQUIRE(r.gpgd_witness);
    CHECK(r.gpgd_witness->is_bijective());
    CHECK(r.kind == ReportKind::roundtrip_gpgd);
  }
}

TEST_CASE("round trips on crossed modules") {
  auto all = catalog::xmods();
  for (auto& e : extra_xmods()) all.push_back(e);
  for (const auto& [name, x] : all) {
    INFO(name);
    auto r = roundtrip_check(x);
    CHECK(r.pass);
    REQUIRE(r.xmod_witness);
    CHECK(r.xmod_witness->fA.is_bijective());
    CHECK(r.xmod_witness->fB.is_bijective());
  }
}

TEST_CASE("non-isomorphic results are not reported as round trips") {
  auto back = psi_to_gpgd(phi_to_xmod(pair_gpgd(cyclic(2))));
  CHECK_FALSE(is_isomorphic(back, discrete_gpgd(klein4())));
  CHECK(is_isomorphic(back, pair_gpgd(cyclic(2))));
}

TEST_CASE("xi and lambda identify the two actors") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto xl = xi_lambda(g);
    CHECK(xl.inverse_formula_agrees);
    CHECK(xl.xi.size() == xl.xactor.rd.group.order());
    CHECK(xl.lambda.size() == xl.xactor.aut.group.order());
    CHECK(xl.ker_wd0.size() == xl.xi.size());
    auto r = verify_isoact(g);
    CHECK(r.pass);
    CHECK(r.xmod_witness);
  }
}

TEST_CASE("actor corollary") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto r = verify_actor_corollary(g);
    CHECK(r.pass);
    CHECK(r.kind == ReportKind::actor_corollary);
  }
  for (const auto& [name, x] : extra_xmods()) {
    INFO(name);
    CHECK(verify_isoact(psi_to_gpgd(x)).pass);
  }
}

TEST_CASE("gpgd-side crossed module action is conjugation by identities") {
  auto act = actor_gpgd(pair_gpgd(cyclic(3)));
  auto k = actor_kernel_xmod(act);
  CHECK(k.top().order() == 2);
  CHECK(k.base().order() == 2);
  CHECK(to_string(ReportKind::isoact) == std::string("isoact"));
}
