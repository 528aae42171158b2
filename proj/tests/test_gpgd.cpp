#include <catch_amalgamated.hpp>

#include "catalog.hpp"
#include "oracles.hpp"

using namespace catgrp;

namespace {

template <class F>
ValidationError expect_rejection(F&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e;
  }
  FAIL("accepted");
  throw;
}

std::vector<std::vector<elem_t>> comps(const std::vector<NatTransf>& ts) {
  std::vector<std::vector<elem_t>> out;
  for (const auto& t : ts) out.push_back(t.comp);
  return out;
}

// All transformations between automorphisms of g, i.e. the elements of W.
std::vector<NatTransf> all_regular(const GroupGroupoid& g) {
  auto aut = gpgd_automorphisms(g);
  std::vector<NatTransf> out;
  for (const auto& f : aut.elements) {
    for (const auto& h : aut.elements) {
      auto ts = nat_transfs_between(f, h);
      out.insert(out.end(), ts.begin(), ts.end());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("catalog group-groupoids are valid and satisfy interchange") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    CHECK(oracle::interchange_holds(g));
    for (elem_t b = 0; b < g.arrows().order(); ++b) {
      for (elem_t a = 0; a < g.arrows().order(); ++a) {
        if (!g.composable(b, a)) continue;
        CHECK(compose_arrows(g, b, a) == oracle::compose_alt(g, b, a));
      }
      CHECK(g.compose(arrow_inverse(g, b), b) == g.identity(g.source(b)));
    }
  }
}

TEST_CASE("structure of the reference group-groupoids") {
  auto p = pair_gpgd(symmetric(3));
  CHECK(p.arrows().order() == 36);
  CHECK(p.objects().order() == 6);
  CHECK(p.source(pair_index(2, 5, 6)) == 2);
  CHECK(p.target(pair_index(2, 5, 6)) == 5);
  CHECK(p.compose(pair_index(5, 1, 6), pair_index(2, 5, 6)) == pair_index(2, 1, 6));
  CHECK(p.inverse_arrow(pair_index(2, 5, 6)) == pair_index(5, 2, 6));
  auto d = discrete_gpgd(cyclic(3));
  for (elem_t a = 0; a < 3; ++a) CHECK(d.is_identity_arrow(a));
  CHECK(zero_gpgd().is_zero());
  CHECK(zero_gpgd().name() == "0");
  CHECK_THROWS_AS(compose_arrows(p, pair_index(0, 1, 6), pair_index(0, 1, 6)),
                  PreconditionError);
}

TEST_CASE("group-groupoid validation names the failing axiom") {
  SECTION("identities are not sent to their object") {
    auto z2 = cyclic(2);
    auto id = GroupHom::identity(z2);
    auto e = expect_rejection([&] {
      validate_gpgd(z2, z2, id, id, GroupHom::zero(z2, z2), "bad");
    });
    CHECK(e.axiom() == "(i) d0 eps = d1 eps = 1");
    CHECK(e.witness() == std::vector<elem_t>{1});
  }
  SECTION("kernels of source and target do not commute") {
    auto s3 = symmetric(3);
    auto one = trivial_group();
    auto z = GroupHom::zero(s3, one);
    auto e = expect_rejection([&] {
      validate_gpgd(s3, one, z, z, GroupHom::zero(one, s3), "bad");
    });
    CHECK(e.axiom() == "Ker d0 commutes with Ker d1");
    REQUIRE(e.witness().size() == 2);
    CHECK(s3.op(e.witness()[0], e.witness()[1]) != s3.op(e.witness()[1], e.witness()[0]));
  }
  SECTION("structural maps on the wrong groups") {
    auto z2 = cyclic(2), z3 = cyclic(3);
    auto e = expect_rejection([&] {
      validate_gpgd(z2, z2, GroupHom::identity(z2), GroupHom::identity(z2),
                    GroupHom::identity(z3));
    });
    CHECK(e.axiom() == "structural map domains");
  }
}

TEST_CASE("interchange is checked on generators above the quadruple cap") {
  Config cfg;
  cfg.max_quadruples = 10;
  auto p = pair_gpgd(symmetric(3));
  CHECK_NOTHROW(validate_gpgd(p.arrows(), p.objects(), p.d0(), p.d1(), p.eps(),
                              "pair", cfg));
}

TEST_CASE("morphism validation") {
  auto p = pair_gpgd(cyclic(2));
  auto swap = validate_hom(p.arrows(), p.arrows(), {0, 2, 1, 3});
  auto e = expect_rejection([&] {
    make_gpgd_morphism(p, p, swap, GroupHom::identity(p.objects()));
  });
  CHECK(e.axiom() == "d0 f1 = f0 d0");
  CHECK(e.witness().size() == 1);
  auto id = identity_morphism(p);
  CHECK(compose(id, id) == id);
  auto z = zero_morphism(p, zero_gpgd());
  CHECK(kernel_gpgd(z).is_whole());
  CHECK(image_gpgd(z).is_zero());
}

TEST_CASE("sub-group-groupoids") {
  auto p = pair_gpgd(symmetric(3));
  auto bad = expect_rejection([&] {
    make_subgpgd(p, Subgroup::make(p.arrows(), {0, pair_index(1, 0, 6)}),
                 Subgroup::make(p.objects(), {0, 1}));
  });
  CHECK(bad.kind() == "sub-group-groupoid");
  std::vector<elem_t> pa;
  for (elem_t x : {0, 1})
    for (elem_t y : {0, 1}) pa.push_back(pair_index(x, y, 6));
  std::sort(pa.begin(), pa.end());
  auto m = make_subgpgd(p, Subgroup::make(p.arrows(), pa),
                        Subgroup::make(p.objects(), {0, 1}));
  CHECK_FALSE(m.normal);
  auto [h, inc] = m.as_gpgd();
  CHECK(is_isomorphic(h, pair_gpgd(cyclic(2))));
  CHECK(inc.f1.is_injective());
  CHECK(whole_subgpgd(p).normal);
  CHECK(zero_subgpgd(p).normal);
}

TEST_CASE("automorphism groups agree with brute force") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    if (g.arrows().order() > 9) continue;
    std::vector<std::vector<elem_t>> lib;
    for (const auto& f : gpgd_automorphisms(g).elements) lib.push_back(f.f1.map());
    CHECK(lib == oracle::gpgd_automorphisms(g));
  }
}

TEST_CASE("automorphism and transformation counts") {
  // Frozen from the brute-force oracles.
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected{
      {"zero", {1, 1}},          {"discrete Z3", {2, 2}},
      {"discrete S3", {6, 6}},   {"discrete klein4", {6, 6}},
      {"pair Z2", {1, 1}},       {"pair Z3", {2, 4}},
      {"pair S3", {6, 36}},      {"psi(Z2 in Z4)", {2, 4}},
      {"psi(Z3,Z3,id,trivial)", {2, 4}},
  };
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto [aut, w] = expected.at(name);
    CHECK(gpgd_automorphisms(g).group.order() == aut);
    CHECK(all_regular(g).size() == w);
  }
}

TEST_CASE("transformation enumeration agrees with brute force") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto aut = gpgd_automorphisms(g);
    for (const auto& f : aut.elements) {
      for (const auto& h : aut.elements) {
        if (oracle::nat_transf_space(f, h) > 100000) continue;
        CHECK(comps(nat_transfs_between(f, h)) == oracle::nat_transfs(f, h));
      }
    }
  }
  // Transformations between non-invertible morphisms too.
  auto p = pair_gpgd(cyclic(3));
  auto z = zero_morphism(p, p);
  auto id = identity_morphism(p);
  CHECK(comps(nat_transfs_between(z, id)) == oracle::nat_transfs(z, id));
  CHECK(comps(nat_transfs_between(id, z)) == oracle::nat_transfs(id, z));
}

TEST_CASE("make_nat_transf rejects a non-natural family") {
  auto d = discrete_gpgd(cyclic(3));
  auto id = identity_morphism(d);
  CHECK_THROWS_AS(make_nat_transf(id, id, {0, 1, 1}), ValidationError);
  CHECK(make_nat_transf(id, id, {0, 1, 2}) == identity_transformation(id));
}

TEST_CASE("F^eta respects horizontal composition and is injective") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto w = all_regular(g);
    std::set<std::vector<elem_t>> images;
    for (const auto& e : w) images.insert(F_eta(e).map());
    CHECK(images.size() == w.size());
    for (const auto& e2 : w) {
      for (const auto& e1 : w) {
        CHECK(F_eta(horizontal_comp(e2, e1)) == compose(F_eta(e2), F_eta(e1)));
      }
    }
  }
}

TEST_CASE("horizontal inverse") {
  for (const auto& [name, g] : catalog::gpgds()) {
    INFO(name);
    auto unit = identity_transformation(identity_morphism(g));
    for (const auto& e : all_regular(g)) {
      auto inv = horizontal_inverse(e);
      CHECK(horizontal_comp(inv, e) == unit);
      CHECK(horizontal_comp(e, inv) == unit);
    }
  }
}

TEST_CASE("interchange of vertical and horizontal composition") {
  for (auto g : {pair_gpgd(cyclic(3)), psi_to_gpgd(catalog::z2_in_z4()),
                 discrete_gpgd(klein4())}) {
    INFO(g.name());
    auto w = all_regular(g);
    for (const auto& e : w) {
      for (const auto& e2 : w) {
        if (!(e.g == e2.f)) continue;
        for (const auto& z : w) {
          for (const auto& z2 : w) {
            if (!(z.g == z2.f)) continue;
            auto lhs = horizontal_comp(vertical_comp(e2, e), vertical_comp(z2, z));
            auto rhs = vertical_comp(horizontal_comp(e2, z2), horizontal_comp(e, z));
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("isomorphism search between group-groupoids") {
  CHECK(is_isomorphic(psi_to_gpgd(catalog::z3_identity()), pair_gpgd(cyclic(3))));
  CHECK_FALSE(is_isomorphic(discrete_gpgd(cyclic(4)), discrete_gpgd(klein4())));
  CHECK_FALSE(is_isomorphic(pair_gpgd(cyclic(2)), discrete_gpgd(klein4())));
  CHECK(gpgd_isomorphisms(pair_gpgd(symmetric(3)), pair_gpgd(symmetric(3))).size() == 6);
}
