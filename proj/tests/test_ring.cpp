#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"

using namespace pgx;

TEST_CASE("build_ring: residue ring Z/4") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 4, 0, {}}});
  CHECK(br.report.ok());
  CHECK(br.ring->size() == 4);
  CHECK(br.ring->one() == 1);
  CHECK(idempotents(*br.ring) == std::vector<RElem>{0, 1});
  UnitGroup u = unit_group(*br.ring);
  CHECK(u.size() == 2);
  CHECK(u.elementary_divisors() == std::vector<std::uint32_t>{2});
}

TEST_CASE("build_ring: GF(4) has a unit group of order 3") {
  auto br = build_ring({{LocalFactor::Kind::Quotient, 0, 2, {1, 1, 1}}});
  CHECK(br.report.ok());
  CHECK(br.ring->size() == 4);
  UnitGroup u = unit_group(*br.ring);
  CHECK(u.size() == 3);
  for (RElem x : u.elements) CHECK(br.ring->mul(x, u.inverse_of(x)) == br.ring->one());
}

TEST_CASE("build_ring: F2 x F2 has four idempotents") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 2, 0, {}}, {LocalFactor::Kind::Zmod, 2, 0, {}}});
  auto idems = idempotents(*br.ring);
  CHECK(idems.size() == 4);
  // exhaustive: these are exactly the solutions of e^2 = e
  for (RElem e = 0; e < br.ring->size(); ++e)
    CHECK(std::binary_search(idems.begin(), idems.end(), e) == (br.ring->mul(e, e) == e));
}

TEST_CASE("build_ring rejects malformed descriptors") {
  CHECK_THROWS_AS(build_ring({}), std::invalid_argument);
  CHECK_THROWS_AS(build_ring({{LocalFactor::Kind::Zmod, 0, 0, {}}}), std::invalid_argument);
  // non-monic polynomial
  CHECK_THROWS_AS(build_ring({{LocalFactor::Kind::Quotient, 0, 3, {1, 1, 2}}}), std::invalid_argument);
  // reducible quotients are legal fixtures: F2[t]/(t^2) builds fine
  auto br = build_ring({{LocalFactor::Kind::Quotient, 0, 2, {0, 0, 1}}});
  CHECK(br.ring->size() == 4);
  CHECK(unit_group(*br.ring).size() == 2);
}

TEST_CASE("idempotent count is 2^(number of local factors)") {
  std::vector<std::vector<LocalFactor>> specs = {
      {{LocalFactor::Kind::Zmod, 4, 0, {}}},
      {{LocalFactor::Kind::Zmod, 2, 0, {}}, {LocalFactor::Kind::Zmod, 9, 0, {}}},
      {{LocalFactor::Kind::Quotient, 0, 2, {1, 1, 1}},
       {LocalFactor::Kind::Zmod, 8, 0, {}},
       {LocalFactor::Kind::Zmod, 5, 0, {}}},
  };
  for (const auto& spec : specs) {
    auto br = build_ring(spec);
    CHECK(idempotents(*br.ring).size() == (1u << spec.size()));
  }
}

TEST_CASE("idempotents form a meet-semilattice under multiplication") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 4, 0, {}},
                        {LocalFactor::Kind::Zmod, 2, 0, {}},
                        {LocalFactor::Kind::Quotient, 0, 2, {1, 1, 1}}});
  auto idems = idempotents(*br.ring);
  for (RElem e : idems)
    for (RElem f : idems) {
      CHECK(br.ring->mul(e, f) == br.ring->mul(f, e));
      CHECK(br.ring->is_idempotent(br.ring->mul(e, f)));
      CHECK(br.ring->mul(e, e) == e);
    }
}

TEST_CASE("unit group structure by order analysis: U(Z/8 x Z/9)") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 8, 0, {}}, {LocalFactor::Kind::Zmod, 9, 0, {}}});
  UnitGroup u = unit_group(*br.ring);
  CHECK(u.size() == 24);
  CHECK(u.elementary_divisors() == std::vector<std::uint32_t>({2, 2, 6}));
  // every element decomposes over the computed basis
  for (std::size_t i = 0; i < u.size(); ++i) {
    RElem acc = u.identity;
    const auto& e = u.basis.dlog[i];
    for (std::size_t j = 0; j < e.size(); ++j)
      for (std::uint32_t k = 0; k < e[j]; ++k) acc = br.ring->mul(acc, u.elements[u.basis.gens[j]]);
    CHECK(acc == u.elements[i]);
  }
}

TEST_CASE("unit group of the corner ideal F2 x 0 is trivial") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 2, 0, {}}, {LocalFactor::Kind::Zmod, 2, 0, {}}});
  Ideal corner(*br.ring, br.ring->encode({1, 0}));
  UnitGroup u = unit_group(corner);
  CHECK(u.size() == 1);
  CHECK(u.elements[0] == corner.generator());
}

TEST_CASE("check_morphism classifies the swap map and a unitality violation") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 2, 0, {}}, {LocalFactor::Kind::Zmod, 2, 0, {}}});
  const auto& R = *br.ring;
  RingMorphism swap{{&R, R.one()}, {&R, R.one()}, {}, true};
  for (RElem x = 0; x < R.size(); ++x) {
    auto d = br.ring->decode(x);
    swap.table[x] = br.ring->encode({d[1], d[0]});
  }
  CHECK(check_morphism(swap).ok());

  RingMorphism crush{{&R, R.one()}, {&R, R.one()}, {}, false};
  for (RElem x = 0; x < R.size(); ++x) crush.table[x] = R.zero();
  ValidationReport rep = check_morphism(crush);
  CHECK_FALSE(rep.ok());
  bool unitality_flagged = false;
  for (const auto& f : rep.failures()) unitality_flagged |= f.check == "unitality";
  CHECK(unitality_flagged);
}

TEST_CASE("check_morphism requires a complete table") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 2, 0, {}}});
  RingMorphism partial{{br.ring.get(), br.ring->one()}, {br.ring.get(), br.ring->one()}, {{0, 0}}, false};
  CHECK_THROWS_AS(check_morphism(partial), std::invalid_argument);
}

TEST_CASE("axiom check samples larger rings deterministically") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 64, 0, {}}, {LocalFactor::Kind::Zmod, 81, 0, {}}});
  ValidationReport rep = check_ring_axioms(*br.ring, 4096);
  CHECK(rep.ok());
  bool sampled = false;
  for (const auto& f : rep.findings()) sampled |= f.witness == "sampled";
  CHECK(sampled);
}

TEST_CASE("free bases and k-linear endomorphism counts") {
  PartialAction exb = pgx::testing::make_exb();
  Subring k = invariant_subring(exb);
  auto basis = free_basis_over(exb.R(), k);
  REQUIRE(basis.has_value());
  CHECK(basis->size() == 2);
  CHECK(k_linear_endomorphisms(exb.R(), k).size() == 16);
}

TEST_CASE("find_ring_iso identifies the two copies of F2") {
  PartialAction exa = pgx::testing::make_exa();
  PartialAction exb = pgx::testing::make_exb();
  Subring ka = invariant_subring(exa);
  Subring kb = invariant_subring(exb);
  auto iso = find_ring_iso(ka, kb);
  REQUIRE(iso.has_value());
  CHECK(iso->at(ka.elements[0]) == kb.elements[0]);
  CHECK(iso->at(ka.elements[1]) == kb.elements[1]);
  // and refuses mismatched sizes
  Subring whole{exa.ring.get(), {0, 1, 2, 3}};
  CHECK_FALSE(find_ring_iso(whole, kb).has_value());
}
