// Re-verifies every claimed property of the canonical fixtures by exhaustion
// before anything else relies on them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"

using namespace pgx;
using namespace pgx::testing;

TEST_CASE("EX-A: GF(4) with the Frobenius C2 action") {
  PartialAction pa = make_exa();
  const Ring& R = pa.R();
  CHECK(R.size() == 4);
  CHECK(check_ring_axioms(R).ok());

  // every nonzero element is invertible and the unit group is cyclic of order 3
  UnitGroup u = unit_group(R);
  CHECK(u.size() == 3);
  CHECK(u.elementary_divisors() == std::vector<std::uint32_t>{3});
  for (RElem x = 1; x < 4; ++x) CHECK(u.contains(x));

  // the Frobenius is a ring automorphism and the action satisfies every axiom
  RingMorphism frob{{&R, R.one()}, {&R, R.one()}, pa.alpha[1], true};
  CHECK(check_morphism(frob).ok());
  CHECK(validate_partial_action(pa).ok());

  Subring inv = invariant_subring(pa);
  CHECK(inv.elements == std::vector<RElem>{0, 1});

  // trace of the generator: x + x^2 = 1
  CHECK(trace_map(pa, 2) == R.one());

  // classically Galois: a coordinate system with m <= 2 exists
  auto coords = find_galois_coordinates(pa, 2);
  REQUIRE(coords.has_value());
  CHECK(check_galois_coordinates(pa, *coords).ok());

  GaloisExtension ext = make_galois_extension(pa, std::nullopt, 2);
  CHECK(trace_map(pa, ext.trace_unit) == R.one());
}

TEST_CASE("EX-B: the partial C3 action on F2 x F2") {
  PartialAction pa = make_exb();
  const auto& R = dynamic_cast<const ProductRing&>(pa.R());
  CHECK(R.size() == 4);
  CHECK(validate_partial_action(pa).ok());

  RElem e10 = R.encode({1, 0}), e01 = R.encode({0, 1}), e11 = R.one();
  CHECK(pa.one_g == std::vector<RElem>{e11, e10, e01});

  // invariants are the diagonal copy of F2
  Subring inv = invariant_subring(pa);
  CHECK(inv.elements == std::vector<RElem>({0, e11}));

  // trace((1,0)) = (1,0) + alpha_g((1,0)(0,1)) + alpha_{g^2}((1,0)(1,0)) = (1,1)
  CHECK(trace_map(pa, e10) == e11);

  // the stated coordinate system passes for all three group elements
  GaloisCoordinates coords{{e10, e01}, {e10, e01}};
  CHECK(check_galois_coordinates(pa, coords).ok());

  // and a system with m <= 2 is found by the search
  auto found = find_galois_coordinates(pa, 2);
  REQUIRE(found.has_value());
  CHECK(check_galois_coordinates(pa, *found).ok());

  GaloisExtension ext = make_galois_extension(pa, coords);
  CHECK(trace_map(pa, ext.trace_unit) == R.one());
}

TEST_CASE("EX-B arises from restricting the cyclic global action on F2^3") {
  auto br = build_ring(std::vector<LocalFactor>(3, {LocalFactor::Kind::Zmod, 2, 0, {}}));
  auto S = br.ring;
  PartialAction glob;
  glob.ring = S;
  glob.group = FiniteGroup::cyclic(3);
  glob.one_g.assign(3, S->one());
  glob.alpha.resize(3);
  for (RElem x = 0; x < S->size(); ++x) {
    auto d = S->decode(x);
    glob.alpha[0][x] = x;
    glob.alpha[1][x] = S->encode({d[1], d[2], d[0]});
    glob.alpha[2][x] = S->encode({d[2], d[0], d[1]});
  }
  REQUIRE(validate_partial_action(glob).ok());

  PartialAction restr = restrict_global_action(glob, S->encode({1, 1, 0}));
  CHECK(validate_partial_action(restr).ok());

  PartialAction exb = make_exb();
  CHECK(restr.one_g == exb.one_g);
  CHECK(restr.alpha == exb.alpha);
}

TEST_CASE("EX-N: trivial C2 on F2 is a valid action but not Galois") {
  PartialAction pa = make_exn();
  CHECK(validate_partial_action(pa).ok());
  CHECK_FALSE(find_galois_coordinates(pa, 3).has_value());
  CHECK_THROWS_AS(make_galois_extension(pa), std::invalid_argument);
}

TEST_CASE("EX-C: Klein-group corner of (Z/4)^4 has three local factors and nontrivial units") {
  PartialAction pa = make_exc();
  const auto& R = dynamic_cast<const ProductRing&>(pa.R());
  CHECK(R.factors().size() == 3);
  CHECK(R.size() == 64);
  CHECK(validate_partial_action(pa).ok());
  CHECK(pa.one_g[0] == R.one());
  for (FiniteGroup::Elt g = 1; g < 4; ++g) {
    CHECK(pa.one_g[g] != R.one());
    CHECK(pa.one_g[g] != R.zero());
    UnitGroup u = unit_group(Ideal(R, pa.one_g[g]));
    CHECK(u.size() == 4);  // two Z/4 factors survive in every proper corner
  }
}
