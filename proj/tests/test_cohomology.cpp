#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "pgx/cohomology.hpp"

using namespace pgx;
using namespace pgx::testing;

TEST_CASE("coboundary of a 0-cochain on EX-A") {
  PartialAction pa = make_exa();
  CochainComplex cx(pa);
  // t = x: (delta^0 x)(sigma) = sigma(x) x^{-1} = x^2 x^2 = x
  Cochain d = cx.coboundary(Cochain{0, {2}});
  CHECK(d.values[cx.slot_of({1})] == 2);
  CHECK(d.values[cx.slot_of({0})] == pa.R().one());
  // the identity 0-cochain maps to the identity 1-cochain
  CHECK(cx.coboundary(Cochain{0, {pa.R().one()}}) == cx.identity_cochain(1));
}

TEST_CASE("EX-B cochain groups are singletons in every degree") {
  PartialAction pa = make_exb();
  CochainComplex cx(pa);
  for (int n = 0; n <= 3; ++n) {
    CHECK(cx.cochain_count(n) == 1);
    CHECK(cx.coboundary(cx.identity_cochain(n)) == cx.identity_cochain(n + 1));
  }
}

TEST_CASE("cocycle and coboundary tests on EX-A degree 1") {
  PartialAction pa = make_exa();
  CochainComplex cx(pa);
  Cochain f{1, {pa.R().one(), 2}};  // f(1) = 1, f(sigma) = x
  CHECK(cx.is_cocycle(f));
  auto witness = cx.coboundary_witness(f);
  REQUIRE(witness.has_value());
  CHECK(witness->values[0] == 2);  // the first witness in canonical order is t = x
  CHECK(cx.coboundary(*witness) == f);

  CHECK(cx.is_cocycle(cx.identity_cochain(1)));
  CHECK(cx.coboundary_witness(cx.identity_cochain(1)).has_value());

  // degree-2 cochain with omega(sigma,sigma) = x is not a cocycle
  Cochain w = cx.identity_cochain(2);
  w.values[cx.slot_of({1, 1})] = 2;
  CHECK_FALSE(cx.is_cocycle(w));
  CHECK_THROWS_AS(cx.coboundary_witness(Cochain{0, {1}}), std::invalid_argument);
}

TEST_CASE("cochain membership is enforced") {
  PartialAction pa = make_exb();
  CochainComplex cx(pa);
  Cochain bad{1, {pa.R().one(), pa.R().one(), pa.R().one()}};  // 1 is not a unit of D_g
  CHECK_FALSE(cx.is_valid(bad));
  CHECK_THROWS_AS(cx.coboundary(bad), std::invalid_argument);
}

TEST_CASE("cohomology numbers of EX-A match Hilbert 90 and the trivial H^2") {
  PartialAction pa = make_exa();
  CochainComplex cx(pa);
  CohomologyGroup h1 = cohomology_group(cx, 1);
  CHECK(h1.z_size == 3);
  CHECK(h1.b_size == 3);
  CHECK(h1.h_size == 1);
  CHECK(h1.oracle_checked);
  CHECK(h1.divisors.empty());
  REQUIRE(h1.representatives.size() == 1);
  CHECK(cx.is_cocycle(h1.representatives[0]));

  CohomologyGroup h2 = cohomology_group(cx, 2);
  CHECK(h2.h_size == 1);
  CHECK(h2.oracle_checked);

  CohomologyGroup h0 = cohomology_group(cx, 0);
  CHECK(h0.h_size == 1);  // only 1 is Frobenius-fixed among the units
}

TEST_CASE("H^0 equals the invariant units") {
  for (PartialAction pa : {make_exa(), make_exb(), make_exc()}) {
    CochainComplex cx(pa);
    CohomologyGroup h0 = bruteforce_cohomology(cx, 0);
    UnitGroup u = unit_group(pa.R());
    std::size_t invariant_units = 0;
    for (RElem t : u.elements) {
      bool inv = true;
      for (FiniteGroup::Elt g = 0; g < pa.group.order(); ++g)
        inv &= pa.apply_cut(g, t) == pa.R().mul(t, pa.one_g[g]);
      invariant_units += inv;
    }
    CHECK(h0.z_size == invariant_units);
    CHECK(h0.h_size == invariant_units);
  }
}

TEST_CASE("trivial group: C^0 = U(T) and all higher groups trivial") {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 9, 0, {}}});
  PartialAction pa;
  pa.ring = br.ring;
  pa.group = FiniteGroup::cyclic(1);
  pa.one_g = {br.ring->one()};
  pa.alpha.resize(1);
  for (RElem x = 0; x < br.ring->size(); ++x) pa.alpha[0][x] = x;
  CochainComplex cx(pa);
  CHECK(cx.cochain_count(0) == 6);
  CohomologyGroup h1 = cohomology_group(cx, 1);
  CHECK(h1.h_size == 1);
}

TEST_CASE("every 1-cocycle is normalized") {
  for (PartialAction pa : {make_exa(), make_exb()}) {
    CochainComplex cx(pa);
    std::uint64_t n = cx.cochain_count(1);
    for (std::uint64_t i = 0; i < n; ++i) {
      Cochain f = cx.cochain_at(1, i);
      if (cx.is_cocycle(f)) CHECK(f.values[cx.slot_of({0})] == pa.R().one());
    }
  }
}

TEST_CASE("delta is a homomorphism and delta delta is trivial on all fixture cochains") {
  for (PartialAction pa : {make_exa(), make_exb()}) {
    CochainComplex cx(pa);
    for (int n = 0; n <= 2; ++n) {
      std::uint64_t count = cx.cochain_count(n);
      for (std::uint64_t i = 0; i < count; ++i) {
        Cochain f = cx.cochain_at(n, i);
        CHECK(cx.coboundary(cx.coboundary(f)) == cx.identity_cochain(n + 2));
        for (std::uint64_t j = 0; j < count; ++j) {
          Cochain g = cx.cochain_at(n, j);
          CHECK(cx.coboundary(cx.multiply(f, g)) == cx.multiply(cx.coboundary(f), cx.coboundary(g)));
        }
      }
    }
  }
}

TEST_CASE("delta delta trivial on random cochains of the Klein corner instance") {
  PartialAction pa = make_exc();
  CochainComplex cx(pa);
  std::mt19937 rng(20260808);
  for (int n = 0; n <= 2; ++n)
    for (int trial = 0; trial < 400; ++trial) {
      Cochain f = cx.random_cochain(n, rng);
      CHECK(cx.coboundary(cx.coboundary(f)) == cx.identity_cochain(n + 2));
    }
}

TEST_CASE("2-cocycles and twistings coincide after normalization") {
  PartialAction pa = make_exa();
  CochainComplex cx(pa);
  std::uint64_t n = cx.cochain_count(2);
  std::size_t cocycles = 0, normalized = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    Cochain w = cx.cochain_at(2, i);
    if (!cx.is_cocycle(w)) {
      // a non-cocycle never validates as a twisting
      CHECK_FALSE(validate_twisting(pa, twisting_from_cochain(cx, w)).ok());
      continue;
    }
    ++cocycles;
    Normalized2Cocycle norm = normalize_2cocycle(cx, w);
    CHECK(cx.is_cocycle(norm.cocycle));
    CHECK(validate_twisting(pa, twisting_from_cochain(cx, norm.cocycle)).ok());
    if (!norm.changed) {
      ++normalized;
      CHECK(validate_twisting(pa, twisting_from_cochain(cx, w)).ok());
    }
    // normalization is cohomologous: the witness reproduces the change
    CHECK(cx.multiply(w, cx.coboundary(norm.witness)) == norm.cocycle);
  }
  CHECK(cocycles == 3);
  CHECK(normalized >= 1);
  // conversely every valid twisting is a 2-cocycle
  CHECK(cx.is_cocycle(cochain_from_twisting(cx, trivial_twisting(pa))));
}

TEST_CASE("linearized path agrees with the oracle on the Klein corner in low degree") {
  PartialAction pa = make_exc();
  CochainComplex cx(pa);
  // |C^1| = 8*4*4*4 = 512; both paths run and must agree (checked internally)
  CohomologyGroup h1 = cohomology_group(cx, 1);
  CHECK(h1.oracle_checked);
  CHECK(h1.z_size * h1.b_size > 0);
  CHECK(h1.h_size == h1.z_size / h1.b_size);
}

TEST_CASE("pure linearized path beyond the cap stays self-consistent") {
  PartialAction pa = make_exc();
  CochainComplex cx(pa);
  CHECK_THROWS_AS(cx.cochain_count(2), CapExceeded);
  CohomologyGroup h1 = cohomology_group(cx, 1);
  REQUIRE(h1.oracle_checked);
  CohomologyGroup h2 = cohomology_group(cx, 2);
  CHECK_FALSE(h2.oracle_checked);
  CHECK(h2.note.find("skipped") != std::string::npos);
  // the coboundary count factors through the degree-1 kernel
  CHECK(h2.b_size == cx.cochain_count(1) / h1.z_size);
  CHECK(h2.h_size == h2.z_size / h2.b_size);
  for (const Cochain& r : h2.representatives) CHECK(cx.is_cocycle(r));
}

TEST_CASE("oracle skip note appears beyond the enumeration cap") {
  PartialAction pa = make_exc();
  CochainComplex cx(pa);
  CohomologyOptions opt;
  opt.oracle_cap = 10;  // force the skip
  CohomologyGroup h1 = cohomology_group(cx, 1, opt);
  CHECK_FALSE(h1.oracle_checked);
  CHECK(h1.note.find("skipped") != std::string::npos);
}

TEST_CASE("coefficients in a cut ideal carrier") {
  PartialAction pa = make_exc();
  // the carrier must be an invariant idempotent; 1 works, arbitrary corners do not
  CHECK_THROWS_AS(CochainComplex(pa, pa.one_g[1]), std::invalid_argument);
  CochainComplex cx(pa, pa.R().one());
  CHECK(cx.cochain_count(0) == unit_group(pa.R()).size());

  // a block action has proper invariant idempotents; coefficients restrict
  // to either block
  auto br = build_ring(std::vector<LocalFactor>(3, {LocalFactor::Kind::Zmod, 2, 0, {}}));
  auto R = br.ring;
  PartialAction block;
  block.ring = R;
  block.group = FiniteGroup::cyclic(3);
  RElem e110 = R->encode({1, 1, 0}), e001 = R->encode({0, 0, 1});
  RElem e100 = R->encode({1, 0, 0}), e010 = R->encode({0, 1, 0});
  block.one_g = {R->one(), R->encode({1, 0, 1}), R->encode({0, 1, 1})};
  block.alpha.resize(3);
  for (RElem x = 0; x < R->size(); ++x) block.alpha[0][x] = x;
  Ideal dom1(*R, R->encode({0, 1, 1})), dom2(*R, R->encode({1, 0, 1}));
  for (RElem x : dom1.elements()) {
    auto d = R->decode(x);
    block.alpha[1][x] = R->encode({d[1], 0, d[2]});
  }
  for (RElem x : dom2.elements()) {
    auto d = R->decode(x);
    block.alpha[2][x] = R->encode({0, d[0], d[2]});
  }
  REQUIRE(validate_partial_action(block).ok());
  // the partial part lives on the first two factors, the third is fixed
  CochainComplex cpart(block, e110);
  CochainComplex cfix(block, e001);
  CHECK(cpart.cochain_count(1) == 1);  // all cut-ideal unit groups trivial
  CHECK(cfix.cochain_count(1) == 1);
  CHECK(cohomology_group(cpart, 1).h_size == 1);
  CHECK(cohomology_group(cfix, 1).h_size == 1);
  (void)e100;
  (void)e010;
}
