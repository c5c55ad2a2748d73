#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "pgx/seven.hpp"

using namespace pgx;
using namespace pgx::testing;

namespace {
GaloisExtension exta() { return make_galois_extension(make_exa(), std::nullopt, 2); }
GaloisExtension extb() { return make_galois_extension(make_exb()); }
}  // namespace

TEST_CASE("phi1 on the trivial cocycle recovers the invariants") {
  for (GaloisExtension ext : {exta(), extb()}) {
    CochainComplex cx(ext.pa);
    Phi1Result r = phi1(ext, cx.identity_cochain(1));
    CHECK(r.report.ok());
    CHECK(r.module_elements == ext.invariants.elements);
    CHECK(r.generator == ext.R().one());
  }
}

TEST_CASE("phi1 on EX-A with f = delta^0(x)") {
  GaloisExtension ext = exta();
  CochainComplex cx(ext.pa);
  Cochain f = cx.coboundary(Cochain{0, {2}});
  REQUIRE(cx.is_cocycle(f));
  Phi1Result r = phi1(ext, f);
  CHECK(r.report.ok());
  CHECK(r.module_elements == std::vector<RElem>({0, 3}));  // {0, x^2}
  CHECK(r.generator == 3);
  CHECK(r.free_rank_one);
}

TEST_CASE("phi1 rejects non-cocycles and generator multiplicativity holds across Z^1") {
  GaloisExtension ext = exta();
  CochainComplex cx(ext.pa);
  Cochain notc{1, {2, 2}};  // f(1) = x is not normalized, hence not a cocycle
  CHECK_THROWS_AS(phi1(ext, notc), std::invalid_argument);

  std::vector<Cochain> z1;
  std::uint64_t n = cx.cochain_count(1);
  for (std::uint64_t i = 0; i < n; ++i) {
    Cochain f = cx.cochain_at(1, i);
    if (cx.is_cocycle(f)) z1.push_back(f);
  }
  CHECK(z1.size() == 3);
  for (const Cochain& f : z1)
    for (const Cochain& g : z1) {
      Phi1Result rf = phi1(ext, f), rg = phi1(ext, g), rfg = phi1(ext, cx.multiply(f, g));
      RElem prod = ext.R().mul(rf.generator, rg.generator);
      // the product of generators generates R_{fg}^G
      std::set<RElem> orbit;
      for (RElem c : ext.invariants.elements) orbit.insert(ext.R().mul(c, prod));
      CHECK(std::vector<RElem>(orbit.begin(), orbit.end()) == rfg.module_elements);
    }
}

TEST_CASE("phi2 lands on the invariant identity class") {
  for (GaloisExtension ext : {exta(), extb()}) {
    PicSMonoid m = PicSMonoid::concrete(ext.pa.ring);
    PicSAction act = PicSAction::concrete(m, ext.pa);
    Phi2Result r = phi2(ext, act);
    CHECK(r.report.ok());
    REQUIRE(r.images.size() == 1);
    CHECK(r.images[0] == m.one());
  }
}

TEST_CASE("phi2 symbolic: a supplied scalar-extension map is verified invariant") {
  // trivial C2 on F2 with symbolic C2 on the top component; alpha* acts as the
  // identity, so the whole top group is invariant
  PartialAction exn = make_exn();
  GaloisExtension fake;
  fake.pa = exn;
  fake.invariants = invariant_subring(exn);
  PicSMonoid ms = PicSMonoid::symbolic(exn.ring, {}, {AbGroupSpec{}, AbGroupSpec{{2}}}, {}, nullptr);
  std::map<std::uint32_t, IMat> id1{{1, IMat{{1}}}};
  PicSAction as = PicSAction::symbolic(ms, exn, {id1, id1});
  Phi2Data data{AbGroupSpec{{2}}, IMat{{1}}};
  Phi2Result r = phi2(fake, as, data);
  CHECK(r.report.ok());
  CHECK(r.images.size() == 2);
}

TEST_CASE("phi3 with the identity family is trivial and every family gives a cocycle") {
  GaloisExtension ext = exta();
  CochainComplex cx(ext.pa);
  Phi3Result id = phi3(ext, identity_psi_family(ext));
  CHECK(id.report.ok());
  CHECK(id.omega == cx.identity_cochain(2));

  auto families = enumerate_psi_families(ext);
  CHECK(families.size() == 9);
  for (const PsiFamily& a : families) {
    Phi3Result ra = phi3(ext, a);
    CHECK(ra.report.ok());
    for (const PsiFamily& b : families) {
      Phi3Result rb = phi3(ext, b);
      Cochain v = phi3_change_witness(ext, a, b);
      CHECK(cx.is_valid(v));
      CHECK(cx.multiply(ra.omega, cx.coboundary(v)) == rb.omega);
    }
  }
}

TEST_CASE("phi3 on EX-B is forced trivial") {
  GaloisExtension ext = extb();
  auto families = enumerate_psi_families(ext);
  REQUIRE(families.size() == 1);
  Phi3Result r = phi3(ext, families[0]);
  CHECK(r.report.ok());
  CochainComplex cx(ext.pa);
  CHECK(r.omega == cx.identity_cochain(2));
}

TEST_CASE("phi3 rejects non-unit data") {
  GaloisExtension ext = extb();
  PsiFamily bad = identity_psi_family(ext);
  bad.w[1] = ext.R().one();  // not a unit of D_{g^-1}
  CHECK_THROWS_AS(phi3(ext, bad), std::invalid_argument);
}

TEST_CASE("phi4 classifies coboundaries as trivial and verifies the product probe") {
  GaloisExtension ext = exta();
  Phi4Result triv = phi4(ext, trivial_twisting(ext.pa));
  CHECK(triv.trivial_class);
  CHECK(triv.report.ok());

  CochainComplex cx(ext.pa);
  Cochain u{1, {ext.R().one(), 2}};
  Phi4Result fromu = phi4(ext, cx.coboundary(u));
  CHECK(fromu.trivial_class);
  CHECK(fromu.report.ok());

  GaloisExtension eb = extb();
  Phi4Result b = phi4(eb, trivial_twisting(eb.pa));
  CHECK(b.trivial_class);
  CHECK(b.report.ok());

  CHECK_THROWS_AS(phi4(ext, Cochain{2, {1, 1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("phi4 product probe over all cocycle classes of EX-A") {
  GaloisExtension ext = exta();
  CochainComplex cx(ext.pa);
  // |Z^2| = 3, but the only normalized 2-cocycle (hence the only twisting)
  // is the trivial one: every class normalizes onto it
  std::vector<Twisting> twists;
  std::size_t cocycles = 0;
  std::uint64_t n = cx.cochain_count(2);
  for (std::uint64_t i = 0; i < n; ++i) {
    Cochain w = cx.cochain_at(2, i);
    if (!cx.is_cocycle(w)) continue;
    ++cocycles;
    Normalized2Cocycle norm = normalize_2cocycle(cx, w);
    Twisting t = twisting_from_cochain(cx, norm.cocycle);
    REQUIRE(validate_twisting(ext.pa, t).ok());
    twists.push_back(t);
  }
  CHECK(cocycles == 3);
  REQUIRE(twists.size() == 3);
  for (const Twisting& a : twists)
    for (const Twisting& b : twists) CHECK(phi4_product_probe(ext, a, b).ok());
}

TEST_CASE("phi6: identity rho gives the identity 3-cochain") {
  GaloisExtension ext = exta();
  CochainComplex cx(ext.pa);
  PicSMonoid m = PicSMonoid::concrete(ext.pa.ring);
  PicSAction act = PicSAction::concrete(m, ext.pa);
  auto zs = z1_pics(act);
  Phi6Result r = phi6(ext.pa, act, zs[0], cx.identity_cochain(2));
  CHECK(r.report.ok());
  CHECK(r.omega == cx.identity_cochain(3));
}

TEST_CASE("phi6 on every rho of EX-A: cocycle, loop agreement, class independence") {
  GaloisExtension ext = exta();
  CochainComplex cx(ext.pa);
  PicSMonoid m = PicSMonoid::concrete(ext.pa.ring);
  PicSAction act = PicSAction::concrete(m, ext.pa);
  auto zs = z1_pics(act);
  std::uint64_t n = cx.cochain_count(2);
  for (std::uint64_t i = 0; i < n; ++i) {
    Cochain rho = cx.cochain_at(2, i);
    Phi6Result r = phi6(ext.pa, act, zs[0], rho);
    CHECK(r.report.ok());
    CHECK(cx.is_cocycle(r.omega));  // delta^3(omega) is the identity cochain
    // class independence: rho -> sigma rho changes omega by delta^2(sigma^{-1})
    for (std::uint64_t j = 0; j < n; ++j) {
      Cochain sigma = cx.cochain_at(2, j);
      Phi6Result rs = phi6(ext.pa, act, zs[0], cx.multiply(sigma, rho));
      CHECK(rs.omega == cx.multiply(cx.coboundary(cx.invert(sigma)), r.omega));
    }
    // multiplicativity of the pointwise product construction
    for (std::uint64_t j = 0; j < n; ++j) {
      Cochain rho2 = cx.cochain_at(2, j);
      Phi6Result ra = phi6(ext.pa, act, zs[0], rho2);
      Phi6Result rprod = phi6(ext.pa, act, zs[0], cx.multiply(rho, rho2));
      CHECK(rprod.omega == cx.multiply(r.omega, ra.omega));
    }
  }
}

TEST_CASE("phi6 on EX-A with rho(sigma,sigma) = x") {
  GaloisExtension ext = exta();
  CochainComplex cx(ext.pa);
  PicSMonoid m = PicSMonoid::concrete(ext.pa.ring);
  PicSAction act = PicSAction::concrete(m, ext.pa);
  auto zs = z1_pics(act);
  Cochain rho = cx.identity_cochain(2);
  rho.values[cx.slot_of({1, 1})] = 2;
  Phi6Result r = phi6(ext.pa, act, zs[0], rho);
  CHECK(r.report.ok());
  CHECK(r.omega == cx.coboundary(cx.invert(rho)));
  CHECK(cx.coboundary_witness(r.omega).has_value());
}

TEST_CASE("phi6 on EX-B is forced trivial") {
  GaloisExtension ext = extb();
  CochainComplex cx(ext.pa);
  PicSMonoid m = PicSMonoid::concrete(ext.pa.ring);
  PicSAction act = PicSAction::concrete(m, ext.pa);
  auto zs = z1_pics(act);
  REQUIRE(zs.size() == 1);
  Phi6Result r = phi6(ext.pa, act, zs[0], cx.identity_cochain(2));
  CHECK(r.report.ok());
  CHECK(r.omega == cx.identity_cochain(3));
}

TEST_CASE("phi6 loop route agrees with the coboundary route on random Klein-corner data") {
  PartialAction pa = make_exc();
  CochainComplex cx(pa);
  PicSMonoid m = PicSMonoid::concrete(pa.ring);
  PicSAction act = PicSAction::concrete(m, pa);
  auto zs = z1_pics(act);
  REQUIRE(zs.size() == 1);
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Cochain rho = cx.random_cochain(2, rng);
    Phi6Result r = phi6(pa, act, zs[0], rho);
    CHECK(r.report.ok());
    CHECK(cx.is_cocycle(r.omega));
  }
}

TEST_CASE("phi6 rejects invalid rho") {
  GaloisExtension ext = extb();
  PicSMonoid m = PicSMonoid::concrete(ext.pa.ring);
  PicSAction act = PicSAction::concrete(m, ext.pa);
  auto zs = z1_pics(act);
  Cochain bad{2, std::vector<RElem>(9, ext.R().one())};
  CHECK_THROWS_AS(phi6(ext.pa, act, zs[0], bad), std::invalid_argument);
}

TEST_CASE("verify_composites passes on EX-A, EX-B, and a degenerate trivial-group extension") {
  for (GaloisExtension ext : {exta(), extb()}) {
    SequenceReport rep = verify_composites(ext);
    CHECK(rep.all_passed());
    CHECK(rep.disclaimer == "empirical: a pass is evidence, not proof");
    CHECK(rep.probes.size() == 4);
  }
  auto br = build_ring({{LocalFactor::Kind::Zmod, 3, 0, {}}});
  PartialAction triv;
  triv.ring = br.ring;
  triv.group = FiniteGroup::cyclic(1);
  triv.one_g = {br.ring->one()};
  triv.alpha.resize(1);
  for (RElem x = 0; x < 3; ++x) triv.alpha[0][x] = x;
  SequenceReport rep = verify_composites(make_galois_extension(triv, std::nullopt, 1));
  CHECK(rep.all_passed());
}
