// Acceptance suite: one timed pass/fail line per criterion.
#include <chrono>
#include <iostream>
#include <set>

#include "common.hpp"
#include "pgx/crossed.hpp"
#include "pgx/seven.hpp"

using namespace pgx;
using namespace pgx::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Harness {
  int failures = 0;
  int index = 0;

  void run(const std::string& name, double budget_seconds, const std::function<bool(std::string&)>& body) {
    ++index;
    std::string detail;
    bool ok = false;
    auto start = Clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_budget = secs < budget_seconds;
    if (!ok || !in_budget) ++failures;
    std::cout << (ok && in_budget ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " ["
              << secs << " s < " << budget_seconds << " s]";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
};

}  // namespace

int main() {
  Harness h;
  auto suite_start = Clock::now();

  PartialAction exa = make_exa();
  PartialAction exb = make_exb();
  GaloisExtension ga = make_galois_extension(exa, std::nullopt, 2);
  GaloisExtension gb = make_galois_extension(exb);

  // 1. EX-B validates, invariants = F2, coordinates pass, tr((1,0)) = 1
  h.run("EX-B axioms, invariants, coordinates, trace", 1.0, [&](std::string& d) {
    const auto& R = dynamic_cast<const ProductRing&>(exb.R());
    bool ok = validate_partial_action(exb).ok();
    Subring inv = invariant_subring(exb);
    ok &= inv.elements == std::vector<RElem>({0, R.one()});
    RElem e10 = R.encode({1, 0}), e01 = R.encode({0, 1});
    ok &= check_galois_coordinates(exb, {{e10, e01}, {e10, e01}}).ok();
    ok &= trace_map(exb, e10) == R.one();
    d = "invariants isomorphic to F2, coordinate identity at every g, tr((1,0)) = (1,1)";
    return ok;
  });

  // 2. j map bijective and multiplicative with |R*G| = 16 = |End| on both fixtures
  h.run("j map tables on EX-A and EX-B", 1.0, [&](std::string& d) {
    JMapResult ja = j_map(ga);
    JMapResult jb = j_map(gb);
    bool ok = ja.report.ok() && jb.report.ok() && ja.bijective && jb.bijective;
    ok &= ja.endomorphisms.size() == 16 && jb.endomorphisms.size() == 16;
    ok &= CrossedProduct(ga.pa, trivial_twisting(ga.pa)).element_count() == 16;
    ok &= CrossedProduct(gb.pa, trivial_twisting(gb.pa)).element_count() == 16;
    d = "|R*G| = |End| = 16 with exact image match on both";
    return ok;
  });

  // 3. delta delta trivial: all fixture cochains in degrees 0..2 plus >= 10^4
  //    random cochains of the three-factor Klein corner
  h.run("coboundary composites are trivial", 30.0, [&](std::string& d) {
    std::size_t checked = 0;
    for (const PartialAction* pa : {&exa, &exb}) {
      CochainComplex cx(*pa);
      for (int n = 0; n <= 2; ++n) {
        std::uint64_t count = cx.cochain_count(n);
        for (std::uint64_t i = 0; i < count; ++i, ++checked)
          if (!(cx.coboundary(cx.coboundary(cx.cochain_at(n, i))) == cx.identity_cochain(n + 2))) return false;
      }
    }
    PartialAction exc = make_exc();
    CochainComplex cx(exc);
    std::mt19937 rng(424242);
    for (int n = 0; n <= 2; ++n)
      for (int t = 0; t < 3400; ++t, ++checked)
        if (!(cx.coboundary(cx.coboundary(cx.random_cochain(n, rng))) == cx.identity_cochain(n + 2)))
          return false;
    d = std::to_string(checked) + " cochains, zero failures";
    return checked >= 10000 + 93;
  });

  // 4. cohomology numbers on EX-A with oracle agreement
  h.run("EX-A cohomology: |Z1|=3, |B1|=3, |H1|=1, |H2|=1", 5.0, [&](std::string& d) {
    CochainComplex cx(exa);
    CohomologyGroup h1 = cohomology_group(cx, 1);
    CohomologyGroup h2 = cohomology_group(cx, 2);
    d = "linearized and bruteforce paths agree exactly";
    return h1.z_size == 3 && h1.b_size == 3 && h1.h_size == 1 && h1.oracle_checked && h2.h_size == 1 &&
           h2.oracle_checked;
  });

  // 5. associativity <=> 2-cocycle on EX-A
  h.run("associativity tracks the twisting axioms", 1.0, [&](std::string& d) {
    Twisting bad = trivial_twisting(exa);
    bad.w[1][1] = 2;
    ValidationReport vt = validate_twisting(exa, bad);
    ValidationReport va = CrossedProduct(exa, bad).check_associativity();
    bool ok = !vt.ok() && !va.ok();
    ok &= va.failures().size() == 1 && va.failures()[0].witness == "(g1,g1,g1)";
    ok &= validate_twisting(exa, trivial_twisting(exa)).ok();
    ok &= CrossedProduct(exa, trivial_twisting(exa)).check_associativity().ok();
    d = "omega(s,s) = x rejected with witness triple (s,s,s); omega(s,s) = 1 accepted";
    return ok;
  });

  // 6. Galois idempotents and the eta round trip on EX-B
  h.run("tensor-square idempotents and eta on EX-B", 1.0, [&](std::string& d) {
    TensorSquareModel model(gb);
    bool ok = model.validate().ok();
    EtaResult eta = eta_iso(gb, trivial_twisting(gb.pa));
    ok &= eta.report.ok();
    d = "orthogonality, unit sum, twist identity, and 16 monomial round trips";
    return ok;
  });

  // 7. coboundary round trip on EX-A: witness detection, verified iso, inverse
  h.run("every 2-coboundary of EX-A detects and inverts", 5.0, [&](std::string& d) {
    CochainComplex cx(ga.pa);
    std::set<std::vector<RElem>> b2;
    std::uint64_t c1 = cx.cochain_count(1);
    for (std::uint64_t i = 0; i < c1; ++i) b2.insert(cx.coboundary(cx.cochain_at(1, i)).values);
    std::size_t checked = 0;
    for (const auto& values : b2) {
      Cochain w{2, values};
      Normalized2Cocycle norm = normalize_2cocycle(cx, w);
      if (norm.changed) continue;  // detection and the iso act on twistings
      Twisting omega = twisting_from_cochain(cx, w);
      auto u = detect_trivial_class(ga, omega);
      if (!u) return false;
      CoboundaryIso iso = iso_from_coboundary(ga, omega, trivial_twisting(ga.pa), *u);
      if (!iso.report.ok()) return false;
      CrossedProduct src(ga.pa, omega);
      for (FiniteGroup::Elt g = 0; g < 2; ++g) {
        if (iso.apply(src, src.monomial(g, ga.pa.one_g[g]))[g] != u->values[g]) return false;
        auto round = iso.unapply(src, iso.apply(src, src.monomial(g, ga.pa.one_g[g])));
        if (round != src.monomial(g, ga.pa.one_g[g])) return false;
      }
      ++checked;
    }
    d = std::to_string(checked) + " coboundary classes, witness recovered from the iso each time";
    return checked >= 1;
  });

  // 8. tensor theorems on EX-A (x) EX-B
  h.run("tensor extension and crossed-product splitting", 30.0, [&](std::string& d) {
    TensorCrossedResult t = tensor_crossed(ga, trivial_twisting(ga.pa), gb, trivial_twisting(gb.pa));
    bool ok = t.report.ok();
    ok &= validate_partial_action(t.tensor.ext.pa).ok();
    ok &= check_galois_coordinates(t.tensor.ext.pa, t.tensor.ext.coords).ok();
    d = "C2 x C3 extension with the product coordinate system; splitting map multiplicative";
    return ok;
  });

  // 9. PicS, alpha*, invariants, and the bimodule-tensor oracle
  h.run("PicS structure and the pair-rule oracle", 10.0, [&](std::string& d) {
    PicSMonoid m = PicSMonoid::concrete(exb.ring);
    bool ok = m.component_count() == 4 && m.validate().ok();
    PicSAction act = PicSAction::concrete(m, exb);
    ok &= act.validate().ok();
    ok &= act.apply(1, act.class_of_ideal(2)) == act.class_of_ideal(1);
    auto inv = pics_invariants(act);
    ok &= inv.report.ok() && inv.elements.size() == 2 && inv.elements[0] == m.zero() &&
          inv.elements[1] == m.one();
    ok &= bimodule_rule_oracle(exa).ok() && bimodule_rule_oracle(exb).ok();
    d = "4-component inverse monoid; [D_{g^-1}] -> [D_g]; invariants {0, [R]}; oracle all pairs";
    return ok;
  });

  // 10. phi0 and phi_f are partial representations with phi(g)phi(g^-1) = [D_g]
  h.run("partial representations on both fixtures", 1.0, [&](std::string& d) {
    for (const PartialAction* pa : {&exa, &exb}) {
      PicSMonoid m = PicSMonoid::concrete(pa->ring);
      PicSAction act = PicSAction::concrete(m, *pa);
      CombinedMonoid cm(act);
      std::vector<CombinedElt> phi0(pa->group.order());
      for (FiniteGroup::Elt g = 0; g < pa->group.order(); ++g) phi0[g] = cm.phi0(g);
      if (!validate_partial_rep(cm, pa->group, phi0).ok()) return false;
      for (const PicsCocycle& f : z1_pics(act)) {
        std::vector<CombinedElt> phif(pa->group.order());
        for (FiniteGroup::Elt g = 0; g < pa->group.order(); ++g) phif[g] = cm.phi_f(f, g);
        if (!validate_partial_rep(cm, pa->group, phif).ok()) return false;
        for (FiniteGroup::Elt g = 0; g < pa->group.order(); ++g)
          if (!(cm.pics_part(cm.mul(phif[g], phif[pa->group.inv(g)])) == act.class_of_ideal(g))) return false;
      }
    }
    d = "all three axioms and the range identity on EX-A and EX-B";
    return true;
  });

  // 11. phi1 on EX-A with f = delta^0(x), and generator multiplicativity on Z^1
  h.run("phi1 on EX-A", 1.0, [&](std::string& d) {
    CochainComplex cx(ga.pa);
    Phi1Result r = phi1(ga, cx.coboundary(Cochain{0, {2}}));
    bool ok = r.report.ok() && r.module_elements == std::vector<RElem>({0, 3}) && r.generator == 3;
    std::vector<Cochain> z1;
    for (std::uint64_t i = 0; i < cx.cochain_count(1); ++i)
      if (cx.is_cocycle(cx.cochain_at(1, i))) z1.push_back(cx.cochain_at(1, i));
    for (const Cochain& f : z1)
      for (const Cochain& g : z1) {
        Phi1Result rf = phi1(ga, f), rg = phi1(ga, g), rfg = phi1(ga, cx.multiply(f, g));
        RElem prod = ga.R().mul(rf.generator, rg.generator);
        std::set<RElem> orbit;
        for (RElem c : ga.invariants.elements) orbit.insert(ga.R().mul(c, prod));
        if (std::vector<RElem>(orbit.begin(), orbit.end()) != rfg.module_elements) return false;
      }
    d = "R_f^G = {0, x^2} with generator x^2; products of generators generate";
    return ok;
  });

  // 12. phi3 choice independence over all psi families of EX-A
  h.run("phi3 over every psi family of EX-A", 5.0, [&](std::string& d) {
    CochainComplex cx(ga.pa);
    auto families = enumerate_psi_families(ga);
    if (families.size() != 9) return false;
    std::vector<Cochain> omegas;
    for (const PsiFamily& psi : families) {
      Phi3Result r = phi3(ga, psi);
      if (!r.report.ok() || !cx.is_cocycle(r.omega)) return false;
      omegas.push_back(r.omega);
    }
    for (std::size_t i = 0; i < families.size(); ++i)
      for (std::size_t j = 0; j < families.size(); ++j) {
        Cochain v = phi3_change_witness(ga, families[i], families[j]);
        if (!cx.is_valid(v)) return false;
        if (!(cx.multiply(omegas[i], cx.coboundary(v)) == omegas[j])) return false;
      }
    d = "9 families; all omegas in Z^2; 81 explicit coboundary witnesses verified";
    return true;
  });

  // 13. phi6 over every rho in C^2(EX-A)
  h.run("phi6 over every rho of EX-A", 10.0, [&](std::string& d) {
    CochainComplex cx(ga.pa);
    PicSMonoid m = PicSMonoid::concrete(ga.pa.ring);
    PicSAction act = PicSAction::concrete(m, ga.pa);
    auto zs = z1_pics(act);
    std::uint64_t c2 = cx.cochain_count(2);
    for (std::uint64_t i = 0; i < c2; ++i) {
      Cochain rho = cx.cochain_at(2, i);
      Phi6Result r = phi6(ga.pa, act, zs[0], rho);
      if (!r.report.ok() || !cx.is_cocycle(r.omega)) return false;
      for (std::uint64_t j = 0; j < c2; ++j) {
        Cochain sigma = cx.cochain_at(2, j);
        Phi6Result rs = phi6(ga.pa, act, zs[0], cx.multiply(sigma, rho));
        if (!(rs.omega == cx.multiply(cx.coboundary(cx.invert(sigma)), r.omega))) return false;
      }
    }
    d = "81 rho choices; delta^3 trivial; class independence with witness delta^2(sigma^{-1})";
    return true;
  });

  // 14. composite probes on EX-A, EX-B, and EX-A (x) EX-B
  h.run("composite probes on EX-A, EX-B, and their tensor", 120.0, [&](std::string& d) {
    SequenceReport ra = verify_composites(ga);
    SequenceReport rb = verify_composites(gb);
    TensorExtensionResult t = tensor_extensions(ga, gb);
    SequenceReport rt = verify_composites(t.ext);
    std::size_t passed = 0, total = 0;
    for (const SequenceReport* r : {&ra, &rb, &rt}) {
      total += r->probes.size();
      for (const auto& p : r->probes) passed += p.passed;
    }
    d = std::to_string(passed) + "/" + std::to_string(total) + " probes (" + rt.disclaimer + ")";
    return ra.all_passed() && rb.all_passed() && rt.all_passed();
  });

  double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  std::cout << (h.failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << ": " << (h.index - h.failures)
            << "/" << h.index << " criteria in " << total << " s\n";
  return h.failures == 0 ? 0 : 1;
}
