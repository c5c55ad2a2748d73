#ifndef PGX_SEVEN_HPP
#define PGX_SEVEN_HPP

#include "pgx/crossed.hpp"
#include "pgx/pics.hpp"

namespace pgx {

// R_f^G = { r : f(g) alpha_g(r 1_{g^-1}) = 1_g r for all g }, with a free
// generator over the invariants and the coboundary behavior of the class.
struct Phi1Result {
  std::vector<RElem> module_elements;
  RElem generator = 0;
  bool free_rank_one = false;
  ValidationReport report;
};
Phi1Result phi1(const GaloisExtension& ext, const Cochain& f);

// Scalar extension of a class over the invariants; concretely [R], verified
// to land in the alpha*-invariant units of PicS(R). A symbolic Pic of the
// base can be supplied as (divisor list, matrix into the top component).
struct Phi2Data {
  AbGroupSpec base;
  IMat matrix;
};
struct Phi2Result {
  std::vector<PicSMonoid::Elt> images;  // per base element
  ValidationReport report;
};
Phi2Result phi2(const GaloisExtension& ext, const PicSAction& act, std::optional<Phi2Data> symbolic = std::nullopt);

// A family psi_g = w_g . alpha_{g^-1}(.) : D_g -> D_{g^-1} of twisted-linear
// bijections, encoded by the units w_g in U(D_{g^-1}).
struct PsiFamily {
  std::vector<RElem> w;  // per g
};
PsiFamily identity_psi_family(const GaloisExtension& ext);
std::vector<PsiFamily> enumerate_psi_families(const GaloisExtension& ext, std::uint64_t cap = 1u << 16);

struct Phi3Result {
  Cochain omega;  // in Z^2
  ValidationReport report;
};
Phi3Result phi3(const GaloisExtension& ext, const PsiFamily& psi);
// v with omega(second) = omega(first) * delta^1(v), built from the unit data.
Cochain phi3_change_witness(const GaloisExtension& ext, const PsiFamily& a, const PsiFamily& b);

// Crossed-product class record: coboundary-detected triviality plus the
// product-compatibility probe over the tensor square.
struct Phi4Result {
  bool trivial_class = false;
  std::optional<Cochain> witness;
  ValidationReport report;
};
Phi4Result phi4(const GaloisExtension& ext, const Twisting& omega, bool run_product_probe = true);
// Class-level entry point: any 2-cocycle, normalized to a twisting first.
Phi4Result phi4(const GaloisExtension& ext, const Cochain& omega, bool run_product_probe = true);
// omega (x) omega' cohomologous to omega omega' (x) trivial over the tensor square.
ValidationReport phi4_product_probe(const GaloisExtension& ext, const Twisting& omega, const Twisting& omega2);

// omega = delta^2(rho^{-1}) together with the loop evaluation of the
// hexagon of bimodule isomorphisms; both routes must agree.
struct Phi6Result {
  Cochain omega;  // in Z^3
  ValidationReport report;
};
Phi6Result phi6(const PartialAction& pa, const PicSAction& act, const PicsCocycle& f, const Cochain& rho);
RElem phi6_loop_value(const PartialAction& pa, const CochainComplex& cx, const Cochain& rho, FiniteGroup::Elt g,
                      FiniteGroup::Elt h, FiniteGroup::Elt l);

struct SequenceReport {
  struct Probe {
    std::string name;
    bool passed = false;
    std::string details;
  };
  std::vector<Probe> probes;
  std::string disclaimer;
  bool all_passed() const {
    for (const auto& p : probes)
      if (!p.passed) return false;
    return true;
  }
};
SequenceReport verify_composites(const GaloisExtension& ext);

}  // namespace pgx

#endif
