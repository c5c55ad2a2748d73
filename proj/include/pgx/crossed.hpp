#ifndef PGX_CROSSED_HPP
#define PGX_CROSSED_HPP

#include "pgx/cohomology.hpp"
#include "pgx/partial_action.hpp"

namespace pgx {

// Twisted partial crossed product R *_{alpha,omega} G. Elements are finitely
// supported coefficient families (r_g)_g with r_g in D_g; the monomial r_g d_g
// is the family supported at g.
class CrossedProduct {
 public:
  using Element = std::vector<RElem>;  // size |G|

  CrossedProduct(const PartialAction& pa, Twisting omega);

  const PartialAction& action() const { return *pa_; }
  const Twisting& twisting() const { return omega_; }
  const FiniteGroup& group() const { return pa_->group; }
  const Ring& R() const { return pa_->R(); }

  Element zero_elem() const { return Element(group().order(), R().zero()); }
  Element one_elem() const;
  Element monomial(FiniteGroup::Elt g, RElem r) const;  // requires r in D_g
  bool element_valid(const Element& a) const;
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(RElem r, const Element& a) const;  // r . a, coefficientwise

  // total number of elements Pi_g |D_g| and the canonical enumeration
  std::uint64_t element_count(std::uint64_t cap = 1u << 24) const;
  Element element_at(std::uint64_t ordinal) const;
  std::uint64_t ordinal_of(const Element& a) const;

  // (a b) c = a (b c) over all monomial triples; a failing triple names the
  // group part (g,h,l), which is exactly where the twisting fails axiom (v)
  ValidationReport check_associativity(std::uint64_t cap = 1u << 24) const;

 private:
  const PartialAction* pa_;
  Twisting omega_;
  std::vector<Ideal> ideals_;  // D_g
};

// j(sum r_g d_g)(r) = sum r_g alpha_g(r 1_{g^-1}), as value tables on R.
struct JMapResult {
  std::vector<std::vector<RElem>> endomorphisms;  // enumerated End_{R^alpha}(R)
  bool bijective = false;
  bool multiplicative = false;
  ValidationReport report;
};
JMapResult j_map(const GaloisExtension& ext, std::size_t cap = 1u << 20);
std::vector<RElem> j_apply(const GaloisExtension& ext, const CrossedProduct::Element& a);

// R^e = R (x)_{R^alpha} R modeled as the product Pi_g D_g through
// psi(x (x) y) = (x alpha_g(y 1_{g^-1}))_g.
class TensorSquareModel {
 public:
  using Elem = std::vector<RElem>;  // component per g, in D_g

  explicit TensorSquareModel(const GaloisExtension& ext);

  const GaloisExtension& extension() const { return *ext_; }
  Elem embed(RElem x, RElem y) const;  // psi(x (x) y)
  Elem mulv(const Elem& a, const Elem& b) const;
  Elem addv(const Elem& a, const Elem& b) const;
  Elem one() const;
  Elem zero() const;
  Elem scale(RElem r, const Elem& a) const;  // r.(c_g) = (r c_g 1_g)

  // e_g = psi^{-1}(indicator at g^-1 with value 1_{g^-1})
  std::vector<Elem> galois_idempotents() const;
  ValidationReport validate() const;  // psi multiplicativity, balance, orthogonality, sums

 private:
  const GaloisExtension* ext_;
};

// eta: R *_{alpha,omega} G -> R^e, coefficient family to component family.
struct EtaResult {
  ValidationReport report;  // linearity, bijectivity, round trips, pure-tensor expansion
};
EtaResult eta_iso(const GaloisExtension& ext, const Twisting& omega);

// phi(a_g d_g) = a_g u_g d_g for omega = omega' * delta^1(u); verified
// multiplicative bijection. Throws std::invalid_argument when u fails the
// coboundary relation, naming the violated pair.
struct CoboundaryIso {
  std::vector<RElem> u;  // per g
  ValidationReport report;
  CrossedProduct::Element apply(const CrossedProduct& src, const CrossedProduct::Element& a) const;
  CrossedProduct::Element unapply(const CrossedProduct& src, const CrossedProduct::Element& a) const;
};
CoboundaryIso iso_from_coboundary(const GaloisExtension& ext, const Twisting& omega, const Twisting& omega_tilde,
                                  const Cochain& u);

// First 1-cochain u with delta^1 u = omega, or absent.
std::optional<Cochain> detect_trivial_class(const GaloisExtension& ext, const Twisting& omega,
                                            std::uint64_t cap = CochainComplex::kDefaultCap);

// phi(r_g d_g) = alpha_{g^-1}(r_g omega_{g,g^-1}) d_{g^-1}:
// (R *_{alpha,omega} G)^op -> R *_{alpha,omega^-1} G.
struct OppositeIso {
  ValidationReport report;
  CrossedProduct::Element apply(const PartialAction& pa, const Twisting& omega,
                                const CrossedProduct::Element& a) const;
};
OppositeIso opposite_iso(const GaloisExtension& ext, const Twisting& omega);

// Crossed product over the tensor extension with twisting omega (x) omega',
// and the monomial-pair multiplicativity check of the splitting map.
struct TensorCrossedResult {
  TensorExtensionResult tensor;
  Twisting omega;
  ValidationReport report;
};
TensorCrossedResult tensor_crossed(const GaloisExtension& a, const Twisting& wa, const GaloisExtension& b,
                                   const Twisting& wb);

}  // namespace pgx

#endif
