#ifndef PGX_PICS_HPP
#define PGX_PICS_HPP

#include <functional>
#include <map>

#include "pgx/partial_action.hpp"

namespace pgx {

// Finite abelian group presented by elementary divisors; elements are
// exponent vectors.
struct AbGroupSpec {
  std::vector<std::uint32_t> divisors;  // each >= 2; empty = trivial group

  std::size_t rank() const { return divisors.size(); }
  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (auto d : divisors) s *= d;
    return s;
  }
  std::vector<std::uint32_t> identity() const { return std::vector<std::uint32_t>(rank(), 0); }
  std::vector<std::uint32_t> add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
  std::vector<std::uint32_t> negate(const std::vector<std::uint32_t>& a) const;
  std::vector<std::uint32_t> element_at(std::uint64_t ordinal) const;
};

// Commutative inverse monoid that is a semilattice of abelian groups:
// components indexed by a meet-semilattice, one abelian group per component,
// structural homomorphisms along the order.
class PicSMonoid {
 public:
  struct Elt {
    std::uint32_t comp = 0;
    std::vector<std::uint32_t> a;
    bool operator==(const Elt&) const = default;
    bool operator<(const Elt& o) const { return comp != o.comp ? comp < o.comp : a < o.a; }
  };

  // concrete layer: components = idempotents of the ring, trivial groups
  static PicSMonoid concrete(std::shared_ptr<const Ring> ring);
  // symbolic layer: supplied groups and structural maps on a component
  // semilattice (ring-backed when ring != nullptr, abstract otherwise);
  // functoriality of the eps maps is validated
  static PicSMonoid symbolic(std::shared_ptr<const Ring> ring, std::vector<std::vector<std::uint32_t>> meet,
                             std::vector<AbGroupSpec> groups, std::map<std::pair<std::uint32_t, std::uint32_t>, IMat> eps,
                             ValidationReport* build_report = nullptr);

  std::uint32_t component_count() const { return static_cast<std::uint32_t>(meet_.size()); }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const { return meet_[a][b]; }
  bool leq(std::uint32_t a, std::uint32_t b) const { return meet_[a][b] == a; }
  const AbGroupSpec& group(std::uint32_t comp) const { return groups_[comp]; }
  std::uint32_t zero_component() const { return zero_comp_; }
  std::uint32_t one_component() const { return one_comp_; }

  const Ring* ring() const { return ring_.get(); }
  std::uint32_t component_of_idempotent(RElem e) const;
  RElem idempotent_of_component(std::uint32_t comp) const { return comp_idem_[comp]; }

  std::vector<std::uint32_t> eps_apply(std::uint32_t from, std::uint32_t to,
                                       const std::vector<std::uint32_t>& a) const;

  Elt mul(const Elt& x, const Elt& y) const;
  Elt star(const Elt& x) const;
  Elt one() const { return {one_comp_, groups_[one_comp_].identity()}; }
  Elt zero() const { return {zero_comp_, groups_[zero_comp_].identity()}; }
  Elt component_identity(std::uint32_t comp) const { return {comp, groups_[comp].identity()}; }
  bool is_elt_idempotent(const Elt& x) const { return mul(x, x) == x; }

  std::vector<Elt> elements(std::uint64_t cap = 1u << 20) const;
  std::vector<Elt> units() const;  // elements u with u v = one for some v

  // inverse monoid axioms, commutativity, zero absorption, units = top group
  ValidationReport validate(std::uint64_t cap = 1u << 16) const;

 private:
  std::shared_ptr<const Ring> ring_;  // may be null (abstract semilattice)
  std::vector<RElem> comp_idem_;      // ring-backed only
  std::vector<std::vector<std::uint32_t>> meet_;
  std::vector<AbGroupSpec> groups_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, IMat> eps_;
  std::uint32_t zero_comp_ = 0, one_comp_ = 0;
};

// The induced partial action on PicS: domain of step g is the ideal of
// components under 1_g; components move by e -> alpha_g(e), group parts by
// the supplied maps (identity/trivial on the concrete layer).
class PicSAction {
 public:
  static PicSAction concrete(const PicSMonoid& m, const PartialAction& pa);
  static PicSAction symbolic(const PicSMonoid& m, const PartialAction& pa,
                             std::vector<std::map<std::uint32_t, IMat>> group_maps);

  const PicSMonoid& monoid() const { return *m_; }
  const PartialAction& action() const { return *pa_; }

  bool in_domain(FiniteGroup::Elt g, const PicSMonoid::Elt& x) const;  // x.comp <= 1_{g^-1}
  PicSMonoid::Elt apply(FiniteGroup::Elt g, const PicSMonoid::Elt& x) const;
  PicSMonoid::Elt class_of_ideal(FiniteGroup::Elt g) const;  // [D_g]

  ValidationReport validate() const;

 private:
  const PicSMonoid* m_ = nullptr;
  const PartialAction* pa_ = nullptr;
  std::vector<std::map<std::uint32_t, IMat>> group_maps_;  // per g, per domain component
};

// { x : alpha*_g(x [D_{g^-1}]) = x [D_g] for all g }, verified to be a
// 0-containing inverse submonoid.
struct PicSInvariantsResult {
  std::vector<PicSMonoid::Elt> elements;
  ValidationReport report;
};
PicSInvariantsResult pics_invariants(const PicSAction& act);

// 1-cocycles f with f(g) a unit of X_g: f(gh)[D_g] = f(g) alpha*_g(f(h)[D_{g^-1}]).
struct PicsCocycle {
  std::vector<PicSMonoid::Elt> f;  // per g, component 1_g
};
std::vector<PicsCocycle> z1_pics(const PicSAction& act, std::uint64_t cap = 1u << 20);

// Elements of the combined monoid: group-part times the class of the
// bimodule Re with left action through alpha_{g^-1}. The group part lives at
// the left-support component alpha_g(e).
struct CombinedElt {
  FiniteGroup::Elt g = 0;
  std::uint32_t ecomp = 0;              // component with idem <= 1_{g^-1}
  std::vector<std::uint32_t> a;         // in A_{alpha_g(e)}
  bool operator==(const CombinedElt&) const = default;
};
class CombinedMonoid {
 public:
  explicit CombinedMonoid(const PicSAction& act);
  CombinedElt one() const;
  CombinedElt mul(const CombinedElt& x, const CombinedElt& y) const;
  CombinedElt embed(const PicSMonoid::Elt& x) const;  // g = 1
  CombinedElt phi0(FiniteGroup::Elt g) const;
  CombinedElt phi_f(const PicsCocycle& f, FiniteGroup::Elt g) const;
  PicSMonoid::Elt pics_part(const CombinedElt& x) const;  // defined when g = 1
  std::uint32_t left_component(const CombinedElt& x) const;

 private:
  const PicSAction* act_;
};

// Axioms of a partial representation for a map given on every group element.
template <typename M, typename E>
ValidationReport validate_partial_rep(const M& monoid, const FiniteGroup& G, const std::vector<E>& phi) {
  ValidationReport rep;
  bool ax1 = true, ax2 = true;
  std::string w;
  for (FiniteGroup::Elt g = 0; g < G.order(); ++g)
    for (FiniteGroup::Elt h = 0; h < G.order(); ++h) {
      E lhs = monoid.mul(monoid.mul(phi[G.inv(g)], phi[g]), phi[h]);
      E rhs = monoid.mul(phi[G.inv(g)], phi[G.mul(g, h)]);
      if (!(lhs == rhs) && ax1) {
        ax1 = false;
        w = "(g" + std::to_string(g) + ",g" + std::to_string(h) + ")";
      }
      E lhs2 = monoid.mul(monoid.mul(phi[g], phi[h]), phi[G.inv(h)]);
      E rhs2 = monoid.mul(phi[G.mul(g, h)], phi[G.inv(h)]);
      if (!(lhs2 == rhs2) && ax2) {
        ax2 = false;
        w = "(g" + std::to_string(g) + ",g" + std::to_string(h) + ")";
      }
    }
  rep.require("axiom (i): phi(g^-1) phi(g) phi(h) = phi(g^-1) phi(gh)", ax1, w);
  rep.require("axiom (ii): phi(g) phi(h) phi(h^-1) = phi(gh) phi(h^-1)", ax2, w);
  rep.require("axiom (iii): phi(1) = 1", phi[0] == monoid.one());
  return rep;
}

// Literal R-R-bimodule with a finite carrier inside R.
struct Bimodule {
  const Ring* ring = nullptr;
  std::vector<RElem> carrier;  // sorted, additively closed
  std::function<RElem(RElem, RElem)> left;   // (r, m) -> r.m
  std::function<RElem(RElem, RElem)> right;  // (m, r) -> m.r
};
Bimodule twisted_corner_bimodule(const PartialAction& pa, FiniteGroup::Elt g, RElem e);

// M (x)_R N computed as an abelian-group presentation (generators = pairs,
// relations = biadditivity and balance), with the induced actions.
struct TensorBimodule {
  std::vector<long long> divisors;                       // per coordinate
  std::vector<std::vector<std::uint32_t>> elements;      // residue tuples
  std::vector<std::uint32_t> add(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&) const;
  std::vector<std::uint32_t> gen_coords(std::size_t i, std::size_t j) const;  // image of m_i (x) n_j
  std::vector<std::uint32_t> left_act(RElem r, const std::vector<std::uint32_t>&) const;
  std::vector<std::uint32_t> right_act(const std::vector<std::uint32_t>&, RElem r) const;
  std::uint64_t size() const { return elements.size(); }

  // internals
  const Bimodule *m = nullptr, *n = nullptr;
  IMat v, vinv;
  std::size_t gens = 0;
};
TensorBimodule tensor_bimodules(const Bimodule& m, const Bimodule& n);

// Does the presented tensor admit a bimodule isomorphism onto the target?
bool bimodule_iso_exists(const TensorBimodule& q, const Bimodule& target);

// Validates the pair multiplication rule (g,e)(h,f) = (gh, alpha_{h^-1}(e 1_h) f)
// against the literal tensor on every pair.
ValidationReport bimodule_rule_oracle(const PartialAction& pa);

}  // namespace pgx

#endif
