#ifndef PGX_PARTIAL_ACTION_HPP
#define PGX_PARTIAL_ACTION_HPP

#include <map>
#include <memory>
#include <optional>

#include "pgx/group.hpp"
#include "pgx/ring.hpp"
#include "pgx/tensor_ring.hpp"

namespace pgx {

// Unital partial action: per group element g an idempotent 1_g and a ring
// isomorphism alpha_g: D_{g^-1} -> D_g stored as a full value table.
struct PartialAction {
  std::shared_ptr<const Ring> ring;
  FiniteGroup group;
  std::vector<RElem> one_g;                        // per g
  std::vector<std::map<RElem, RElem>> alpha;       // per g, on ideal(1_{g^-1})

  const Ring& R() const { return *ring; }
  RElem one(FiniteGroup::Elt g) const { return one_g[g]; }
  Ideal domain_ideal(FiniteGroup::Elt g) const { return Ideal(*ring, one_g[group.inv(g)]); }
  Ideal range_ideal(FiniteGroup::Elt g) const { return Ideal(*ring, one_g[g]); }
  // alpha_g(x), x must lie in D_{g^-1}
  RElem apply(FiniteGroup::Elt g, RElem x) const;
  // alpha_g(x * 1_{g^-1})
  RElem apply_cut(FiniteGroup::Elt g, RElem x) const;
};

ValidationReport validate_partial_action(const PartialAction& pa);

struct Twisting {
  std::vector<std::vector<RElem>> w;  // w[g][h] in U(D_g D_{gh})
  RElem at(FiniteGroup::Elt g, FiniteGroup::Elt h) const { return w[g][h]; }
};
Twisting trivial_twisting(const PartialAction& pa);
Twisting inverse_twisting(const PartialAction& pa, const Twisting& t);
ValidationReport validate_twisting(const PartialAction& pa, const Twisting& t);

// R^alpha = { r : alpha_g(r 1_{g^-1}) = r 1_g for all g }, verified closed.
Subring invariant_subring(const PartialAction& pa);

// tr(x) = sum_g alpha_g(x 1_{g^-1})
RElem trace_map(const PartialAction& pa, RElem x);

struct GaloisCoordinates {
  std::vector<RElem> x, y;
};
ValidationReport check_galois_coordinates(const PartialAction& pa, const GaloisCoordinates& c);
std::optional<GaloisCoordinates> find_galois_coordinates(const PartialAction& pa, std::size_t m_max,
                                                         std::size_t cap = 1u << 24);

struct GaloisExtension {
  PartialAction pa;
  Subring invariants;
  GaloisCoordinates coords;
  RElem trace_unit = 0;  // c with tr(c) = 1

  const Ring& R() const { return pa.R(); }
  const FiniteGroup& G() const { return pa.group; }
};
// Validates the action, checks (or searches) coordinates, computes invariants
// and a trace-1 witness. Throws std::invalid_argument when not Galois.
GaloisExtension make_galois_extension(PartialAction pa, std::optional<GaloisCoordinates> coords = std::nullopt,
                                      std::size_t m_max = 3);

// Restriction of a global action on S to the corner Se; the carrier is
// rebuilt as the product of the retained local factors.
PartialAction restrict_global_action(const PartialAction& global, RElem e);

// G x H partial action on R1 (x)_k R2 with the product coordinate system.
struct TensorExtensionResult {
  GaloisExtension ext;
  std::shared_ptr<const TensorRing> ring;
};
TensorExtensionResult tensor_extensions(const GaloisExtension& a, const GaloisExtension& b);

// R (x)_{R^alpha} R with the G x G action alpha (x) alpha.
struct TensorSquare {
  std::shared_ptr<const TensorRing> ring;
  PartialAction pa;  // of G x G
};
TensorSquare tensor_square(const GaloisExtension& ext);

// Twisting omega (x) omega' on a tensor extension built from a and b.
Twisting tensor_twisting(const TensorExtensionResult& te, const GaloisExtension& a, const Twisting& wa,
                         const GaloisExtension& b, const Twisting& wb);

}  // namespace pgx

#endif
