#ifndef PGX_COHOMOLOGY_HPP
#define PGX_COHOMOLOGY_HPP

#include <mutex>
#include <random>

#include "pgx/partial_action.hpp"

namespace pgx {

struct Cochain {
  int degree = 0;
  std::vector<RElem> values;  // |G|^degree entries, tuple-lexicographic; degree 0: one entry

  bool operator==(const Cochain&) const = default;
};

// The cochain complex of a partial action with coefficients in the carrier
// ideal T = R*carrier_idem (the whole ring by default). Values of an
// n-cochain at (g_1..g_n) are units of T 1_{g_1} 1_{g_1g_2} ... 1_{g_1..g_n};
// inverses are taken per cut ideal.
class CochainComplex {
 public:
  explicit CochainComplex(const PartialAction& pa, std::optional<RElem> carrier_idem = std::nullopt);

  const PartialAction& action() const { return *pa_; }
  RElem carrier() const { return carrier_; }

  std::size_t slots(int n) const;                       // |G|^n (1 for n=0)
  std::vector<FiniteGroup::Elt> tuple_of(int n, std::size_t slot) const;
  std::size_t slot_of(const std::vector<FiniteGroup::Elt>& t) const;
  RElem slot_idempotent(int n, std::size_t slot) const;
  const UnitGroup& slot_units(int n, std::size_t slot) const;

  Cochain identity_cochain(int n) const;
  bool is_valid(const Cochain& f) const;
  void require_valid(const Cochain& f) const;  // throws std::invalid_argument
  Cochain multiply(const Cochain& a, const Cochain& b) const;
  Cochain invert(const Cochain& a) const;
  Cochain power(const Cochain& a, long long e) const;

  Cochain coboundary(const Cochain& f) const;
  bool is_cocycle(const Cochain& f) const;
  // first u (canonical order) with delta(u) = f, searching C^{n-1}
  std::optional<Cochain> coboundary_witness(const Cochain& f, std::uint64_t cap = kDefaultCap) const;

  // enumeration in canonical order: slot 0 most significant, unit elements by
  // ascending ring-element index within each slot
  std::uint64_t cochain_count(int n, std::uint64_t cap = kDefaultCap) const;  // throws CapExceeded
  Cochain cochain_at(int n, std::uint64_t ordinal) const;
  std::uint64_t ordinal_of(const Cochain& f) const;
  Cochain random_cochain(int n, std::mt19937& rng) const;

  static constexpr std::uint64_t kDefaultCap = 1000000;

 private:
  const PartialAction* pa_;
  RElem carrier_;
  // cut-ideal unit groups are memoized; the lock keeps const access shareable
  mutable std::mutex cache_mutex_;
  mutable std::map<RElem, UnitGroup> unit_cache_;
  const UnitGroup& units_for(RElem idem) const;
};

struct CohomologyGroup {
  int degree = 0;
  std::uint64_t z_size = 0, b_size = 0, h_size = 0;
  std::vector<std::uint32_t> divisors;     // elementary divisors of H^n (no 1s)
  std::vector<Cochain> representatives;    // one cocycle per class
  bool oracle_checked = false;
  std::string note;
};

struct CohomologyOptions {
  std::uint64_t oracle_cap = CochainComplex::kDefaultCap;   // full enumeration bound
  std::uint64_t representative_cap = 4096;                  // max classes listed
};

// Linearized path: delta as a homomorphism of finite abelian groups on
// unit-group generators, sizes via integer kernel lattices; cross-checked
// against the brute-force oracle whenever |C^n| is under the cap.
CohomologyGroup cohomology_group(const CochainComplex& cx, int n, const CohomologyOptions& opt = {});
// Literal enumeration of every cochain.
CohomologyGroup bruteforce_cohomology(const CochainComplex& cx, int n,
                                      std::uint64_t cap = CochainComplex::kDefaultCap);

// Conversions between degree-2 cochains and twistings.
Cochain cochain_from_twisting(const CochainComplex& cx, const Twisting& t);
Twisting twisting_from_cochain(const CochainComplex& cx, const Cochain& f);

// The cohomologous normalized representative w * delta^1(u) with
// u_g = w(1,1)^{-1} 1_g; normalized 2-cocycles are exactly the twistings.
struct Normalized2Cocycle {
  Cochain cocycle;   // normalized
  Cochain witness;   // the 1-cochain u used
  bool changed = false;
};
Normalized2Cocycle normalize_2cocycle(const CochainComplex& cx, const Cochain& w);

}  // namespace pgx

#endif
