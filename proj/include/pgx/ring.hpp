#ifndef PGX_RING_HPP
#define PGX_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgx/abelian.hpp"
#include "pgx/report.hpp"

namespace pgx {

// Canonical element index of a finite ring. Elements enumerate 0..size-1 in a
// fixed order; every operation and serialization uses that order.
using RElem = std::uint32_t;

class Ring {
 public:
  virtual ~Ring() = default;
  std::size_t size() const { return size_; }
  RElem zero() const { return 0; }
  RElem one() const { return one_; }
  virtual RElem add(RElem a, RElem b) const = 0;
  virtual RElem mul(RElem a, RElem b) const = 0;
  virtual RElem neg(RElem a) const = 0;
  RElem sub(RElem a, RElem b) const { return add(a, neg(b)); }
  bool is_idempotent(RElem e) const { return mul(e, e) == e; }
  virtual std::string element_repr(RElem a) const = 0;
  virtual std::string repr() const = 0;

 protected:
  std::size_t size_ = 0;
  RElem one_ = 0;
};

struct LocalFactor {
  enum class Kind { Zmod, Quotient };
  Kind kind = Kind::Zmod;
  std::uint32_t modulus = 0;               // Zmod
  std::uint32_t p = 0;                     // Quotient: base prime
  std::vector<std::uint32_t> poly;         // Quotient: monic, low-to-high coefficients
  std::uint32_t size() const;
};

// Product of finite local factors; element index is the mixed-radix encoding
// of the residue tuple with coordinate 0 most significant, so index order is
// tuple-lexicographic order.
class ProductRing final : public Ring {
 public:
  explicit ProductRing(std::vector<LocalFactor> factors);
  RElem add(RElem a, RElem b) const override;
  RElem mul(RElem a, RElem b) const override;
  RElem neg(RElem a) const override;
  std::string element_repr(RElem a) const override;
  std::string repr() const override;

  const std::vector<LocalFactor>& factors() const { return factors_; }
  std::vector<std::uint32_t> decode(RElem a) const;       // per-factor residue index
  RElem encode(const std::vector<std::uint32_t>& digits) const;
  RElem factor_unit(std::size_t i) const;                 // idempotent (0,..,1,..,0)

 private:
  std::uint32_t fop(std::size_t f, std::uint32_t a, std::uint32_t b, bool is_mul) const;
  std::uint32_t fneg(std::size_t f, std::uint32_t a) const;
  std::vector<LocalFactor> factors_;
  std::vector<std::uint64_t> weight_;  // mixed-radix weights
  // small per-factor operation tables
  std::vector<std::vector<std::uint32_t>> addtab_, multab_, negtab_;
};

struct BuildRingResult {
  std::shared_ptr<const ProductRing> ring;
  ValidationReport report;
};
// Builds a ring from factor descriptors and runs the axiom spot-check.
// Polynomial irreducibility is not enforced; the report carries a note.
BuildRingResult build_ring(std::vector<LocalFactor> factors);

// Exhaustive for small rings, seeded-random sampling beyond `exhaustive_cap`
// triples.
ValidationReport check_ring_axioms(const Ring& r, std::size_t exhaustive_cap = 1u << 15);

// Complete, duplicate-free, ascending by element index.
std::vector<RElem> idempotents(const Ring& r);

// Unital ideal Re generated by an idempotent; e is its multiplicative identity.
class Ideal {
 public:
  Ideal(const Ring& r, RElem e);
  const Ring& ring() const { return *ring_; }
  RElem generator() const { return e_; }
  // by value on rvalues, so iterating a temporary's elements stays valid
  const std::vector<RElem>& elements() const& { return elements_; }
  std::vector<RElem> elements() && { return std::move(elements_); }
  std::size_t size() const { return elements_.size(); }
  bool contains(RElem x) const;
  std::optional<RElem> inverse_in(RElem x) const;  // y with x*y = e

 private:
  const Ring* ring_;
  RElem e_;
  std::vector<RElem> elements_;
};

// Units of a ring or of a unital ideal, with abelian structure.
struct UnitGroup {
  const Ring* ring = nullptr;
  RElem identity = 0;
  std::vector<RElem> elements;               // ascending element index
  std::vector<std::uint32_t> inverse;        // position -> position
  AbelianBasis basis;                        // over positions

  std::size_t size() const { return elements.size(); }
  std::uint32_t index_of(RElem x) const;
  bool contains(RElem x) const;
  RElem inverse_of(RElem x) const;
  std::vector<std::uint32_t> elementary_divisors() const { return basis.elementary_divisors(); }
};
UnitGroup unit_group(const Ring& r);
UnitGroup unit_group(const Ideal& ideal);

// Sub-ring presented by its element list inside a host ring.
struct Subring {
  const Ring* host = nullptr;
  std::vector<RElem> elements;  // sorted ascending, contains 0 and the subring identity

  std::size_t size() const { return elements.size(); }
  bool contains(RElem x) const;
  std::size_t index_of(RElem x) const;
};
ValidationReport check_subring(const Subring& s);  // closure under +, *, -, contains 0 and host 1?

// A map between ring carriers (whole ring or unital ideal) given by a value table.
struct Carrier {
  const Ring* ring = nullptr;
  RElem idem = 0;  // carrier identity; ring->one() for the whole ring
  std::vector<RElem> elements() const;
};
struct RingMorphism {
  Carrier src, dst;
  std::map<RElem, RElem> table;
  bool claims_bijective = false;
};
ValidationReport check_morphism(const RingMorphism& m);

// k-module helpers (k a subring of the host).
std::vector<RElem> k_span(const Ring& host, const Subring& k, const std::vector<RElem>& gens);
// Greedy free k-basis of the whole host ring; nullopt when none is found.
std::optional<std::vector<RElem>> free_basis_over(const Ring& host, const Subring& k);
// Coordinates of every host element over a free k-basis.
struct KBasis {
  const Ring* host = nullptr;
  Subring k;
  std::vector<RElem> basis;
  std::vector<std::vector<std::uint32_t>> coords;  // host element -> k-indices per basis slot
};
KBasis k_basis_coordinates(const Ring& host, const Subring& k, std::vector<RElem> basis);

// All k-linear additive endomorphisms of the host ring, as value tables.
std::vector<std::vector<RElem>> k_linear_endomorphisms(const Ring& host, const Subring& k,
                                                       std::size_t cap = 1u << 20);

// First ring isomorphism between two subrings in canonical order, as a value
// table src element -> dst element; nullopt if the subrings are not isomorphic.
std::optional<std::map<RElem, RElem>> find_ring_iso(const Subring& a, const Subring& b);

}  // namespace pgx

#endif
