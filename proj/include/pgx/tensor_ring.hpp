#ifndef PGX_TENSOR_RING_HPP
#define PGX_TENSOR_RING_HPP

#include <memory>

#include "pgx/ring.hpp"

namespace pgx {

// R1 (x)_k R2 realized by structure constants on the product of free k-bases.
// Elements are coordinate tuples over the common base k; the k of record is
// the first factor's subring, the second factor's base is identified through
// a verified ring isomorphism.
class TensorRing final : public Ring {
 public:
  TensorRing(std::shared_ptr<const Ring> r1, Subring k1, std::vector<RElem> basis1,
             std::shared_ptr<const Ring> r2, Subring k2, std::vector<RElem> basis2,
             std::map<RElem, RElem> k_iso);  // k1 -> k2

  RElem add(RElem a, RElem b) const override;
  RElem mul(RElem a, RElem b) const override;
  RElem neg(RElem a) const override;
  std::string element_repr(RElem a) const override;
  std::string repr() const override;

  RElem embed(RElem a, RElem b) const;  // pure tensor a (x) b
  RElem scale(RElem k_element_in_r1, RElem x) const;

  std::size_t dim() const { return m1_ * m2_; }
  std::size_t base_size() const { return k_.size(); }
  const Ring& left() const { return *r1_; }
  const Ring& right() const { return *r2_; }
  const Subring& base() const { return k_; }

  std::vector<std::uint32_t> coords(RElem a) const;  // k-indices, slot i*m2+j
  RElem from_coords(const std::vector<std::uint32_t>& c) const;

 private:
  std::uint32_t kadd(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t kmul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t kneg(std::uint32_t a) const;
  RElem add_direct(RElem a, RElem b) const;
  RElem mul_direct(RElem a, RElem b) const;
  RElem neg_direct(RElem a) const;
  // full operation tables for small rings
  std::vector<RElem> addtab_, multab_, negtab_;

  std::shared_ptr<const Ring> r1_, r2_;
  Subring k_;                      // inside r1
  std::vector<RElem> basis1_, basis2_;
  KBasis kb1_, kb2_;               // kb2 coordinates are k2-indices
  std::vector<std::uint32_t> k2_to_k1_;
  std::size_t m1_ = 0, m2_ = 0;
  // structure constants: product of basis elements, as k-index coordinate rows
  std::vector<std::vector<std::uint32_t>> prod1_, prod2_;  // [i*m+k] -> coords
};

}  // namespace pgx

#endif
