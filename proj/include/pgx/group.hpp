#ifndef PGX_GROUP_HPP
#define PGX_GROUP_HPP

#include <cstdint>
#include <vector>

#include "pgx/report.hpp"

namespace pgx {

// Finite group by multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  using Elt = std::uint32_t;

  FiniteGroup() : FiniteGroup(std::vector<std::vector<Elt>>{{0}}) {}  // trivial group

  static FiniteGroup cyclic(std::uint32_t n);
  static FiniteGroup from_table(std::vector<std::vector<Elt>> table);
  // Pair (a, b) encodes as a*|B|+b.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::uint32_t order() const { return static_cast<std::uint32_t>(table_.size()); }
  Elt identity() const { return 0; }
  Elt mul(Elt a, Elt b) const { return table_[a][b]; }
  Elt inv(Elt a) const { return inverse_[a]; }
  const std::vector<std::vector<Elt>>& table() const { return table_; }

  ValidationReport validate() const;

 private:
  explicit FiniteGroup(std::vector<std::vector<Elt>> table);
  std::vector<std::vector<Elt>> table_;
  std::vector<Elt> inverse_;
};

}  // namespace pgx

#endif
