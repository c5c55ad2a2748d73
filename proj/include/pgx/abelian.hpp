#ifndef PGX_ABELIAN_HPP
#define PGX_ABELIAN_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace pgx {

using IMat = std::vector<std::vector<long long>>;

IMat imat_identity(std::size_t n);
IMat imat_mul(const IMat& a, const IMat& b);
std::vector<long long> imat_apply(const IMat& a, const std::vector<long long>& x);

// Smith normal form d = u * a * v with u, v unimodular.
struct SmithResult {
  IMat d, u, v;
  std::size_t rank = 0;
  std::vector<long long> divisors;  // nonzero diagonal entries, divisor chain
};
SmithResult smith_normal_form(IMat a);

// Inverse of a unimodular (or any invertible-over-Q with integral inverse)
// square integer matrix. Throws if the inverse is not integral.
IMat imat_inverse(const IMat& a);

// |det| of a square integer matrix (0 if singular).
long long imat_abs_det(IMat a);

// Structure of a finite abelian group given by a multiplication oracle on
// element indices 0..n-1. Generators are chosen greedily (max quotient order,
// least index) and corrected so that the group is the internal direct sum of
// the cyclic subgroups they generate.
struct AbelianBasis {
  std::vector<std::uint32_t> gens;    // element indices
  std::vector<std::uint32_t> orders;  // descending divisor chain, orders[i+1] | orders[i]
  // dlog[x] = exponent vector of element x over gens (empty group: all empty)
  std::vector<std::vector<std::uint32_t>> dlog;

  std::vector<std::uint32_t> elementary_divisors() const {  // ascending, no 1s
    std::vector<std::uint32_t> out(orders.rbegin(), orders.rend());
    while (!out.empty() && out.front() == 1) out.erase(out.begin());
    return out;
  }
};
AbelianBasis abelian_basis(std::size_t n,
                           const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                           std::uint32_t identity);

}  // namespace pgx

#endif
