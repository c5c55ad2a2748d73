#ifndef PGX_TESTS_COMMON_HPP
#define PGX_TESTS_COMMON_HPP

#include "pgx/partial_action.hpp"

namespace pgx::testing {

// GF(4) with the order-2 Frobenius: the classical Galois fixture.
inline PartialAction make_exa() {
  auto br = build_ring({{LocalFactor::Kind::Quotient, 0, 2, {1, 1, 1}}});
  PartialAction pa;
  pa.ring = br.ring;
  pa.group = FiniteGroup::cyclic(2);
  pa.one_g = {br.ring->one(), br.ring->one()};
  pa.alpha.resize(2);
  for (RElem x = 0; x < br.ring->size(); ++x) {
    pa.alpha[0][x] = x;
    pa.alpha[1][x] = br.ring->mul(x, x);
  }
  return pa;
}

// The genuinely partial C3 action on F2 x F2.
inline PartialAction make_exb() {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 2, 0, {}}, {LocalFactor::Kind::Zmod, 2, 0, {}}});
  auto R = br.ring;
  PartialAction pa;
  pa.ring = R;
  pa.group = FiniteGroup::cyclic(3);
  RElem e10 = R->encode({1, 0}), e01 = R->encode({0, 1});
  pa.one_g = {R->one(), e10, e01};
  pa.alpha.resize(3);
  for (RElem x = 0; x < R->size(); ++x) pa.alpha[0][x] = x;
  pa.alpha[1][0] = 0;
  pa.alpha[1][e01] = e10;
  pa.alpha[2][0] = 0;
  pa.alpha[2][e10] = e01;
  return pa;
}

// C2 acting trivially on F2: a valid partial action that is not Galois.
inline PartialAction make_exn() {
  auto br = build_ring({{LocalFactor::Kind::Zmod, 2, 0, {}}});
  PartialAction pa;
  pa.ring = br.ring;
  pa.group = FiniteGroup::cyclic(2);
  pa.one_g = {br.ring->one(), br.ring->one()};
  pa.alpha.resize(2);
  for (RElem x = 0; x < 2; ++x) {
    pa.alpha[0][x] = x;
    pa.alpha[1][x] = x;
  }
  return pa;
}

// Klein group permuting (Z/4)^4 regularly, restricted to the corner with
// support {1, a, b}: a three-local-factor instance with nontrivial cut-ideal
// unit groups, used for randomized coboundary testing.
inline PartialAction make_exc() {
  std::vector<LocalFactor> fs(4, LocalFactor{LocalFactor::Kind::Zmod, 4, 0, {}});
  auto br = build_ring(fs);
  auto S = br.ring;
  FiniteGroup klein = FiniteGroup::from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  PartialAction glob;
  glob.ring = S;
  glob.group = klein;
  glob.one_g.assign(4, S->one());
  glob.alpha.resize(4);
  for (FiniteGroup::Elt g = 0; g < 4; ++g)
    for (RElem x = 0; x < S->size(); ++x) {
      auto d = S->decode(x);
      std::vector<std::uint32_t> out(4);
      for (std::size_t i = 0; i < 4; ++i) out[i] = d[g ^ i];
      glob.alpha[g][x] = S->encode(out);
    }
  return restrict_global_action(glob, S->encode({1, 1, 1, 0}));
}

}  // namespace pgx::testing

#endif
