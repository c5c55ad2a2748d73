#include "pgx/abelian.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace pgx {

namespace {

using i64 = long long;
using i128 = __int128;

i64 checked(i128 v) {
  if (v > i128(9'000'000'000'000'000'000LL) || v < -i128(9'000'000'000'000'000'000LL))
    throw std::overflow_error("integer matrix overflow");
  return static_cast<i64>(v);
}

i64 cmul(i64 a, i64 b) { return checked(i128(a) * i128(b)); }

void row_addmul(IMat& m, std::size_t dst, std::size_t src, i64 c) {
  for (std::size_t j = 0; j < m[dst].size(); ++j)
    m[dst][j] = checked(i128(m[dst][j]) + i128(c) * i128(m[src][j]));
}

void col_addmul(IMat& m, std::size_t dst, std::size_t src, i64 c) {
  for (auto& row : m) row[dst] = checked(i128(row[dst]) + i128(c) * i128(row[src]));
}

void row_swap(IMat& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void col_swap(IMat& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

void row_neg(IMat& m, std::size_t r) {
  for (auto& x : m[r]) x = -x;
}

}  // namespace

IMat imat_identity(std::size_t n) {
  IMat m(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat out(n, std::vector<i64>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        out[i][j] = checked(i128(out[i][j]) + i128(a[i][t]) * i128(b[t][j]));
    }
  return out;
}

std::vector<i64> imat_apply(const IMat& a, const std::vector<i64>& x) {
  std::vector<i64> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    i128 acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += i128(a[i][j]) * i128(x[j]);
    out[i] = checked(acc);
  }
  return out;
}

SmithResult smith_normal_form(IMat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  SmithResult res;
  res.u = imat_identity(rows);
  res.v = imat_identity(cols);

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero pivot of minimal magnitude in the trailing block
    std::size_t pi = t, pj = t;
    i64 best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
          best = std::llabs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    row_swap(a, t, pi);
    row_swap(res.u, t, pi);
    col_swap(a, t, pj);
    col_swap(res.v, t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        i64 q = a[i][t] / a[t][t];
        row_addmul(a, i, t, -q);
        row_addmul(res.u, i, t, -q);
        if (a[i][t] != 0) {  // remainder smaller than pivot: swap up and restart
          row_swap(a, t, i);
          row_swap(res.u, t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        i64 q = a[t][j] / a[t][t];
        col_addmul(a, j, t, -q);
        col_addmul(res.v, j, t, -q);
        if (a[t][j] != 0) {
          col_swap(a, t, j);
          col_swap(res.v, t, j);
          dirty = true;
        }
      }
    }
    if (a[t][t] < 0) {
      row_neg(a, t);
      row_neg(res.u, t);
    }
    ++t;
  }
  res.rank = t;

  // enforce the divisor chain d_i | d_{i+1}
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < res.rank; ++i) {
      if (a[i + 1][i + 1] % a[i][i] == 0) continue;
      changed = true;
      // fold d_{i+1} into column i, then re-reduce the 2x2 block
      col_addmul(a, i, i + 1, 1);
      col_addmul(res.v, i, i + 1, 1);
      i64 x = a[i][i], y = a[i + 1][i];
      while (y != 0) {
        i64 q = x / y;
        row_addmul(a, i, i + 1, -q);
        row_addmul(res.u, i, i + 1, -q);
        std::swap(a[i], a[i + 1]);
        std::swap(res.u[i], res.u[i + 1]);
        x = a[i][i];
        y = a[i + 1][i];
      }
      // clear the fill-in above/right of the block
      i64 q = a[i][i + 1] / a[i][i];
      col_addmul(a, i + 1, i, -q);
      col_addmul(res.v, i + 1, i, -q);
      q = a[i + 1][i + 1] < 0 ? -1 : 1;
      if (q < 0) {
        row_neg(a, i + 1);
        row_neg(res.u, i + 1);
      }
      if (a[i][i] < 0) {
        row_neg(a, i);
        row_neg(res.u, i);
      }
    }
  }

  res.d = a;
  for (std::size_t i = 0; i < res.rank; ++i) res.divisors.push_back(a[i][i]);
  return res;
}

IMat imat_inverse(const IMat& a) {
  std::size_t n = a.size();
  SmithResult s = smith_normal_form(a);
  if (s.rank != n) throw std::invalid_argument("imat_inverse: singular matrix");
  // a^{-1} = v * d^{-1} * u ; d^{-1} rows must divide exactly
  IMat du = s.u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (du[i][j] % s.d[i][i] != 0) throw std::invalid_argument("imat_inverse: non-integral inverse");
      du[i][j] /= s.d[i][i];
    }
  return imat_mul(s.v, du);
}

long long imat_abs_det(IMat a) {
  SmithResult s = smith_normal_form(std::move(a));
  if (s.rank != s.d.size()) return 0;
  i64 det = 1;
  for (i64 d : s.divisors) det = cmul(det, d);
  return det;
}

AbelianBasis abelian_basis(std::size_t n,
                           const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                           std::uint32_t identity) {
  using u32 = std::uint32_t;
  AbelianBasis b;
  b.dlog.assign(n, {});

  auto power = [&](u32 x, u32 k) {
    u32 acc = identity;
    for (u32 i = 0; i < k; ++i) acc = mul(acc, x);
    return acc;
  };
  auto order_of = [&](u32 x) {
    u32 acc = x, k = 1;
    while (acc != identity) {
      acc = mul(acc, x);
      ++k;
    }
    return k;
  };

  // subgroup generated so far, with exponent normal forms
  std::vector<u32> members{identity};
  std::vector<std::vector<u32>> exps{{}};

  auto in_subgroup = [&](u32 x, std::vector<u32>* exp_out) {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] == x) {
        if (exp_out) *exp_out = exps[i];
        return true;
      }
    return false;
  };

  while (members.size() < n) {
    // pick least-index element of maximal order in G/<gens>
    u32 best_x = 0, best_m = 0;
    for (u32 x = 0; x < n; ++x) {
      if (in_subgroup(x, nullptr)) continue;
      u32 acc = x, m = 1;
      while (!in_subgroup(acc, nullptr)) {
        acc = mul(acc, x);
        ++m;
      }
      if (m > best_m) {
        best_m = m;
        best_x = x;
      }
    }
    // correct best_x so its order in G equals its quotient order:
    // best_x^best_m = h in <gens>; replace best_x by best_x * h'^{-1} with h'^best_m = h
    std::vector<u32> hexp;
    u32 h = power(best_x, best_m);
    in_subgroup(h, &hexp);
    u32 corrected = best_x;
    if (h != identity) {
      u32 hprime = identity;
      for (std::size_t i = 0; i < b.gens.size(); ++i) {
        // solve best_m * t ≡ hexp[i]  (mod orders[i])
        u32 mod = b.orders[i], a = hexp[i] % mod, g = std::gcd(best_m % mod == 0 ? mod : best_m % mod, mod);
        if (a % g != 0) throw std::logic_error("abelian_basis: unsplittable correction");
        u32 mm = (best_m % mod) / g, aa = a / g, mo = mod / g;
        // invert mm mod mo
        u32 inv = 1;
        if (mo > 1) {
          long long t0 = 0, t1 = 1, r0 = mo, r1 = mm % mo;
          while (r1 != 0) {
            long long q = r0 / r1;
            std::swap(t0 -= q * t1, t1);
            std::swap(r0 -= q * r1, r1);
          }
          inv = static_cast<u32>(((t0 % mo) + mo) % mo);
        }
        u32 t = mo ? (static_cast<unsigned long long>(aa) * inv) % (mo ? mo : 1) : 0;
        hprime = mul(hprime, power(b.gens[i], t));
      }
      u32 hp_ord = order_of(hprime);
      corrected = mul(best_x, power(hprime, hp_ord - 1));  // x * h'^{-1}
    }
    if (order_of(corrected) != best_m) throw std::logic_error("abelian_basis: correction failed");

    b.gens.push_back(corrected);
    b.orders.push_back(best_m);

    // extend the subgroup table
    std::vector<u32> new_members;
    std::vector<std::vector<u32>> new_exps;
    u32 p = identity;
    for (u32 k = 0; k < best_m; ++k) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        new_members.push_back(mul(members[i], p));
        auto e = exps[i];
        e.push_back(k);
        new_exps.push_back(std::move(e));
      }
      p = mul(p, corrected);
    }
    members.swap(new_members);
    exps.swap(new_exps);
  }

  for (std::size_t i = 0; i < members.size(); ++i) b.dlog[members[i]] = exps[i];
  for (std::size_t i = 0; i + 1 < b.orders.size(); ++i)
    if (b.orders[i] % b.orders[i + 1] != 0) throw std::logic_error("abelian_basis: divisor chain broken");
  return b;
}

}  // namespace pgx
