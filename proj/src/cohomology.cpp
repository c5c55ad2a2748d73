#include "pgx/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pgx {

namespace {
using Elt = FiniteGroup::Elt;
}

CochainComplex::CochainComplex(const PartialAction& pa, std::optional<RElem> carrier_idem)
    : pa_(&pa), carrier_(carrier_idem.value_or(pa.R().one())) {
  const Ring& R = pa.R();
  if (!R.is_idempotent(carrier_)) throw std::invalid_argument("coefficient carrier must be idempotent");
  // the carrier must absorb the action: alpha_g(e 1_{g^-1}) = e 1_g
  for (Elt g = 0; g < pa.group.order(); ++g)
    if (pa.apply_cut(g, carrier_) != R.mul(carrier_, pa.one_g[g]))
      throw std::invalid_argument("carrier idempotent is not invariant under the action");
}

std::size_t CochainComplex::slots(int n) const {
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) s *= pa_->group.order();
  return s;
}

std::vector<Elt> CochainComplex::tuple_of(int n, std::size_t slot) const {
  std::vector<Elt> t(n);
  for (int i = n; i-- > 0;) {
    t[i] = static_cast<Elt>(slot % pa_->group.order());
    slot /= pa_->group.order();
  }
  return t;
}

std::size_t CochainComplex::slot_of(const std::vector<Elt>& t) const {
  std::size_t s = 0;
  for (Elt g : t) s = s * pa_->group.order() + g;
  return s;
}

RElem CochainComplex::slot_idempotent(int n, std::size_t slot) const {
  const Ring& R = pa_->R();
  RElem e = carrier_;
  auto t = tuple_of(n, slot);
  Elt acc = 0;
  for (int i = 0; i < n; ++i) {
    acc = pa_->group.mul(acc, t[i]);
    e = R.mul(e, pa_->one_g[acc]);
  }
  return e;
}

const UnitGroup& CochainComplex::units_for(RElem idem) const {
  std::scoped_lock lock(cache_mutex_);
  auto it = unit_cache_.find(idem);
  if (it != unit_cache_.end()) return it->second;
  Ideal ideal(pa_->R(), idem);
  return unit_cache_.emplace(idem, unit_group(ideal)).first->second;
}

const UnitGroup& CochainComplex::slot_units(int n, std::size_t slot) const {
  return units_for(slot_idempotent(n, slot));
}

Cochain CochainComplex::identity_cochain(int n) const {
  Cochain f;
  f.degree = n;
  f.values.resize(slots(n));
  for (std::size_t s = 0; s < f.values.size(); ++s) f.values[s] = slot_idempotent(n, s);
  return f;
}

bool CochainComplex::is_valid(const Cochain& f) const {
  if (f.values.size() != slots(f.degree)) return false;
  for (std::size_t s = 0; s < f.values.size(); ++s)
    if (!slot_units(f.degree, s).contains(f.values[s])) return false;
  return true;
}

void CochainComplex::require_valid(const Cochain& f) const {
  if (!is_valid(f)) throw std::invalid_argument("cochain fails the membership invariant");
}

Cochain CochainComplex::multiply(const Cochain& a, const Cochain& b) const {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  Cochain out = a;
  for (std::size_t s = 0; s < out.values.size(); ++s) out.values[s] = pa_->R().mul(a.values[s], b.values[s]);
  return out;
}

Cochain CochainComplex::invert(const Cochain& a) const {
  Cochain out = a;
  for (std::size_t s = 0; s < out.values.size(); ++s) {
    const UnitGroup& u = slot_units(a.degree, s);
    out.values[s] = u.inverse_of(a.values[s]);
  }
  return out;
}

Cochain CochainComplex::power(const Cochain& a, long long e) const {
  Cochain acc = identity_cochain(a.degree);
  Cochain base = e < 0 ? invert(a) : a;
  long long k = e < 0 ? -e : e;
  for (long long i = 0; i < k; ++i) acc = multiply(acc, base);
  return acc;
}

Cochain CochainComplex::coboundary(const Cochain& f) const {
  require_valid(f);
  const Ring& R = pa_->R();
  const FiniteGroup& G = pa_->group;
  int n = f.degree;
  Cochain out;
  out.degree = n + 1;
  out.values.resize(slots(n + 1));

  if (n == 0) {
    // (delta^0 t)(g) = alpha_g(t 1_{g^-1}) t^{-1}, t a unit of the carrier
    const UnitGroup& u = units_for(carrier_);
    RElem tinv = u.inverse_of(f.values[0]);
    for (std::size_t s = 0; s < out.values.size(); ++s) {
      Elt g = static_cast<Elt>(s);
      out.values[s] = R.mul(pa_->apply_cut(g, f.values[0]), tinv);
    }
    return out;
  }

  for (std::size_t s = 0; s < out.values.size(); ++s) {
    auto t = tuple_of(n + 1, s);
    // leading factor alpha_{g_1}(f(g_2..g_{n+1}) 1_{g_1^-1})
    std::vector<Elt> tail(t.begin() + 1, t.end());
    RElem acc = pa_->apply_cut(t[0], f.values[slot_of(tail)]);
    // inner factors f(g_1,..., g_i g_{i+1}, ..., g_{n+1})^{(-1)^i}
    for (int i = 1; i <= n; ++i) {
      std::vector<Elt> merged;
      merged.reserve(n);
      for (int j = 0; j < i - 1; ++j) merged.push_back(t[j]);
      merged.push_back(G.mul(t[i - 1], t[i]));
      for (int j = i + 1; j <= n; ++j) merged.push_back(t[j]);
      std::size_t ms = slot_of(merged);
      RElem v = f.values[ms];
      if (i % 2 == 1) v = slot_units(n, ms).inverse_of(v);
      acc = R.mul(acc, v);
    }
    // trailing factor f(g_1..g_n)^{(-1)^{n+1}}
    std::vector<Elt> head(t.begin(), t.end() - 1);
    std::size_t hs = slot_of(head);
    RElem v = f.values[hs];
    if ((n + 1) % 2 == 1) v = slot_units(n, hs).inverse_of(v);
    out.values[s] = R.mul(acc, v);
  }
  return out;
}

bool CochainComplex::is_cocycle(const Cochain& f) const {
  return coboundary(f) == identity_cochain(f.degree + 1);
}

std::uint64_t CochainComplex::cochain_count(int n, std::uint64_t cap) const {
  std::uint64_t total = 1;
  for (std::size_t s = 0; s < slots(n); ++s) {
    total *= slot_units(n, s).size();
    if (total > cap) throw CapExceeded("|C^" + std::to_string(n) + "| exceeds cap " + std::to_string(cap));
  }
  return total;
}

Cochain CochainComplex::cochain_at(int n, std::uint64_t ordinal) const {
  Cochain f;
  f.degree = n;
  std::size_t ns = slots(n);
  f.values.resize(ns);
  for (std::size_t s = ns; s-- > 0;) {
    const UnitGroup& u = slot_units(n, s);
    f.values[s] = u.elements[ordinal % u.size()];
    ordinal /= u.size();
  }
  return f;
}

std::uint64_t CochainComplex::ordinal_of(const Cochain& f) const {
  std::uint64_t acc = 0;
  for (std::size_t s = 0; s < f.values.size(); ++s) {
    const UnitGroup& u = slot_units(f.degree, s);
    acc = acc * u.size() + u.index_of(f.values[s]);
  }
  return acc;
}

Cochain CochainComplex::random_cochain(int n, std::mt19937& rng) const {
  Cochain f;
  f.degree = n;
  f.values.resize(slots(n));
  for (std::size_t s = 0; s < f.values.size(); ++s) {
    const UnitGroup& u = slot_units(n, s);
    f.values[s] = u.elements[rng() % u.size()];
  }
  return f;
}

std::optional<Cochain> CochainComplex::coboundary_witness(const Cochain& f, std::uint64_t cap) const {
  if (f.degree < 1) throw std::invalid_argument("coboundary_witness needs degree >= 1");
  std::uint64_t count = cochain_count(f.degree - 1, cap);
  for (std::uint64_t i = 0; i < count; ++i) {
    Cochain u = cochain_at(f.degree - 1, i);
    if (coboundary(u) == f) return u;
  }
  return std::nullopt;
}

namespace {

// generator layout of C^n: one block of unit-group basis generators per slot
struct GenLayout {
  std::vector<std::size_t> offset;  // per slot
  std::vector<long long> orders;    // per generator column
  std::size_t total = 0;
};

GenLayout layout_of(const CochainComplex& cx, int n) {
  GenLayout L;
  for (std::size_t s = 0; s < cx.slots(n); ++s) {
    const UnitGroup& u = cx.slot_units(n, s);
    L.offset.push_back(L.total);
    for (auto o : u.basis.orders) L.orders.push_back(o);
    L.total += u.basis.orders.size();
  }
  return L;
}

Cochain cochain_from_exponents(const CochainComplex& cx, int n, const GenLayout& L,
                               const std::vector<long long>& e) {
  Cochain f = cx.identity_cochain(n);
  const Ring& R = cx.action().R();
  for (std::size_t s = 0; s < cx.slots(n); ++s) {
    const UnitGroup& u = cx.slot_units(n, s);
    RElem v = u.identity;
    for (std::size_t j = 0; j < u.basis.orders.size(); ++j) {
      long long ord = u.basis.orders[j];
      long long k = ((e[L.offset[s] + j] % ord) + ord) % ord;
      RElem gen = u.elements[u.basis.gens[j]];
      for (long long i = 0; i < k; ++i) v = R.mul(v, gen);
    }
    f.values[s] = v;
  }
  return f;
}

std::vector<long long> exponents_of(const CochainComplex& cx, const Cochain& f, const GenLayout& L) {
  std::vector<long long> e(L.total, 0);
  for (std::size_t s = 0; s < cx.slots(f.degree); ++s) {
    const UnitGroup& u = cx.slot_units(f.degree, s);
    const auto& dl = u.basis.dlog[u.index_of(f.values[s])];
    for (std::size_t j = 0; j < dl.size(); ++j) e[L.offset[s] + j] = dl[j];
  }
  return e;
}

// integer matrix of delta over the generator layouts
IMat delta_matrix(const CochainComplex& cx, int n, const GenLayout& src, const GenLayout& dst) {
  IMat M(dst.total, std::vector<long long>(src.total, 0));
  for (std::size_t col = 0; col < src.total; ++col) {
    std::vector<long long> e(src.total, 0);
    e[col] = 1;
    Cochain f = cochain_from_exponents(cx, n, src, e);
    Cochain d = cx.coboundary(f);
    auto de = exponents_of(cx, d, dst);
    for (std::size_t row = 0; row < dst.total; ++row) M[row][col] = de[row];
  }
  return M;
}

// column basis of the lattice { x in Z^k : M x = 0 mod target_orders }
IMat kernel_lattice(const IMat& M, const std::vector<long long>& target_orders, std::size_t k) {
  std::size_t m = M.size();
  if (k == 0) return IMat{};
  if (m == 0) return imat_identity(k);
  IMat A(m, std::vector<long long>(k + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) A[i][j] = M[i][j];
    A[i][k + i] = -target_orders[i];
  }
  SmithResult s = smith_normal_form(A);
  if (k + m - s.rank != k) throw std::logic_error("kernel lattice has unexpected rank");
  IMat basis(k, std::vector<long long>(k, 0));
  for (std::size_t j = s.rank; j < k + m; ++j)
    for (std::size_t i = 0; i < k; ++i) basis[i][j - s.rank] = s.v[i][j];
  return basis;
}

std::uint64_t lattice_kernel_size(const IMat& L, const std::vector<long long>& src_orders) {
  if (L.empty()) return 1;
  long long det = imat_abs_det(L);
  if (det == 0) throw std::logic_error("kernel lattice degenerate");
  unsigned long long prod = 1;
  for (long long a : src_orders) prod *= static_cast<unsigned long long>(a);
  if (prod % static_cast<unsigned long long>(det) != 0) throw std::logic_error("kernel index does not divide");
  return prod / static_cast<unsigned long long>(det);
}

}  // namespace

CohomologyGroup bruteforce_cohomology(const CochainComplex& cx, int n, std::uint64_t cap) {
  CohomologyGroup out;
  out.degree = n;
  out.note = "bruteforce";
  std::uint64_t cn = cx.cochain_count(n, cap);

  std::vector<std::uint64_t> zlist;
  for (std::uint64_t i = 0; i < cn; ++i)
    if (cx.is_cocycle(cx.cochain_at(n, i))) zlist.push_back(i);
  out.z_size = zlist.size();

  std::set<std::uint64_t> bset;
  if (n >= 1) {
    std::uint64_t cprev = cx.cochain_count(n - 1, cap);
    for (std::uint64_t i = 0; i < cprev; ++i) bset.insert(cx.ordinal_of(cx.coboundary(cx.cochain_at(n - 1, i))));
    out.b_size = bset.size();
  } else {
    out.b_size = 1;
  }

  // coset decomposition; representatives are lexicographically least
  std::map<std::uint64_t, std::size_t> class_of;
  std::vector<std::uint64_t> reps;
  std::vector<Cochain> bs;
  bs.reserve(bset.size());
  for (std::uint64_t b : bset) bs.push_back(cx.cochain_at(n, b));
  for (std::uint64_t z : zlist) {
    if (class_of.count(z)) continue;
    std::size_t id = reps.size();
    reps.push_back(z);
    Cochain zc = cx.cochain_at(n, z);
    if (n >= 1) {
      for (const Cochain& b : bs) class_of[cx.ordinal_of(cx.multiply(zc, b))] = id;
    } else {
      class_of[z] = id;
    }
  }
  out.h_size = reps.size();
  for (std::uint64_t r : reps) out.representatives.push_back(cx.cochain_at(n, r));

  auto qmul = [&](std::uint32_t a, std::uint32_t b) {
    Cochain p = cx.multiply(cx.cochain_at(n, reps[a]), cx.cochain_at(n, reps[b]));
    return static_cast<std::uint32_t>(class_of.at(cx.ordinal_of(p)));
  };
  std::uint32_t idclass = static_cast<std::uint32_t>(class_of.at(cx.ordinal_of(cx.identity_cochain(n))));
  AbelianBasis basis = abelian_basis(reps.size(), qmul, idclass);
  out.divisors = basis.elementary_divisors();
  return out;
}

CohomologyGroup cohomology_group(const CochainComplex& cx, int n, const CohomologyOptions& opt) {
  CohomologyGroup out;
  out.degree = n;

  GenLayout Ln = layout_of(cx, n);
  GenLayout Lnext = layout_of(cx, n + 1);
  IMat M = delta_matrix(cx, n, Ln, Lnext);
  IMat L = kernel_lattice(M, Lnext.orders, Ln.total);
  out.z_size = Ln.total == 0 ? 1 : lattice_kernel_size(L, Ln.orders);

  std::uint64_t b_size = 1;
  GenLayout Lprev;
  IMat Mprev;
  if (n >= 1) {
    Lprev = layout_of(cx, n - 1);
    Mprev = delta_matrix(cx, n - 1, Lprev, Ln);
    IMat Lp = kernel_lattice(Mprev, Ln.orders, Lprev.total);
    std::uint64_t zprev = Lprev.total == 0 ? 1 : lattice_kernel_size(Lp, Lprev.orders);
    std::uint64_t cprev = 1;
    for (auto o : Lprev.orders) cprev *= static_cast<std::uint64_t>(o);
    b_size = cprev / zprev;
  }
  out.b_size = b_size;
  out.h_size = out.z_size / b_size;

  // H^n structure: L / (Mprev Z^{k'} + orders Z^k) with relations rewritten in
  // L-coordinates
  if (Ln.total == 0) {
    out.representatives = {cx.identity_cochain(n)};
  } else {
    std::size_t k = Ln.total;
    std::size_t kp = n >= 1 ? Lprev.total : 0;
    IMat K(k, std::vector<long long>(kp + k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < kp; ++j) K[i][j] = Mprev[i][j];
      K[i][kp + i] = Ln.orders[i];
    }
    SmithResult sl = smith_normal_form(L);
    IMat UK = imat_mul(sl.u, K);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < UK[i].size(); ++j) {
        if (UK[i][j] % sl.d[i][i] != 0) throw std::logic_error("image lattice not inside kernel lattice");
        UK[i][j] /= sl.d[i][i];
      }
    IMat Y = imat_mul(sl.v, UK);
    SmithResult sy = smith_normal_form(Y);
    if (sy.rank != k) throw std::logic_error("cohomology quotient has free part");
    std::uint64_t h = 1;
    for (auto d : sy.divisors) h *= static_cast<std::uint64_t>(d);
    if (h != out.h_size) throw std::logic_error("cohomology size mismatch between lattice routes");
    for (auto d : sy.divisors)
      if (d > 1) out.divisors.push_back(static_cast<std::uint32_t>(d));
    std::sort(out.divisors.begin(), out.divisors.end());

    if (out.h_size <= opt.representative_cap) {
      IMat uinv = imat_inverse(sy.u);
      std::vector<std::vector<long long>> gens;  // exponent vectors in Z^k
      std::vector<long long> divs;
      for (std::size_t j = 0; j < k; ++j)
        if (sy.d[j][j] > 1) {
          std::vector<long long> col(k);
          for (std::size_t i = 0; i < k; ++i) col[i] = uinv[i][j];
          gens.push_back(imat_apply(L, col));
          divs.push_back(sy.d[j][j]);
        }
      std::vector<long long> idx(gens.size(), 0);
      while (true) {
        std::vector<long long> e(k, 0);
        for (std::size_t t = 0; t < gens.size(); ++t)
          for (std::size_t i = 0; i < k; ++i) e[i] += idx[t] * gens[t][i];
        out.representatives.push_back(cochain_from_exponents(cx, n, Ln, e));
        std::size_t t = gens.size();
        bool done = true;
        while (t-- > 0) {
          if (++idx[t] < divs[t]) {
            done = false;
            break;
          }
          idx[t] = 0;
        }
        if (done) break;
      }
    } else {
      out.note = "representatives elided (|H| exceeds representative cap)";
    }
  }

  // oracle cross-check
  bool oracle_possible = true;
  try {
    cx.cochain_count(n, opt.oracle_cap);
    if (n >= 1) cx.cochain_count(n - 1, opt.oracle_cap);
  } catch (const CapExceeded&) {
    oracle_possible = false;
  }
  if (oracle_possible) {
    CohomologyGroup oracle = bruteforce_cohomology(cx, n, opt.oracle_cap);
    if (oracle.z_size != out.z_size || oracle.b_size != out.b_size || oracle.h_size != out.h_size ||
        oracle.divisors != out.divisors)
      throw std::logic_error("linearized path and bruteforce oracle disagree at degree " + std::to_string(n));
    if (!out.representatives.empty() && out.h_size <= opt.representative_cap) {
      std::set<std::uint64_t> seen;
      for (const Cochain& r : out.representatives) {
        if (!cx.is_cocycle(r)) throw std::logic_error("linearized representative is not a cocycle");
        bool matched = false;
        for (std::size_t i = 0; i < oracle.representatives.size() && !matched; ++i) {
          Cochain q = cx.multiply(r, cx.invert(oracle.representatives[i]));
          bool cohomologous =
              n == 0 ? r == oracle.representatives[i] : cx.coboundary_witness(q, opt.oracle_cap).has_value();
          if (cohomologous) matched = seen.insert(i).second;
        }
        if (!matched) throw std::logic_error("linearized representatives do not biject oracle classes");
      }
    }
    out.representatives = std::move(oracle.representatives);
    out.oracle_checked = true;
    if (out.note.empty()) out.note = "oracle agreement verified";
  } else {
    out.note = "oracle cross-check skipped: |C^n| exceeds enumeration cap";
  }
  return out;
}

Cochain cochain_from_twisting(const CochainComplex& cx, const Twisting& t) {
  Cochain f;
  f.degree = 2;
  f.values.resize(cx.slots(2));
  for (std::size_t s = 0; s < f.values.size(); ++s) {
    auto tu = cx.tuple_of(2, s);
    f.values[s] = t.at(tu[0], tu[1]);
  }
  return f;
}

Twisting twisting_from_cochain(const CochainComplex& cx, const Cochain& f) {
  if (f.degree != 2) throw std::invalid_argument("twisting needs a 2-cochain");
  const FiniteGroup& G = cx.action().group;
  Twisting t;
  t.w.assign(G.order(), std::vector<RElem>(G.order(), 0));
  for (std::size_t s = 0; s < f.values.size(); ++s) {
    auto tu = cx.tuple_of(2, s);
    t.w[tu[0]][tu[1]] = f.values[s];
  }
  return t;
}

Normalized2Cocycle normalize_2cocycle(const CochainComplex& cx, const Cochain& w) {
  if (w.degree != 2) throw std::invalid_argument("normalize_2cocycle needs a 2-cochain");
  if (!cx.is_cocycle(w)) throw std::invalid_argument("normalize_2cocycle needs a cocycle");
  const PartialAction& pa = cx.action();
  const Ring& R = pa.R();
  RElem t = w.values[cx.slot_of({0, 0})];
  RElem tinv = cx.slot_units(2, cx.slot_of({0, 0})).inverse_of(t);
  Normalized2Cocycle out;
  out.witness.degree = 1;
  out.witness.values.resize(cx.slots(1));
  for (std::size_t s = 0; s < out.witness.values.size(); ++s)
    out.witness.values[s] = R.mul(tinv, cx.slot_idempotent(1, s));
  out.cocycle = cx.multiply(w, cx.coboundary(out.witness));
  out.changed = !(out.cocycle == w);
  return out;
}

}  // namespace pgx
