#include "pgx/pics.hpp"

#include <algorithm>
#include <set>

namespace pgx {

namespace {
using Elt = FiniteGroup::Elt;
using u32 = std::uint32_t;

std::vector<long long> row_times_mat(const std::vector<long long>& z, const IMat& m) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<long long> out(cols, 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += z[i] * m[i][j];
  }
  return out;
}

}  // namespace

std::vector<u32> AbGroupSpec::add(const std::vector<u32>& a, const std::vector<u32>& b) const {
  std::vector<u32> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = (a[i] + b[i]) % divisors[i];
  return out;
}

std::vector<u32> AbGroupSpec::negate(const std::vector<u32>& a) const {
  std::vector<u32> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = (divisors[i] - a[i]) % divisors[i];
  return out;
}

std::vector<u32> AbGroupSpec::element_at(std::uint64_t ordinal) const {
  std::vector<u32> out(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    out[i] = static_cast<u32>(ordinal % divisors[i]);
    ordinal /= divisors[i];
  }
  return out;
}

PicSMonoid PicSMonoid::concrete(std::shared_ptr<const Ring> ring) {
  PicSMonoid m;
  m.ring_ = std::move(ring);
  m.comp_idem_ = idempotents(*m.ring_);
  u32 c = static_cast<u32>(m.comp_idem_.size());
  m.meet_.assign(c, std::vector<u32>(c, 0));
  for (u32 i = 0; i < c; ++i)
    for (u32 j = 0; j < c; ++j) {
      RElem p = m.ring_->mul(m.comp_idem_[i], m.comp_idem_[j]);
      m.meet_[i][j] = m.component_of_idempotent(p);
    }
  m.groups_.assign(c, AbGroupSpec{});
  m.zero_comp_ = m.component_of_idempotent(m.ring_->zero());
  m.one_comp_ = m.component_of_idempotent(m.ring_->one());
  return m;
}

PicSMonoid PicSMonoid::symbolic(std::shared_ptr<const Ring> ring, std::vector<std::vector<u32>> meet,
                                std::vector<AbGroupSpec> groups,
                                std::map<std::pair<u32, u32>, IMat> eps, ValidationReport* build_report) {
  PicSMonoid m;
  m.ring_ = std::move(ring);
  if (m.ring_) {
    m.comp_idem_ = idempotents(*m.ring_);
    u32 c = static_cast<u32>(m.comp_idem_.size());
    m.meet_.assign(c, std::vector<u32>(c, 0));
    for (u32 i = 0; i < c; ++i)
      for (u32 j = 0; j < c; ++j)
        m.meet_[i][j] = m.component_of_idempotent(m.ring_->mul(m.comp_idem_[i], m.comp_idem_[j]));
    if (!meet.empty() && meet != m.meet_) throw std::invalid_argument("meet table conflicts with ring idempotents");
  } else {
    m.meet_ = std::move(meet);
  }
  u32 c = static_cast<u32>(m.meet_.size());
  if (groups.size() != c) throw std::invalid_argument("one group per component required");
  m.groups_ = std::move(groups);
  m.eps_ = std::move(eps);

  ValidationReport rep;
  // semilattice sanity
  bool semi = true;
  for (u32 i = 0; i < c && semi; ++i)
    for (u32 j = 0; j < c; ++j) {
      semi &= m.meet_[i][j] == m.meet_[j][i] && m.meet_[i][i] == i && m.meet_[i][j] < c;
      for (u32 k = 0; k < c; ++k) semi &= m.meet_[m.meet_[i][j]][k] == m.meet_[i][m.meet_[j][k]];
    }
  rep.require("meet table is a semilattice", semi);
  bool has_zero = false, has_one = false;
  for (u32 i = 0; i < c; ++i) {
    bool z = true, o = true;
    for (u32 j = 0; j < c; ++j) {
      z &= m.meet_[i][j] == i;
      o &= m.meet_[i][j] == j;
    }
    if (z && !has_zero) {
      has_zero = true;
      m.zero_comp_ = i;
    }
    if (o && !has_one) {
      has_one = true;
      m.one_comp_ = i;
    }
  }
  rep.require("absorbing component exists", has_zero);
  rep.require("top component exists", has_one);

  // eps sanity: homomorphism ranks, identity on equal components, chain functoriality
  bool functorial = true;
  std::string w;
  auto eps_ok = [&](u32 from, u32 to) {
    if (!m.leq(to, from)) return true;
    const AbGroupSpec& A = m.groups_[from];
    const AbGroupSpec& B = m.groups_[to];
    for (std::uint64_t i = 0; i < A.size(); ++i)
      for (std::uint64_t j = 0; j < A.size(); ++j) {
        auto x = A.element_at(i), y = A.element_at(j);
        if (m.eps_apply(from, to, A.add(x, y)) != B.add(m.eps_apply(from, to, x), m.eps_apply(from, to, y)))
          return false;
      }
    return true;
  };
  for (u32 i = 0; i < c && functorial; ++i)
    for (u32 j = 0; j < c && functorial; ++j) {
      if (!m.leq(j, i)) continue;
      if (!eps_ok(i, j)) {
        functorial = false;
        w = "eps " + std::to_string(i) + "->" + std::to_string(j) + " not additive";
      }
      if (i == j) {
        for (std::uint64_t t = 0; t < m.groups_[i].size(); ++t) {
          auto x = m.groups_[i].element_at(t);
          if (m.eps_apply(i, i, x) != x) {
            functorial = false;
            w = "eps_{e,e} not the identity at component " + std::to_string(i);
          }
        }
      }
      for (u32 k = 0; k < c && functorial; ++k) {
        if (!m.leq(k, j)) continue;
        for (std::uint64_t t = 0; t < m.groups_[i].size(); ++t) {
          auto x = m.groups_[i].element_at(t);
          if (m.eps_apply(j, k, m.eps_apply(i, j, x)) != m.eps_apply(i, k, x)) {
            functorial = false;
            w = "chain " + std::to_string(i) + ">=" + std::to_string(j) + ">=" + std::to_string(k);
            break;
          }
        }
      }
    }
  rep.require("structural maps functorial", functorial, w);
  if (build_report) *build_report = rep;
  if (!rep.ok()) throw std::invalid_argument("invalid semilattice-of-groups data: " + rep.summary());
  return m;
}

u32 PicSMonoid::component_of_idempotent(RElem e) const {
  auto it = std::lower_bound(comp_idem_.begin(), comp_idem_.end(), e);
  if (it == comp_idem_.end() || *it != e) throw std::invalid_argument("not an idempotent of the ring");
  return static_cast<u32>(it - comp_idem_.begin());
}

std::vector<u32> PicSMonoid::eps_apply(u32 from, u32 to, const std::vector<u32>& a) const {
  if (!leq(to, from)) throw std::invalid_argument("eps map goes downward only");
  const AbGroupSpec& B = groups_[to];
  if (B.rank() == 0) return {};
  if (from == to && !eps_.count({from, to})) return a;
  if (groups_[from].rank() == 0) return B.identity();
  auto it = eps_.find({from, to});
  if (it == eps_.end()) throw std::invalid_argument("missing structural map");
  std::vector<long long> x(a.begin(), a.end());
  auto y = imat_apply(it->second, x);
  std::vector<u32> out(B.rank());
  for (std::size_t i = 0; i < B.rank(); ++i)
    out[i] = static_cast<u32>(((y[i] % B.divisors[i]) + B.divisors[i]) % B.divisors[i]);
  return out;
}

PicSMonoid::Elt PicSMonoid::mul(const Elt& x, const Elt& y) const {
  u32 m = meet_[x.comp][y.comp];
  return {m, groups_[m].add(eps_apply(x.comp, m, x.a), eps_apply(y.comp, m, y.a))};
}

PicSMonoid::Elt PicSMonoid::star(const Elt& x) const { return {x.comp, groups_[x.comp].negate(x.a)}; }

std::vector<PicSMonoid::Elt> PicSMonoid::elements(std::uint64_t cap) const {
  std::vector<Elt> out;
  std::uint64_t total = 0;
  for (u32 c = 0; c < component_count(); ++c) {
    total += groups_[c].size();
    if (total > cap) throw CapExceeded("PicS element count exceeds cap");
    for (std::uint64_t i = 0; i < groups_[c].size(); ++i) out.push_back({c, groups_[c].element_at(i)});
  }
  return out;
}

std::vector<PicSMonoid::Elt> PicSMonoid::units() const {
  std::vector<Elt> out;
  for (const Elt& x : elements()) {
    bool unit = false;
    for (std::uint64_t i = 0; i < groups_[x.comp].size() && !unit; ++i)
      unit = mul(x, Elt{x.comp, groups_[x.comp].element_at(i)}) == one();
    // a unit's component must already be the top; the loop above suffices
    if (unit) out.push_back(x);
  }
  return out;
}

ValidationReport PicSMonoid::validate(std::uint64_t cap) const {
  ValidationReport rep;
  auto elts = elements(cap);
  bool assoc = true, comm = true, inv = true, idems = true, zero_abs = true;
  std::string w;
  for (const Elt& x : elts) {
    inv &= mul(mul(x, star(x)), x) == x && mul(mul(star(x), x), star(x)) == star(x);
    zero_abs &= mul(x, zero()) == zero();
    idems &= is_elt_idempotent(x) == (x.a == groups_[x.comp].identity());
    for (const Elt& y : elts) {
      comm &= mul(x, y) == mul(y, x);
      for (const Elt& z : elts)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          if (assoc) w = "associativity";
          assoc = false;
        }
    }
  }
  rep.require("associative", assoc, w);
  rep.require("commutative", comm);
  rep.require("x x* x = x and x* x x* = x*", inv);
  rep.require("idempotents are exactly the component identities", idems);
  rep.require("zero absorbs", zero_abs);
  rep.require("identity element", [&] {
    for (const Elt& x : elts)
      if (mul(one(), x) != x) return false;
    return true;
  }());
  // units are the top component's group
  auto us = units();
  bool units_ok = true;
  for (const Elt& u : us) units_ok &= u.comp == one_comp_;
  units_ok &= us.size() == groups_[one_comp_].size();
  rep.require("units form the top-component group", units_ok);
  return rep;
}

PicSAction PicSAction::concrete(const PicSMonoid& m, const PartialAction& pa) {
  PicSAction a;
  a.m_ = &m;
  a.pa_ = &pa;
  a.group_maps_.resize(pa.group.order());
  return a;
}

PicSAction PicSAction::symbolic(const PicSMonoid& m, const PartialAction& pa,
                                std::vector<std::map<u32, IMat>> group_maps) {
  PicSAction a;
  a.m_ = &m;
  a.pa_ = &pa;
  a.group_maps_ = std::move(group_maps);
  if (a.group_maps_.size() != pa.group.order()) throw std::invalid_argument("one group-map family per g required");
  return a;
}

bool PicSAction::in_domain(Elt g, const PicSMonoid::Elt& x) const {
  u32 dom = m_->component_of_idempotent(pa_->one_g[pa_->group.inv(g)]);
  return m_->leq(x.comp, dom);
}

PicSMonoid::Elt PicSAction::apply(Elt g, const PicSMonoid::Elt& x) const {
  if (!in_domain(g, x)) throw std::invalid_argument("element outside the domain ideal X_{g^-1}");
  RElem e = m_->idempotent_of_component(x.comp);
  u32 target = m_->component_of_idempotent(pa_->apply(g, e));
  const AbGroupSpec& B = m_->group(target);
  if (B.rank() == 0) return {target, {}};
  if (m_->group(x.comp).rank() == 0) return {target, B.identity()};
  auto it = group_maps_[g].find(x.comp);
  if (it == group_maps_[g].end()) throw std::invalid_argument("missing alpha* group map");
  std::vector<long long> v(x.a.begin(), x.a.end());
  auto y = imat_apply(it->second, v);
  std::vector<u32> out(B.rank());
  for (std::size_t i = 0; i < B.rank(); ++i)
    out[i] = static_cast<u32>(((y[i] % B.divisors[i]) + B.divisors[i]) % B.divisors[i]);
  return {target, out};
}

PicSMonoid::Elt PicSAction::class_of_ideal(Elt g) const {
  return m_->component_identity(m_->component_of_idempotent(pa_->one_g[g]));
}

ValidationReport PicSAction::validate() const {
  ValidationReport rep;
  const FiniteGroup& G = pa_->group;
  auto elts = m_->elements();

  bool id1 = true;
  for (const auto& x : elts) id1 &= in_domain(0, x) && apply(0, x) == x;
  rep.require("alpha*_1 = id on PicS", id1);

  bool ideal_map = true;
  for (Elt g = 0; g < G.order(); ++g)
    ideal_map &= apply(g, class_of_ideal(G.inv(g))) == class_of_ideal(g);
  rep.require("alpha*_g([D_{g^-1}]) = [D_g]", ideal_map);

  bool comp_ok = true, hom = true;
  std::string w;
  for (Elt g = 0; g < G.order() && comp_ok; ++g)
    for (Elt h = 0; h < G.order() && comp_ok; ++h)
      for (const auto& x : elts) {
        if (!in_domain(h, x)) continue;
        auto hx = apply(h, x);
        if (!in_domain(g, hx)) continue;
        Elt gh = G.mul(g, h);
        if (!in_domain(gh, x) || apply(g, hx) != apply(gh, x)) {
          comp_ok = false;
          w = "(g" + std::to_string(g) + ",g" + std::to_string(h) + ")";
          break;
        }
      }
  rep.require("alpha*_{gh} extends alpha*_g . alpha*_h", comp_ok, w);
  for (Elt g = 0; g < G.order() && hom; ++g)
    for (const auto& x : elts) {
      if (!in_domain(g, x)) continue;
      for (const auto& y : elts) {
        if (!in_domain(g, y)) continue;
        if (apply(g, m_->mul(x, y)) != m_->mul(apply(g, x), apply(g, y))) {
          hom = false;
          w = "g" + std::to_string(g);
          break;
        }
      }
      if (!hom) break;
    }
  rep.require("alpha*_g multiplicative on X_{g^-1}", hom, w);
  return rep;
}

PicSInvariantsResult pics_invariants(const PicSAction& act) {
  PicSInvariantsResult out;
  const PicSMonoid& m = act.monoid();
  const FiniteGroup& G = act.action().group;
  for (const auto& x : m.elements()) {
    bool inv = true;
    for (Elt g = 0; g < G.order() && inv; ++g) {
      auto cut = m.mul(x, act.class_of_ideal(G.inv(g)));
      inv = act.apply(g, cut) == m.mul(x, act.class_of_ideal(g));
    }
    if (inv) out.elements.push_back(x);
  }
  auto contains = [&](const PicSMonoid::Elt& e) {
    return std::find(out.elements.begin(), out.elements.end(), e) != out.elements.end();
  };
  bool closed = true, starred = true;
  for (const auto& x : out.elements) {
    starred &= contains(m.star(x));
    for (const auto& y : out.elements) closed &= contains(m.mul(x, y));
  }
  out.report.require("contains 0", contains(m.zero()));
  out.report.require("contains [R]", contains(m.one()));
  out.report.require("closed under product", closed);
  out.report.require("closed under star", starred);
  return out;
}

std::vector<PicsCocycle> z1_pics(const PicSAction& act, std::uint64_t cap) {
  const PicSMonoid& m = act.monoid();
  const PartialAction& pa = act.action();
  const FiniteGroup& G = pa.group;
  std::vector<u32> top(G.order());
  std::uint64_t total = 1;
  for (Elt g = 0; g < G.order(); ++g) {
    top[g] = m.component_of_idempotent(pa.one_g[g]);
    total *= m.group(top[g]).size();
    if (total > cap) throw CapExceeded("z1_pics candidate count exceeds cap");
  }
  std::vector<PicsCocycle> out;
  for (std::uint64_t ord = 0; ord < total; ++ord) {
    PicsCocycle cand;
    cand.f.resize(G.order());
    std::uint64_t rem = ord;
    for (Elt g = G.order(); g-- > 0;) {
      const AbGroupSpec& A = m.group(top[g]);
      cand.f[g] = {top[g], A.element_at(rem % A.size())};
      rem /= A.size();
    }
    bool ok = true;
    for (Elt g = 0; g < G.order() && ok; ++g)
      for (Elt h = 0; h < G.order(); ++h) {
        auto lhs = m.mul(cand.f[G.mul(g, h)], act.class_of_ideal(g));
        auto cut = m.mul(cand.f[h], act.class_of_ideal(G.inv(g)));
        auto rhs = m.mul(cand.f[g], act.apply(g, cut));
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(std::move(cand));
  }
  return out;
}

CombinedMonoid::CombinedMonoid(const PicSAction& act) : act_(&act) {}

CombinedElt CombinedMonoid::one() const {
  const PicSMonoid& m = act_->monoid();
  return {0, m.one_component(), m.group(m.one_component()).identity()};
}

std::uint32_t CombinedMonoid::left_component(const CombinedElt& x) const {
  const PicSMonoid& m = act_->monoid();
  const PartialAction& pa = act_->action();
  return m.component_of_idempotent(pa.apply(x.g, m.idempotent_of_component(x.ecomp)));
}

CombinedElt CombinedMonoid::mul(const CombinedElt& x, const CombinedElt& y) const {
  const PicSMonoid& m = act_->monoid();
  const PartialAction& pa = act_->action();
  const FiniteGroup& G = pa.group;
  const Ring& R = pa.R();

  Elt g = x.g, h = y.g;
  RElem e = m.idempotent_of_component(x.ecomp);
  RElem f = m.idempotent_of_component(y.ecomp);
  Elt gh = G.mul(g, h);
  // carrier: alpha_{h^-1}(e 1_h) f
  RElem e2 = R.mul(pa.apply_cut(G.inv(h), e), f);
  CombinedElt out;
  out.g = gh;
  out.ecomp = m.component_of_idempotent(e2);

  u32 L = m.component_of_idempotent(pa.apply(gh, e2));
  // x's group part restricts from alpha_g(e) to L
  u32 xl = left_component(x);
  auto ax = m.eps_apply(xl, L, x.a);
  // y's group part: cut to alpha_h(f) ^ e, transport through alpha*_g, restrict
  u32 yl = left_component(y);
  u32 cutc = m.meet(yl, x.ecomp);
  PicSMonoid::Elt yb{cutc, m.eps_apply(yl, cutc, y.a)};
  PicSMonoid::Elt moved = act_->apply(g, yb);
  auto ay = m.eps_apply(moved.comp, L, moved.a);
  out.a = m.group(L).add(ax, ay);
  return out;
}

CombinedElt CombinedMonoid::embed(const PicSMonoid::Elt& x) const { return {0, x.comp, x.a}; }

CombinedElt CombinedMonoid::phi0(Elt g) const {
  const PicSMonoid& m = act_->monoid();
  const PartialAction& pa = act_->action();
  u32 ec = m.component_of_idempotent(pa.one_g[pa.group.inv(g)]);
  u32 lc = m.component_of_idempotent(pa.one_g[g]);
  return {g, ec, m.group(lc).identity()};
}

CombinedElt CombinedMonoid::phi_f(const PicsCocycle& f, Elt g) const {
  return mul(embed(f.f[g]), phi0(g));
}

PicSMonoid::Elt CombinedMonoid::pics_part(const CombinedElt& x) const {
  if (x.g != 0) throw std::invalid_argument("combined element is not in the g = 1 slice");
  return {x.ecomp, x.a};
}

Bimodule twisted_corner_bimodule(const PartialAction& pa, Elt g, RElem e) {
  const Ring& R = pa.R();
  if (R.mul(e, pa.one_g[pa.group.inv(g)]) != e)
    throw std::invalid_argument("corner idempotent must lie under 1_{g^-1}");
  Bimodule b;
  b.ring = &R;
  b.carrier = Ideal(R, e).elements();
  const PartialAction* p = &pa;
  FiniteGroup::Elt gi = pa.group.inv(g);
  b.left = [p, gi](RElem r, RElem m) { return p->R().mul(p->apply_cut(gi, r), m); };
  b.right = [p](RElem m, RElem r) { return p->R().mul(m, r); };
  return b;
}

std::vector<u32> TensorBimodule::add(const std::vector<u32>& a, const std::vector<u32>& b) const {
  std::vector<u32> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = divisors[i] <= 1 ? 0 : static_cast<u32>((a[i] + b[i]) % divisors[i]);
  return out;
}

std::vector<u32> TensorBimodule::gen_coords(std::size_t i, std::size_t j) const {
  std::vector<long long> z(gens, 0);
  z[i * n->carrier.size() + j] = 1;
  auto w = row_times_mat(z, v);
  std::vector<u32> out(gens);
  for (std::size_t t = 0; t < gens; ++t)
    out[t] = divisors[t] <= 1 ? 0 : static_cast<u32>(((w[t] % divisors[t]) + divisors[t]) % divisors[t]);
  return out;
}

namespace {

std::vector<u32> coords_of_int_vector(const TensorBimodule& q, const std::vector<long long>& z) {
  auto w = row_times_mat(z, q.v);
  std::vector<u32> out(q.gens);
  for (std::size_t t = 0; t < q.gens; ++t)
    out[t] = q.divisors[t] <= 1 ? 0 : static_cast<u32>(((w[t] % q.divisors[t]) + q.divisors[t]) % q.divisors[t]);
  return out;
}

std::vector<u32> act_on_coords(const TensorBimodule& q, const std::vector<u32>& c,
                               const std::function<std::size_t(std::size_t)>& gen_map) {
  std::vector<long long> w(c.begin(), c.end());
  auto z = row_times_mat(w, q.vinv);  // integral lift
  std::vector<long long> moved(q.gens, 0);
  for (std::size_t i = 0; i < q.gens; ++i) moved[gen_map(i)] += z[i];
  return coords_of_int_vector(q, moved);
}

std::size_t index_in(const std::vector<RElem>& v, RElem x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) throw std::logic_error("bimodule carrier not closed");
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

std::vector<u32> TensorBimodule::left_act(RElem r, const std::vector<u32>& c) const {
  std::size_t nn = n->carrier.size();
  return act_on_coords(*this, c, [&](std::size_t g) {
    std::size_t i = g / nn, j = g % nn;
    return index_in(m->carrier, m->left(r, m->carrier[i])) * nn + j;
  });
}

std::vector<u32> TensorBimodule::right_act(const std::vector<u32>& c, RElem r) const {
  std::size_t nn = n->carrier.size();
  return act_on_coords(*this, c, [&](std::size_t g) {
    std::size_t i = g / nn, j = g % nn;
    return i * nn + index_in(n->carrier, n->right(n->carrier[j], r));
  });
}

TensorBimodule tensor_bimodules(const Bimodule& m, const Bimodule& n) {
  TensorBimodule q;
  q.m = &m;
  q.n = &n;
  const Ring& R = *m.ring;
  std::size_t ms = m.carrier.size(), ns = n.carrier.size();
  q.gens = ms * ns;

  IMat rels;
  auto idx = [&](std::size_t i, std::size_t j) { return i * ns + j; };
  auto add_rel = [&](std::initializer_list<std::pair<std::size_t, long long>> terms) {
    std::vector<long long> row(q.gens, 0);
    for (auto [k, c] : terms) row[k] += c;
    rels.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < ms; ++i)
    for (std::size_t i2 = 0; i2 < ms; ++i2) {
      std::size_t isum = index_in(m.carrier, R.add(m.carrier[i], m.carrier[i2]));
      for (std::size_t j = 0; j < ns; ++j)
        add_rel({{idx(isum, j), 1}, {idx(i, j), -1}, {idx(i2, j), -1}});
    }
  for (std::size_t j = 0; j < ns; ++j)
    for (std::size_t j2 = 0; j2 < ns; ++j2) {
      std::size_t jsum = index_in(n.carrier, R.add(n.carrier[j], n.carrier[j2]));
      for (std::size_t i = 0; i < ms; ++i)
        add_rel({{idx(i, jsum), 1}, {idx(i, j), -1}, {idx(i, j2), -1}});
    }
  for (std::size_t i = 0; i < ms; ++i)
    for (std::size_t j = 0; j < ns; ++j)
      for (RElem r = 0; r < R.size(); ++r) {
        std::size_t ir = index_in(m.carrier, m.right(m.carrier[i], r));
        std::size_t rj = index_in(n.carrier, n.left(r, n.carrier[j]));
        add_rel({{idx(ir, j), 1}, {idx(i, rj), -1}});
      }

  SmithResult s = smith_normal_form(rels);
  if (s.rank != q.gens) throw std::logic_error("tensor presentation has free part");
  q.v = s.v;
  q.vinv = imat_inverse(s.v);
  q.divisors.assign(q.gens, 1);
  for (std::size_t i = 0; i < s.rank; ++i) q.divisors[i] = s.d[i][i];

  // enumerate residue tuples over the nontrivial coordinates
  std::vector<std::size_t> vary;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < q.gens; ++i)
    if (q.divisors[i] > 1) {
      vary.push_back(i);
      total *= static_cast<std::uint64_t>(q.divisors[i]);
      if (total > (1u << 20)) throw CapExceeded("tensor bimodule too large");
    }
  for (std::uint64_t ord = 0; ord < total; ++ord) {
    std::vector<u32> e(q.gens, 0);
    std::uint64_t rem = ord;
    for (std::size_t t = vary.size(); t-- > 0;) {
      e[vary[t]] = static_cast<u32>(rem % q.divisors[vary[t]]);
      rem /= q.divisors[vary[t]];
    }
    q.elements.push_back(std::move(e));
  }
  return q;
}

bool bimodule_iso_exists(const TensorBimodule& q, const Bimodule& target) {
  if (q.size() != target.carrier.size()) return false;
  const Ring& R = *target.ring;
  std::size_t n = q.size();
  // map element tuples to indices
  std::map<std::vector<u32>, std::size_t> qidx;
  for (std::size_t i = 0; i < n; ++i) qidx[q.elements[i]] = i;
  // operation tables on indices
  std::vector<std::vector<std::size_t>> qadd(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) qadd[i][j] = qidx.at(q.add(q.elements[i], q.elements[j]));
  std::vector<std::vector<std::size_t>> qleft(R.size(), std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> qright(R.size(), std::vector<std::size_t>(n));
  for (RElem r = 0; r < R.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) {
      qleft[r][i] = qidx.at(q.left_act(r, q.elements[i]));
      qright[r][i] = qidx.at(q.right_act(q.elements[i], r));
    }
  std::vector<std::size_t> tadd_idx(n * n), tleft(R.size() * n), tright(R.size() * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      tadd_idx[i * n + j] = index_in(target.carrier, R.add(target.carrier[i], target.carrier[j]));
  for (RElem r = 0; r < R.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) {
      tleft[r * n + i] = index_in(target.carrier, target.left(r, target.carrier[i]));
      tright[r * n + i] = index_in(target.carrier, target.right(target.carrier[i], r));
    }

  std::vector<std::size_t> img(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      img[pos] = cand;
      used[cand] = true;
      bool ok = true;
      for (std::size_t other = 0; other <= pos && ok; ++other) {
        std::size_t s = qadd[pos][other];
        if (s <= pos && tadd_idx[img[pos] * n + img[other]] != img[s]) ok = false;
      }
      for (RElem r = 0; r < R.size() && ok; ++r) {
        std::size_t l = qleft[r][pos];
        if (l <= pos && tleft[r * n + img[pos]] != img[l]) ok = false;
        std::size_t rr = qright[r][pos];
        if (rr <= pos && tright[r * n + img[pos]] != img[rr]) ok = false;
      }
      if (ok && assign(pos + 1)) return true;
      used[cand] = false;
    }
    img[pos] = n;
    return false;
  };
  if (!assign(0)) return false;
  // full verification
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (tadd_idx[img[i] * n + img[j]] != img[qadd[i][j]]) return false;
  for (RElem r = 0; r < R.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) {
      if (tleft[r * n + img[i]] != img[qleft[r][i]]) return false;
      if (tright[r * n + img[i]] != img[qright[r][i]]) return false;
    }
  return true;
}

ValidationReport bimodule_rule_oracle(const PartialAction& pa) {
  ValidationReport rep;
  const Ring& R = pa.R();
  const FiniteGroup& G = pa.group;
  bool ok = true;
  std::string w;
  std::size_t pairs = 0;
  for (Elt g = 0; g < G.order() && ok; ++g) {
    for (RElem e : idempotents(R)) {
      if (R.mul(e, pa.one_g[G.inv(g)]) != e) continue;
      Bimodule M = twisted_corner_bimodule(pa, g, e);
      for (Elt h = 0; h < G.order() && ok; ++h)
        for (RElem f : idempotents(R)) {
          if (R.mul(f, pa.one_g[G.inv(h)]) != f) continue;
          Bimodule N = twisted_corner_bimodule(pa, h, f);
          TensorBimodule Q = tensor_bimodules(M, N);
          RElem e2 = R.mul(pa.apply_cut(G.inv(h), e), f);
          Bimodule T = twisted_corner_bimodule(pa, G.mul(g, h), e2);
          ++pairs;
          if (!bimodule_iso_exists(Q, T)) {
            ok = false;
            w = "(g" + std::to_string(g) + "," + R.element_repr(e) + ") x (g" + std::to_string(h) + "," +
                R.element_repr(f) + ")";
            break;
          }
        }
    }
  }
  rep.require("pair rule matches the literal tensor on all " + std::to_string(pairs) + " pairs", ok, w);
  return rep;
}

}  // namespace pgx
