#include "pgx/partial_action.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pgx {

namespace {
using Elt = FiniteGroup::Elt;

std::string gname(Elt g) { return "g" + std::to_string(g); }
}  // namespace

RElem PartialAction::apply(Elt g, RElem x) const {
  auto it = alpha[g].find(x);
  if (it == alpha[g].end())
    throw std::invalid_argument("alpha_" + gname(g) + " undefined at " + ring->element_repr(x));
  return it->second;
}

RElem PartialAction::apply_cut(Elt g, RElem x) const {
  return apply(g, ring->mul(x, one_g[group.inv(g)]));
}

ValidationReport validate_partial_action(const PartialAction& pa) {
  ValidationReport rep;
  const Ring& R = pa.R();
  const FiniteGroup& G = pa.group;
  std::uint32_t n = G.order();

  if (pa.one_g.size() != n || pa.alpha.size() != n) throw std::invalid_argument("action tables sized wrong");
  bool idem = true;
  for (Elt g = 0; g < n; ++g) idem &= R.is_idempotent(pa.one_g[g]);
  rep.require("1_g idempotent", idem);
  if (!idem) return rep;

  // each alpha_g is a ring isomorphism D_{g^-1} -> D_g
  for (Elt g = 0; g < n; ++g) {
    Ideal dom(R, pa.one_g[G.inv(g)]);
    Ideal cod(R, pa.one_g[g]);
    for (RElem x : dom.elements())
      if (!pa.alpha[g].count(x))
        throw std::invalid_argument("alpha_" + gname(g) + " table missing " + R.element_repr(x));
    RingMorphism m;
    m.src = {&R, pa.one_g[G.inv(g)]};
    m.dst = {&R, pa.one_g[g]};
    m.table = pa.alpha[g];
    m.claims_bijective = true;
    ValidationReport mr = check_morphism(m);
    rep.require("alpha_" + gname(g) + " isomorphism of ideals", mr.ok(), mr.summary());
  }
  if (!rep.ok()) return rep;

  // (i) 1_1 = 1 and alpha_1 = id
  bool ax1 = pa.one_g[0] == R.one();
  for (RElem x = 0; ax1 && x < R.size(); ++x) ax1 &= pa.apply(0, x) == x;
  rep.require("axiom (i): alpha_1 = id on R", ax1);

  // (ii) alpha_g(D_{g^-1} D_h) = D_g D_{gh}
  {
    bool ok = true;
    std::string w;
    for (Elt g = 0; g < n && ok; ++g)
      for (Elt h = 0; h < n && ok; ++h) {
        Ideal src(R, R.mul(pa.one_g[G.inv(g)], pa.one_g[h]));
        Ideal dst(R, R.mul(pa.one_g[g], pa.one_g[G.mul(g, h)]));
        std::set<RElem> img;
        for (RElem x : src.elements()) img.insert(pa.apply(g, x));
        std::set<RElem> want(dst.elements().begin(), dst.elements().end());
        if (img != want) {
          ok = false;
          w = gname(g) + "," + gname(h);
        }
      }
    rep.require("axiom (ii): alpha_g(D_{g^-1}D_h) = D_g D_{gh}", ok, w);
  }

  // (iii) alpha_g(alpha_h(t)) = alpha_{gh}(t) on D_{h^-1} D_{(gh)^-1}
  {
    bool ok = true;
    std::string w;
    for (Elt g = 0; g < n && ok; ++g)
      for (Elt h = 0; h < n && ok; ++h) {
        Ideal dom(R, R.mul(pa.one_g[G.inv(h)], pa.one_g[G.inv(G.mul(g, h))]));
        for (RElem t : dom.elements()) {
          RElem lhs = pa.apply_cut(g, pa.apply(h, t));
          RElem rhs = pa.apply(G.mul(g, h), t);
          if (lhs != rhs) {
            ok = false;
            w = gname(g) + "," + gname(h) + " at " + R.element_repr(t);
            break;
          }
        }
      }
    rep.require("axiom (iii): alpha_g . alpha_h = alpha_{gh} where defined", ok, w);
  }

  // composition identity on all of R (redundant cross-check)
  {
    bool ok = true;
    std::string w;
    for (Elt g = 0; g < n && ok; ++g)
      for (Elt h = 0; h < n && ok; ++h)
        for (RElem y = 0; y < R.size(); ++y) {
          RElem lhs = pa.apply(g, R.mul(pa.apply_cut(h, y), pa.one_g[G.inv(g)]));
          RElem rhs = R.mul(pa.apply_cut(G.mul(g, h), y), pa.one_g[g]);
          if (lhs != rhs) {
            ok = false;
            w = gname(g) + "," + gname(h) + " at " + R.element_repr(y);
            break;
          }
        }
    rep.require("composition identity alpha_g(alpha_h(y 1_{h^-1}) 1_{g^-1}) = alpha_{gh}(y 1_{(gh)^-1}) 1_g", ok, w);
  }

  // derived: alpha_g(1_h 1_{g^-1}) = 1_g 1_{gh}
  {
    bool ok = true;
    std::string w;
    for (Elt g = 0; g < n && ok; ++g)
      for (Elt h = 0; h < n; ++h) {
        if (pa.apply_cut(g, pa.one_g[h]) != R.mul(pa.one_g[g], pa.one_g[G.mul(g, h)])) {
          ok = false;
          w = gname(g) + "," + gname(h);
          break;
        }
      }
    rep.require("derived: alpha_g(1_h 1_{g^-1}) = 1_g 1_{gh}", ok, w);
  }
  return rep;
}

Twisting trivial_twisting(const PartialAction& pa) {
  std::uint32_t n = pa.group.order();
  Twisting t;
  t.w.assign(n, std::vector<RElem>(n, 0));
  for (Elt g = 0; g < n; ++g)
    for (Elt h = 0; h < n; ++h) t.w[g][h] = pa.R().mul(pa.one_g[g], pa.one_g[pa.group.mul(g, h)]);
  return t;
}

Twisting inverse_twisting(const PartialAction& pa, const Twisting& t) {
  std::uint32_t n = pa.group.order();
  Twisting out;
  out.w.assign(n, std::vector<RElem>(n, 0));
  for (Elt g = 0; g < n; ++g)
    for (Elt h = 0; h < n; ++h) {
      Ideal cut(pa.R(), pa.R().mul(pa.one_g[g], pa.one_g[pa.group.mul(g, h)]));
      auto inv = cut.inverse_in(t.w[g][h]);
      if (!inv) throw std::invalid_argument("twisting value is not a unit of its ideal");
      out.w[g][h] = *inv;
    }
  return out;
}

ValidationReport validate_twisting(const PartialAction& pa, const Twisting& t) {
  ValidationReport rep;
  const Ring& R = pa.R();
  const FiniteGroup& G = pa.group;
  std::uint32_t n = G.order();

  bool member = true;
  std::string w;
  for (Elt g = 0; g < n && member; ++g)
    for (Elt h = 0; h < n; ++h) {
      Ideal cut(R, R.mul(pa.one_g[g], pa.one_g[G.mul(g, h)]));
      if (!cut.contains(t.at(g, h)) || !cut.inverse_in(t.at(g, h))) {
        member = false;
        w = gname(g) + "," + gname(h) + " value " + R.element_repr(t.at(g, h));
        break;
      }
    }
  rep.require("omega_{g,h} in U(D_g D_{gh})", member, w);
  if (!member) return rep;

  bool norm = true;
  for (Elt g = 0; g < n; ++g)
    norm &= t.at(0, g) == pa.one_g[g] && t.at(g, 0) == pa.one_g[g];
  rep.require("axiom (iv): omega_{1,g} = omega_{g,1} = 1_g", norm);

  bool coc = true;
  for (Elt g = 0; g < n && coc; ++g)
    for (Elt h = 0; h < n && coc; ++h)
      for (Elt l = 0; l < n; ++l) {
        RElem lhs = R.mul(pa.apply_cut(g, t.at(h, l)), t.at(g, G.mul(h, l)));
        RElem rhs = R.mul(t.at(g, h), t.at(G.mul(g, h), l));
        if (lhs != rhs) {
          coc = false;
          w = gname(g) + "," + gname(h) + "," + gname(l);
          break;
        }
      }
  rep.require("axiom (v): alpha_g(1_{g^-1} omega_{h,l}) omega_{g,hl} = omega_{g,h} omega_{gh,l}", coc, w);

  bool sym = true;
  for (Elt g = 0; g < n; ++g)
    if (pa.apply_cut(g, t.at(G.inv(g), g)) != t.at(g, G.inv(g))) {
      sym = false;
      w = gname(g);
      break;
    }
  rep.require("derived: alpha_g(omega_{g^-1,g}) = omega_{g,g^-1}", sym, w);
  return rep;
}

Subring invariant_subring(const PartialAction& pa) {
  Subring s;
  s.host = pa.ring.get();
  const Ring& R = pa.R();
  for (RElem r = 0; r < R.size(); ++r) {
    bool inv = true;
    for (Elt g = 0; g < pa.group.order(); ++g)
      if (pa.apply_cut(g, r) != R.mul(r, pa.one_g[g])) {
        inv = false;
        break;
      }
    if (inv) s.elements.push_back(r);
  }
  ValidationReport rep = check_subring(s);
  if (!rep.ok()) throw std::logic_error("invariant set not closed: " + rep.summary());
  return s;
}

RElem trace_map(const PartialAction& pa, RElem x) {
  RElem acc = pa.R().zero();
  for (Elt g = 0; g < pa.group.order(); ++g) acc = pa.R().add(acc, pa.apply_cut(g, x));
  return acc;
}

ValidationReport check_galois_coordinates(const PartialAction& pa, const GaloisCoordinates& c) {
  ValidationReport rep;
  if (c.x.empty() || c.x.size() != c.y.size())
    throw std::invalid_argument("coordinate lists empty or mismatched");
  const Ring& R = pa.R();
  for (Elt g = 0; g < pa.group.order(); ++g) {
    RElem sum = R.zero();
    for (std::size_t i = 0; i < c.x.size(); ++i)
      sum = R.add(sum, R.mul(c.x[i], pa.apply_cut(g, c.y[i])));
    RElem want = g == 0 ? R.one() : R.zero();
    rep.require("sum_i x_i alpha_g(y_i 1_{g^-1}) = delta_{1,g} at " + gname(g), sum == want,
                "got " + R.element_repr(sum));
  }
  return rep;
}

std::optional<GaloisCoordinates> find_galois_coordinates(const PartialAction& pa, std::size_t m_max,
                                                         std::size_t cap) {
  const Ring& R = pa.R();
  std::size_t N = R.size();
  for (std::size_t m = 1; m <= m_max; ++m) {
    // tuples (x_1..x_m, y_1..y_m) in lexicographic order
    std::size_t slots = 2 * m;
    double est = 1;
    for (std::size_t i = 0; i < slots; ++i) est *= static_cast<double>(N);
    if (est > static_cast<double>(cap)) throw CapExceeded("coordinate search space exceeds cap");
    std::vector<RElem> tup(slots, 0);
    while (true) {
      GaloisCoordinates c;
      c.x.assign(tup.begin(), tup.begin() + m);
      c.y.assign(tup.begin() + m, tup.end());
      bool ok = true;
      for (Elt g = 0; g < pa.group.order() && ok; ++g) {
        RElem sum = R.zero();
        for (std::size_t i = 0; i < m; ++i) sum = R.add(sum, R.mul(c.x[i], pa.apply_cut(g, c.y[i])));
        ok = sum == (g == 0 ? R.one() : R.zero());
      }
      if (ok) return c;
      std::size_t i = slots;
      while (i-- > 0) {
        if (++tup[i] < N) break;
        tup[i] = 0;
        if (i == 0) goto next_m;
      }
    }
  next_m:;
  }
  return std::nullopt;
}

GaloisExtension make_galois_extension(PartialAction pa, std::optional<GaloisCoordinates> coords,
                                      std::size_t m_max) {
  ValidationReport rep = validate_partial_action(pa);
  if (!rep.ok()) throw std::invalid_argument("invalid partial action: " + rep.summary());
  GaloisExtension ext;
  ext.pa = std::move(pa);
  if (coords) {
    ValidationReport cr = check_galois_coordinates(ext.pa, *coords);
    if (!cr.ok()) throw std::invalid_argument("coordinate system rejected: " + cr.summary());
    ext.coords = std::move(*coords);
  } else {
    auto found = find_galois_coordinates(ext.pa, m_max);
    if (!found) throw std::invalid_argument("extension is not partial Galois (no coordinate system found)");
    ext.coords = std::move(*found);
  }
  ext.invariants = invariant_subring(ext.pa);
  bool have_c = false;
  for (RElem c = 0; c < ext.R().size(); ++c)
    if (trace_map(ext.pa, c) == ext.R().one()) {
      ext.trace_unit = c;
      have_c = true;
      break;
    }
  if (!have_c) throw std::invalid_argument("no trace-1 element found");
  return ext;
}

PartialAction restrict_global_action(const PartialAction& global, RElem e) {
  const auto* prod = dynamic_cast<const ProductRing*>(global.ring.get());
  if (!prod) throw std::invalid_argument("restriction requires a product-of-local-factors carrier");
  const Ring& S = *prod;
  const FiniteGroup& G = global.group;
  for (Elt g = 0; g < G.order(); ++g)
    if (global.one_g[g] != S.one()) throw std::invalid_argument("restriction requires a global action");
  if (!S.is_idempotent(e)) throw std::invalid_argument("corner element must be idempotent");

  // retained factors are those where e has residue 1
  auto ed = prod->decode(e);
  std::vector<std::size_t> keep;
  std::vector<LocalFactor> fac;
  for (std::size_t i = 0; i < prod->factors().size(); ++i) {
    if (ed[i] == 0) continue;
    if (ed[i] != (prod->factors()[i].kind == LocalFactor::Kind::Zmod ? 1u % prod->factors()[i].modulus : 1u))
      throw std::invalid_argument("corner idempotent must be a 0/1 tuple");
    keep.push_back(i);
    fac.push_back(prod->factors()[i]);
  }
  auto corner = std::make_shared<ProductRing>(fac);

  auto project = [&](RElem x) {
    auto d = prod->decode(x);
    std::vector<std::uint32_t> out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) out[i] = d[keep[i]];
    return corner->encode(out);
  };
  auto lift = [&](RElem x) {
    auto d = corner->decode(x);
    std::vector<std::uint32_t> out(prod->factors().size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) out[keep[i]] = d[i];
    return prod->encode(out);
  };

  PartialAction out;
  out.ring = corner;
  out.group = G;
  out.one_g.resize(G.order());
  out.alpha.resize(G.order());
  for (Elt g = 0; g < G.order(); ++g) {
    RElem beta_e = global.apply(g, e);
    out.one_g[g] = project(S.mul(e, beta_e));
    RElem dom_idem_corner = project(S.mul(e, global.apply(G.inv(g), e)));
    Ideal dom(*corner, dom_idem_corner);
    for (RElem x : dom.elements()) out.alpha[g][x] = project(S.mul(global.apply(g, lift(x)), e));
  }
  return out;
}

TensorExtensionResult tensor_extensions(const GaloisExtension& a, const GaloisExtension& b) {
  const Subring& k1 = a.invariants;
  const Subring& k2 = b.invariants;
  auto iso = find_ring_iso(k1, k2);
  if (!iso) throw std::invalid_argument("invariant subrings differ (no base identification)");
  auto basis1 = free_basis_over(a.R(), k1);
  auto basis2 = free_basis_over(b.R(), k2);
  if (!basis1 || !basis2) throw std::invalid_argument("no free basis over the common base");

  auto tring = std::make_shared<TensorRing>(a.pa.ring, k1, *basis1, b.pa.ring, k2, *basis2, *iso);
  const FiniteGroup& Ga = a.G();
  const FiniteGroup& Gb = b.G();
  FiniteGroup Gt = FiniteGroup::direct_product(Ga, Gb);

  // alpha (x) theta on basis products, extended k-linearly
  KBasis kb1 = k_basis_coordinates(a.R(), k1, *basis1);
  KBasis kb2 = k_basis_coordinates(b.R(), k2, *basis2);

  PartialAction pa;
  pa.ring = tring;
  pa.group = Gt;
  pa.one_g.resize(Gt.order());
  pa.alpha.resize(Gt.order());
  std::size_t m1 = basis1->size(), m2 = basis2->size();
  for (Elt gt = 0; gt < Gt.order(); ++gt) {
    Elt g = gt / Gb.order(), h = gt % Gb.order();
    pa.one_g[gt] = tring->embed(a.pa.one_g[g], b.pa.one_g[h]);
    // image of each basis pair under alpha_g (x) theta_h, with the cut applied
    std::vector<RElem> img(m1 * m2);
    for (std::size_t i = 0; i < m1; ++i)
      for (std::size_t j = 0; j < m2; ++j)
        img[i * m2 + j] = tring->embed(a.pa.apply_cut(g, (*basis1)[i]), b.pa.apply_cut(h, (*basis2)[j]));
    Elt gti = Gt.inv(gt);
    RElem dom_idem = tring->embed(a.pa.one_g[Ga.inv(g)], b.pa.one_g[Gb.inv(h)]);
    Ideal dom(*tring, dom_idem);
    for (RElem z : dom.elements()) {
      auto c = tring->coords(z);
      RElem acc = tring->zero();
      for (std::size_t s = 0; s < c.size(); ++s) {
        RElem kc = k1.elements[c[s]];
        acc = tring->add(acc, tring->scale(kc, img[s]));
      }
      pa.alpha[gt][z] = acc;
    }
    (void)gti;
  }

  GaloisCoordinates coords;
  for (std::size_t i = 0; i < a.coords.x.size(); ++i)
    for (std::size_t j = 0; j < b.coords.x.size(); ++j) {
      coords.x.push_back(tring->embed(a.coords.x[i], b.coords.x[j]));
      coords.y.push_back(tring->embed(a.coords.y[i], b.coords.y[j]));
    }

  TensorExtensionResult out;
  out.ring = tring;
  out.ext = make_galois_extension(std::move(pa), coords);
  return out;
}

TensorSquare tensor_square(const GaloisExtension& ext) {
  TensorExtensionResult r = tensor_extensions(ext, ext);
  return {r.ring, r.ext.pa};
}

Twisting tensor_twisting(const TensorExtensionResult& te, const GaloisExtension& a, const Twisting& wa,
                         const GaloisExtension& b, const Twisting& wb) {
  (void)a;
  const FiniteGroup& Gb = b.G();
  std::uint32_t n = te.ext.G().order();
  Twisting t;
  t.w.assign(n, std::vector<RElem>(n, 0));
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      Elt g = x / Gb.order(), h = x % Gb.order();
      Elt g2 = y / Gb.order(), h2 = y % Gb.order();
      t.w[x][y] = te.ring->embed(wa.at(g, g2), wb.at(h, h2));
    }
  return t;
}

}  // namespace pgx
