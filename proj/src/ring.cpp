#include "pgx/ring.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace pgx {

namespace {

std::uint32_t upow(std::uint32_t b, std::uint32_t e) {
  std::uint64_t acc = 1;
  while (e--) {
    acc *= b;
    if (acc > 0xffffffffull) throw std::invalid_argument("factor size overflow");
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

std::uint32_t LocalFactor::size() const {
  if (kind == Kind::Zmod) return modulus;
  return upow(p, static_cast<std::uint32_t>(poly.size() - 1));
}

ProductRing::ProductRing(std::vector<LocalFactor> factors) : factors_(std::move(factors)) {
  std::uint64_t total = 1;
  weight_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    weight_[i] = total;
    total *= factors_[i].size();
    if (total > (1ull << 31)) throw std::invalid_argument("ring too large");
  }
  size_ = static_cast<std::size_t>(total);

  for (const auto& f : factors_) {
    if (f.kind == LocalFactor::Kind::Zmod) {
      if (f.modulus == 0) throw std::invalid_argument("zero modulus");
    } else {
      if (f.p < 2) throw std::invalid_argument("quotient factor needs a prime base");
      if (f.poly.size() < 2) throw std::invalid_argument("quotient polynomial must have degree >= 1");
      if (f.poly.back() % f.p != 1) throw std::invalid_argument("quotient polynomial must be monic");
      for (auto c : f.poly)
        if (c >= f.p) throw std::invalid_argument("quotient polynomial coefficient out of range");
    }
  }

  // small per-factor tables
  addtab_.resize(factors_.size());
  multab_.resize(factors_.size());
  negtab_.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint32_t q = factors_[i].size();
    if (q > 4096) continue;  // fall back to direct computation
    addtab_[i].resize(std::size_t(q) * q);
    multab_[i].resize(std::size_t(q) * q);
    negtab_[i].resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      negtab_[i][a] = fneg(i, a);
      for (std::uint32_t b = 0; b < q; ++b) {
        addtab_[i][std::size_t(a) * q + b] = fop(i, a, b, false);
        multab_[i][std::size_t(a) * q + b] = fop(i, a, b, true);
      }
    }
  }

  std::vector<std::uint32_t> ones(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    ones[i] = factors_[i].kind == LocalFactor::Kind::Zmod ? 1 % factors_[i].modulus : 1;
  one_ = encode(ones);
}

std::uint32_t ProductRing::fneg(std::size_t f, std::uint32_t a) const {
  const auto& fac = factors_[f];
  if (fac.kind == LocalFactor::Kind::Zmod) return a == 0 ? 0 : fac.modulus - a;
  std::uint32_t deg = static_cast<std::uint32_t>(fac.poly.size() - 1);
  std::uint32_t out = 0, w = 1;
  for (std::uint32_t i = 0; i < deg; ++i) {
    std::uint32_t c = a % fac.p;
    a /= fac.p;
    out += ((fac.p - c) % fac.p) * w;
    w *= fac.p;
  }
  return out;
}

std::uint32_t ProductRing::fop(std::size_t f, std::uint32_t a, std::uint32_t b, bool is_mul) const {
  const auto& fac = factors_[f];
  if (fac.kind == LocalFactor::Kind::Zmod)
    return is_mul ? std::uint32_t((std::uint64_t(a) * b) % fac.modulus)
                  : std::uint32_t((std::uint64_t(a) + b) % fac.modulus);
  std::uint32_t deg = static_cast<std::uint32_t>(fac.poly.size() - 1);
  std::vector<std::uint32_t> ca(deg), cb(deg);
  for (std::uint32_t i = 0; i < deg; ++i) {
    ca[i] = a % fac.p;
    a /= fac.p;
    cb[i] = b % fac.p;
    b /= fac.p;
  }
  std::vector<std::uint32_t> prod;
  if (!is_mul) {
    prod.resize(deg);
    for (std::uint32_t i = 0; i < deg; ++i) prod[i] = (ca[i] + cb[i]) % fac.p;
  } else {
    prod.assign(2 * deg, 0);
    for (std::uint32_t i = 0; i < deg; ++i)
      for (std::uint32_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % fac.p;
    // reduce by the monic modulus polynomial
    for (std::uint32_t k = 2 * deg - 1; k >= deg; --k) {
      std::uint32_t c = prod[k];
      if (c) {
        for (std::uint32_t i = 0; i <= deg; ++i) {
          std::uint32_t pos = k - deg + i;
          prod[pos] = (prod[pos] + fac.p * fac.p - c * fac.poly[i] % fac.p) % fac.p;
        }
      }
      if (k == deg) break;
    }
    prod.resize(deg);
  }
  std::uint32_t out = 0, w = 1;
  for (std::uint32_t i = 0; i < deg; ++i) {
    out += prod[i] * w;
    w *= fac.p;
  }
  return out;
}

std::vector<std::uint32_t> ProductRing::decode(RElem a) const {
  std::vector<std::uint32_t> digits(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    digits[i] = static_cast<std::uint32_t>(a / weight_[i]);
    a = static_cast<RElem>(a % weight_[i]);
  }
  return digits;
}

RElem ProductRing::encode(const std::vector<std::uint32_t>& digits) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) acc += std::uint64_t(digits[i]) * weight_[i];
  return static_cast<RElem>(acc);
}

RElem ProductRing::factor_unit(std::size_t i) const {
  std::vector<std::uint32_t> d(factors_.size(), 0);
  d[i] = factors_[i].kind == LocalFactor::Kind::Zmod ? 1 % factors_[i].modulus : 1;
  return encode(d);
}

RElem ProductRing::add(RElem a, RElem b) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint32_t da = static_cast<std::uint32_t>(a / weight_[i]), db = static_cast<std::uint32_t>(b / weight_[i]);
    a = static_cast<RElem>(a % weight_[i]);
    b = static_cast<RElem>(b % weight_[i]);
    std::uint32_t q = factors_[i].size();
    std::uint32_t r = addtab_[i].empty() ? fop(i, da, db, false) : addtab_[i][std::size_t(da) * q + db];
    acc += std::uint64_t(r) * weight_[i];
  }
  return static_cast<RElem>(acc);
}

RElem ProductRing::mul(RElem a, RElem b) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint32_t da = static_cast<std::uint32_t>(a / weight_[i]), db = static_cast<std::uint32_t>(b / weight_[i]);
    a = static_cast<RElem>(a % weight_[i]);
    b = static_cast<RElem>(b % weight_[i]);
    std::uint32_t q = factors_[i].size();
    std::uint32_t r = multab_[i].empty() ? fop(i, da, db, true) : multab_[i][std::size_t(da) * q + db];
    acc += std::uint64_t(r) * weight_[i];
  }
  return static_cast<RElem>(acc);
}

RElem ProductRing::neg(RElem a) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint32_t da = static_cast<std::uint32_t>(a / weight_[i]);
    a = static_cast<RElem>(a % weight_[i]);
    std::uint32_t r = negtab_[i].empty() ? fneg(i, da) : negtab_[i][da];
    acc += std::uint64_t(r) * weight_[i];
  }
  return static_cast<RElem>(acc);
}

std::string ProductRing::element_repr(RElem a) const {
  auto d = decode(a);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ",";
    if (factors_[i].kind == LocalFactor::Kind::Zmod) {
      os << d[i];
    } else {
      std::uint32_t v = d[i], deg = static_cast<std::uint32_t>(factors_[i].poly.size() - 1);
      os << "[";
      for (std::uint32_t j = 0; j < deg; ++j) {
        if (j) os << " ";
        os << v % factors_[i].p;
        v /= factors_[i].p;
      }
      os << "]";
    }
  }
  os << ")";
  return os.str();
}

std::string ProductRing::repr() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    if (factors_[i].kind == LocalFactor::Kind::Zmod) {
      os << "Z/" << factors_[i].modulus;
    } else {
      os << "F" << factors_[i].p << "[t]/(";
      for (std::size_t j = factors_[i].poly.size(); j-- > 0;) {
        if (factors_[i].poly[j] == 0) continue;
        os << "+" << factors_[i].poly[j] << "t^" << j;
      }
      os << ")";
    }
  }
  if (factors_.empty()) os << "0";
  return os.str();
}

BuildRingResult build_ring(std::vector<LocalFactor> factors) {
  if (factors.empty()) throw std::invalid_argument("ring needs at least one local factor");
  BuildRingResult out;
  out.ring = std::make_shared<ProductRing>(std::move(factors));
  out.report = check_ring_axioms(*out.ring);
  for (const auto& f : out.ring->factors())
    if (f.kind == LocalFactor::Kind::Quotient)
      out.report.note("quotient factor", "polynomial irreducibility not checked (caller responsibility)");
  return out;
}

ValidationReport check_ring_axioms(const Ring& r, std::size_t exhaustive_cap) {
  ValidationReport rep;
  std::size_t n = r.size();
  bool exhaustive = n * n * n <= exhaustive_cap;
  auto check_triple = [&](RElem a, RElem b, RElem c, bool& comm, bool& assoc, bool& dist) {
    comm &= r.mul(a, b) == r.mul(b, a) && r.add(a, b) == r.add(b, a);
    assoc &= r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)) && r.add(r.add(a, b), c) == r.add(a, r.add(b, c));
    dist &= r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c));
  };
  bool comm = true, assoc = true, dist = true;
  if (exhaustive) {
    for (RElem a = 0; a < n; ++a)
      for (RElem b = 0; b < n; ++b)
        for (RElem c = 0; c < n; ++c) check_triple(a, b, c, comm, assoc, dist);
    rep.note("axiom check", "exhaustive");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<RElem> pick(0, static_cast<RElem>(n - 1));
    for (std::size_t i = 0; i < exhaustive_cap; ++i) check_triple(pick(rng), pick(rng), pick(rng), comm, assoc, dist);
    rep.note("axiom check", "sampled");
  }
  bool unital = true;
  for (RElem a = 0; a < n; ++a) {
    unital &= r.mul(r.one(), a) == a && r.mul(a, r.one()) == a;
    unital &= r.add(a, r.neg(a)) == r.zero() && r.add(a, r.zero()) == a;
  }
  rep.require("commutativity", comm);
  rep.require("associativity", assoc);
  rep.require("distributivity", dist);
  rep.require("identity and negation", unital);
  return rep;
}

std::vector<RElem> idempotents(const Ring& r) {
  std::vector<RElem> out;
  for (RElem e = 0; e < r.size(); ++e)
    if (r.is_idempotent(e)) out.push_back(e);
  return out;
}

Ideal::Ideal(const Ring& r, RElem e) : ring_(&r), e_(e) {
  if (!r.is_idempotent(e)) throw std::invalid_argument("ideal generator must be idempotent");
  std::set<RElem> acc;
  for (RElem x = 0; x < r.size(); ++x) acc.insert(r.mul(x, e));
  elements_.assign(acc.begin(), acc.end());
}

bool Ideal::contains(RElem x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

std::optional<RElem> Ideal::inverse_in(RElem x) const {
  for (RElem y : elements_)
    if (ring_->mul(x, y) == e_) return y;
  return std::nullopt;
}

namespace {

UnitGroup unit_group_of(const Ring& r, const std::vector<RElem>& carrier, RElem identity) {
  UnitGroup g;
  g.ring = &r;
  g.identity = identity;
  for (RElem x : carrier) {
    for (RElem y : carrier)
      if (r.mul(x, y) == identity) {
        g.elements.push_back(x);
        break;
      }
  }
  g.inverse.assign(g.elements.size(), 0);
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (std::size_t j = 0; j < g.elements.size(); ++j)
      if (r.mul(g.elements[i], g.elements[j]) == identity) {
        g.inverse[i] = static_cast<std::uint32_t>(j);
        break;
      }
  auto mul = [&](std::uint32_t i, std::uint32_t j) { return g.index_of(r.mul(g.elements[i], g.elements[j])); };
  g.basis = abelian_basis(g.elements.size(), mul, g.index_of(identity));
  return g;
}

}  // namespace

std::uint32_t UnitGroup::index_of(RElem x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) throw std::invalid_argument("not a unit of the carrier");
  return static_cast<std::uint32_t>(it - elements.begin());
}

bool UnitGroup::contains(RElem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

RElem UnitGroup::inverse_of(RElem x) const { return elements[inverse[index_of(x)]]; }

UnitGroup unit_group(const Ring& r) {
  std::vector<RElem> all(r.size());
  for (RElem x = 0; x < r.size(); ++x) all[x] = x;
  return unit_group_of(r, all, r.one());
}

UnitGroup unit_group(const Ideal& ideal) {
  return unit_group_of(ideal.ring(), ideal.elements(), ideal.generator());
}

bool Subring::contains(RElem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

std::size_t Subring::index_of(RElem x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) throw std::invalid_argument("element not in subring");
  return static_cast<std::size_t>(it - elements.begin());
}

ValidationReport check_subring(const Subring& s) {
  ValidationReport rep;
  bool closed = true;
  std::string w;
  for (RElem a : s.elements)
    for (RElem b : s.elements) {
      if (!s.contains(s.host->add(a, b)) || !s.contains(s.host->mul(a, b))) {
        closed = false;
        w = s.host->element_repr(a) + "," + s.host->element_repr(b);
      }
    }
  for (RElem a : s.elements)
    if (!s.contains(s.host->neg(a))) closed = false;
  rep.require("closure", closed, w);
  rep.require("contains 0", s.contains(s.host->zero()));
  return rep;
}

std::vector<RElem> Carrier::elements() const {
  if (idem == ring->one()) {
    std::vector<RElem> all(ring->size());
    for (RElem x = 0; x < ring->size(); ++x) all[x] = x;
    return all;
  }
  return Ideal(*ring, idem).elements();
}

ValidationReport check_morphism(const RingMorphism& m) {
  ValidationReport rep;
  auto src = m.src.elements();
  for (RElem x : src)
    if (!m.table.count(x)) throw std::invalid_argument("morphism table incomplete at " + m.src.ring->element_repr(x));
  auto at = [&](RElem x) { return m.table.at(x); };

  Ideal dst_ideal(*m.dst.ring, m.dst.idem);
  bool into = true;
  std::string w;
  for (RElem x : src)
    if (!dst_ideal.contains(at(x))) {
      into = false;
      w = m.src.ring->element_repr(x);
    }
  rep.require("values in target carrier", into, w);

  bool addv = true, mulv = true;
  for (RElem x : src)
    for (RElem y : src) {
      if (at(m.src.ring->add(x, y)) != m.dst.ring->add(at(x), at(y))) {
        if (addv) w = m.src.ring->element_repr(x) + "," + m.src.ring->element_repr(y);
        addv = false;
      }
      if (at(m.src.ring->mul(x, y)) != m.dst.ring->mul(at(x), at(y))) {
        if (mulv) w = m.src.ring->element_repr(x) + "," + m.src.ring->element_repr(y);
        mulv = false;
      }
    }
  rep.require("additivity", addv, w);
  rep.require("multiplicativity", mulv, w);
  rep.require("unitality", at(m.src.idem) == m.dst.idem,
              m.src.ring->element_repr(m.src.idem) + " -> " + m.dst.ring->element_repr(at(m.src.idem)));
  if (m.claims_bijective) {
    std::set<RElem> image;
    for (RElem x : src) image.insert(at(x));
    rep.require("injectivity", image.size() == src.size());
    rep.require("surjectivity", image.size() == dst_ideal.size());
  }
  return rep;
}

std::vector<RElem> k_span(const Ring& host, const Subring& k, const std::vector<RElem>& gens) {
  std::set<RElem> span{host.zero()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RElem> cur(span.begin(), span.end());
    for (RElem s : cur)
      for (RElem g : gens)
        for (RElem c : k.elements) {
          RElem v = host.add(s, host.mul(c, g));
          if (span.insert(v).second) grew = true;
        }
  }
  return {span.begin(), span.end()};
}

std::optional<std::vector<RElem>> free_basis_over(const Ring& host, const Subring& k) {
  std::vector<RElem> basis;
  std::vector<RElem> span = k_span(host, k, {});
  while (span.size() < host.size()) {
    bool extended = false;
    for (RElem cand = 0; cand < host.size() && !extended; ++cand) {
      if (std::binary_search(span.begin(), span.end(), cand)) continue;
      auto next = basis;
      next.push_back(cand);
      auto s = k_span(host, k, next);
      if (s.size() == span.size() * k.size()) {
        basis = std::move(next);
        span = std::move(s);
        extended = true;
      }
    }
    if (!extended) return std::nullopt;
  }
  return basis;
}

KBasis k_basis_coordinates(const Ring& host, const Subring& k, std::vector<RElem> basis) {
  KBasis kb;
  kb.host = &host;
  kb.k = k;
  kb.basis = std::move(basis);
  kb.coords.assign(host.size(), {});
  std::vector<std::uint32_t> idx(kb.basis.size(), 0);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < kb.basis.size(); ++i) combos *= k.size();
  if (combos != host.size()) throw std::invalid_argument("basis is not free of full rank");
  std::size_t seen = 0;
  for (std::size_t c = 0; c < combos; ++c) {
    RElem v = host.zero();
    std::size_t rem = c;
    for (std::size_t i = 0; i < kb.basis.size(); ++i) {
      idx[i] = static_cast<std::uint32_t>(rem % k.size());
      rem /= k.size();
      v = host.add(v, host.mul(k.elements[idx[i]], kb.basis[i]));
    }
    if (!kb.coords[v].empty() || (v == host.zero() && c != 0))
      throw std::invalid_argument("basis combinations collide; not free");
    kb.coords[v] = idx;
    ++seen;
  }
  if (seen != host.size()) throw std::invalid_argument("basis does not span");
  kb.coords[host.zero()].assign(kb.basis.size(), 0);
  return kb;
}

std::vector<std::vector<RElem>> k_linear_endomorphisms(const Ring& host, const Subring& k, std::size_t cap) {
  // minimal k-module generating set, greedily
  std::vector<RElem> gens;
  std::vector<RElem> span = k_span(host, k, gens);
  while (span.size() < host.size()) {
    RElem pick = 0;
    for (RElem cand = 0; cand < host.size(); ++cand)
      if (!std::binary_search(span.begin(), span.end(), cand)) {
        pick = cand;
        break;
      }
    gens.push_back(pick);
    span = k_span(host, k, gens);
  }

  // enumerate all k-combinations of the generators once
  std::size_t combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    combos *= k.size();
    if (combos > cap) throw CapExceeded("k_linear_endomorphisms: combination count exceeds cap");
  }
  std::vector<std::vector<std::uint32_t>> combo_idx(combos, std::vector<std::uint32_t>(gens.size()));
  std::vector<RElem> combo_val(combos);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rem = c;
    RElem v = host.zero();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      combo_idx[c][i] = static_cast<std::uint32_t>(rem % k.size());
      rem /= k.size();
      v = host.add(v, host.mul(k.elements[combo_idx[c][i]], gens[i]));
    }
    combo_val[c] = v;
  }

  std::vector<std::vector<RElem>> out;
  std::vector<RElem> images(gens.size(), 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    total *= host.size();
    if (total > cap) throw CapExceeded("k_linear_endomorphisms: image tuple count exceeds cap");
  }
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rem = t;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      images[i] = static_cast<RElem>(rem % host.size());
      rem /= host.size();
    }
    std::vector<RElem> table(host.size(), host.size());  // sentinel
    bool consistent = true;
    for (std::size_t c = 0; c < combos && consistent; ++c) {
      RElem img = host.zero();
      for (std::size_t i = 0; i < gens.size(); ++i)
        img = host.add(img, host.mul(k.elements[combo_idx[c][i]], images[i]));
      RElem arg = combo_val[c];
      if (table[arg] == host.size())
        table[arg] = img;
      else if (table[arg] != img)
        consistent = false;
    }
    if (consistent) out.push_back(std::move(table));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool extend_iso(const Subring& a, const Subring& b, std::vector<std::size_t>& img, std::size_t pos,
                std::vector<bool>& used) {
  if (pos == a.elements.size()) return true;
  for (std::size_t cand = 0; cand < b.elements.size(); ++cand) {
    if (used[cand]) continue;
    img[pos] = cand;
    used[cand] = true;
    bool ok = true;
    // check all products/sums among assigned prefix
    for (std::size_t i = 0; i <= pos && ok; ++i) {
      RElem sa = a.host->add(a.elements[pos], a.elements[i]);
      RElem ma = a.host->mul(a.elements[pos], a.elements[i]);
      if (a.contains(sa) && std::binary_search(a.elements.begin(), a.elements.end(), sa)) {
        std::size_t si = a.index_of(sa);
        if (si <= pos) {
          RElem sb = b.host->add(b.elements[img[pos]], b.elements[img[i]]);
          if (sb != b.elements[img[si]]) ok = false;
        }
      }
      std::size_t mi = a.index_of(ma);
      if (mi <= pos && ok) {
        RElem mb = b.host->mul(b.elements[img[pos]], b.elements[img[i]]);
        if (mb != b.elements[img[mi]]) ok = false;
      }
    }
    if (ok && extend_iso(a, b, img, pos + 1, used)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<std::map<RElem, RElem>> find_ring_iso(const Subring& a, const Subring& b) {
  if (a.elements.size() != b.elements.size()) return std::nullopt;
  // brute-force assignment in canonical order; sums/products must be total, so
  // verify the full tables after a candidate assignment is found
  std::vector<std::size_t> img(a.elements.size());
  std::vector<bool> used(b.elements.size(), false);
  // precondition for the backtracking pruning above: both closed
  if (!check_subring(a).ok() || !check_subring(b).ok()) return std::nullopt;
  if (!extend_iso(a, b, img, 0, used)) return std::nullopt;
  std::map<RElem, RElem> table;
  for (std::size_t i = 0; i < a.elements.size(); ++i) table[a.elements[i]] = b.elements[img[i]];
  // full verification
  for (RElem x : a.elements)
    for (RElem y : a.elements) {
      if (table.at(a.host->add(x, y)) != b.host->add(table.at(x), table.at(y))) return std::nullopt;
      if (table.at(a.host->mul(x, y)) != b.host->mul(table.at(x), table.at(y))) return std::nullopt;
    }
  return table;
}

}  // namespace pgx
