#include "pgx/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace pgx::io {

namespace {

using Elt = FiniteGroup::Elt;

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

const json& need(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return doc.at(key);
}

bool is_nonneg_int(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

std::uint32_t need_u32(const json& doc, const char* key) {
  const json& v = need(doc, key);
  if (!is_nonneg_int(v)) throw ParseError(std::string("key '") + key + "' must be a nonnegative integer");
  return v.get<std::uint32_t>();
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON in " + path);
  return doc;
}

BuildRingResult ring_from_json(const json& doc) {
  const json& factors = need(doc, "factors");
  if (!factors.is_array() || factors.empty()) throw ParseError("ring needs a nonempty factor list");
  std::vector<LocalFactor> fs;
  for (const json& f : factors) {
    std::string kind = need(f, "kind").get<std::string>();
    LocalFactor lf;
    if (kind == "zmod") {
      lf.kind = LocalFactor::Kind::Zmod;
      lf.modulus = need_u32(f, "modulus");
      if (lf.modulus == 0) throw ParseError("zero modulus");
    } else if (kind == "quotient") {
      lf.kind = LocalFactor::Kind::Quotient;
      lf.p = need_u32(f, "p");
      for (const json& c : need(f, "poly")) lf.poly.push_back(c.get<std::uint32_t>());
      if (lf.poly.size() < 2 || lf.poly.back() != 1) throw ParseError("quotient polynomial must be monic of degree >= 1");
    } else {
      throw ParseError("unknown factor kind '" + kind + "'");
    }
    fs.push_back(std::move(lf));
  }
  try {
    return build_ring(std::move(fs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json ring_to_json(const ProductRing& r) {
  json factors = json::array();
  for (const auto& f : r.factors()) {
    if (f.kind == LocalFactor::Kind::Zmod) {
      factors.push_back({{"kind", "zmod"}, {"modulus", f.modulus}});
    } else {
      factors.push_back({{"kind", "quotient"}, {"p", f.p}, {"poly", f.poly}});
    }
  }
  return {{"factors", factors}};
}

json element_to_json(const ProductRing& r, RElem x) {
  auto d = r.decode(x);
  json out = json::array();
  for (std::size_t i = 0; i < r.factors().size(); ++i) {
    const auto& f = r.factors()[i];
    if (f.kind == LocalFactor::Kind::Zmod) {
      out.push_back(d[i]);
    } else {
      json coeffs = json::array();
      std::uint32_t v = d[i];
      for (std::size_t j = 0; j + 1 < f.poly.size(); ++j) {
        coeffs.push_back(v % f.p);
        v /= f.p;
      }
      out.push_back(coeffs);
    }
  }
  return out;
}

RElem element_from_json(const ProductRing& r, const json& doc) {
  if (!doc.is_array() || doc.size() != r.factors().size())
    throw ParseError("element needs one residue per ring factor");
  std::vector<std::uint32_t> d(r.factors().size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& f = r.factors()[i];
    if (f.kind == LocalFactor::Kind::Zmod) {
      if (!is_nonneg_int(doc[i])) throw ParseError("zmod residue must be a nonnegative integer");
      std::uint32_t v = doc[i].get<std::uint32_t>();
      if (v >= f.modulus) throw ParseError("residue out of range");
      d[i] = v;
    } else {
      if (!doc[i].is_array() || doc[i].size() + 1 != f.poly.size())
        throw ParseError("quotient residue needs deg(poly) coefficients");
      std::uint32_t v = 0, w = 1;
      for (std::size_t j = 0; j < doc[i].size(); ++j) {
        std::uint32_t c = doc[i][j].get<std::uint32_t>();
        if (c >= f.p) throw ParseError("coefficient out of range");
        v += c * w;
        w *= f.p;
      }
      d[i] = v;
    }
  }
  return r.encode(d);
}

FiniteGroup group_from_json(const json& doc) {
  std::uint32_t n = need_u32(doc, "order");
  const json& table = need(doc, "table");
  if (!table.is_array() || table.size() != n) throw ParseError("group table must have `order` rows");
  std::vector<std::vector<Elt>> t(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!table[i].is_array() || table[i].size() != n) throw ParseError("group table must be square");
    for (const json& v : table[i]) t[i].push_back(v.get<Elt>());
  }
  try {
    return FiniteGroup::from_table(std::move(t));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"table", g.table()}};
}

ExtensionDoc extension_from_json(const json& doc) {
  ExtensionDoc out;
  BuildRingResult br = ring_from_json(need(doc, "ring"));
  out.ring = br.ring;
  out.ring_report = br.report;
  FiniteGroup g = group_from_json(need(doc, "group"));

  out.pa.ring = out.ring;
  out.pa.group = g;
  out.pa.one_g.assign(g.order(), 0);
  out.pa.alpha.assign(g.order(), {});
  const json& action = need(doc, "action");
  if (!action.is_array() || action.size() != g.order())
    throw ParseError("action needs one entry per group element");
  std::vector<bool> seen(g.order(), false);
  for (const json& entry : action) {
    std::uint32_t gi = need_u32(entry, "g");
    if (gi >= g.order() || seen[gi]) throw ParseError("bad or duplicate action index");
    seen[gi] = true;
    out.pa.one_g[gi] = element_from_json(*out.ring, need(entry, "one_g"));
    for (const json& pair : need(entry, "alpha")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("alpha entries are [src,dst] pairs");
      RElem src = element_from_json(*out.ring, pair[0]);
      RElem dst = element_from_json(*out.ring, pair[1]);
      if (out.pa.alpha[gi].count(src)) throw ParseError("duplicate alpha table entry");
      out.pa.alpha[gi][src] = dst;
    }
  }

  if (doc.contains("twisting")) {
    Twisting t;
    t.w.assign(g.order(), std::vector<RElem>(g.order(), 0));
    std::vector<std::vector<bool>> got(g.order(), std::vector<bool>(g.order(), false));
    for (const json& entry : doc.at("twisting")) {
      std::uint32_t gi = need_u32(entry, "g"), hi = need_u32(entry, "h");
      if (gi >= g.order() || hi >= g.order() || got[gi][hi]) throw ParseError("bad or duplicate twisting index");
      got[gi][hi] = true;
      t.w[gi][hi] = element_from_json(*out.ring, need(entry, "value"));
    }
    for (auto& row : got)
      for (bool b : row)
        if (!b) throw ParseError("twisting table incomplete");
    out.twisting = std::move(t);
  }

  out.hash = content_hash(extension_to_json(out));
  return out;
}

json extension_to_json(const ExtensionDoc& ext) {
  json action = json::array();
  for (Elt g = 0; g < ext.pa.group.order(); ++g) {
    json alpha = json::array();
    for (const auto& [src, dst] : ext.pa.alpha[g])
      alpha.push_back(json::array({element_to_json(*ext.ring, src), element_to_json(*ext.ring, dst)}));
    action.push_back(
        {{"g", g}, {"one_g", element_to_json(*ext.ring, ext.pa.one_g[g])}, {"alpha", alpha}});
  }
  json out = {{"ring", ring_to_json(*ext.ring)},
              {"group", group_to_json(ext.pa.group)},
              {"action", action}};
  if (ext.twisting) {
    json tw = json::array();
    for (Elt g = 0; g < ext.pa.group.order(); ++g)
      for (Elt h = 0; h < ext.pa.group.order(); ++h)
        tw.push_back({{"g", g}, {"h", h}, {"value", element_to_json(*ext.ring, ext.twisting->at(g, h))}});
    out["twisting"] = tw;
  }
  return out;
}

std::string content_hash(const json& canonical_doc) {
  std::uint64_t h = fnv1a64(canonical_doc.dump());
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Cochain cochain_from_json(const CochainComplex& cx, const ProductRing& r, const json& doc,
                          const std::string& expected_hash) {
  std::string ref = need(doc, "extension").get<std::string>();
  if (ref != expected_hash)
    throw ParseError("cochain document references extension " + ref + " but the input has hash " + expected_hash);
  int degree = static_cast<int>(need_u32(doc, "degree"));
  Cochain f;
  f.degree = degree;
  f.values.assign(cx.slots(degree), r.size());  // sentinel
  for (const json& entry : need(doc, "values")) {
    const json& args = need(entry, "args");
    if (!args.is_array() || args.size() != static_cast<std::size_t>(degree))
      throw ParseError("cochain entry arity mismatch");
    std::vector<Elt> tuple;
    for (const json& a : args) tuple.push_back(a.get<Elt>());
    for (Elt a : tuple)
      if (a >= cx.action().group.order()) throw ParseError("cochain argument out of range");
    std::size_t slot = cx.slot_of(tuple);
    if (f.values[slot] != r.size()) throw ParseError("duplicate cochain entry");
    f.values[slot] = element_from_json(r, need(entry, "value"));
  }
  for (RElem v : f.values)
    if (v == r.size()) throw ParseError("cochain table incomplete");
  return f;
}

json cochain_to_json(const CochainComplex& cx, const ProductRing& r, const Cochain& f, const std::string& hash) {
  json values = json::array();
  for (std::size_t s = 0; s < f.values.size(); ++s) {
    auto tuple = cx.tuple_of(f.degree, s);
    values.push_back({{"args", tuple}, {"value", element_to_json(r, f.values[s])}});
  }
  return {{"extension", hash}, {"degree", f.degree}, {"values", values}};
}

PsiFamily psi_from_json(const GaloisExtension& ext, const ProductRing& r, const json& doc,
                        const std::string& expected_hash) {
  std::string ref = need(doc, "extension").get<std::string>();
  if (ref != expected_hash)
    throw ParseError("psi document references extension " + ref + " but the input has hash " + expected_hash);
  PsiFamily psi;
  psi.w.assign(ext.G().order(), r.size());
  for (const json& entry : need(doc, "units")) {
    std::uint32_t g = need_u32(entry, "g");
    if (g >= ext.G().order() || psi.w[g] != r.size()) throw ParseError("bad or duplicate psi index");
    psi.w[g] = element_from_json(r, need(entry, "value"));
  }
  for (RElem v : psi.w)
    if (v == r.size()) throw ParseError("psi table incomplete");
  return psi;
}

SymbolicPicsDoc symbolic_pics_from_json(const ExtensionDoc& ext, const json& doc) {
  std::vector<AbGroupSpec> groups;
  for (const json& g : need(doc, "groups")) {
    AbGroupSpec spec;
    for (const json& d : g) {
      std::uint32_t dv = d.get<std::uint32_t>();
      if (dv < 2) throw ParseError("elementary divisors must be >= 2");
      spec.divisors.push_back(dv);
    }
    groups.push_back(std::move(spec));
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, IMat> eps;
  if (doc.contains("eps"))
    for (const json& e : doc.at("eps")) {
      std::uint32_t from = need_u32(e, "from"), to = need_u32(e, "to");
      IMat m;
      for (const json& row : need(e, "matrix")) {
        m.emplace_back();
        for (const json& v : row) m.back().push_back(v.get<long long>());
      }
      eps[{from, to}] = std::move(m);
    }

  // an explicit meet table detaches the semilattice from the ring (abstract
  // monoid: no alpha* available)
  std::vector<std::vector<std::uint32_t>> meet;
  bool abstract_semilattice = doc.contains("meet");
  if (abstract_semilattice)
    for (const json& row : doc.at("meet")) {
      meet.emplace_back();
      for (const json& v : row) meet.back().push_back(v.get<std::uint32_t>());
    }

  SymbolicPicsDoc out;
  try {
    out.monoid = PicSMonoid::symbolic(abstract_semilattice ? nullptr : ext.ring, std::move(meet),
                                      std::move(groups), std::move(eps), &out.report);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (abstract_semilattice) return out;

  if (doc.contains("alpha_star")) {
    std::vector<std::map<std::uint32_t, IMat>> maps(ext.pa.group.order());
    for (const json& e : doc.at("alpha_star")) {
      std::uint32_t g = need_u32(e, "g");
      if (g >= ext.pa.group.order()) throw ParseError("alpha_star index out of range");
      for (const json& entry : need(e, "maps")) {
        std::uint32_t comp = need_u32(entry, "component");
        IMat m;
        for (const json& row : need(entry, "matrix")) {
          m.emplace_back();
          for (const json& v : row) m.back().push_back(v.get<long long>());
        }
        maps[g][comp] = std::move(m);
      }
    }
    out.action = PicSAction::symbolic(out.monoid, ext.pa, std::move(maps));
  }
  return out;
}

json report_to_json(const ValidationReport& rep) {
  json findings = json::array();
  for (const auto& f : rep.findings())
    findings.push_back({{"check", f.check}, {"passed", f.passed}, {"witness", f.witness}});
  return {{"ok", rep.ok()}, {"findings", findings}};
}

json cohomology_to_json(const CochainComplex& cx, const ProductRing& r, const CohomologyGroup& h) {
  json reps = json::array();
  for (const auto& f : h.representatives) {
    json values = json::array();
    for (std::size_t s = 0; s < f.values.size(); ++s)
      values.push_back({{"args", cx.tuple_of(f.degree, s)}, {"value", element_to_json(r, f.values[s])}});
    reps.push_back(values);
  }
  return {{"degree", h.degree},
          {"z_size", h.z_size},
          {"b_size", h.b_size},
          {"h_size", h.h_size},
          {"elementary_divisors", h.divisors},
          {"representatives", reps},
          {"oracle_checked", h.oracle_checked},
          {"note", h.note}};
}

json sequence_report_to_json(const SequenceReport& rep) {
  json probes = json::array();
  for (const auto& p : rep.probes)
    probes.push_back({{"name", p.name}, {"passed", p.passed}, {"details", p.details}});
  return {{"probes", probes}, {"all_passed", rep.all_passed()}, {"disclaimer", rep.disclaimer}};
}

}  // namespace pgx::io
