// Command-line front end: parse extension documents, dispatch to the library,
// emit human-readable or machine-readable reports.
//
// Exit codes: 0 pass, 1 mathematical validation failure, 2 parse error,
// 3 resource cap exceeded.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "pgx/io.hpp"

namespace {

using namespace pgx;
using pgx::io::json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string input;
  std::string format = "human";
  std::uint64_t cap = CochainComplex::kDefaultCap;
};

std::uint64_t env_cap() {
  const char* v = std::getenv("PGX_ENUM_CAP");
  if (!v) return CochainComplex::kDefaultCap;
  return std::strtoull(v, nullptr, 10);
}

int emit(const Options& opt, const std::string& command, json payload, bool pass,
         Clock::time_point started) {
  payload["command"] = command;
  payload["input"] = opt.input;
  payload["config"] = {{"format", opt.format}, {"enum_cap", opt.cap}};
  payload["status"] = pass ? "pass" : "fail";
  if (opt.format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
    std::cout << "pgx " << command << " on " << opt.input << " (cap " << opt.cap << ")\n";
    std::cout << payload.dump(2) << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << " in " << ms << " ms\n";
  }
  return pass ? 0 : 1;
}

json crossed_element_to_json(const io::ExtensionDoc& ext, const CrossedProduct::Element& a) {
  json out = json::array();
  for (FiniteGroup::Elt g = 0; g < ext.pa.group.order(); ++g)
    if (a[g] != ext.ring->zero()) out.push_back(json::array({g, io::element_to_json(*ext.ring, a[g])}));
  return out;
}

CrossedProduct::Element crossed_element_from_json(const io::ExtensionDoc& ext, const CrossedProduct& cp,
                                                  const json& doc) {
  CrossedProduct::Element a = cp.zero_elem();
  if (!doc.is_array()) throw ParseError("crossed element must be an array of [g, coefficient] pairs");
  for (const json& pair : doc) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("crossed element entries are [g, coefficient]");
    FiniteGroup::Elt g = pair[0].get<FiniteGroup::Elt>();
    if (g >= ext.pa.group.order()) throw ParseError("group index out of range");
    RElem c = io::element_from_json(*ext.ring, pair[1]);
    a[g] = ext.ring->add(a[g], c);
  }
  if (!cp.element_valid(a)) throw std::invalid_argument("coefficients must lie in their ideals D_g");
  return a;
}

Twisting doc_twisting(const io::ExtensionDoc& ext) {
  return ext.twisting ? *ext.twisting : trivial_twisting(ext.pa);
}

GaloisExtension require_galois(const io::ExtensionDoc& ext, std::size_t m_max = 3) {
  return make_galois_extension(ext.pa, std::nullopt, m_max);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial Galois extensions over finite commutative rings"};
  app.require_subcommand(1);

  Options opt;
  opt.cap = env_cap();

  std::string cocycle_path, psi_path, rho_path, symbolic_path, element_json, a_json, b_json;
  int degree = 1;
  std::size_t m_max = 3;
  bool want_oracle = false, no_oracle = false, do_table = false, do_jmap = false, do_detect = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "extension document (JSON)")->required();
    sub->add_option("--format", opt.format, "human|json")->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--cap", opt.cap, "enumeration cap (overrides PGX_ENUM_CAP)");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate the partial action (and twisting, if present)");
  add_input(validate);
  CLI::App* invariants = app.add_subcommand("invariants", "compute the invariant subring");
  add_input(invariants);
  CLI::App* trace = app.add_subcommand("trace", "trace map of an element");
  add_input(trace);
  trace->add_option("--element", element_json, "ring element (JSON)")->required();
  CLI::App* coords = app.add_subcommand("coords", "search for a partial Galois coordinate system");
  add_input(coords);
  coords->add_option("--m-max", m_max, "largest system length to try");
  CLI::App* cohomology = app.add_subcommand("cohomology", "cohomology of the partial action");
  add_input(cohomology);
  cohomology->add_option("--degree", degree, "degree n >= 0")->required();
  cohomology->add_flag("--oracle", want_oracle, "require the brute-force oracle cross-check");
  cohomology->add_flag("--no-oracle", no_oracle, "skip the oracle cross-check");
  CLI::App* crossed = app.add_subcommand("crossed", "crossed product operations");
  add_input(crossed);
  crossed->add_option("--multiply-a", a_json, "left element, [[g, coeff],...]");
  crossed->add_option("--multiply-b", b_json, "right element");
  crossed->add_flag("--table", do_table, "emit the monomial multiplication table");
  crossed->add_flag("--jmap", do_jmap, "run the j-map bijectivity check");
  crossed->add_flag("--detect", do_detect, "search a coboundary witness for the document twisting");
  CLI::App* pics = app.add_subcommand("pics", "the inverse monoid PicS(R) and its partial action");
  add_input(pics);
  pics->add_option("--symbolic", symbolic_path, "symbolic PicS document (JSON)");
  CLI::App* phi1c = app.add_subcommand("phi1", "invariant module of a 1-cocycle");
  add_input(phi1c);
  phi1c->add_option("--cocycle", cocycle_path, "1-cocycle document")->required();
  CLI::App* phi2c = app.add_subcommand("phi2", "scalar extension into PicS");
  add_input(phi2c);
  CLI::App* phi3c = app.add_subcommand("phi3", "2-cocycle of a psi family");
  add_input(phi3c);
  phi3c->add_option("--psi", psi_path, "psi family document (defaults to the identity family)");
  CLI::App* phi4c = app.add_subcommand("phi4", "crossed-product class of a 2-cocycle");
  add_input(phi4c);
  phi4c->add_option("--cocycle", cocycle_path, "2-cocycle document (defaults to the document twisting)");
  CLI::App* phi6c = app.add_subcommand("phi6", "3-cocycle of a PicS 1-cocycle");
  add_input(phi6c);
  phi6c->add_option("--rho", rho_path, "2-cochain document (defaults to the identity cochain)");
  CLI::App* verify = app.add_subcommand("verify", "run the composite probes");
  add_input(verify);

  CLI11_PARSE(app, argc, argv);
  auto started = Clock::now();

  try {
    io::ExtensionDoc ext = io::extension_from_json(io::load_json(opt.input));
    json payload;
    payload["extension_hash"] = ext.hash;

    if (*validate) {
      ValidationReport rep = validate_partial_action(ext.pa);
      payload["ring"] = io::report_to_json(ext.ring_report);
      payload["action"] = io::report_to_json(rep);
      bool ok = rep.ok() && ext.ring_report.ok();
      if (ext.twisting) {
        ValidationReport tw = rep.ok() ? validate_twisting(ext.pa, *ext.twisting) : ValidationReport{};
        payload["twisting"] = io::report_to_json(tw);
        ok &= tw.ok();
      }
      return emit(opt, "validate", payload, ok, started);
    }

    // everything below needs a valid action
    {
      ValidationReport rep = validate_partial_action(ext.pa);
      if (!rep.ok()) {
        payload["action"] = io::report_to_json(rep);
        return emit(opt, app.get_subcommands().front()->get_name(), payload, false, started);
      }
    }

    if (*invariants) {
      Subring s = invariant_subring(ext.pa);
      json elems = json::array();
      for (RElem r : s.elements) elems.push_back(io::element_to_json(*ext.ring, r));
      payload["invariants"] = elems;
      payload["order"] = s.elements.size();
      return emit(opt, "invariants", payload, true, started);
    }

    if (*trace) {
      json edoc = json::parse(element_json, nullptr, false);
      if (edoc.is_discarded()) throw ParseError("malformed --element JSON");
      RElem x = io::element_from_json(*ext.ring, edoc);
      RElem t = trace_map(ext.pa, x);
      payload["element"] = io::element_to_json(*ext.ring, x);
      payload["trace"] = io::element_to_json(*ext.ring, t);
      return emit(opt, "trace", payload, true, started);
    }

    if (*coords) {
      auto found = find_galois_coordinates(ext.pa, m_max, opt.cap);
      if (found) {
        json xs = json::array(), ys = json::array();
        for (RElem x : found->x) xs.push_back(io::element_to_json(*ext.ring, x));
        for (RElem y : found->y) ys.push_back(io::element_to_json(*ext.ring, y));
        payload["x"] = xs;
        payload["y"] = ys;
        payload["check"] = io::report_to_json(check_galois_coordinates(ext.pa, *found));
      } else {
        payload["witness"] = "no coordinate system with m <= " + std::to_string(m_max);
      }
      return emit(opt, "coords", payload, found.has_value(), started);
    }

    if (*cohomology) {
      CochainComplex cx(ext.pa);
      CohomologyOptions copt;
      copt.oracle_cap = no_oracle ? 0 : opt.cap;
      if (want_oracle) cx.cochain_count(degree, copt.oracle_cap);  // throws CapExceeded when impossible
      CohomologyGroup h = cohomology_group(cx, degree, copt);
      payload["cohomology"] = io::cohomology_to_json(cx, *ext.ring, h);
      return emit(opt, "cohomology", payload, true, started);
    }

    if (*crossed) {
      CrossedProduct cp(ext.pa, doc_twisting(ext));
      ValidationReport assoc = cp.check_associativity(opt.cap);
      payload["associativity"] = io::report_to_json(assoc);
      bool ok = assoc.ok();
      if (!a_json.empty() || !b_json.empty()) {
        if (a_json.empty() || b_json.empty()) throw ParseError("--multiply-a and --multiply-b go together");
        json da = json::parse(a_json, nullptr, false), db = json::parse(b_json, nullptr, false);
        if (da.is_discarded() || db.is_discarded()) throw ParseError("malformed crossed element JSON");
        auto a = crossed_element_from_json(ext, cp, da);
        auto b = crossed_element_from_json(ext, cp, db);
        payload["product"] = crossed_element_to_json(ext, cp.mul(a, b));
      }
      if (do_table) {
        json table = json::array();
        for (FiniteGroup::Elt g = 0; g < ext.pa.group.order(); ++g) {
          Ideal dg(*ext.ring, ext.pa.one_g[g]);
          for (RElem r : dg.elements())
            for (FiniteGroup::Elt h = 0; h < ext.pa.group.order(); ++h) {
              Ideal dh(*ext.ring, ext.pa.one_g[h]);
              for (RElem s : dh.elements()) {
                auto prod = cp.mul(cp.monomial(g, r), cp.monomial(h, s));
                table.push_back({{"a", crossed_element_to_json(ext, cp.monomial(g, r))},
                                 {"b", crossed_element_to_json(ext, cp.monomial(h, s))},
                                 {"ab", crossed_element_to_json(ext, prod)}});
              }
            }
        }
        payload["table"] = table;
      }
      if (do_jmap) {
        JMapResult jm = j_map(require_galois(ext), opt.cap);
        payload["jmap"] = io::report_to_json(jm.report);
        ok &= jm.report.ok();
      }
      if (do_detect) {
        auto witness = detect_trivial_class(require_galois(ext), doc_twisting(ext), opt.cap);
        payload["trivial_class"] = witness.has_value();
        if (witness) {
          CochainComplex cx(ext.pa);
          payload["witness"] = io::cochain_to_json(cx, *ext.ring, *witness, ext.hash);
        }
      }
      return emit(opt, "crossed", payload, ok, started);
    }

    if (*pics) {
      if (!symbolic_path.empty()) {
        io::SymbolicPicsDoc sym = io::symbolic_pics_from_json(ext, io::load_json(symbolic_path));
        payload["build"] = io::report_to_json(sym.report);
        ValidationReport rep = sym.monoid.validate();
        payload["monoid"] = io::report_to_json(rep);
        bool ok = rep.ok();
        if (sym.action) {
          ValidationReport arep = sym.action->validate();
          payload["alpha_star"] = io::report_to_json(arep);
          ok &= arep.ok();
          payload["z1_count"] = z1_pics(*sym.action, opt.cap).size();
        }
        return emit(opt, "pics", payload, ok, started);
      }
      PicSMonoid m = PicSMonoid::concrete(ext.ring);
      ValidationReport rep = m.validate();
      payload["components"] = m.component_count();
      payload["monoid"] = io::report_to_json(rep);
      PicSAction act = PicSAction::concrete(m, ext.pa);
      ValidationReport arep = act.validate();
      payload["alpha_star"] = io::report_to_json(arep);
      auto inv = pics_invariants(act);
      json invj = json::array();
      for (const auto& x : inv.elements)
        invj.push_back(io::element_to_json(*ext.ring, m.idempotent_of_component(x.comp)));
      payload["invariant_components"] = invj;
      payload["bimodule_oracle"] = io::report_to_json(bimodule_rule_oracle(ext.pa));
      bool ok = rep.ok() && arep.ok() && inv.report.ok();
      return emit(opt, "pics", payload, ok, started);
    }

    if (*phi1c) {
      GaloisExtension g = require_galois(ext);
      CochainComplex cx(g.pa);
      Cochain f = io::cochain_from_json(cx, *ext.ring, io::load_json(cocycle_path), ext.hash);
      Phi1Result r = phi1(g, f);
      json elems = json::array();
      for (RElem x : r.module_elements) elems.push_back(io::element_to_json(*ext.ring, x));
      payload["module"] = elems;
      payload["generator"] = io::element_to_json(*ext.ring, r.generator);
      payload["report"] = io::report_to_json(r.report);
      return emit(opt, "phi1", payload, r.report.ok() && r.free_rank_one, started);
    }

    if (*phi2c) {
      GaloisExtension g = require_galois(ext);
      PicSMonoid m = PicSMonoid::concrete(ext.ring);
      PicSAction act = PicSAction::concrete(m, g.pa);
      Phi2Result r = phi2(g, act);
      payload["image_component"] = io::element_to_json(*ext.ring, m.idempotent_of_component(r.images[0].comp));
      payload["report"] = io::report_to_json(r.report);
      return emit(opt, "phi2", payload, r.report.ok(), started);
    }

    if (*phi3c) {
      GaloisExtension g = require_galois(ext);
      PsiFamily psi = psi_path.empty()
                          ? identity_psi_family(g)
                          : io::psi_from_json(g, *ext.ring, io::load_json(psi_path), ext.hash);
      Phi3Result r = phi3(g, psi);
      CochainComplex cx(g.pa);
      payload["omega"] = io::cochain_to_json(cx, *ext.ring, r.omega, ext.hash);
      payload["report"] = io::report_to_json(r.report);
      return emit(opt, "phi3", payload, r.report.ok(), started);
    }

    if (*phi4c) {
      GaloisExtension g = require_galois(ext);
      CochainComplex cx(g.pa);
      Phi4Result r = cocycle_path.empty()
                         ? phi4(g, doc_twisting(ext))
                         : phi4(g, io::cochain_from_json(cx, *ext.ring, io::load_json(cocycle_path), ext.hash));
      payload["trivial_class"] = r.trivial_class;
      if (r.witness) payload["witness"] = io::cochain_to_json(cx, *ext.ring, *r.witness, ext.hash);
      payload["report"] = io::report_to_json(r.report);
      return emit(opt, "phi4", payload, r.report.ok(), started);
    }

    if (*phi6c) {
      GaloisExtension g = require_galois(ext);
      CochainComplex cx(g.pa);
      PicSMonoid m = PicSMonoid::concrete(ext.ring);
      PicSAction act = PicSAction::concrete(m, g.pa);
      auto zs = z1_pics(act, opt.cap);
      Cochain rho = rho_path.empty() ? cx.identity_cochain(2)
                                     : io::cochain_from_json(cx, *ext.ring, io::load_json(rho_path), ext.hash);
      Phi6Result r = phi6(g.pa, act, zs.at(0), rho);
      payload["omega"] = io::cochain_to_json(cx, *ext.ring, r.omega, ext.hash);
      payload["report"] = io::report_to_json(r.report);
      return emit(opt, "phi6", payload, r.report.ok(), started);
    }

    if (*verify) {
      GaloisExtension g = require_galois(ext);
      SequenceReport rep = verify_composites(g);
      payload["report"] = io::sequence_report_to_json(rep);
      return emit(opt, "verify", payload, rep.all_passed(), started);
    }

    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
