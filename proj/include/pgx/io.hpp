#ifndef PGX_IO_HPP
#define PGX_IO_HPP

#include <json.hpp>

#include "pgx/cohomology.hpp"
#include "pgx/pics.hpp"
#include "pgx/seven.hpp"

namespace pgx::io {

using nlohmann::json;

json load_json(const std::string& path);  // throws ParseError

// ring description: {"factors":[{"kind":"zmod","modulus":4} |
//                               {"kind":"quotient","p":2,"poly":[1,1,1]}]}
BuildRingResult ring_from_json(const json& doc);
json ring_to_json(const ProductRing& r);

// elements serialize as arrays of residues: integers for zmod factors,
// low-to-high coefficient arrays for quotient factors
json element_to_json(const ProductRing& r, RElem x);
RElem element_from_json(const ProductRing& r, const json& doc);

FiniteGroup group_from_json(const json& doc);
json group_to_json(const FiniteGroup& g);

// one document carries the whole extension: ring + group + action + optional
// twisting; `hash` is the content hash other documents must reference
struct ExtensionDoc {
  std::shared_ptr<const ProductRing> ring;
  PartialAction pa;
  std::optional<Twisting> twisting;
  std::string hash;
  ValidationReport ring_report;
};
ExtensionDoc extension_from_json(const json& doc);
json extension_to_json(const ExtensionDoc& ext);
std::string content_hash(const json& canonical_doc);

// cochain document: {"extension":"<hash>","degree":n,
//                    "values":[{"args":[g...],"value":<element>},...]}
Cochain cochain_from_json(const CochainComplex& cx, const ProductRing& r, const json& doc,
                          const std::string& expected_hash);
json cochain_to_json(const CochainComplex& cx, const ProductRing& r, const Cochain& f,
                     const std::string& hash);

// psi document: {"extension":"<hash>","units":[{"g":i,"value":<element>},...]}
PsiFamily psi_from_json(const GaloisExtension& ext, const ProductRing& r, const json& doc,
                        const std::string& expected_hash);

// symbolic PicS document: components as idempotent elements (ring-backed) or a
// meet table, per-component divisor lists, eps matrices, alpha* group maps
struct SymbolicPicsDoc {
  PicSMonoid monoid;
  std::optional<PicSAction> action;
  ValidationReport report;
};
SymbolicPicsDoc symbolic_pics_from_json(const ExtensionDoc& ext, const json& doc);

json report_to_json(const ValidationReport& rep);
json cohomology_to_json(const CochainComplex& cx, const ProductRing& r, const CohomologyGroup& h);
json sequence_report_to_json(const SequenceReport& rep);

}  // namespace pgx::io

#endif
