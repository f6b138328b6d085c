#pragma once
// Serialization: rationals as "num/den" strings, lattices and cocycles as
// JSON, torsion certificates and classification tables as JSON or TSV.

#include "crys/catalog.hpp"

#include <string>

namespace crys {

std::string rat_string(const Rat& r);
Rat rat_parse(const std::string& text);  // accepts "3", "-1/2"

std::string group_string(const PGroup& G);
std::string element_string(const PGroup& G, const GroupElement& g);

// {"descriptor", "group", "rank", "action": {gen: [[..]]}, "cocycles": {...}}
std::string entry_json(const CatalogEntry& e);
std::string entry_text(const CatalogEntry& e);

// {"descriptor", "h1": {"invariant_factors", "order"}, "representatives"}
std::string h1_json(const std::string& descriptor, const CohomologyResult& res);
std::string h1_text(const std::string& descriptor, const CohomologyResult& res);

// {"verdict", "subgroups": [{"generator", "restricted_class_vanishes",
//  "witness"?, "restricted_class"?}], "witness"?}
std::string certificate_json(const CrysGroup& C, const TorsionCertificate& cert);
std::string certificate_text(const CrysGroup& C, const TorsionCertificate& cert);

// Accepts {"a": [...], "b": [...]} with rationals as strings or integers;
// "b" only for klein point groups.  Values are lattice coordinates.
// Throws std::invalid_argument when shapes or the cocycle identity fail.
Cocycle cocycle_from_json(LatticePtr L, const std::string& text);

std::string theorem2_json(const Theorem2Report& rep);
std::string theorem2_tsv(const Theorem2Report& rep);
std::string theorem2_text(const Theorem2Report& rep);

std::string theorem3_json(const std::vector<Theorem3Row>& rows);
std::string theorem3_tsv(const std::vector<Theorem3Row>& rows);
std::string theorem3_text(const std::vector<Theorem3Row>& rows);

}  // namespace crys
