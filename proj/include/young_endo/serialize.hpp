#pragma once

#include <string>
#include <vector>

#include "young_endo/cell_datum.hpp"
#include "young_endo/classify.hpp"
#include "young_endo/endo_algebra.hpp"

namespace young_endo {

// JSON dump of a built algebra with its multiplication table.  Classes are
// listed in canonical order; products as sparse (left, right, [[class,
// count], ...]) triples.
std::string algebra_to_json(const OrbitAlgebra& alg, const StructureTable& table);

// The loadable half of a dump: enough to name classes and multiply.
struct LoadedAlgebra {
    int n = 0;
    std::vector<Partition> orbit_types;
    std::vector<OrbitPairClass> classes;
    StructureTable table;
};

// Parse a dump back.  Throws domain_error on malformed input.
LoadedAlgebra algebra_from_json(const std::string& text);

std::string verdict_to_json(const YoungSet& gamma, int p, const QHVerdict& v);

// Cell layers with their basis vectors, coefficients as decimal strings.
std::string cell_datum_to_json(const CellDatum& datum);

// Plain-text verification report: one line per axiom and chain fact, then
// the layer ranks and any failure notes.
std::string report_to_text(const CellDatum& datum, const VerificationReport& report);

} // namespace young_endo
