#include "young_endo/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "young_endo/errors.hpp"

namespace young_endo {

using nlohmann::json;

namespace {
json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("partition entry is not an array");
    return Partition(j.get<std::vector<int>>());
}

json element_to_json(const AlgebraElement& a) {
    json out = json::array();
    for (const auto& [cls, coeff] : a.coeffs)
        out.push_back(json::array({cls, coeff.str()}));
    return out;
}
} // namespace

std::string algebra_to_json(const OrbitAlgebra& alg, const StructureTable& table) {
    json j;
    j["n"] = alg.omega().n;
    j["orbit_types"] = json::array();
    for (const auto& type : alg.omega().orbit_types)
        j["orbit_types"].push_back(partition_to_json(type));
    j["classes"] = json::array();
    for (const auto& cls : alg.classes())
        j["classes"].push_back(
            {{"alpha", cls.alpha}, {"beta", cls.beta}, {"matrix", cls.intersection}});
    j["products"] = json::array();
    for (const auto& [key, terms] : table.products) {
        json entry = json::array({key.first, key.second, json::array()});
        for (const auto& [cls, count] : terms)
            entry[2].push_back(json::array({cls, count}));
        j["products"].push_back(std::move(entry));
    }
    return j.dump(2);
}

LoadedAlgebra algebra_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed dump: ") + e.what());
    }
    try {
        LoadedAlgebra loaded;
        loaded.n = j.at("n").get<int>();
        for (const auto& entry : j.at("orbit_types"))
            loaded.orbit_types.push_back(partition_from_json(entry));
        for (const auto& entry : j.at("classes")) {
            OrbitPairClass cls;
            cls.alpha = entry.at("alpha").get<int>();
            cls.beta = entry.at("beta").get<int>();
            cls.intersection = entry.at("matrix").get<IntMatrix>();
            loaded.classes.push_back(std::move(cls));
        }
        for (const auto& entry : j.at("products")) {
            auto& terms = loaded.table.products[{entry.at(0).get<int>(),
                                                entry.at(1).get<int>()}];
            for (const auto& term : entry.at(2))
                terms.emplace_back(term.at(0).get<int>(),
                                   term.at(1).get<long long>());
        }
        return loaded;
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed dump: ") + e.what());
    }
}

std::string verdict_to_json(const YoungSet& gamma, int p, const QHVerdict& v) {
    json j;
    j["n"] = gamma.n;
    j["support"] = gamma.to_string();
    j["p"] = p;
    j["quasi_hereditary"] = v.quasi_hereditary;
    j["zeta_dom"] = json::array();
    for (const auto& mu : v.zeta_dom) j["zeta_dom"].push_back(partition_to_json(mu));
    j["zeta_pdom"] = json::array();
    for (const auto& mu : v.zeta_pdom) j["zeta_pdom"].push_back(partition_to_json(mu));
    j["witness"] = v.witness ? partition_to_json(*v.witness) : json(nullptr);
    return j.dump(2);
}

std::string cell_datum_to_json(const CellDatum& datum) {
    json j;
    j["n"] = datum.omega.n;
    j["gamma"] = datum.gamma.to_string();
    j["omega"] = datum.omega.to_string();
    j["cell_count"] = datum.cell_count();
    j["layers"] = json::array();
    for (const auto& layer : datum.layers) {
        json entry;
        entry["lambda"] = partition_to_json(layer.lambda);
        entry["rank"] = layer.lifts.size();
        entry["lifts"] = json::array();
        for (const auto& lift : layer.lifts)
            entry["lifts"].push_back(element_to_json(lift));
        entry["cells"] = json::array();
        for (const auto& row : layer.cells) {
            json jrow = json::array();
            for (const auto& cell : row) jrow.push_back(element_to_json(cell));
            entry["cells"].push_back(std::move(jrow));
        }
        j["layers"].push_back(std::move(entry));
    }
    return j.dump(2);
}

std::string report_to_text(const CellDatum& datum, const VerificationReport& report) {
    auto line = [](bool ok) { return ok ? "pass" : "FAIL"; };
    auto all = [&](const std::vector<std::pair<Partition, bool>>& v) {
        for (const auto& [lambda, ok] : v)
            if (!ok) return false;
        return true;
    };
    std::ostringstream out;
    out << "C1 " << line(report.c1_basis) << "\n";
    out << "C2 " << line(report.c2_star) << "\n";
    out << "C3 " << line(report.c3_triangular) << "\n";
    out << "sections " << line(all(report.section_free)) << "\n";
    out << "purity " << line(all(report.purity)) << "\n";
    if (report.factorization.empty())
        out << "factorization skipped\n";
    else
        out << "factorization " << line(all(report.factorization)) << "\n";
    out << "cells ";
    bool first = true;
    for (const auto& layer : datum.layers) {
        if (layer.lifts.empty()) continue;
        if (!first) out << ", ";
        out << "(" << layer.lambda.to_string() << "):" << layer.lifts.size();
        first = false;
    }
    out << "\n";
    out << "total " << datum.cell_count() << "\n";
    for (const auto& note : report.failures) out << "note: " << note << "\n";
    return out.str();
}

} // namespace young_endo
