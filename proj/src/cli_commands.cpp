#include "young_endo/cli_commands.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "young_endo/cell_datum.hpp"
#include "young_endo/classify.hpp"
#include "young_endo/errors.hpp"
#include "young_endo/parallel.hpp"
#include "young_endo/serialize.hpp"

namespace young_endo {

using nlohmann::json;

namespace {

struct Flags {
    int n = 0;
    int r = 0;
    int p = 0;
    std::string support;
    std::string lambda;
    std::string mu;
    std::string tau;
    std::string dump_path;
    std::string family = "tensor";
    std::string format = "csv";
    long long max_points = kDefaultMaxPoints;
    int n_max = 0;
    int r_max = 0;
    bool both = false;
    bool verify = false;
};

void cmd_classify(const Flags& f, std::ostream& out) {
    auto gamma = YoungSet::parse(f.n, f.support);
    out << verdict_to_json(gamma, f.p, is_quasi_hereditary(gamma, f.p)) << "\n";
}

void cmd_classify_tensor(const Flags& f, std::ostream& out) {
    json j{{"n", f.n}, {"r", f.r}, {"p", f.p}};
    bool closed = tensor_qh_closed_form(f.n, f.r, f.p);
    j["closed_form"] = closed;
    if (f.both) {
        bool generic =
            is_quasi_hereditary(tensor_young_set(f.n, f.r), f.p).quasi_hereditary;
        j["generic"] = generic;
        j["agree"] = generic == closed;
    }
    out << j.dump(2) << "\n";
}

void cmd_partition_algebra(const Flags& f, std::ostream& out) {
    json j{{"r", f.r},
           {"n", f.n},
           {"p", f.p},
           {"quasi_hereditary", partition_algebra_qh(f.r, f.n, f.p)},
           {"regime",
            "closed form; the tensor criterion matches it empirically for "
            "symmetric groups of degree N = n + p*s with N >= 2r+1"}};
    out << j.dump(2) << "\n";
}

void cmd_pdom(const Flags& f, std::ostream& out) {
    auto mu = Partition::parse(f.mu);
    auto tau = Partition::parse(f.tau);
    auto witness = p_dominates(mu, tau, f.p);
    json j{{"mu", mu.to_string()},
           {"tau", tau.to_string()},
           {"p", f.p},
           {"p_dominates", witness.has_value()}};
    if (witness) {
        j["digits"] = json::array();
        for (const auto& row : witness->digits) j["digits"].push_back(row);
    }
    out << j.dump(2) << "\n";
}

void cmd_kostka(const Flags& f, std::ostream& out) {
    out << kostka(Partition::parse(f.lambda), Partition::parse(f.mu)) << "\n";
}

void cmd_orbits(const Flags& f, std::ostream& out) {
    auto ys = YoungSet::parse(f.n, f.support);
    json j{{"n", f.n}, {"support", ys.to_string()}};
    j["orbits"] = json::array();
    long long total = 0;
    for (const auto& type : ys.orbit_types) {
        long long points = orbit_size(f.n, type, f.max_points);
        total += points;
        j["orbits"].push_back(
            {{"type", type.parts()}, {"points", points}});
    }
    j["total_points"] = total;
    j["cosaturated"] = is_cosaturated(ys);
    out << j.dump(2) << "\n";
}

void cmd_construct(const Flags& f, std::ostream& out) {
    auto ys = YoungSet::parse(f.n, f.support);
    auto alg = OrbitAlgebra::build(ys, f.max_points);
    auto table = build_structure_table(alg, thread_budget());
    auto text = algebra_to_json(alg, table);
    if (f.dump_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream file(f.dump_path);
    if (!file) throw domain_error("cannot open " + f.dump_path + " for writing");
    file << text << "\n";
    json j{{"n", f.n},
           {"support", ys.to_string()},
           {"classes", alg.class_count()},
           {"points", alg.point_total()},
           {"dumped", f.dump_path}};
    out << j.dump(2) << "\n";
}

int cmd_cell(const Flags& f, std::ostream& out) {
    auto gamma = YoungSet::parse(f.n, f.support);
    auto bundle = build_cell_bundle(gamma, std::nullopt, f.max_points);
    if (!f.dump_path.empty()) {
        std::ofstream file(f.dump_path);
        if (!file) throw domain_error("cannot open " + f.dump_path + " for writing");
        file << cell_datum_to_json(bundle.datum) << "\n";
    }
    if (!f.verify) {
        VerificationReport blank;
        out << report_to_text(bundle.datum, blank);
        return 0;
    }
    auto report = verify_cell_datum(bundle.datum, bundle.algebra, bundle.table);
    out << report_to_text(bundle.datum, report);
    return report.all_ok() ? 0 : 1;
}

void cmd_table(const Flags& f, std::ostream& out) {
    if (f.family != "tensor")
        throw domain_error("unknown table family: " + f.family);
    if (f.format != "csv" && f.format != "json")
        throw domain_error("unknown table format: " + f.format);
    if (f.n_max < 1 || f.r_max < 1)
        throw domain_error("table needs --n-max >= 1 and --r-max >= 1");
    struct Row {
        int n, r;
        bool generic, closed;
    };
    std::vector<Row> rows(static_cast<size_t>(f.n_max) * f.r_max);
    int cells = static_cast<int>(rows.size());
    int threads = thread_budget();
    auto fill = [&](int idx) {
        int n = idx / f.r_max + 1;
        int r = idx % f.r_max + 1;
        bool generic =
            is_quasi_hereditary(tensor_young_set(n, r), f.p).quasi_hereditary;
        rows[static_cast<size_t>(idx)] =
            {n, r, generic, tensor_qh_closed_form(n, r, f.p)};
    };
#ifdef _OPENMP
    if (threads != 1) {
        int want = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(want)
        for (int idx = 0; idx < cells; ++idx) fill(idx);
    } else
#endif
    {
        for (int idx = 0; idx < cells; ++idx) fill(idx);
    }
    // output in input order regardless of completion order
    if (f.format == "csv") {
        out << "n,r,p,generic,closed_form,agree\n";
        for (const auto& row : rows)
            out << row.n << ',' << row.r << ',' << f.p << ','
                << (row.generic ? "true" : "false") << ','
                << (row.closed ? "true" : "false") << ','
                << (row.generic == row.closed ? "true" : "false") << "\n";
    } else {
        json j = json::array();
        for (const auto& row : rows)
            j.push_back({{"n", row.n},
                         {"r", row.r},
                         {"p", f.p},
                         {"generic", row.generic},
                         {"closed_form", row.closed},
                         {"agree", row.generic == row.closed}});
        out << j.dump(2) << "\n";
    }
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"Endomorphism algebras of Young permutation modules: "
                 "construction, cellular structure, quasi-heredity"};
    app.require_subcommand(1);
    Flags f;

    auto* classify = app.add_subcommand("classify", "Quasi-heredity of a truncation");
    classify->add_option("--n", f.n, "degree of the symmetric group")->required();
    classify->add_option("--support", f.support, "orbit types, e.g. \"2,1;3\"")
        ->required();
    classify->add_option("--p", f.p, "characteristic (0 or a prime)")->required();

    auto* tensor = app.add_subcommand("classify-tensor",
                                      "Quasi-heredity for the tensor-power family");
    tensor->add_option("--n", f.n, "number of points")->required();
    tensor->add_option("--r", f.r, "tensor exponent")->required();
    tensor->add_option("--p", f.p, "characteristic")->required();
    tensor->add_flag("--both", f.both, "also run the generic computation");

    auto* palg = app.add_subcommand("partition-algebra",
                                    "Quasi-heredity criterion for partition algebras");
    palg->add_option("--r", f.r, "diagram degree")->required();
    palg->add_option("--n", f.n, "integer parameter")->required();
    palg->add_option("--p", f.p, "characteristic")->required();

    auto* pdom = app.add_subcommand("pdom", "Decide p-dominance with a certificate");
    pdom->add_option("--mu", f.mu, "dominating candidate, e.g. \"3,1\"")->required();
    pdom->add_option("--tau", f.tau, "dominated candidate")->required();
    pdom->add_option("--p", f.p, "prime base")->required();

    auto* kost = app.add_subcommand("kostka", "Count semistandard tableaux");
    kost->add_option("--lambda", f.lambda, "shape")->required();
    kost->add_option("--mu", f.mu, "content")->required();

    auto* orbits = app.add_subcommand("orbits", "Orbit sizes of a Young set");
    orbits->add_option("--n", f.n, "degree")->required();
    orbits->add_option("--support", f.support, "orbit types")->required();
    orbits->add_option("--max-points", f.max_points, "size guard");

    auto* construct = app.add_subcommand("construct",
                                         "Build an algebra and its table");
    construct->add_option("--n", f.n, "degree")->required();
    construct->add_option("--support", f.support, "orbit types")->required();
    construct->add_option("--dump", f.dump_path, "write the JSON dump here");
    construct->add_option("--max-points", f.max_points, "size guard");

    auto* cell = app.add_subcommand("cell", "Cell structure of a truncation");
    cell->add_option("--n", f.n, "degree")->required();
    cell->add_option("--support", f.support, "truncating orbit types")->required();
    cell->add_flag("--verify", f.verify, "check the axioms and chain facts");
    cell->add_option("--dump", f.dump_path, "write the cell data as JSON here");
    cell->add_option("--max-points", f.max_points, "size guard");

    auto* table = app.add_subcommand("table", "Batch classification table");
    table->add_option("--family", f.family, "table family (tensor)");
    table->add_option("--p", f.p, "characteristic")->required();
    table->add_option("--n-max", f.n_max, "largest n")->required();
    table->add_option("--r-max", f.r_max, "largest r")->required();
    table->add_option("--format", f.format, "csv or json");

    std::vector<const char*> argv;
    argv.push_back("young-endo");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify->parsed()) cmd_classify(f, out);
        else if (tensor->parsed()) cmd_classify_tensor(f, out);
        else if (palg->parsed()) cmd_partition_algebra(f, out);
        else if (pdom->parsed()) cmd_pdom(f, out);
        else if (kost->parsed()) cmd_kostka(f, out);
        else if (orbits->parsed()) cmd_orbits(f, out);
        else if (construct->parsed()) cmd_construct(f, out);
        else if (cell->parsed()) return cmd_cell(f, out);
        else if (table->parsed()) cmd_table(f, out);
    } catch (const size_limit_exceeded_error& e) {
        err << "size limit: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace young_endo
