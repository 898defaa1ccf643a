#include "young_endo/cell_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "young_endo/parallel.hpp"

namespace young_endo {

namespace {

IntVec to_vector(const AlgebraElement& a, int n) {
    IntVec v(static_cast<size_t>(n), 0);
    for (const auto& [c, x] : a.coeffs) v[static_cast<size_t>(c)] = x;
    return v;
}

AlgebraElement from_vector(const IntVec& v) {
    AlgebraElement a;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) a.coeffs[static_cast<int>(i)] = v[i];
    return a;
}

IntRows identity_rows(int n) {
    IntRows out(static_cast<size_t>(n), IntVec(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return out;
}

// classes whose listed side equals the orbit
std::vector<int> classes_with_beta(const OrbitAlgebra& alg, int orbit) {
    std::vector<int> out;
    for (int c = 0; c < alg.class_count(); ++c)
        if (alg.classes()[static_cast<size_t>(c)].beta == orbit) out.push_back(c);
    return out;
}
std::vector<int> classes_with_alpha(const OrbitAlgebra& alg, int orbit) {
    std::vector<int> out;
    for (int c = 0; c < alg.class_count(); ++c)
        if (alg.classes()[static_cast<size_t>(c)].alpha == orbit) out.push_back(c);
    return out;
}

void add_layer_products(const OrbitAlgebra& alg, const StructureTable& table,
                        int xi_orbit, Lattice& into) {
    int n = alg.class_count();
    for (int ia : classes_with_beta(alg, xi_orbit))
        for (int ib : classes_with_alpha(alg, xi_orbit)) {
            const auto& row = table.products.at({ia, ib});
            IntVec v(static_cast<size_t>(n), 0);
            for (const auto& [c, cnt] : row) v[static_cast<size_t>(c)] = cnt;
            into.add_generator(std::move(v));
        }
}

std::vector<Partition> distinct_types_descending(const YoungSet& ys) {
    std::vector<Partition> types;
    for (const auto& t : ys.orbit_types)
        if (std::find(types.begin(), types.end(), t) == types.end())
            types.push_back(t);
    std::sort(types.begin(), types.end(), [](const Partition& a, const Partition& b) {
        return compare_refined(a, b) > 0;
    });
    return types;
}

Lattice coordinate_lattice(int dim, const std::vector<int>& coords) {
    Lattice lat(dim);
    for (int c : coords) {
        IntVec v(static_cast<size_t>(dim), 0);
        v[static_cast<size_t>(c)] = 1;
        lat.add_generator(std::move(v));
    }
    return lat;
}

// column quotient of one chain layer: the span of classes feeding the layer's
// idempotent from the given output orbits, modulo the previous ideal
QuotientDecomposition layer_column_quotient(const OrbitAlgebra& alg,
                                            const IdealChain& chain, int layer,
                                            const std::vector<int>& column_classes) {
    int n = alg.class_count();
    Lattice big = coordinate_lattice(n, column_classes);
    Lattice small =
        layer > 0 ? intersect_coordinate_span(chain.ideals[static_cast<size_t>(layer - 1)],
                                              column_classes)
                  : Lattice(n);
    return quotient_basis(big, small);
}

} // namespace

int IdealChain::layer_of(const Partition& lambda) const {
    for (size_t k = 0; k < order.size(); ++k)
        if (order[k] == lambda) return static_cast<int>(k);
    return -1;
}

IdealChain build_ideal_chain(const OrbitAlgebra& alg, const StructureTable& table) {
    IdealChain chain;
    chain.order = distinct_types_descending(alg.omega());
    Lattice cur(alg.class_count());
    for (const auto& lambda : chain.order) {
        int o = alg.orbit_of_type(lambda);
        chain.xi_orbits.push_back(o);
        add_layer_products(alg, table, o, cur);
        chain.ideals.push_back(cur);
    }
    return chain;
}

Lattice ideal_lattice(const OrbitAlgebra& alg, const StructureTable& table,
                      const SupportSet& sigma) {
    Lattice out(alg.class_count());
    for (const auto& lambda : sigma) {
        int o = alg.orbit_of_type(lambda);
        if (o < 0) continue;
        add_layer_products(alg, table, o, out);
    }
    return out;
}

bool purity_check(const OrbitAlgebra& alg, const StructureTable& table,
                  const SupportSet& sigma) {
    int n = alg.omega().n;
    for (const auto& mu : sigma)
        if (mu.sum() != n)
            throw size_mismatch_error("support element does not partition n");
    for (const auto& mu : sigma)
        for (const auto& lambda : partitions_of(n))
            if (dominates(lambda, mu) && sigma.count(lambda) == 0)
                throw not_cosaturated_error("support set is not upward-closed at " +
                                            lambda.to_string());
    return is_pure(ideal_lattice(alg, table, sigma));
}

bool factorization_check(const OrbitAlgebra& alg, const StructureTable& table,
                         const IdealChain& chain, int layer) {
    if (!is_cosaturated(alg.omega()))
        throw not_cosaturated_error("factorization needs a cosaturated Young set");
    int n = alg.class_count();
    int o = chain.xi_orbits[static_cast<size_t>(layer)];

    auto colq = layer_column_quotient(alg, chain, layer, classes_with_beta(alg, o));
    if (!colq.is_free()) return false;
    auto rowq = layer_column_quotient(alg, chain, layer, classes_with_alpha(alg, o));
    if (!rowq.is_free()) return false;

    const Lattice& ideal = chain.ideals[static_cast<size_t>(layer)];
    Lattice prev = layer > 0 ? chain.ideals[static_cast<size_t>(layer - 1)] : Lattice(n);
    auto section = quotient_basis(ideal, prev);
    if (!section.is_free()) return false;
    if (section.free_rank() !=
        static_cast<int>(colq.free_lifts.size()) * static_cast<int>(rowq.free_lifts.size()))
        return false;

    // the pairwise products of column and row lifts must regenerate the layer
    Lattice regen = prev;
    for (const auto& cx : colq.free_lifts)
        for (const auto& cy : rowq.free_lifts) {
            auto prod = multiply(table, from_vector(cx), from_vector(cy));
            regen.add_generator(to_vector(prod, n));
        }
    return regen == ideal;
}

bool factorization_check(const OrbitAlgebra& alg, const StructureTable& table,
                         const Partition& lambda) {
    if (!is_cosaturated(alg.omega()))
        throw not_cosaturated_error("factorization needs a cosaturated Young set");
    auto chain = build_ideal_chain(alg, table);
    int layer = chain.layer_of(lambda);
    if (layer < 0) throw domain_error("type " + lambda.to_string() + " has no orbit here");
    return factorization_check(alg, table, chain, layer);
}

long long CellDatum::cell_count() const {
    long long total = 0;
    for (const auto& layer : layers) {
        long long n = static_cast<long long>(layer.lifts.size());
        total += n * n;
    }
    return total;
}

CellBundle build_cell_bundle(const YoungSet& gamma,
                             const std::optional<YoungSet>& omega_override,
                             long long max_points) {
    YoungSet omega = omega_override ? *omega_override : cosaturated_closure(gamma);
    if (omega_override && !is_cosaturated(omega))
        throw not_cosaturated_error("the override Young set must be cosaturated");

    CellBundle bundle{OrbitAlgebra::build(omega, max_points), {}, {gamma, omega, {}, {}, {}, {}, {}}};
    const OrbitAlgebra& alg = bundle.algebra;
    bundle.table = build_structure_table(alg, thread_budget());
    CellDatum& datum = bundle.datum;

    // match gamma's orbits (with multiplicity) to orbits of omega
    std::vector<bool> used(static_cast<size_t>(alg.orbit_count()), false);
    for (const auto& t : gamma.orbit_types) {
        int found = -1;
        for (int a = 0; a < alg.orbit_count() && found < 0; ++a)
            if (!used[static_cast<size_t>(a)] && alg.orbit_type(a) == t) found = a;
        if (found < 0)
            throw orbit_not_in_omega_error("orbit of type " + t.to_string() +
                                           " is not available");
        used[static_cast<size_t>(found)] = true;
        datum.gamma_orbits.push_back(found);
    }
    std::sort(datum.gamma_orbits.begin(), datum.gamma_orbits.end());
    for (int a : datum.gamma_orbits) add_scaled(datum.e, alg.xi_orbit(a), 1);

    std::set<int> in_gamma(datum.gamma_orbits.begin(), datum.gamma_orbits.end());
    for (int c = 0; c < alg.class_count(); ++c) {
        const auto& cls = alg.classes()[static_cast<size_t>(c)];
        if (in_gamma.count(cls.alpha) && in_gamma.count(cls.beta))
            datum.ese_classes.push_back(c);
    }

    datum.chain = build_ideal_chain(alg, bundle.table);

    for (size_t k = 0; k < datum.chain.order.size(); ++k) {
        CellLayer layer;
        layer.lambda = datum.chain.order[k];
        layer.xi_orbit = datum.chain.xi_orbits[k];

        for (int a : datum.gamma_orbits)
            layer.expected_rank += kostka(layer.lambda, alg.orbit_type(a));

        std::vector<int> columns;
        for (int c : classes_with_beta(alg, layer.xi_orbit))
            if (in_gamma.count(alg.classes()[static_cast<size_t>(c)].alpha))
                columns.push_back(c);

        auto q = layer_column_quotient(alg, datum.chain, static_cast<int>(k), columns);
        if (!q.is_free()) {
            std::ostringstream msg;
            msg << "torsion divisor " << q.torsion_divisors.front()
                << " in the section at " << layer.lambda.to_string();
            throw domain_error(msg.str());
        }
        if (static_cast<long long>(q.free_lifts.size()) != layer.expected_rank) {
            std::ostringstream msg;
            msg << "section at " << layer.lambda.to_string() << " has rank "
                << q.free_lifts.size() << ", Kostka count " << layer.expected_rank;
            throw domain_error(msg.str());
        }
        for (const auto& lift : q.free_lifts) layer.lifts.push_back(from_vector(lift));
        layer.cells.resize(layer.lifts.size());
        for (size_t t = 0; t < layer.lifts.size(); ++t) {
            for (size_t u = 0; u < layer.lifts.size(); ++u)
                layer.cells[t].push_back(
                    multiply(bundle.table, layer.lifts[t], alg.star(layer.lifts[u])));
        }
        datum.layers.push_back(std::move(layer));
    }
    return bundle;
}

bool VerificationReport::all_ok() const {
    if (!axioms_ok()) return false;
    for (const auto& [_, ok] : section_free)
        if (!ok) return false;
    for (const auto& [_, ok] : purity)
        if (!ok) return false;
    for (const auto& [_, ok] : factorization)
        if (!ok) return false;
    return true;
}

VerificationReport verify_cell_datum(const CellDatum& datum, const OrbitAlgebra& alg,
                                     const StructureTable& table) {
    VerificationReport report;
    const size_t kMaxNotes = 12;
    auto note = [&](const std::string& s) {
        if (report.failures.size() < kMaxNotes) report.failures.push_back(s);
    };

    int n = alg.class_count();
    int edim = static_cast<int>(datum.ese_classes.size());
    std::vector<int> epos(static_cast<size_t>(n), -1);
    for (int i = 0; i < edim; ++i)
        epos[static_cast<size_t>(datum.ese_classes[static_cast<size_t>(i)])] = i;

    auto restrict_elem = [&](const AlgebraElement& a, bool& inside) {
        IntVec v(static_cast<size_t>(edim), 0);
        inside = true;
        for (const auto& [c, x] : a.coeffs) {
            int p = epos[static_cast<size_t>(c)];
            if (p < 0) {
                inside = false;
                continue;
            }
            v[static_cast<size_t>(p)] = x;
        }
        return v;
    };

    // flatten cells: slot(k, t, u) -> row index
    IntRows rows;
    std::vector<size_t> base(datum.layers.size(), 0);
    bool support_ok = true;
    for (size_t k = 0; k < datum.layers.size(); ++k) {
        base[k] = rows.size();
        const auto& layer = datum.layers[k];
        for (size_t t = 0; t < layer.cells.size(); ++t)
            for (size_t u = 0; u < layer.cells[t].size(); ++u) {
                bool inside = false;
                rows.push_back(restrict_elem(layer.cells[t][u], inside));
                if (!inside) {
                    support_ok = false;
                    note("cell " + layer.lambda.to_string() + "[" + std::to_string(t) +
                         "][" + std::to_string(u) + "] has support outside the truncation");
                }
            }
    }

    report.c1_basis = support_ok && static_cast<int>(rows.size()) == edim &&
                      Lattice::from_rows(edim, rows).basis() == identity_rows(edim);
    if (!report.c1_basis && support_ok && static_cast<int>(rows.size()) != edim)
        note("cell count " + std::to_string(rows.size()) + " differs from the truncated rank " +
             std::to_string(edim));
    else if (!report.c1_basis && support_ok)
        note("cells do not form a basis of the truncated algebra");

    report.c2_star = true;
    for (const auto& layer : datum.layers)
        for (size_t t = 0; t < layer.cells.size(); ++t)
            for (size_t u = 0; u < layer.cells[t].size(); ++u)
                if (!(alg.star(layer.cells[t][u]) == layer.cells[u][t])) {
                    if (report.c2_star)
                        note("star of cell " + layer.lambda.to_string() + "[" +
                             std::to_string(t) + "][" + std::to_string(u) +
                             "] is not the transposed cell");
                    report.c2_star = false;
                }

    if (report.c1_basis) {
        report.c3_triangular = true;
        RowSolver solver(rows, edim);
        for (size_t k = 0; k < datum.layers.size(); ++k) {
            const auto& layer = datum.layers[k];
            size_t nk = layer.lifts.size();
            if (nk == 0) continue;
            for (int g : datum.ese_classes) {
                AlgebraElement gen = alg.basis_element(g);
                for (size_t t = 0; t < nk && report.c3_triangular; ++t) {
                    IntVec r(nk, 0);
                    for (size_t u = 0; u < nk; ++u) {
                        auto prod = multiply(table, gen, layer.cells[t][u]);
                        bool inside = false;
                        IntVec v = restrict_elem(prod, inside);
                        auto coeffs = inside ? solver.solve(v) : std::nullopt;
                        if (!coeffs) {
                            note("left action of class " + std::to_string(g) +
                                 " leaves the truncated span at " + layer.lambda.to_string());
                            report.c3_triangular = false;
                            break;
                        }
                        // layers above lambda may absorb anything; the lambda
                        // layer must be concentrated in column u with
                        // u-independent coefficients; later layers must vanish
                        bool bad = false;
                        for (size_t j = k; j < datum.layers.size() && !bad; ++j) {
                            size_t nj = datum.layers[j].lifts.size();
                            for (size_t tt = 0; tt < nj && !bad; ++tt)
                                for (size_t uu = 0; uu < nj && !bad; ++uu) {
                                    const Int& c = (*coeffs)[base[j] + tt * nj + uu];
                                    if (j > k) {
                                        if (c != 0) bad = true;
                                    } else if (uu != u) {
                                        if (c != 0) bad = true;
                                    } else if (u == 0) {
                                        r[tt] = c;
                                    } else if (c != r[tt]) {
                                        bad = true;
                                    }
                                }
                        }
                        if (bad) {
                            note("triangularity fails for class " + std::to_string(g) +
                                 " at " + layer.lambda.to_string() + "[" + std::to_string(t) +
                                 "][" + std::to_string(u) + "]");
                            report.c3_triangular = false;
                            break;
                        }
                    }
                }
                if (!report.c3_triangular) break;
            }
            if (!report.c3_triangular) break;
        }
    } else {
        report.c3_triangular = false;
        note("triangularity not evaluated: the cells are not a basis");
    }

    // chain-level facts, independent of the cell family
    const auto& chain = datum.chain;
    bool cosaturated = is_cosaturated(alg.omega());
    for (size_t k = 0; k < chain.order.size(); ++k) {
        Lattice prev = k > 0 ? chain.ideals[k - 1] : Lattice(n);
        auto q = quotient_basis(chain.ideals[k], prev);
        report.section_free.emplace_back(chain.order[k], q.is_free());
        if (!q.is_free())
            note("chain section at " + chain.order[k].to_string() + " has torsion");
        bool pure = is_pure(chain.ideals[k]);
        report.purity.emplace_back(chain.order[k], pure);
        if (!pure)
            note("ideal through " + chain.order[k].to_string() + " is not pure");
        if (cosaturated) {
            bool f = factorization_check(alg, table, chain, static_cast<int>(k));
            report.factorization.emplace_back(chain.order[k], f);
            if (!f)
                note("factorization fails at " + chain.order[k].to_string());
        }
    }
    return report;
}

} // namespace young_endo
