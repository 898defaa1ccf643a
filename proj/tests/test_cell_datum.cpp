#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "young_endo/cell_datum.hpp"

using namespace young_endo;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::vector<YoungSet> all_subset_sets(int n) {
    auto pars = partitions_of(n);
    std::vector<YoungSet> out;
    for (unsigned mask = 1; mask < (1u << pars.size()); ++mask) {
        std::vector<Partition> types;
        for (size_t i = 0; i < pars.size(); ++i)
            if (mask & (1u << i)) types.push_back(pars[i]);
        out.emplace_back(n, std::move(types));
    }
    return out;
}

long long squared_rank_sum(const CellDatum& datum) {
    long long total = 0;
    for (const auto& layer : datum.layers) {
        long long k = static_cast<long long>(layer.lifts.size());
        total += k * k;
    }
    return total;
}
} // namespace

TEST_CASE("smallest truncation: one orbit of column type in Sym(2)") {
    auto bundle = build_cell_bundle(YoungSet(2, {P({1, 1})}));
    const auto& datum = bundle.datum;
    CHECK(datum.omega.orbit_types == std::vector<Partition>{P({1, 1}), P({2})});
    REQUIRE(datum.layers.size() == 2);
    CHECK(datum.layers[0].lambda == P({2}));
    CHECK(datum.layers[1].lambda == P({1, 1}));
    CHECK(datum.layers[0].lifts.size() == 1);
    CHECK(datum.layers[1].lifts.size() == 1);
    CHECK(datum.cell_count() == 2);
    CHECK(datum.ese_classes.size() == 2);

    auto report = verify_cell_datum(datum, bundle.algebra, bundle.table);
    CHECK(report.c1_basis);
    CHECK(report.c2_star);
    CHECK(report.c3_triangular);
    CHECK(report.all_ok());
    CHECK(report.failures.empty());
}

TEST_CASE("two-orbit truncations of Sym(2) and Sym(3)") {
    auto b2 = build_cell_bundle(YoungSet(2, {P({1, 1}), P({2})}));
    CHECK(b2.datum.cell_count() == 5);
    CHECK(b2.datum.ese_classes.size() == 5);
    CHECK(verify_cell_datum(b2.datum, b2.algebra, b2.table).all_ok());

    auto b3 = build_cell_bundle(YoungSet(3, {P({2, 1}), P({3})}));
    REQUIRE(b3.datum.layers.size() == 2);
    CHECK(b3.datum.layers[0].lambda == P({3}));
    CHECK(b3.datum.layers[0].lifts.size() == 2);
    CHECK(b3.datum.layers[1].lifts.size() == 1);
    CHECK(b3.datum.cell_count() == 5);
    auto report = verify_cell_datum(b3.datum, b3.algebra, b3.table);
    CHECK(report.all_ok());
    for (const auto& [lambda, ok] : report.factorization) CHECK(ok);
}

TEST_CASE("doubled orbit type: truncation with multiplicity") {
    auto bundle = build_cell_bundle(YoungSet(3, {P({2, 1}), P({2, 1})}));
    const auto& datum = bundle.datum;
    CHECK(datum.gamma_orbits.size() == 2);
    REQUIRE(datum.layers.size() == 2);
    CHECK(datum.layers[0].lifts.size() == 2); // two copies contribute one each
    CHECK(datum.layers[1].lifts.size() == 2);
    CHECK(datum.cell_count() == 8);
    CHECK(datum.ese_classes.size() == 8);
    CHECK(verify_cell_datum(datum, bundle.algebra, bundle.table).all_ok());
}

TEST_CASE("every support over n <= 4 yields a verified cell structure") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& ys : all_subset_sets(n)) {
            CAPTURE(ys.to_string());
            auto bundle = build_cell_bundle(ys);
            const auto& datum = bundle.datum;
            CHECK(datum.cell_count() == static_cast<long long>(datum.ese_classes.size()));
            CHECK(datum.cell_count() == squared_rank_sum(datum));

            // layer ranks match the multiplicity formula, vanishing outside
            // the dominance closure of the support
            auto closure = upward_closure_dominance(support(ys));
            long long positive = 0;
            for (const auto& layer : datum.layers) {
                if (!layer.lifts.empty()) ++positive;
                CHECK(layer.lifts.empty() == (closure.count(layer.lambda) == 0));
            }
            CHECK(positive == static_cast<long long>(closure.size()));

            auto report = verify_cell_datum(datum, bundle.algebra, bundle.table);
            CHECK(report.all_ok());
            if (!report.all_ok())
                for (const auto& f : report.failures) MESSAGE(f);
            CHECK(report.section_free.size() == datum.layers.size());
            CHECK(report.purity.size() == datum.layers.size());
            CHECK(report.factorization.size() == datum.layers.size());
        }
}

TEST_CASE("enlarged ambient set: layers outside the closure carry nothing") {
    YoungSet gamma(4, {P({2, 2})});
    YoungSet omega(4, {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    auto bundle = build_cell_bundle(gamma, omega);
    const auto& datum = bundle.datum;
    REQUIRE(datum.layers.size() == 5);
    CHECK(datum.layers[0].lifts.size() == 1); // (4)
    CHECK(datum.layers[1].lifts.size() == 1); // (3,1)
    CHECK(datum.layers[2].lifts.size() == 1); // (2,2)
    CHECK(datum.layers[3].lifts.empty());     // (2,1,1): outside the closure
    CHECK(datum.layers[4].lifts.empty());
    CHECK(datum.layers[3].expected_rank == 0);
    CHECK(datum.cell_count() == 3);
    CHECK(datum.ese_classes.size() == 3);
    CHECK(verify_cell_datum(datum, bundle.algebra, bundle.table).all_ok());
}

TEST_CASE("ideal lattices: ranks, chain monotonicity, per-layer spans") {
    auto alg = OrbitAlgebra::build(YoungSet(2, {P({1, 1}), P({2})}));
    auto table = build_structure_table(alg, 1);
    CHECK(ideal_lattice(alg, table, {}).rank() == 0);
    CHECK(ideal_lattice(alg, table, {P({2}), P({1, 1})}).rank() == alg.class_count());
    CHECK(ideal_lattice(alg, table, {P({2})}).rank() == 4);
    // types absent from the Young set contribute nothing
    auto alg1 = OrbitAlgebra::build(YoungSet(3, {P({3})}));
    auto table1 = build_structure_table(alg1, 1);
    CHECK(ideal_lattice(alg1, table1, {P({2, 1})}).rank() == 0);

    for (const auto& ys : all_subset_sets(3)) {
        auto a = OrbitAlgebra::build(ys);
        auto t = build_structure_table(a, 1);
        auto chain = build_ideal_chain(a, t);
        REQUIRE(!chain.ideals.empty());
        CHECK(chain.ideals.back().rank() == a.class_count());
        for (size_t k = 0; k + 1 < chain.ideals.size(); ++k)
            CHECK(chain.ideals[k].is_sublattice_of(chain.ideals[k + 1]));
        // each step adds exactly the span of its own layer's products
        for (size_t k = 0; k < chain.ideals.size(); ++k) {
            Lattice rebuilt = k > 0 ? chain.ideals[k - 1] : Lattice(a.class_count());
            auto single = ideal_lattice(a, t, {chain.order[k]});
            for (const auto& row : single.basis()) rebuilt.add_generator(row);
            CHECK(rebuilt == chain.ideals[k]);
        }
    }
}

TEST_CASE("purity of cosaturated ideals; rejection of bad supports") {
    auto alg = OrbitAlgebra::build(YoungSet(2, {P({1, 1}), P({2})}));
    auto table = build_structure_table(alg, 1);
    CHECK(purity_check(alg, table, {P({2})}));
    CHECK(purity_check(alg, table, {P({2}), P({1, 1})}));
    CHECK(purity_check(alg, table, {}));
    CHECK_THROWS_AS(purity_check(alg, table, {P({1, 1})}), not_cosaturated_error);
    CHECK_THROWS_AS(purity_check(alg, table, {P({2, 1})}), size_mismatch_error);

    for (int n = 3; n <= 4; ++n) {
        auto pars = partitions_of(n);
        YoungSet full(n, pars);
        auto a = OrbitAlgebra::build(full);
        auto t = build_structure_table(a, 0);
        SupportSet sigma;
        CHECK(purity_check(a, t, sigma));
        for (const auto& lambda : pars) { // refined prefixes are cosaturated
            sigma.insert(lambda);
            CHECK(purity_check(a, t, sigma));
        }
    }
}

TEST_CASE("factorization through each layer of a cosaturated set") {
    for (const auto& ys : all_subset_sets(3)) {
        if (!is_cosaturated(ys)) continue;
        auto a = OrbitAlgebra::build(ys);
        auto t = build_structure_table(a, 1);
        for (const auto& lambda : support(ys)) CHECK(factorization_check(a, t, lambda));
    }
    auto open_alg = OrbitAlgebra::build(YoungSet(2, {P({1, 1})}));
    auto open_table = build_structure_table(open_alg, 1);
    CHECK_THROWS_AS(factorization_check(open_alg, open_table, P({1, 1})),
                    not_cosaturated_error);
    auto alg = OrbitAlgebra::build(YoungSet(2, {P({1, 1}), P({2})}));
    auto table = build_structure_table(alg, 1);
    CHECK_THROWS_AS(factorization_check(alg, table, P({2, 1})), domain_error);
}

TEST_CASE("skipped mediating types leave torsion in the raw prefix ideals") {
    // With (4) absent from the point set, the through-orbit ideal of
    // {(4),(3,1)} misses the channel through the one-row module: the all-ones
    // endomorphism of the (2,2)-orbit is only twice a through-(3,1)
    // composite.  The raw chain picks up a torsion section and the raw
    // prefix ideal is not pure.
    YoungSet ys(4, {P({3, 1}), P({2, 2})});
    auto alg = OrbitAlgebra::build(ys);
    auto table = build_structure_table(alg, 1);
    auto chain = build_ideal_chain(alg, table);
    REQUIRE(chain.ideals.size() == 2);
    auto q = quotient_basis(chain.ideals[1], chain.ideals[0]);
    CHECK_FALSE(q.is_free());
    CHECK(q.torsion_divisors == IntVec{2});
    CHECK_FALSE(purity_check(alg, table, {P({4}), P({3, 1})}));

    // Inside the closure's algebra the original set spans a corner block
    // with the same classes; intersecting the closure ideal with the corner
    // restores the missing channel and the defect disappears.
    auto closed_alg = OrbitAlgebra::build(cosaturated_closure(ys));
    auto closed_table = build_structure_table(closed_alg, 1);
    std::vector<int> corner;
    for (int c = 0; c < closed_alg.class_count(); ++c)
        if (closed_alg.classes()[static_cast<size_t>(c)].alpha < 2 &&
            closed_alg.classes()[static_cast<size_t>(c)].beta < 2)
            corner.push_back(c);
    REQUIRE(static_cast<int>(corner.size()) == alg.class_count());
    SupportSet upper{P({4}), P({3, 1})};
    auto upper_blocked = intersect_coordinate_span(
        ideal_lattice(closed_alg, closed_table, upper), corner);
    CHECK(is_pure(upper_blocked));
    SupportSet all_three = upper;
    all_three.insert(P({2, 2}));
    auto full_blocked = intersect_coordinate_span(
        ideal_lattice(closed_alg, closed_table, all_three), corner);
    CHECK(quotient_basis(full_blocked, upper_blocked).is_free());
    CHECK(full_blocked.rank() == alg.class_count());

    // The corner rows, reindexed to the small algebra, contain the raw ideal
    // with index exactly two and no rank gap.
    Lattice projected(alg.class_count());
    for (const auto& row : upper_blocked.basis()) {
        IntVec small(static_cast<size_t>(alg.class_count()));
        for (size_t i = 0; i < corner.size(); ++i)
            small[i] = row[static_cast<size_t>(corner[i])];
        projected.add_generator(small);
    }
    auto raw = ideal_lattice(alg, table, upper);
    CHECK(raw.is_sublattice_of(projected));
    auto gap = quotient_basis(projected, raw);
    CHECK(gap.free_rank() == 0);
    CHECK(gap.torsion_divisors == IntVec{2});
}

TEST_CASE("mutated cells are caught by the axioms") {
    auto bundle = build_cell_bundle(YoungSet(3, {P({2, 1}), P({3})}));

    // a raw +1 on one coordinate of one cell
    {
        auto mutated = bundle.datum;
        int cls = mutated.ese_classes.front();
        mutated.layers[0].cells[0][0].coeffs[cls] += 1;
        auto report = verify_cell_datum(mutated, bundle.algebra, bundle.table);
        CHECK_FALSE((report.c1_basis && report.c3_triangular));
        CHECK_FALSE(report.all_ok());
        CHECK_FALSE(report.failures.empty());
    }
    // basis-preserving mix of a later layer into the top one breaks triangularity
    {
        auto mutated = bundle.datum;
        add_scaled(mutated.layers[0].cells[0][0], mutated.layers[1].cells[0][0], 1);
        auto report = verify_cell_datum(mutated, bundle.algebra, bundle.table);
        CHECK(report.c1_basis);
        CHECK_FALSE(report.c3_triangular);
        CHECK_FALSE(report.all_ok());
    }
    // asymmetric mix inside one layer breaks the involution axiom
    {
        auto mutated = bundle.datum;
        add_scaled(mutated.layers[0].cells[0][1], mutated.layers[0].cells[0][0], 1);
        auto report = verify_cell_datum(mutated, bundle.algebra, bundle.table);
        CHECK_FALSE(report.c2_star);
        CHECK_FALSE(report.all_ok());
    }
}

TEST_CASE("builder failure modes") {
    CHECK_THROWS_AS(build_cell_bundle(YoungSet(2, {P({1, 1})}), YoungSet(2, {P({1, 1})})),
                    not_cosaturated_error);
    CHECK_THROWS_AS(build_cell_bundle(YoungSet(2, {P({1, 1})}), YoungSet(2, {P({2})})),
                    orbit_not_in_omega_error);
    CHECK_THROWS_AS(build_cell_bundle(YoungSet(20, {P(std::vector<int>(20, 1))})),
                    size_limit_exceeded_error);
}

TEST_CASE("construction is deterministic") {
    auto b1 = build_cell_bundle(YoungSet(4, {P({2, 2}), P({3, 1})}));
    auto b2 = build_cell_bundle(YoungSet(4, {P({2, 2}), P({3, 1})}));
    REQUIRE(b1.datum.layers.size() == b2.datum.layers.size());
    for (size_t k = 0; k < b1.datum.layers.size(); ++k) {
        CHECK(b1.datum.layers[k].lifts == b2.datum.layers[k].lifts);
        CHECK(b1.datum.layers[k].cells == b2.datum.layers[k].cells);
    }
}
