#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "young_endo/endo_algebra.hpp"
#include "young_endo/lattice.hpp"
#include "young_endo/pdominance.hpp"

namespace young_endo {

// Descending chain of two-sided ideal lattices of the orbit algebra: one layer
// per distinct orbit type lambda, ordered by compare_refined from most to
// least dominant; ideals[k] is the span of all products a * xi * b through the
// idempotents of the first k+1 layers, so ideals.back() is the full algebra.
struct IdealChain {
    std::vector<Partition> order;
    std::vector<int> xi_orbits;
    std::vector<Lattice> ideals;

    int layer_of(const Partition& lambda) const; // -1 when absent
};
IdealChain build_ideal_chain(const OrbitAlgebra& alg, const StructureTable& table);

// Span of all products a * xi_lambda * b over basis elements a, b and types
// lambda in sigma that occur in the algebra's Young set; ambient dimension is
// the class count.
Lattice ideal_lattice(const OrbitAlgebra& alg, const StructureTable& table,
                      const SupportSet& sigma);

// Whether the ideal of a cosaturated sigma is a pure sublattice (the quotient
// by it is torsion-free).  Throws not_cosaturated_error when sigma is not
// upward-closed under dominance within partitions of n.
bool purity_check(const OrbitAlgebra& alg, const StructureTable& table,
                  const SupportSet& sigma);

// Whether multiplication identifies (column space) x (row space) of the
// lambda-layer with the chain section: the products of column lifts with
// starred column lifts must generate the section, which must be free of rank
// (column rank) * (row rank).  Requires a cosaturated Young set and a type
// lambda present in it.
bool factorization_check(const OrbitAlgebra& alg, const StructureTable& table,
                         const IdealChain& chain, int layer);
bool factorization_check(const OrbitAlgebra& alg, const StructureTable& table,
                         const Partition& lambda);

// One layer of a cell datum: the type, its idempotent orbit, the lifted
// column basis d_{lambda,t}, and the cell elements C^lambda_{t,u} = d_t d_u*.
struct CellLayer {
    Partition lambda;
    int xi_orbit = -1;
    long long expected_rank = 0; // sum over Gamma orbits of kostka(lambda, type)
    std::vector<AlgebraElement> lifts;
    std::vector<std::vector<AlgebraElement>> cells;
};

// Cell structure data for the truncated algebra e S e, where S is the orbit
// algebra of omega (the cosaturated closure of gamma unless overridden) and e
// picks out gamma's orbits.  Layers follow the chain order; layers whose type
// lies outside the dominance closure of gamma's support carry no cells.
struct CellDatum {
    YoungSet gamma;
    YoungSet omega;
    std::vector<int> gamma_orbits; // orbit indices of gamma inside omega
    AlgebraElement e;
    std::vector<int> ese_classes;  // classes with both orbits in gamma_orbits
    IdealChain chain;
    std::vector<CellLayer> layers;

    long long cell_count() const;
};

struct CellBundle {
    OrbitAlgebra algebra;
    StructureTable table;
    CellDatum datum;
};

// Builds the datum: closes gamma (or adopts the override, which must be
// cosaturated and contain gamma's orbits), assembles the ideal chain, lifts a
// basis of each layer's column space modulo the previous ideal, and forms the
// cell elements.  A torsion divisor in any layer section or a rank differing
// from the Kostka count aborts with domain_error — both would contradict
// what the construction guarantees.  Throws size_limit_exceeded_error via the
// underlying enumeration.
CellBundle build_cell_bundle(const YoungSet& gamma,
                             const std::optional<YoungSet>& omega_override = std::nullopt,
                             long long max_points = kDefaultMaxPoints);

// Axiom verification outcome plus the chain-level lattice facts, with
// human-readable counterexamples for anything that failed.
struct VerificationReport {
    bool c1_basis = false;      // cells are a Z-basis of the e S e span
    bool c2_star = false;       // star swaps the two cell indices
    bool c3_triangular = false; // left action is triangular with u-independent
                                // coefficients (checked on basis generators)
    std::vector<std::pair<Partition, bool>> section_free; // chain sections torsion-free
    std::vector<std::pair<Partition, bool>> purity;       // prefix ideals pure
    std::vector<std::pair<Partition, bool>> factorization;
    std::vector<std::string> failures;

    bool axioms_ok() const { return c1_basis && c2_star && c3_triangular; }
    bool all_ok() const;
};

VerificationReport verify_cell_datum(const CellDatum& datum, const OrbitAlgebra& alg,
                                     const StructureTable& table);

} // namespace young_endo
