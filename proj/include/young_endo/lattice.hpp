#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "young_endo/errors.hpp"

namespace young_endo {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;
using IntRows = std::vector<IntVec>;

// A sublattice of Z^dim, stored as an echelon row basis and canonicalized
// (Hermite form: positive pivots, entries above a pivot reduced into
// [0, pivot)) on demand.  Two lattices are equal iff their canonical bases
// are.  The lazy reduction mutates cached state, so a single instance must
// not be shared across threads even through const accessors.
class Lattice {
public:
    explicit Lattice(int dim);
    static Lattice from_rows(int dim, const IntRows& rows);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    // Canonical Hermite basis, one row per pivot, pivot columns increasing.
    const IntRows& basis() const;
    const std::vector<int>& pivot_columns() const { return pivots_; }

    // Folds v into the basis; returns true iff v was not already a member.
    bool add_generator(IntVec v);
    bool contains(const IntVec& v) const;
    // Coefficients of v over the canonical basis, or nullopt if outside.
    std::optional<IntVec> coordinates(const IntVec& v) const;
    bool is_sublattice_of(const Lattice& other) const;

    bool operator==(const Lattice& other) const;

private:
    int dim_;
    mutable IntRows rows_;
    std::vector<int> pivots_;
    mutable bool canonical_ = true;

    void canonicalize() const;
};

// Returns g = gcd(a, b) >= 0 together with s, t such that s*a + t*b = g.
Int extended_gcd(const Int& a, const Int& b, Int& s, Int& t);

// Row Hermite form with transform: transform * m = hermite, where transform
// is unimodular, the first `rank` hermite rows are the canonical basis of the
// row lattice of m and the remaining rows are zero.
struct TransformedHermite {
    IntRows hermite;
    IntRows transform;
    int rank = 0;
};
TransformedHermite hermite_with_transform(const IntRows& m, int cols);

// Basis of {x : x * m = 0} as rows, in canonical Hermite form.
IntRows left_kernel(const IntRows& m, int cols);

// Smith data of the row lattice of m inside Z^cols: cobasis rows w_0..w_{cols-1}
// form a basis of Z^cols, and the row lattice of m is spanned by
// divisors[i] * w_i for i < divisors.size().  Divisors are positive and each
// divides the next.
struct SmithDecomposition {
    std::vector<Int> divisors;
    IntRows cobasis;
};
SmithDecomposition smith_with_cobasis(IntRows m, int cols);

// Structure of big/small for a sublattice small of big.  Each torsion lift
// generates a cyclic summand of the matching divisor (> 1); the free lifts
// descend to a basis of the free part.  Throws not_a_sublattice_error when
// small is not contained in big, size_mismatch_error on ambient mismatch.
struct QuotientDecomposition {
    std::vector<Int> torsion_divisors;
    IntRows torsion_lifts;
    IntRows free_lifts;

    bool is_free() const { return torsion_divisors.empty(); }
    int free_rank() const { return static_cast<int>(free_lifts.size()); }
};
QuotientDecomposition quotient_basis(const Lattice& big, const Lattice& small);

// Elementary divisors of L inside its ambient Z^dim (Smith divisors of any
// basis matrix).  L is pure — Z^dim / L torsion-free — iff all are 1.
std::vector<Int> lattice_divisors(const Lattice& lat);
bool is_pure(const Lattice& lat);

// The sublattice of members of lat supported on the given coordinates.
Lattice intersect_coordinate_span(const Lattice& lat, const std::vector<int>& coords);

// Expresses vectors as integer combinations of a fixed generating family
// (given rows, in the given order; the family need not be independent).
class RowSolver {
public:
    RowSolver(IntRows rows, int cols);
    // Coefficients c with sum_i c[i] * rows[i] = v, or nullopt.
    std::optional<IntVec> solve(const IntVec& v) const;
    int rank() const { return data_.rank; }

private:
    int cols_;
    size_t row_count_;
    TransformedHermite data_;
};

} // namespace young_endo
