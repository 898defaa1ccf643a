#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

#include "young_endo/young_set.hpp"

namespace young_endo {

using Int = boost::multiprecision::cpp_int;

// An orbit of Sym(n) on ordered pairs of points, the pair drawn from orbits
// alpha and beta.  The orbit is determined by the intersection matrix
// m[a][b] = |row a of the first point  ∩  row b of the second point|,
// whose margins are the two orbit types.
struct OrbitPairClass {
    int alpha = 0;
    int beta = 0;
    IntMatrix intersection;

    bool operator==(const OrbitPairClass& o) const = default;
    bool operator<(const OrbitPairClass& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        if (beta != o.beta) return beta < o.beta;
        return intersection < o.intersection;
    }
};

// m[a][b] = |x^{-1}(a) ∩ y^{-1}(b)|; rows sized by x's type, columns by y's.
IntMatrix intersection_matrix(const Tabloid& x, int rows_x, const Tabloid& y,
                              int rows_y);

// An element of the algebra in the orbit-sum basis: sparse integer
// coefficients keyed by class index.  Zero coefficients are never stored.
struct AlgebraElement {
    std::map<int, Int> coeffs;

    bool operator==(const AlgebraElement& o) const = default;
    bool is_zero() const { return coeffs.empty(); }
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b);
void add_scaled(AlgebraElement& acc, const AlgebraElement& x, const Int& s);

// The endomorphism algebra of the permutation module on a Young set, in the
// orbit-sum basis.  Convention, fixed once and used by star, multiply, and
// the matrix model: the basis element of a class 𝒜 sends a point x to the
// sum of all y with (y, x) in 𝒜 — so the first orbit index is the output
// side and the second the input side, and the basis element of the class of
// (x, y) maps the orbit of y into sums over the orbit of x.
class OrbitAlgebra {
public:
    static OrbitAlgebra build(const YoungSet& omega,
                              long long max_points = kDefaultMaxPoints);

    const YoungSet& omega() const { return omega_; }
    int orbit_count() const { return static_cast<int>(omega_.orbit_types.size()); }
    const Partition& orbit_type(int a) const {
        return omega_.orbit_types[static_cast<size_t>(a)];
    }
    const std::vector<Tabloid>& points(int orbit) const {
        return points_[static_cast<size_t>(orbit)];
    }
    long long point_total() const { return point_total_; }

    const std::vector<OrbitPairClass>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    // Index of a class; throws domain_error when absent.
    int class_index(int alpha, int beta, const IntMatrix& m) const;
    // Index of the class of the pair (x, y) with x in orbit alpha, y in beta.
    int classify_pair(int alpha, const Tabloid& x, int beta, const Tabloid& y) const;
    // The class of the transposed pairs: (alpha, beta, m) -> (beta, alpha, m^T).
    int star_index(int c) const { return star_[static_cast<size_t>(c)]; }

    // A deterministic representative pair of a class: the first point is the
    // canonical tabloid of orbit alpha, the second distributes each of its
    // rows left to right as the intersection matrix dictates.
    std::pair<Tabloid, Tabloid> representative_pair(int c) const;

    // First orbit whose type is lambda, or -1.
    int orbit_of_type(const Partition& lambda) const;

    AlgebraElement basis_element(int c) const;
    // Diagonal idempotent of one orbit.
    AlgebraElement xi_orbit(int alpha) const;
    // Diagonal idempotent of the chosen orbit of type lambda (zero if absent).
    AlgebraElement xi_type(const Partition& lambda) const;
    // Sum of xi over the first k orbits.
    AlgebraElement prefix_idempotent(int k) const;
    AlgebraElement identity() const;
    // e for a sub-Young-set: greedily matches each requested orbit type to a
    // distinct orbit of this algebra; throws orbit_not_in_omega_error.
    AlgebraElement idempotent(const YoungSet& sub) const;

    AlgebraElement star(const AlgebraElement& a) const;

private:
    YoungSet omega_;
    std::vector<std::vector<Tabloid>> points_;
    long long point_total_ = 0;
    std::vector<OrbitPairClass> classes_;
    std::map<std::tuple<int, int, IntMatrix>, int> index_;
    std::vector<int> star_;
    std::vector<int> diag_class_; // class index of the diagonal pair per orbit
};

// Multiplication table: for each compatible ordered pair of classes (inner
// orbit indices equal), the sorted list of (class, count) giving the product
// of the two basis elements.  Incompatible pairs are absent and multiply to
// zero.
struct StructureTable {
    std::map<std::pair<int, int>, std::vector<std::pair<int, long long>>> products;

    bool operator==(const StructureTable& o) const = default;
};

// Per-class sweep: for each class, fix its representative pair and classify
// both legs against every point of every orbit.  Work is split over classes
// (independent) across the given number of threads; results are merged in
// class order, so the table is identical for every thread count.
StructureTable build_structure_table(const OrbitAlgebra& alg, int threads);

// Definition-driven serial reference: for each ordered pair of classes and
// each candidate product class, count the middle points directly.  Kept as
// the comparison baseline for the parallel kernel.
StructureTable build_structure_table_reference(const OrbitAlgebra& alg);

AlgebraElement multiply(const StructureTable& table, const AlgebraElement& a,
                        const AlgebraElement& b);

} // namespace young_endo
