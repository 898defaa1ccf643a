#pragma once

#include <string>
#include <vector>

#include "young_endo/partition.hpp"
#include "young_endo/pdominance.hpp"

namespace young_endo {

inline constexpr long long kDefaultMaxPoints = 200000;

// A finite Sym(n)-set with every point stabilizer a standard Young subgroup:
// recorded as the multiset of orbit types, one partition of n per orbit.
// Orbit order is meaningful (idempotents and prefixes refer to it).
struct YoungSet {
    int n = 0;
    std::vector<Partition> orbit_types;

    YoungSet() = default;
    YoungSet(int n_, std::vector<Partition> types);

    // "2,1 x2; 3" — semicolon-separated types, optional xK multiplicity.
    static YoungSet parse(int n, const std::string& text);
    std::string to_string() const;
};

// A point of the orbit of type mu: the assignment of each of 0..n-1 to a row,
// with row r holding exactly mu.part(r) elements.
struct Tabloid {
    std::vector<int> row_of;

    bool operator==(const Tabloid& o) const { return row_of == o.row_of; }
    bool operator<(const Tabloid& o) const { return row_of < o.row_of; }
};

// The set of distinct orbit types.
SupportSet support(const YoungSet& ys);

// True iff the support is upward closed under dominance inside Par(n).
bool is_cosaturated(const YoungSet& ys);

// The original orbit list extended, in descending refined order, by one
// orbit for each type in the dominance closure of the support that the set
// does not already contain.  The input is a prefix of the result.
YoungSet cosaturated_closure(const YoungSet& ys);

// Number of points of the orbit with the given type (= multinomial), capped.
long long orbit_size(int n, const Partition& type, long long cap);

// Total points across all orbits; throws size_limit_exceeded_error past cap.
long long total_points(const YoungSet& ys, long long cap);

// All tabloids of the given type, lexicographic in row_of.
std::vector<Tabloid> enumerate_points(int n, const Partition& type);

// The tabloid whose rows are the consecutive blocks 0..mu_1-1, mu_1..., etc.
Tabloid canonical_tabloid(const Partition& type);

// The image of t under the permutation w (w maps position e to w[e]).
Tabloid apply_permutation(const std::vector<int>& w, const Tabloid& t);

// The r-th tensor power model: maps {1..r} -> {1..n} under postcomposition.
// Orbits correspond to set partitions of {1..r} into b blocks (so the type
// (n-b, 1^b) appears with multiplicity Stirling2(r, b)), 1 <= b <= min(r,n).
YoungSet tensor_young_set(int n, int r);

// Stirling number of the second kind; throws size_limit_exceeded_error when
// the full orbit list implied by r would be unreasonably large.
long long stirling2(int r, int b);

} // namespace young_endo
