#pragma once

#include <optional>

#include "young_endo/pdominance.hpp"
#include "young_endo/young_set.hpp"

namespace young_endo {

// Outcome of the quasi-heredity decision for the truncation of the orbit
// algebra by a Young set in characteristic p.  The decision compares the
// dominance closure of the support with its p-dominance closure; the algebra
// is quasi-hereditary exactly when the two agree, and a negative answer is
// certified by a partition lying in the gap.
struct QHVerdict {
    bool quasi_hereditary = false;
    SupportSet zeta_dom;               // dominance closure of the support
    SupportSet zeta_pdom;              // p-dominance closure, a subset of the above
    std::optional<Partition> witness;  // gap element, present iff negative
};

// Decide quasi-heredity over a field of characteristic p.  p = 0 means
// characteristic zero: both closures are taken under plain dominance and the
// verdict is always positive.  Throws domain_error for p = 1 or p < 0.
QHVerdict is_quasi_hereditary(const YoungSet& gamma, int p);

// Closed form for the tensor-power family on n points in r factors:
// true iff p does not divide n and (n < 2p, or n > 2p and r < p).
// n = 2p falls under the first clause.  p = 0 returns true.
bool tensor_qh_closed_form(int n, int r, int p);

// Partition-algebra criterion: true iff n is prime to p and r < p.
// p = 0 returns true.
bool partition_algebra_qh(int r, int n, int p);

} // namespace young_endo
