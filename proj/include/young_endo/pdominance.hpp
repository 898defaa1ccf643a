#pragma once

#include <optional>
#include <set>
#include <vector>

#include "young_endo/partition.hpp"

namespace young_endo {

// A witness that tau is p-dominated by mu: digits gamma(0), gamma(1), ...
// with tau_j = sum_i p^i * digits[i][j] componentwise, where each
// sort_descending(digits[i]) is dominated by the i-th base-p digit of mu.
// All digit rows share one length (the number of parts of tau).
struct WeakExpansion {
    int prime = 0;
    std::vector<Composition> digits;
};

// Check the defining conditions of a witness against mu and tau.
bool weak_expansion_valid(const WeakExpansion& w, const Partition& mu,
                          const Partition& tau);

// Decide whether mu p-dominates tau and produce a witness when it does.
// Complete search: returns nullopt only when no witness exists.  Throws
// size_mismatch_error when |mu| != |tau|.
std::optional<WeakExpansion> p_dominates(const Partition& mu,
                                         const Partition& tau, int p);

// Independent exhaustive check over every digit matrix d[i][j] >= 0 with
// sum_i p^i d[i][j] = tau_j, sum_j d[i][j] = |mu(i)|, and
// sort_descending(row i) dominated by mu(i).  No pruning beyond the
// definition; used to validate the search.
bool p_dominates_oracle(const Partition& mu, const Partition& tau, int p);

// Supports: sets of equal-sum partitions.
using SupportSet = std::set<Partition>;

// All mu in Par(n) dominating some member of s.
SupportSet upward_closure_dominance(const SupportSet& s);

// All mu in Par(n) p-dominating some member of s.  Computed pointwise from
// the definition; never chains the relation.
SupportSet upward_closure_p_dominance(const SupportSet& s, int p);

} // namespace young_endo
