#pragma once

#include <compare>
#include <string>
#include <vector>

#include "young_endo/errors.hpp"

namespace young_endo {

// A partition: weakly decreasing positive parts, stored without trailing
// zeros.  The empty list is the unique partition of 0.  Parts beyond the
// stored length read as 0.
class Partition {
public:
    Partition() = default;
    // Validates: entries non-negative and weakly decreasing once zeros are
    // trimmed.  Throws invalid_partition_error otherwise.
    explicit Partition(std::vector<int> parts);

    int sum() const { return sum_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // 0-based; indices >= length() read as 0.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Lexicographic on part vectors; for equal-size partitions this is the
    // descending-lex total order that refines dominance (see compare_refined).
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    // "5,4,1"; the empty partition prints as "0".
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// A composition: an arbitrary tuple of non-negative integers, fixed length.
using Composition = std::vector<int>;

// True iff lambda is dominated by mu (lambda <= mu in the dominance order):
// equal sums and every partial sum of mu is >= the corresponding partial sum
// of lambda.  Throws size_mismatch_error if the sums differ.
bool dominates(const Partition& mu, const Partition& lambda);

// Sort a composition into a partition (descending, zeros trimmed).
Partition sort_descending(const Composition& c);

// Total order on Par(n) refining dominance: compare part vectors
// lexicographically, larger first part wins.  Only defined for equal sums.
std::strong_ordering compare_refined(const Partition& a, const Partition& b);

// The digits lambda(0), lambda(1), ... of the unique expansion
// lambda = sum_i p^i * lambda(i) with every digit p-restricted.  Trailing
// zero digits are trimmed; the empty partition has no digits.
std::vector<Partition> base_p_expansion(const Partition& lambda, int p);

// True iff consecutive part differences (including the last part) are < p.
bool is_p_restricted(const Partition& lambda, int p);

// Number of semistandard Young tableaux of shape lambda and content mu.
// Zero when the sums differ or no tableau exists.
long long kostka(const Partition& lambda, const Partition& mu);

// All partitions of n, ordered descending under compare_refined
// ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

// Non-negative integer matrices with row sums mu and column sums nu
// (row i sums to mu's part i).  Deterministic lexicographic order on the
// flattened row-major entries.  Throws size_mismatch_error if sums differ.
using IntMatrix = std::vector<std::vector<int>>;
std::vector<IntMatrix> margin_matrices(const Partition& mu, const Partition& nu);

// n! / (type_1! * type_2! * ...): the number of set compositions of
// {1..n} with block sizes given by the parts.  Stops early (returning a
// value > cap) if the count exceeds cap, so it never overflows for caps
// below 2^62.
long long multinomial_count(int n, const Partition& type, long long cap);

} // namespace young_endo
