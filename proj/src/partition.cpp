#include "young_endo/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace young_endo {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw invalid_partition_error("partition part is negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw invalid_partition_error("partition parts must be weakly decreasing");
        if (parts[i] == 0)
            throw invalid_partition_error("zero part before a positive part");
    }
    parts_ = std::move(parts);
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw invalid_partition_error("empty partition text");
    if (s == "0") return Partition{};
    std::vector<int> parts;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw invalid_partition_error("bad partition text: '" + text + "'");
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

bool dominates(const Partition& mu, const Partition& lambda) {
    if (mu.sum() != lambda.sum())
        throw size_mismatch_error("dominance compares partitions of equal sums");
    int len = std::max(mu.length(), lambda.length());
    long long pm = 0, pl = 0;
    for (int i = 0; i < len; ++i) {
        pm += mu.part(i);
        pl += lambda.part(i);
        if (pm < pl) return false;
    }
    return true;
}

Partition sort_descending(const Composition& c) {
    std::vector<int> v(c);
    for (int x : v)
        if (x < 0) throw invalid_partition_error("negative entry in composition");
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

std::strong_ordering compare_refined(const Partition& a, const Partition& b) {
    if (a.sum() != b.sum())
        throw size_mismatch_error("compare_refined orders partitions of equal sums");
    return a.parts() <=> b.parts();
}

std::vector<Partition> base_p_expansion(const Partition& lambda, int p) {
    if (p < 2) throw domain_error("base requires p >= 2");
    // Work on the consecutive differences: the i-th digit partition is the one
    // whose differences are the base-p digits of the differences of lambda.
    int len = lambda.length();
    std::vector<std::vector<int>> digit_diffs; // [digit index][position]
    for (int j = 0; j < len; ++j) {
        int d = lambda.part(j) - lambda.part(j + 1);
        int i = 0;
        while (d > 0) {
            if (static_cast<int>(digit_diffs.size()) <= i)
                digit_diffs.push_back(std::vector<int>(len, 0));
            digit_diffs[i][j] = d % p;
            d /= p;
            ++i;
        }
    }
    std::vector<Partition> digits;
    for (auto& diffs : digit_diffs) {
        // Rebuild the partition from its differences via suffix sums.
        std::vector<int> parts(len, 0);
        int acc = 0;
        for (int j = len - 1; j >= 0; --j) {
            acc += diffs[j];
            parts[j] = acc;
        }
        digits.emplace_back(std::move(parts));
    }
    while (!digits.empty() && digits.back().empty()) digits.pop_back();
    return digits;
}

bool is_p_restricted(const Partition& lambda, int p) {
    if (p < 2) throw domain_error("restriction requires p >= 2");
    for (int j = 0; j < lambda.length(); ++j)
        if (lambda.part(j) - lambda.part(j + 1) >= p) return false;
    return true;
}

namespace {

// Count semistandard tableaux by peeling the largest content entry off as a
// horizontal strip.  Memoized per top-level call; the key packs the current
// shape and how many content rows remain.
struct KostkaMemo {
    std::map<std::pair<std::vector<int>, int>, long long> cache;

    long long count(const std::vector<int>& shape, const Partition& mu, int rows) {
        if (rows == 0) return shape.empty() ? 1 : 0;
        auto key = std::make_pair(shape, rows);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        // Remove a horizontal strip of mu.part(rows-1) cells.  Removals that
        // leave a partition with at most one cell gone per column are exactly
        // the interlacing choices old[i] >= new[i] >= old[i+1].
        std::vector<int> cur(shape);
        long long total = strip_rec(cur, 0, mu.part(rows - 1), mu, rows);
        cache[key] = total;
        return total;
    }

    long long strip_rec(std::vector<int>& shape, size_t row, int remaining,
                        const Partition& mu, int rows) {
        if (row == shape.size()) {
            if (remaining > 0) return 0;
            std::vector<int> next(shape);
            while (!next.empty() && next.back() == 0) next.pop_back();
            return count(next, mu, rows - 1);
        }
        long long total = 0;
        int old = shape[row];
        int low = (row + 1 < shape.size()) ? shape[row + 1] : 0;
        for (int take = 0; take <= old - low && take <= remaining; ++take) {
            shape[row] = old - take;
            total += strip_rec(shape, row + 1, remaining - take, mu, rows);
        }
        shape[row] = old;
        return total;
    }
};

} // namespace

long long kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum()) return 0;
    if (lambda.sum() == 0) return 1;
    KostkaMemo memo;
    return memo.count(lambda.parts(), mu, mu.length());
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending lexicographic enumeration: at each level choose the next
    // part as large as allowed, backtracking downward.
    struct Rec {
        std::vector<Partition>& out;
        std::vector<int>& cur;
        void go(int remaining, int maxpart) {
            if (remaining == 0) {
                out.emplace_back(cur);
                return;
            }
            for (int k = std::min(remaining, maxpart); k >= 1; --k) {
                cur.push_back(k);
                go(remaining - k, k);
                cur.pop_back();
            }
        }
    } rec{out, cur};
    rec.go(n, n == 0 ? 1 : n);
    return out;
}

namespace {

void margin_rec(const Partition& mu, const Partition& nu, size_t row,
                std::vector<int>& colrem, IntMatrix& m,
                std::vector<IntMatrix>& out) {
    size_t rows = static_cast<size_t>(mu.length());
    size_t cols = static_cast<size_t>(nu.length());
    if (row == rows) {
        out.push_back(m);
        return;
    }
    // Enumerate compositions of mu.part(row) bounded by the remaining column
    // capacity, in lexicographic order of the row vector.
    std::vector<int> rowv(cols, 0);
    struct Rec {
        const Partition& mu;
        const Partition& nu;
        size_t row, cols;
        std::vector<int>& colrem;
        std::vector<int>& rowv;
        IntMatrix& m;
        std::vector<IntMatrix>& out;
        void cells(size_t col, int remaining) {
            if (col == cols) {
                if (remaining != 0) return;
                m.push_back(rowv);
                margin_rec(mu, nu, row + 1, colrem, m, out);
                m.pop_back();
                return;
            }
            int cap = std::min(colrem[col], remaining);
            for (int v = 0; v <= cap; ++v) {
                rowv[col] = v;
                colrem[col] -= v;
                cells(col + 1, remaining - v);
                colrem[col] += v;
            }
            rowv[col] = 0;
        }
    } rec{mu, nu, row, cols, colrem, rowv, m, out};
    rec.cells(0, mu.part(static_cast<int>(row)));
}

} // namespace

std::vector<IntMatrix> margin_matrices(const Partition& mu, const Partition& nu) {
    if (mu.sum() != nu.sum())
        throw size_mismatch_error("margin matrices need equal row and column totals");
    std::vector<IntMatrix> out;
    std::vector<int> colrem(nu.parts());
    IntMatrix m;
    margin_rec(mu, nu, 0, colrem, m, out);
    return out;
}

long long multinomial_count(int n, const Partition& type, long long cap) {
    if (type.sum() != n)
        throw size_mismatch_error("orbit type must partition n");
    // Product of binomials C(rem, part) computed left to right; abort early
    // once past the cap to avoid overflow.
    long long result = 1;
    int rem = n;
    for (int i = 0; i < type.length(); ++i) {
        int k = type.part(i);
        for (int j = 1; j <= k; ++j) {
            result = result * (rem - k + j) / j; // exact at each step
            if (result > cap) return result;
        }
        rem -= k;
    }
    return result;
}

} // namespace young_endo
