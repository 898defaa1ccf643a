#include "young_endo/pdominance.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace young_endo {

namespace {

// Partial sums of the a largest entries of v must stay below those of the
// partition bound for every a; entries may arrive in any order.
bool sorted_prefixes_bounded(const std::vector<int>& v, const Partition& bound) {
    std::vector<int> s(v);
    std::sort(s.begin(), s.end(), std::greater<int>());
    long long acc = 0, bacc = 0;
    for (size_t a = 0; a < s.size(); ++a) {
        acc += s[a];
        bacc += bound.part(static_cast<int>(a));
        if (acc > bacc) return false;
    }
    return true;
}

// All vectors (d_0..d_L) >= 0 with sum_i p^i d_i = value and d_i <= cap[i]
// (cap may be null for uncapped), emitted through sink; high digits vary
// outermost, descending.
void digit_vectors(int value, int p, int L, const std::vector<int>* cap,
                   std::vector<int>& d,
                   const std::function<void(const std::vector<int>&)>& sink) {
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i < 0) {
            if (rem == 0) sink(d);
            return;
        }
        long long w = 1;
        for (int k = 0; k < i; ++k) w *= p;
        int hi = static_cast<int>(rem / w);
        if (cap) hi = std::min(hi, (*cap)[static_cast<size_t>(i)]);
        for (int v = hi; v >= 0; --v) {
            d[static_cast<size_t>(i)] = v;
            rec(i - 1, rem - static_cast<int>(w) * v);
        }
        d[static_cast<size_t>(i)] = 0;
    };
    rec(L, value);
}

} // namespace

bool weak_expansion_valid(const WeakExpansion& w, const Partition& mu,
                          const Partition& tau) {
    if (mu.sum() != tau.sum()) return false;
    auto mu_digits = base_p_expansion(mu, w.prime);
    if (w.digits.size() > mu_digits.size() + 0) {
        // Extra digit rows are only acceptable when zero.
        for (size_t i = mu_digits.size(); i < w.digits.size(); ++i)
            for (int x : w.digits[i])
                if (x != 0) return false;
    }
    size_t cols = static_cast<size_t>(tau.length());
    long long weight = 1;
    std::vector<long long> recon(cols, 0);
    for (size_t i = 0; i < w.digits.size(); ++i) {
        if (w.digits[i].size() < cols) return false;
        Partition row = sort_descending(w.digits[i]);
        Partition bound = i < mu_digits.size() ? mu_digits[i] : Partition{};
        if (row.sum() != bound.sum()) return false;
        if (row.sum() > 0 && !dominates(bound, row)) return false;
        for (size_t j = 0; j < w.digits[i].size(); ++j) {
            long long v = weight * w.digits[i][j];
            if (j < cols)
                recon[j] += v;
            else if (v != 0)
                return false;
        }
        weight *= w.prime;
    }
    for (size_t j = 0; j < cols; ++j)
        if (recon[j] != tau.part(static_cast<int>(j))) return false;
    // Rows beyond those given are zero; their bounds must be empty too.
    for (size_t i = w.digits.size(); i < mu_digits.size(); ++i)
        if (mu_digits[i].sum() != 0) return false;
    return true;
}

std::optional<WeakExpansion> p_dominates(const Partition& mu,
                                         const Partition& tau, int p) {
    if (p < 2) throw domain_error("p-dominance requires p >= 2");
    if (mu.sum() != tau.sum())
        throw size_mismatch_error("p-dominance compares partitions of equal sums");
    auto mu_digits = base_p_expansion(mu, p);
    int L = static_cast<int>(mu_digits.size()) - 1;
    int cols = tau.length();
    if (cols == 0) return WeakExpansion{p, {}};

    std::vector<int> target(static_cast<size_t>(L + 1));
    for (int i = 0; i <= L; ++i) target[static_cast<size_t>(i)] = mu_digits[static_cast<size_t>(i)].sum();

    // rows[i] collects the entries of gamma(i) chosen so far; caps keep row
    // sums within |mu(i)|, and every prefix respects the dominance bound on
    // its sorted entries, so dead branches die early.
    std::vector<std::vector<int>> rows(static_cast<size_t>(L + 1));
    std::vector<int> rowsum(static_cast<size_t>(L + 1), 0);
    std::vector<int> d(static_cast<size_t>(L + 1), 0);
    std::optional<WeakExpansion> found;

    std::function<void(int)> column = [&](int j) {
        if (found) return;
        if (j == cols) {
            for (int i = 0; i <= L; ++i) {
                if (rowsum[static_cast<size_t>(i)] != target[static_cast<size_t>(i)]) return;
                Partition row = sort_descending(rows[static_cast<size_t>(i)]);
                if (row.sum() > 0 && !dominates(mu_digits[static_cast<size_t>(i)], row)) return;
            }
            WeakExpansion w;
            w.prime = p;
            for (int i = 0; i <= L; ++i) {
                Composition g(static_cast<size_t>(cols), 0);
                for (size_t j2 = 0; j2 < rows[static_cast<size_t>(i)].size(); ++j2)
                    g[j2] = rows[static_cast<size_t>(i)][j2];
                w.digits.push_back(std::move(g));
            }
            found = w;
            return;
        }
        std::vector<int> cap(static_cast<size_t>(L + 1));
        for (int i = 0; i <= L; ++i)
            cap[static_cast<size_t>(i)] = target[static_cast<size_t>(i)] - rowsum[static_cast<size_t>(i)];
        digit_vectors(tau.part(j), p, L, &cap, d, [&](const std::vector<int>& dv) {
            if (found) return;
            for (int i = 0; i <= L; ++i) {
                rows[static_cast<size_t>(i)].push_back(dv[static_cast<size_t>(i)]);
                rowsum[static_cast<size_t>(i)] += dv[static_cast<size_t>(i)];
            }
            bool ok = true;
            for (int i = 0; i <= L && ok; ++i)
                if (dv[static_cast<size_t>(i)] > 0 &&
                    !sorted_prefixes_bounded(rows[static_cast<size_t>(i)], mu_digits[static_cast<size_t>(i)]))
                    ok = false;
            if (ok) column(j + 1);
            for (int i = 0; i <= L; ++i) {
                rowsum[static_cast<size_t>(i)] -= dv[static_cast<size_t>(i)];
                rows[static_cast<size_t>(i)].pop_back();
            }
        });
    };
    column(0);
    return found;
}

bool p_dominates_oracle(const Partition& mu, const Partition& tau, int p) {
    if (p < 2) throw domain_error("p-dominance requires p >= 2");
    if (mu.sum() != tau.sum())
        throw size_mismatch_error("p-dominance compares partitions of equal sums");
    auto mu_digits = base_p_expansion(mu, p);
    int L = static_cast<int>(mu_digits.size()) - 1;
    int cols = tau.length();
    if (cols == 0) return true;

    // Cartesian product over columns of every base-p representation, then a
    // plain check of the row conditions.
    std::vector<std::vector<std::vector<int>>> reps(static_cast<size_t>(cols));
    std::vector<int> d(static_cast<size_t>(L + 1), 0);
    for (int j = 0; j < cols; ++j)
        digit_vectors(tau.part(j), p, L, nullptr, d,
                      [&](const std::vector<int>& dv) { reps[static_cast<size_t>(j)].push_back(dv); });

    std::vector<size_t> pick(static_cast<size_t>(cols), 0);
    std::function<bool(int)> rec = [&](int j) -> bool {
        if (j == cols) {
            for (int i = 0; i <= L; ++i) {
                std::vector<int> row(static_cast<size_t>(cols));
                long long rs = 0;
                for (int c = 0; c < cols; ++c) {
                    row[static_cast<size_t>(c)] = reps[static_cast<size_t>(c)][pick[static_cast<size_t>(c)]][static_cast<size_t>(i)];
                    rs += row[static_cast<size_t>(c)];
                }
                if (rs != mu_digits[static_cast<size_t>(i)].sum()) return false;
                Partition sorted = sort_descending(row);
                if (sorted.sum() > 0 && !dominates(mu_digits[static_cast<size_t>(i)], sorted)) return false;
            }
            return true;
        }
        for (size_t k = 0; k < reps[static_cast<size_t>(j)].size(); ++k) {
            pick[static_cast<size_t>(j)] = k;
            if (rec(j + 1)) return true;
        }
        return false;
    };
    if (L < 0) {
        // mu is empty but tau is not: impossible since sums match and cols>0.
        return false;
    }
    return rec(0);
}

namespace {

int support_degree(const SupportSet& s) {
    if (s.empty()) throw domain_error("support set must be non-empty");
    int n = s.begin()->sum();
    for (const auto& q : s)
        if (q.sum() != n)
            throw size_mismatch_error("support set mixes partition sizes");
    return n;
}

} // namespace

SupportSet upward_closure_dominance(const SupportSet& s) {
    int n = support_degree(s);
    SupportSet out;
    for (const auto& mu : partitions_of(n))
        for (const auto& t : s)
            if (dominates(mu, t)) {
                out.insert(mu);
                break;
            }
    return out;
}

SupportSet upward_closure_p_dominance(const SupportSet& s, int p) {
    int n = support_degree(s);
    SupportSet out;
    for (const auto& mu : partitions_of(n))
        for (const auto& t : s)
            if (p_dominates(mu, t, p)) {
                out.insert(mu);
                break;
            }
    return out;
}

} // namespace young_endo
