#include "young_endo/young_set.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace young_endo {

YoungSet::YoungSet(int n_, std::vector<Partition> types)
    : n(n_), orbit_types(std::move(types)) {
    if (n < 1) throw domain_error("a Young set needs n >= 1");
    if (orbit_types.empty()) throw domain_error("a Young set needs at least one orbit");
    for (const auto& t : orbit_types)
        if (t.sum() != n)
            throw size_mismatch_error("orbit type does not partition n");
}

YoungSet YoungSet::parse(int n, const std::string& text) {
    std::vector<Partition> types;
    std::istringstream in(text);
    std::string term;
    while (std::getline(in, term, ';')) {
        // strip blanks, split an optional trailing xK multiplicity
        std::string s;
        for (char c : term)
            if (!isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) continue;
        long mult = 1;
        auto xp = s.find('x');
        if (xp != std::string::npos) {
            std::string m = s.substr(xp + 1);
            if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos)
                throw domain_error("bad multiplicity in '" + term + "'");
            mult = std::stol(m);
            if (mult < 1) throw domain_error("multiplicity must be positive");
            s = s.substr(0, xp);
        }
        Partition p = Partition::parse(s);
        for (long i = 0; i < mult; ++i) types.push_back(p);
    }
    return YoungSet(n, std::move(types));
}

std::string YoungSet::to_string() const {
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < orbit_types.size()) {
        size_t j = i;
        while (j < orbit_types.size() && orbit_types[j] == orbit_types[i]) ++j;
        if (!first) out << "; ";
        out << orbit_types[i].to_string();
        if (j - i > 1) out << " x" << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

SupportSet support(const YoungSet& ys) {
    return SupportSet(ys.orbit_types.begin(), ys.orbit_types.end());
}

bool is_cosaturated(const YoungSet& ys) {
    auto s = support(ys);
    for (const auto& mu : partitions_of(ys.n)) {
        if (s.count(mu)) continue;
        for (const auto& t : s)
            if (dominates(mu, t)) return false;
    }
    return true;
}

YoungSet cosaturated_closure(const YoungSet& ys) {
    auto s = support(ys);
    auto closure = upward_closure_dominance(s);
    std::vector<Partition> missing;
    for (const auto& mu : closure)
        if (!s.count(mu)) missing.push_back(mu);
    // Append in descending refined order.
    std::sort(missing.begin(), missing.end(), [](const Partition& a, const Partition& b) {
        return compare_refined(a, b) == std::strong_ordering::greater;
    });
    std::vector<Partition> types(ys.orbit_types);
    types.insert(types.end(), missing.begin(), missing.end());
    return YoungSet(ys.n, std::move(types));
}

long long orbit_size(int n, const Partition& type, long long cap) {
    return multinomial_count(n, type, cap);
}

long long total_points(const YoungSet& ys, long long cap) {
    long long total = 0;
    for (const auto& t : ys.orbit_types) {
        total += orbit_size(ys.n, t, cap);
        if (total > cap)
            throw size_limit_exceeded_error(
                "point enumeration exceeds the configured cap of " + std::to_string(cap));
    }
    return total;
}

std::vector<Tabloid> enumerate_points(int n, const Partition& type) {
    if (type.sum() != n)
        throw size_mismatch_error("orbit type does not partition n");
    std::vector<Tabloid> out;
    std::vector<int> remaining(type.parts());
    std::vector<int> row_of(static_cast<size_t>(n), 0);
    struct Rec {
        int n;
        std::vector<int>& remaining;
        std::vector<int>& row_of;
        std::vector<Tabloid>& out;
        void place(int e) {
            if (e == n) {
                out.push_back(Tabloid{row_of});
                return;
            }
            for (size_t r = 0; r < remaining.size(); ++r) {
                if (remaining[r] == 0) continue;
                --remaining[r];
                row_of[static_cast<size_t>(e)] = static_cast<int>(r);
                place(e + 1);
                ++remaining[r];
            }
        }
    } rec{n, remaining, row_of, out};
    rec.place(0);
    return out;
}

Tabloid canonical_tabloid(const Partition& type) {
    std::vector<int> row_of(static_cast<size_t>(type.sum()));
    int e = 0;
    for (int r = 0; r < type.length(); ++r)
        for (int k = 0; k < type.part(r); ++k) row_of[static_cast<size_t>(e++)] = r;
    return Tabloid{std::move(row_of)};
}

Tabloid apply_permutation(const std::vector<int>& w, const Tabloid& t) {
    Tabloid out;
    out.row_of.resize(t.row_of.size());
    for (size_t e = 0; e < t.row_of.size(); ++e)
        out.row_of[static_cast<size_t>(w[e])] = t.row_of[e];
    return out;
}

long long stirling2(int r, int b) {
    if (r < 0 || b < 0) throw domain_error("stirling2 needs non-negative arguments");
    if (b > r) return 0;
    if (r == 0) return 1;
    if (b == 0) return 0;
    std::vector<std::vector<long long>> s(static_cast<size_t>(r + 1),
                                          std::vector<long long>(static_cast<size_t>(r + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= i; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                static_cast<long long>(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    return s[static_cast<size_t>(r)][static_cast<size_t>(b)];
}

YoungSet tensor_young_set(int n, int r) {
    if (n < 1 || r < 1) throw domain_error("tensor model needs n >= 1 and r >= 1");
    // The orbit list has one entry per set partition of {1..r} into at most n
    // blocks; keep it materializable.
    long long bell = 0;
    for (int b = 1; b <= r; ++b) bell += stirling2(r, b);
    if (bell > kDefaultMaxPoints)
        throw size_limit_exceeded_error("tensor model orbit list too large for r = " +
                                        std::to_string(r));
    std::vector<Partition> types;
    for (int b = 1; b <= std::min(r, n); ++b) {
        std::vector<int> parts;
        if (n - b > 0) parts.push_back(n - b);
        for (int k = 0; k < b; ++k) parts.push_back(1);
        Partition type{std::move(parts)};
        long long mult = stirling2(r, b);
        for (long long m = 0; m < mult; ++m) types.push_back(type);
    }
    return YoungSet(n, std::move(types));
}

} // namespace young_endo
