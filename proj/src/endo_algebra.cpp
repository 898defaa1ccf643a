#include "young_endo/endo_algebra.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace young_endo {

IntMatrix intersection_matrix(const Tabloid& x, int rows_x, const Tabloid& y,
                              int rows_y) {
    if (x.row_of.size() != y.row_of.size())
        throw size_mismatch_error("tabloids live on different ground sets");
    IntMatrix m(static_cast<size_t>(rows_x), std::vector<int>(static_cast<size_t>(rows_y), 0));
    for (size_t e = 0; e < x.row_of.size(); ++e)
        ++m[static_cast<size_t>(x.row_of[e])][static_cast<size_t>(y.row_of[e])];
    return m;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    add_scaled(out, b, 1);
    return out;
}

AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    add_scaled(out, b, -1);
    return out;
}

void add_scaled(AlgebraElement& acc, const AlgebraElement& x, const Int& s) {
    if (s == 0) return;
    for (const auto& [c, v] : x.coeffs) {
        Int& slot = acc.coeffs[c];
        slot += v * s;
        if (slot == 0) acc.coeffs.erase(c);
    }
}

OrbitAlgebra OrbitAlgebra::build(const YoungSet& omega, long long max_points) {
    OrbitAlgebra alg;
    alg.omega_ = omega;
    alg.point_total_ = total_points(omega, max_points);
    for (const auto& t : omega.orbit_types)
        alg.points_.push_back(enumerate_points(omega.n, t));

    int k = alg.orbit_count();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (auto& m : margin_matrices(alg.orbit_type(a), alg.orbit_type(b))) {
                int idx = static_cast<int>(alg.classes_.size());
                alg.index_[{a, b, m}] = idx;
                alg.classes_.push_back(OrbitPairClass{a, b, std::move(m)});
            }

    alg.star_.resize(alg.classes_.size());
    alg.diag_class_.assign(static_cast<size_t>(k), -1);
    for (size_t c = 0; c < alg.classes_.size(); ++c) {
        const auto& cls = alg.classes_[c];
        size_t rows = cls.intersection.size();
        size_t cols = rows ? cls.intersection[0].size() : 0;
        IntMatrix t(cols, std::vector<int>(rows, 0));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) t[j][i] = cls.intersection[i][j];
        alg.star_[c] = alg.class_index(cls.beta, cls.alpha, t);
    }
    for (int a = 0; a < k; ++a) {
        // The diagonal pair (x, x) has the diagonal matrix of the type.
        const Partition& type = alg.orbit_type(a);
        IntMatrix d(static_cast<size_t>(type.length()),
                    std::vector<int>(static_cast<size_t>(type.length()), 0));
        for (int i = 0; i < type.length(); ++i) d[static_cast<size_t>(i)][static_cast<size_t>(i)] = type.part(i);
        alg.diag_class_[static_cast<size_t>(a)] = alg.class_index(a, a, d);
    }
    return alg;
}

int OrbitAlgebra::class_index(int alpha, int beta, const IntMatrix& m) const {
    auto it = index_.find({alpha, beta, m});
    if (it == index_.end()) throw domain_error("no such orbit pair class");
    return it->second;
}

int OrbitAlgebra::classify_pair(int alpha, const Tabloid& x, int beta,
                                const Tabloid& y) const {
    return class_index(alpha, beta,
                       intersection_matrix(x, orbit_type(alpha).length(), y,
                                           orbit_type(beta).length()));
}

std::pair<Tabloid, Tabloid> OrbitAlgebra::representative_pair(int c) const {
    const auto& cls = classes_[static_cast<size_t>(c)];
    Tabloid x = canonical_tabloid(orbit_type(cls.alpha));
    // Walk x's rows (consecutive label blocks) and hand each row's labels to
    // the second tabloid's rows, left to right, as the matrix prescribes.
    Tabloid y;
    y.row_of.resize(x.row_of.size());
    int e = 0;
    for (size_t a = 0; a < cls.intersection.size(); ++a)
        for (size_t b = 0; b < cls.intersection[a].size(); ++b)
            for (int k = 0; k < cls.intersection[a][b]; ++k)
                y.row_of[static_cast<size_t>(e++)] = static_cast<int>(b);
    return {std::move(x), std::move(y)};
}

int OrbitAlgebra::orbit_of_type(const Partition& lambda) const {
    for (int a = 0; a < orbit_count(); ++a)
        if (orbit_type(a) == lambda) return a;
    return -1;
}

AlgebraElement OrbitAlgebra::basis_element(int c) const {
    AlgebraElement e;
    e.coeffs[c] = 1;
    return e;
}

AlgebraElement OrbitAlgebra::xi_orbit(int alpha) const {
    return basis_element(diag_class_[static_cast<size_t>(alpha)]);
}

AlgebraElement OrbitAlgebra::xi_type(const Partition& lambda) const {
    int a = orbit_of_type(lambda);
    return a < 0 ? AlgebraElement{} : xi_orbit(a);
}

AlgebraElement OrbitAlgebra::prefix_idempotent(int k) const {
    if (k < 0 || k > orbit_count())
        throw domain_error("prefix length out of range");
    AlgebraElement e;
    for (int a = 0; a < k; ++a) e.coeffs[diag_class_[static_cast<size_t>(a)]] = 1;
    return e;
}

AlgebraElement OrbitAlgebra::identity() const {
    return prefix_idempotent(orbit_count());
}

AlgebraElement OrbitAlgebra::idempotent(const YoungSet& sub) const {
    if (sub.n != omega_.n)
        throw size_mismatch_error("sub-Young-set lives over a different n");
    std::vector<bool> used(static_cast<size_t>(orbit_count()), false);
    AlgebraElement e;
    for (const auto& t : sub.orbit_types) {
        int found = -1;
        for (int a = 0; a < orbit_count(); ++a)
            if (!used[static_cast<size_t>(a)] && orbit_type(a) == t) {
                found = a;
                break;
            }
        if (found < 0)
            throw orbit_not_in_omega_error("orbit of type " + t.to_string() +
                                           " is not available");
        used[static_cast<size_t>(found)] = true;
        e.coeffs[diag_class_[static_cast<size_t>(found)]] = 1;
    }
    return e;
}

AlgebraElement OrbitAlgebra::star(const AlgebraElement& a) const {
    AlgebraElement out;
    for (const auto& [c, v] : a.coeffs) out.coeffs[star_index(c)] = v;
    return out;
}

namespace {

// All (A, B, count) triples contributed by one class: fix its representative
// pair (x, y) and classify (x, z), (z, y) for every point z.
std::vector<std::pair<std::pair<int, int>, long long>> sweep_class(
    const OrbitAlgebra& alg, int c) {
    auto [x, y] = alg.representative_pair(c);
    const auto& cls = alg.classes()[static_cast<size_t>(c)];
    std::map<std::pair<int, int>, long long> local;
    for (int mid = 0; mid < alg.orbit_count(); ++mid) {
        for (const auto& z : alg.points(mid)) {
            int ia = alg.classify_pair(cls.alpha, x, mid, z);
            int ib = alg.classify_pair(mid, z, cls.beta, y);
            ++local[{ia, ib}];
        }
    }
    return {local.begin(), local.end()};
}

} // namespace

StructureTable build_structure_table(const OrbitAlgebra& alg, int threads) {
    int nc = alg.class_count();
    std::vector<std::vector<std::pair<std::pair<int, int>, long long>>> per_class(
        static_cast<size_t>(nc));
#ifdef _OPENMP
    if (threads != 1) {
        int want = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(want)
        for (int c = 0; c < nc; ++c) per_class[static_cast<size_t>(c)] = sweep_class(alg, c);
    } else
#endif
    {
        for (int c = 0; c < nc; ++c) per_class[static_cast<size_t>(c)] = sweep_class(alg, c);
    }
    // Merge in class order: identical output for any thread count.
    StructureTable table;
    for (int c = 0; c < nc; ++c)
        for (const auto& [ab, count] : per_class[static_cast<size_t>(c)])
            table.products[ab].emplace_back(c, count);
    return table;
}

StructureTable build_structure_table_reference(const OrbitAlgebra& alg) {
    StructureTable table;
    const auto& classes = alg.classes();
    int nc = alg.class_count();
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) {
            if (classes[static_cast<size_t>(a)].beta != classes[static_cast<size_t>(b)].alpha) continue;
            std::vector<std::pair<int, long long>> row;
            for (int c = 0; c < nc; ++c) {
                if (classes[static_cast<size_t>(c)].alpha != classes[static_cast<size_t>(a)].alpha) continue;
                if (classes[static_cast<size_t>(c)].beta != classes[static_cast<size_t>(b)].beta) continue;
                auto [x, y] = alg.representative_pair(c);
                long long count = 0;
                int mid = classes[static_cast<size_t>(a)].beta;
                for (const auto& z : alg.points(mid)) {
                    if (alg.classify_pair(classes[static_cast<size_t>(a)].alpha, x, mid, z) != a) continue;
                    if (alg.classify_pair(mid, z, classes[static_cast<size_t>(b)].beta, y) != b) continue;
                    ++count;
                }
                if (count > 0) row.emplace_back(c, count);
            }
            table.products[{a, b}] = std::move(row);
        }
    return table;
}

AlgebraElement multiply(const StructureTable& table, const AlgebraElement& a,
                        const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [ia, ca] : a.coeffs)
        for (const auto& [ib, cb] : b.coeffs) {
            auto it = table.products.find({ia, ib});
            if (it == table.products.end()) continue;
            Int s = ca * cb;
            for (const auto& [c, n] : it->second) {
                Int& slot = out.coeffs[c];
                slot += s * n;
                if (slot == 0) out.coeffs.erase(c);
            }
        }
    return out;
}

} // namespace young_endo
