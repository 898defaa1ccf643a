#include "young_endo/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace young_endo {

namespace {

// dst += s * src
void axpy(IntVec& dst, const Int& s, const IntVec& src) {
    if (s == 0) return;
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
}

// floor division for b > 0
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

int first_nonzero(const IntVec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

void check_width(const IntRows& rows, int cols) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != cols)
            throw size_mismatch_error("row width does not match the ambient dimension");
}

} // namespace

Int extended_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int old_r = a, r = b;
    Int old_s = 1, cur_s = 0;
    Int old_t = 0, cur_t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

Lattice::Lattice(int dim) : dim_(dim) {
    if (dim < 0) throw domain_error("negative ambient dimension");
}

Lattice Lattice::from_rows(int dim, const IntRows& rows) {
    Lattice lat(dim);
    for (const auto& r : rows) lat.add_generator(r);
    return lat;
}

bool Lattice::add_generator(IntVec v) {
    if (static_cast<int>(v.size()) != dim_)
        throw size_mismatch_error("generator width does not match the ambient dimension");
    bool changed = false;
    size_t ri = 0;
    while (true) {
        int col = first_nonzero(v);
        if (col < 0) break;
        while (ri < rows_.size() && pivots_[ri] < col) ++ri;
        if (ri < rows_.size() && pivots_[ri] == col) {
            const Int& a = rows_[ri][static_cast<size_t>(col)];
            const Int& b = v[static_cast<size_t>(col)];
            if (b % a == 0) {
                axpy(v, -(b / a), rows_[ri]);
            } else {
                Int s, t;
                Int g = extended_gcd(a, b, s, t);
                Int au = a / g, bu = b / g;
                IntVec merged(static_cast<size_t>(dim_), 0);
                axpy(merged, s, rows_[ri]);
                axpy(merged, t, v);
                IntVec rest(static_cast<size_t>(dim_), 0);
                axpy(rest, au, v);
                axpy(rest, -bu, rows_[ri]);
                rows_[ri] = std::move(merged);
                v = std::move(rest);
                changed = true;
            }
        } else {
            if (v[static_cast<size_t>(col)] < 0)
                for (auto& x : v) x = -x;
            rows_.insert(rows_.begin() + static_cast<long>(ri), std::move(v));
            pivots_.insert(pivots_.begin() + static_cast<long>(ri), col);
            changed = true;
            break;
        }
    }
    if (changed) canonical_ = false;
    return changed;
}

bool Lattice::contains(const IntVec& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw size_mismatch_error("vector width does not match the ambient dimension");
    IntVec w = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t p = static_cast<size_t>(pivots_[i]);
        if (w[p] == 0) continue;
        const Int& a = rows_[i][p];
        if (w[p] % a != 0) return false;
        axpy(w, -(w[p] / a), rows_[i]);
    }
    return first_nonzero(w) < 0;
}

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw size_mismatch_error("vector width does not match the ambient dimension");
    canonicalize();
    IntVec w = v;
    IntVec coords;
    coords.reserve(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t p = static_cast<size_t>(pivots_[i]);
        const Int& a = rows_[i][p];
        if (w[p] % a != 0) return std::nullopt;
        Int q = w[p] / a;
        axpy(w, -q, rows_[i]);
        coords.push_back(std::move(q));
    }
    if (first_nonzero(w) >= 0) return std::nullopt;
    return coords;
}

bool Lattice::is_sublattice_of(const Lattice& other) const {
    if (dim_ != other.dim_) return false;
    for (const auto& r : rows_)
        if (!other.contains(r)) return false;
    return true;
}

const IntRows& Lattice::basis() const {
    canonicalize();
    return rows_;
}

bool Lattice::operator==(const Lattice& other) const {
    if (dim_ != other.dim_) return false;
    canonicalize();
    other.canonicalize();
    return rows_ == other.rows_;
}

void Lattice::canonicalize() const {
    if (canonical_) return;
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = i + 1; j < rows_.size(); ++j) {
            size_t p = static_cast<size_t>(pivots_[j]);
            Int q = floor_div(rows_[i][p], rows_[j][p]);
            if (q != 0) axpy(rows_[i], -q, rows_[j]);
        }
    canonical_ = true;
}

TransformedHermite hermite_with_transform(const IntRows& m, int cols) {
    check_width(m, cols);
    size_t r = m.size();
    struct Entry {
        IntVec row;
        IntVec urow;
        int pivot;
    };
    std::vector<Entry> echelon;
    IntRows zero_urows;
    for (size_t k = 0; k < r; ++k) {
        IntVec v = m[k];
        IntVec uv(r, 0);
        uv[k] = 1;
        size_t ri = 0;
        bool placed = false;
        while (true) {
            int col = first_nonzero(v);
            if (col < 0) break;
            while (ri < echelon.size() && echelon[ri].pivot < col) ++ri;
            if (ri < echelon.size() && echelon[ri].pivot == col) {
                Entry& e = echelon[ri];
                const Int& a = e.row[static_cast<size_t>(col)];
                const Int& b = v[static_cast<size_t>(col)];
                if (b % a == 0) {
                    Int q = b / a;
                    axpy(v, -q, e.row);
                    axpy(uv, -q, e.urow);
                } else {
                    Int s, t;
                    Int g = extended_gcd(a, b, s, t);
                    Int au = a / g, bu = b / g;
                    IntVec nrow(static_cast<size_t>(cols), 0), nurow(r, 0);
                    axpy(nrow, s, e.row);
                    axpy(nrow, t, v);
                    axpy(nurow, s, e.urow);
                    axpy(nurow, t, uv);
                    IntVec vrow(static_cast<size_t>(cols), 0), vurow(r, 0);
                    axpy(vrow, au, v);
                    axpy(vrow, -bu, e.row);
                    axpy(vurow, au, uv);
                    axpy(vurow, -bu, e.urow);
                    e.row = std::move(nrow);
                    e.urow = std::move(nurow);
                    v = std::move(vrow);
                    uv = std::move(vurow);
                }
            } else {
                if (v[static_cast<size_t>(col)] < 0) {
                    for (auto& x : v) x = -x;
                    for (auto& x : uv) x = -x;
                }
                echelon.insert(echelon.begin() + static_cast<long>(ri),
                               Entry{std::move(v), std::move(uv), col});
                placed = true;
                break;
            }
        }
        if (!placed) zero_urows.push_back(std::move(uv));
    }
    // reduce entries above each pivot into [0, pivot)
    for (size_t i = 0; i < echelon.size(); ++i)
        for (size_t j = i + 1; j < echelon.size(); ++j) {
            size_t p = static_cast<size_t>(echelon[j].pivot);
            Int q = floor_div(echelon[i].row[p], echelon[j].row[p]);
            if (q != 0) {
                axpy(echelon[i].row, -q, echelon[j].row);
                axpy(echelon[i].urow, -q, echelon[j].urow);
            }
        }
    TransformedHermite out;
    out.rank = static_cast<int>(echelon.size());
    for (auto& e : echelon) {
        out.hermite.push_back(std::move(e.row));
        out.transform.push_back(std::move(e.urow));
    }
    for (auto& u : zero_urows) {
        out.hermite.emplace_back(static_cast<size_t>(cols), 0);
        out.transform.push_back(std::move(u));
    }
    return out;
}

IntRows left_kernel(const IntRows& m, int cols) {
    auto th = hermite_with_transform(m, cols);
    IntRows raw(th.transform.begin() + th.rank, th.transform.end());
    return Lattice::from_rows(static_cast<int>(m.size()), raw).basis();
}

SmithDecomposition smith_with_cobasis(IntRows m, int cols) {
    check_width(m, cols);
    size_t r = m.size();
    IntRows w(static_cast<size_t>(cols), IntVec(static_cast<size_t>(cols), 0));
    for (size_t i = 0; i < w.size(); ++i) w[i][i] = 1;

    auto swap_cols = [&](size_t a, size_t b) {
        for (auto& row : m) std::swap(row[a], row[b]);
        std::swap(w[a], w[b]);
    };
    // col_j -= q * col_t, mirrored on the cobasis
    auto col_axpy = [&](size_t j, const Int& q, size_t t) {
        if (q == 0) return;
        for (auto& row : m) row[j] -= q * row[t];
        axpy(w[t], q, w[j]);
    };

    std::vector<Int> divisors;
    size_t t = 0;
    while (t < r && t < static_cast<size_t>(cols)) {
        // best remaining pivot: smallest absolute value
        size_t bi = 0, bj = 0;
        bool found = false;
        for (size_t i = t; i < r; ++i)
            for (size_t j = t; j < static_cast<size_t>(cols); ++j)
                if (m[i][j] != 0 &&
                    (!found || abs(m[i][j]) < abs(m[bi][bj]))) {
                    bi = i;
                    bj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[t], m[bi]);
        if (bj != t) swap_cols(t, bj);

        while (true) {
            bool retry = false;
            for (size_t i = t + 1; i < r && !retry; ++i)
                if (m[i][t] % m[t][t] != 0) {
                    Int q = m[i][t] / m[t][t];
                    axpy(m[i], -q, m[t]);
                    std::swap(m[t], m[i]);
                    retry = true;
                }
            if (retry) continue;
            for (size_t j = t + 1; j < static_cast<size_t>(cols) && !retry; ++j)
                if (m[t][j] % m[t][t] != 0) {
                    Int q = m[t][j] / m[t][t];
                    col_axpy(j, q, t);
                    swap_cols(t, j);
                    retry = true;
                }
            if (retry) continue;
            for (size_t i = t + 1; i < r; ++i)
                axpy(m[i], -(m[i][t] / m[t][t]), m[t]);
            for (size_t j = t + 1; j < static_cast<size_t>(cols); ++j)
                col_axpy(j, m[t][j] / m[t][t], t);
            // pivot must divide the whole remaining block
            bool divides = true;
            for (size_t i = t + 1; i < r && divides; ++i)
                for (size_t j = t + 1; j < static_cast<size_t>(cols) && divides; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        axpy(m[t], Int(1), m[i]);
                        divides = false;
                    }
            if (divides) break;
        }
        if (m[t][t] < 0)
            for (auto& x : m[t]) x = -x;
        divisors.push_back(m[t][t]);
        ++t;
    }
    return {std::move(divisors), std::move(w)};
}

QuotientDecomposition quotient_basis(const Lattice& big, const Lattice& small) {
    if (big.dim() != small.dim())
        throw size_mismatch_error("quotient of lattices in different ambient spaces");
    const IntRows& b = big.basis();
    int rb = big.rank();
    IntRows t;
    for (const auto& s : small.basis()) {
        auto c = big.coordinates(s);
        if (!c) throw not_a_sublattice_error("quotient by a non-sublattice");
        t.push_back(std::move(*c));
    }
    auto sd = smith_with_cobasis(std::move(t), rb);
    QuotientDecomposition out;
    for (int i = 0; i < rb; ++i) {
        IntVec lift(static_cast<size_t>(big.dim()), 0);
        for (int j = 0; j < rb; ++j)
            axpy(lift, sd.cobasis[static_cast<size_t>(i)][static_cast<size_t>(j)],
                 b[static_cast<size_t>(j)]);
        if (i < static_cast<int>(sd.divisors.size())) {
            const Int& d = sd.divisors[static_cast<size_t>(i)];
            if (d > 1) {
                out.torsion_divisors.push_back(d);
                out.torsion_lifts.push_back(std::move(lift));
            }
        } else {
            out.free_lifts.push_back(std::move(lift));
        }
    }
    return out;
}

std::vector<Int> lattice_divisors(const Lattice& lat) {
    return smith_with_cobasis(lat.basis(), lat.dim()).divisors;
}

bool is_pure(const Lattice& lat) {
    for (const auto& d : lattice_divisors(lat))
        if (d != 1) return false;
    return true;
}

Lattice intersect_coordinate_span(const Lattice& lat, const std::vector<int>& coords) {
    std::vector<bool> inside(static_cast<size_t>(lat.dim()), false);
    for (int c : coords) {
        if (c < 0 || c >= lat.dim())
            throw domain_error("coordinate outside the ambient dimension");
        inside[static_cast<size_t>(c)] = true;
    }
    std::vector<size_t> outside;
    for (size_t i = 0; i < inside.size(); ++i)
        if (!inside[i]) outside.push_back(i);
    const IntRows& b = lat.basis();
    if (outside.empty()) return lat;
    IntRows restricted;
    restricted.reserve(b.size());
    for (const auto& row : b) {
        IntVec r;
        r.reserve(outside.size());
        for (size_t c : outside) r.push_back(row[c]);
        restricted.push_back(std::move(r));
    }
    IntRows kernel = left_kernel(restricted, static_cast<int>(outside.size()));
    Lattice out(lat.dim());
    for (const auto& k : kernel) {
        IntVec v(static_cast<size_t>(lat.dim()), 0);
        for (size_t i = 0; i < b.size(); ++i) axpy(v, k[i], b[i]);
        out.add_generator(std::move(v));
    }
    return out;
}

RowSolver::RowSolver(IntRows rows, int cols)
    : cols_(cols), row_count_(rows.size()), data_(hermite_with_transform(rows, cols)) {}

std::optional<IntVec> RowSolver::solve(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw size_mismatch_error("vector width does not match the solver");
    IntVec w = v;
    IntVec coeffs(row_count_, 0);
    for (int i = 0; i < data_.rank; ++i) {
        const IntVec& row = data_.hermite[static_cast<size_t>(i)];
        size_t p = static_cast<size_t>(first_nonzero(row));
        if (w[p] == 0) continue;
        if (w[p] % row[p] != 0) return std::nullopt;
        Int q = w[p] / row[p];
        axpy(w, -q, row);
        axpy(coeffs, q, data_.transform[static_cast<size_t>(i)]);
    }
    if (first_nonzero(w) >= 0) return std::nullopt;
    return coeffs;
}

} // namespace young_endo
