#include "dpell/linalg.hpp"

#include <algorithm>

#include "dpell/errors.hpp"

namespace dpell {

Vec vec_of(std::initializer_list<long long> v) {
    Vec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(x);
    return out;
}

static void check_same_size(const Vec& a, const Vec& b, const char* op) {
    if (a.size() != b.size())
        throw InvalidInput(std::string(op) + ": vector lengths differ (" +
                           std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

Vec vec_add(const Vec& a, const Vec& b) {
    check_same_size(a, b, "vec_add");
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_size(a, b, "vec_sub");
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_neg(const Vec& a) {
    Vec out(a);
    for (auto& x : out) x = -x;
    return out;
}

Vec vec_scale(const Int& c, const Vec& a) {
    Vec out(a);
    for (auto& x : out) x *= c;
    return out;
}

Int dot(const Vec& a, const Vec& b) {
    check_same_size(a, b, "dot");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Int content(const Vec& a) {
    Int g = 0;
    for (const auto& x : a) g = gcd(g, x);
    return g;
}

Vec primitive(const Vec& a) {
    Int g = content(a);
    if (g.is_zero() || g == Int(1)) return a;
    Vec out(a);
    for (auto& x : out) x /= g;
    return out;
}

bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = Int::cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

void sort_vecs(std::vector<Vec>& vs) { std::sort(vs.begin(), vs.end(), lex_less); }

std::string vec_to_string(const Vec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].to_string();
    }
    return s + ")";
}

IntMat::IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), m(r, Vec(c, Int(0))) {}

IntMat IntMat::identity(std::size_t n) {
    IntMat out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.m[i][i] = 1;
    return out;
}

IntMat IntMat::from_rows(std::vector<Vec> rows_in) {
    IntMat out;
    out.rows = rows_in.size();
    out.cols = rows_in.empty() ? 0 : rows_in[0].size();
    for (const auto& r : rows_in)
        if (r.size() != out.cols) throw InvalidInput("IntMat::from_rows: ragged rows");
    out.m = std::move(rows_in);
    return out;
}

IntMat IntMat::diagonal(const Vec& d) {
    IntMat out(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out.m[i][i] = d[i];
    return out;
}

IntMat IntMat::transpose() const {
    IntMat out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.m[j][i] = m[i][j];
    return out;
}

Vec IntMat::apply(const Vec& v) const {
    if (v.size() != cols) throw InvalidInput("IntMat::apply: size mismatch");
    Vec out(rows, Int(0));
    for (std::size_t i = 0; i < rows; ++i) out[i] = dot(m[i], v);
    return out;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols != b.rows) throw InvalidInput("matrix product: size mismatch");
    IntMat out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.m[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out.m[i][j] += a.m[i][k] * b.m[k][j];
        }
    return out;
}

bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.m == b.m;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] += c * m[src][j];
}

void IntMat::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] += c * m[i][src];
}

void IntMat::negate_row(std::size_t i) {
    for (auto& x : m[i]) x = -x;
}

void IntMat::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = -m[i][j];
}

Int det(const IntMat& a) {
    if (a.rows != a.cols) throw InvalidInput("det: matrix not square");
    std::size_t n = a.rows;
    if (n == 0) return 1;
    IntMat w = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && w.m[p][k].is_zero()) ++p;
            if (p == n) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w.m[i][j] = (w.m[i][j] * w.m[k][k] - w.m[i][k] * w.m[k][j]) / prev;
            }
            w.m[i][k] = 0;
        }
        prev = w.m[k][k];
    }
    return sign * w.m[n - 1][n - 1];
}

bool is_unimodular(const IntMat& a) {
    if (a.rows != a.cols) return false;
    Int d = det(a);
    return d == Int(1) || d == Int(-1);
}

namespace {

using RatVec = std::vector<Rational>;

RatVec to_rat(const Vec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

// Reduced row echelon form over Q; returns pivot column per row.
std::vector<std::size_t> rref(std::vector<RatVec>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = Rational(Int(1)) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

} // namespace

std::size_t rank_of(const std::vector<Vec>& rows_in) {
    // fraction-free elimination with per-row primitive reduction
    std::vector<Vec> rows;
    for (const auto& r : rows_in) {
        Vec p = primitive(r);
        if (!is_zero_vec(p)) rows.push_back(std::move(p));
    }
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const Vec pr = rows[rank];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            Int g = gcd(pr[c], rows[i][c]);
            Int fa = rows[i][c] / g, fb = pr[c] / g;
            for (std::size_t j = 0; j < ncols; ++j)
                rows[i][j] = rows[i][j] * fb - pr[j] * fa;
            rows[i] = primitive(rows[i]);
        }
        ++rank;
    }
    return rank;
}

bool in_span(const Vec& v, const std::vector<Vec>& basis) {
    if (is_zero_vec(v)) return true;
    std::vector<Vec> with = basis;
    with.push_back(v);
    return rank_of(with) == rank_of(basis);
}

std::vector<Vec> kernel_basis(const std::vector<Vec>& rows, std::size_t ncols) {
    for (const auto& r : rows)
        if (r.size() != ncols) throw InvalidInput("kernel_basis: ragged rows");
    // Unimodular column reduction M U = [H | 0]; the kernel columns of U are
    // a basis of the full (saturated) integer kernel lattice.
    std::vector<Vec> cols(ncols, Vec(rows.size(), Int(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) cols[j][i] = rows[i][j];
    std::vector<Vec> u;
    for (std::size_t j = 0; j < ncols; ++j) {
        Vec e(ncols, Int(0));
        e[j] = 1;
        u.push_back(std::move(e));
    }
    std::size_t piv = 0;
    for (std::size_t i = 0; i < rows.size() && piv < ncols; ++i) {
        while (true) {
            std::size_t best = ncols;
            for (std::size_t j = piv; j < ncols; ++j) {
                if (cols[j][i].is_zero()) continue;
                if (best == ncols || cols[j][i].abs() < cols[best][i].abs()) best = j;
            }
            if (best == ncols) break; // row i already clear
            std::swap(cols[piv], cols[best]);
            std::swap(u[piv], u[best]);
            bool clear = true;
            for (std::size_t j = piv + 1; j < ncols; ++j) {
                if (cols[j][i].is_zero()) continue;
                Int q = cols[j][i] / cols[piv][i];
                if (!q.is_zero()) {
                    cols[j] = vec_sub(cols[j], vec_scale(q, cols[piv]));
                    u[j] = vec_sub(u[j], vec_scale(q, u[piv]));
                }
                if (!cols[j][i].is_zero()) clear = false;
            }
            if (clear) {
                ++piv;
                break;
            }
        }
    }
    std::vector<Vec> out(u.begin() + static_cast<std::ptrdiff_t>(piv), u.end());
    return hnf_rows(std::move(out));
}

std::vector<Vec> hnf_rows(std::vector<Vec> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_vec), rows.end());
    if (rows.empty()) return rows;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        // Euclid on column c among rows r..
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c].is_zero()) continue;
                if (best == rows.size() || rows[i][c].abs() < rows[best][c].abs()) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool all_clear = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c].is_zero()) continue;
                Int q = rows[i][c] / rows[r][c]; // truncated; iterate until clear
                if (!q.is_zero())
                    for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
                if (!rows[i][c].is_zero()) all_clear = false;
            }
            if (all_clear) break;
        }
        if (r < rows.size() && !rows[r][c].is_zero()) {
            if (rows[r][c].is_negative())
                for (auto& x : rows[r]) x = -x;
            for (std::size_t i = 0; i < r; ++i) {
                Int q, rem;
                Int::fdivmod(rows[i][c], rows[r][c], q, rem);
                if (!q.is_zero())
                    for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

Vec project_off_span(const Vec& v, const std::vector<Vec>& basis) {
    if (basis.empty()) return primitive(v);
    std::size_t n = v.size();
    // Gram-Schmidt over Q on the basis, then subtract projections.
    std::vector<RatVec> ortho;
    for (const auto& b : basis) {
        RatVec cur = to_rat(b);
        for (const auto& o : ortho) {
            Rational num, den;
            for (std::size_t i = 0; i < n; ++i) {
                num += cur[i] * o[i];
                den += o[i] * o[i];
            }
            if (den.is_zero()) continue;
            Rational f = num / den;
            for (std::size_t i = 0; i < n; ++i) cur[i] -= f * o[i];
        }
        bool zero = true;
        for (const auto& x : cur)
            if (!x.is_zero()) zero = false;
        if (!zero) ortho.push_back(std::move(cur));
    }
    RatVec w = to_rat(v);
    for (const auto& o : ortho) {
        Rational num, den;
        for (std::size_t i = 0; i < n; ++i) {
            num += w[i] * o[i];
            den += o[i] * o[i];
        }
        Rational f = num / den;
        for (std::size_t i = 0; i < n; ++i) w[i] -= f * o[i];
    }
    Int lcm = 1;
    for (const auto& q : w) lcm = lcm / gcd(lcm, q.den()) * q.den();
    Vec out(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) out[i] = w[i].num() * (lcm / w[i].den());
    return primitive(out);
}

} // namespace dpell
