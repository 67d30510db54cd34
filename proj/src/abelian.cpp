#include "dpell/abelian.hpp"

#include <algorithm>

#include "dpell/errors.hpp"

namespace dpell {

std::string FgAbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1)
        parts.push_back("Z");
    else if (free_rank > 1)
        parts.push_back("Z^" + std::to_string(free_rank));
    std::size_t i = 0;
    while (i < torsion.size()) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        std::string factor = "Z/" + torsion[i].to_string();
        if (j - i == 1)
            parts.push_back(factor);
        else
            parts.push_back("(" + factor + ")^" + std::to_string(j - i));
        i = j;
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out += " \xE2\x8A\x95 " + parts[k];
    return out;
}

SmithResult smith_normal_form(const IntMat& mat) {
    const std::size_t rows = mat.rows, cols = mat.cols;
    SmithResult res{IntMat::identity(rows), mat, IntMat::identity(cols)};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    const std::size_t t = std::min(rows, cols);
    for (std::size_t k = 0; k < t; ++k) {
        // move a minimal nonzero entry of the trailing block to (k, k)
        auto find_pivot = [&]() -> bool {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    if (d.m[i][j].is_zero()) continue;
                    if (bi == rows || d.m[i][j].abs() < d.m[bi][bj].abs()) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == rows) return false;
            if (bi != k) {
                d.swap_rows(k, bi);
                u.swap_rows(k, bi);
            }
            if (bj != k) {
                d.swap_cols(k, bj);
                v.swap_cols(k, bj);
            }
            return true;
        };
        if (!find_pivot()) break;

        while (true) {
            bool dirty = false;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (d.m[i][k].is_zero()) continue;
                Int q, r;
                Int::fdivmod(d.m[i][k], d.m[k][k], q, r);
                d.add_row_multiple(i, k, -q);
                u.add_row_multiple(i, k, -q);
                if (!d.m[i][k].is_zero()) {
                    d.swap_rows(k, i);
                    u.swap_rows(k, i);
                    dirty = true;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (d.m[k][j].is_zero()) continue;
                Int q, r;
                Int::fdivmod(d.m[k][j], d.m[k][k], q, r);
                d.add_col_multiple(j, k, -q);
                v.add_col_multiple(j, k, -q);
                if (!d.m[k][j].is_zero()) {
                    d.swap_cols(k, j);
                    v.swap_cols(k, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }

        // divisibility fix: pull any non-multiple into column k and repeat
        bool restart;
        do {
            restart = false;
            for (std::size_t i = k + 1; i < rows && !restart; ++i)
                for (std::size_t j = k + 1; j < cols && !restart; ++j) {
                    Int q, r;
                    Int::fdivmod(d.m[i][j], d.m[k][k], q, r);
                    if (!r.is_zero()) {
                        d.add_row_multiple(k, i, Int(1));
                        u.add_row_multiple(k, i, Int(1));
                        restart = true;
                    }
                }
            if (restart) {
                while (true) {
                    bool dirty = false;
                    for (std::size_t j = k + 1; j < cols; ++j) {
                        if (d.m[k][j].is_zero()) continue;
                        Int q, r;
                        Int::fdivmod(d.m[k][j], d.m[k][k], q, r);
                        d.add_col_multiple(j, k, -q);
                        v.add_col_multiple(j, k, -q);
                        if (!d.m[k][j].is_zero()) {
                            d.swap_cols(k, j);
                            v.swap_cols(k, j);
                            dirty = true;
                        }
                    }
                    for (std::size_t i = k + 1; i < rows; ++i) {
                        if (d.m[i][k].is_zero()) continue;
                        Int q, r;
                        Int::fdivmod(d.m[i][k], d.m[k][k], q, r);
                        d.add_row_multiple(i, k, -q);
                        u.add_row_multiple(i, k, -q);
                        if (!d.m[i][k].is_zero()) {
                            d.swap_rows(k, i);
                            u.swap_rows(k, i);
                            dirty = true;
                        }
                    }
                    if (!dirty) break;
                }
            }
        } while (restart);

        if (d.m[k][k].is_negative()) {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    return res;
}

FgAbelianGroup quotient(std::size_t ambient_rank, const std::vector<Vec>& generators) {
    for (const auto& g : generators)
        if (g.size() != ambient_rank)
            throw InvalidInput("quotient: generator length " + std::to_string(g.size()) +
                               " does not match ambient rank " + std::to_string(ambient_rank));
    IntMat m(generators.size(), ambient_rank);
    m.m = generators;
    if (generators.empty()) m = IntMat(0, ambient_rank);
    SmithResult s = smith_normal_form(m);
    FgAbelianGroup out;
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < std::min(s.d.rows, s.d.cols); ++k) {
        const Int& dk = s.d.m[k][k];
        if (dk.is_zero()) continue;
        ++nonzero;
        if (dk > Int(1)) out.torsion.push_back(dk);
    }
    out.free_rank = ambient_rank - nonzero;
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

} // namespace dpell
