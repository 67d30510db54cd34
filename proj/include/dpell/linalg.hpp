#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dpell/bigint.hpp"
#include "dpell/rational.hpp"

namespace dpell {

using Vec = std::vector<Int>;

Vec vec_of(std::initializer_list<long long> v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& a);

/// gcd of all entries (non-negative).
Int content(const Vec& a);
/// Divide by the content, preserving direction; the zero vector stays zero.
Vec primitive(const Vec& a);

bool lex_less(const Vec& a, const Vec& b);
void sort_vecs(std::vector<Vec>& vs);

std::string vec_to_string(const Vec& a);

/// Dense exact integer matrix.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Vec> m; // row-major

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c);
    static IntMat identity(std::size_t n);
    static IntMat from_rows(std::vector<Vec> rows);
    static IntMat diagonal(const Vec& d);

    Int& at(std::size_t i, std::size_t j) { return m[i][j]; }
    const Int& at(std::size_t i, std::size_t j) const { return m[i][j]; }

    IntMat transpose() const;
    Vec apply(const Vec& v) const; // M * v
    friend IntMat operator*(const IntMat& a, const IntMat& b);
    friend bool operator==(const IntMat& a, const IntMat& b);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c); // row dst += c * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
};

/// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& a);
bool is_unimodular(const IntMat& a);

std::size_t rank_of(const std::vector<Vec>& rows);
bool in_span(const Vec& v, const std::vector<Vec>& basis);

/// Saturated integer basis of {x : rows * x = 0}, HNF-canonical.
std::vector<Vec> kernel_basis(const std::vector<Vec>& rows, std::size_t ncols);

/// Canonical Hermite normal form basis of the row lattice (zero rows dropped,
/// positive pivots, entries above each pivot reduced into [0, pivot)).
std::vector<Vec> hnf_rows(std::vector<Vec> rows);

/// Component of v orthogonal to span(basis) over Q, scaled to a primitive
/// integer vector (zero if v lies in the span).
Vec project_off_span(const Vec& v, const std::vector<Vec>& basis);

} // namespace dpell
