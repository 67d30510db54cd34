#pragma once

#include <string>

#include "dpell/linalg.hpp"

namespace dpell {

/// Divisor class in the basis (H, E_1, ..., E_d).
struct DivisorClass {
    Vec coords;
    DivisorClass() = default;
    explicit DivisorClass(Vec c) : coords(std::move(c)) {}
    DivisorClass(std::initializer_list<long long> c) : coords(vec_of(c)) {}
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coords == b.coords;
    }
};

/// Curve class in the dual basis (h, e_1, ..., e_d).
struct CurveClass {
    Vec coords;
    CurveClass() = default;
    explicit CurveClass(Vec c) : coords(std::move(c)) {}
    CurveClass(std::initializer_list<long long> c) : coords(vec_of(c)) {}
    friend bool operator==(const CurveClass& a, const CurveClass& b) {
        return a.coords == b.coords;
    }
};

/// Picard lattice of a degree-d del Pezzo elliptic variety: rank d+1,
/// intersection form diagonal (d, -1, ..., -1), signature (1, d).
class PicardLattice {
public:
    explicit PicardLattice(int degree);

    int degree() const { return degree_; }
    std::size_t rank() const { return static_cast<std::size_t>(degree_) + 1; }

    IntMat gram() const;
    /// Pairing matrix between divisor and curve classes: diag(1, -1, ..., -1).
    IntMat curve_pairing() const;

    Int pairing(const DivisorClass& a, const DivisorClass& b) const;
    Int div_curve_pairing(const DivisorClass& d, const CurveClass& c) const;

    /// F = H - E_1 - ... - E_d = -K_X / (n-1).
    DivisorClass fiber_class() const;
    /// F formed from only the first r exceptional classes (blow-up at r points).
    DivisorClass fiber_class_r(int r) const;

private:
    int degree_;
    void check_len(const Vec& v, const char* what) const;
};

enum class RootLabelKind { A, ATilde };

/// Classification of the stated basis of F^perp for a blow-up at r points.
struct RootTypeResult {
    RootLabelKind kind;
    int index;                 // A_index or A~_index
    std::string label;         // "A1", "A~3", ...
    std::vector<Vec> basis;    // E_1-E_2, ..., E_{r-1}-E_r (plus F when r = d)
    IntMat gram;               // Gram matrix of `basis` under the lattice form
    std::vector<Vec> root_basis; // basis realizing the Cartan-negative matrix
    IntMat cartan_gram;        // Gram of root_basis; equals minus the Cartan matrix
    Vec radical;               // generator of the radical (empty in the A case)
};

/// Builds E_1-E_2, ..., E_{r-1}-E_r (plus F when r = d), classifies the
/// resulting lattice as A_{r-1} (negative definite) or A~_{d-1} (negative
/// semidefinite with one-dimensional radical spanned by F).
RootTypeResult f_perp_root_type(const PicardLattice& lattice, int r);

std::string divisor_to_string(const Vec& coords);
std::string curve_to_string(const Vec& coords);

} // namespace dpell
