#pragma once

#include <string>
#include <vector>

#include "dpell/linalg.hpp"

namespace dpell {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    /// "0", "Z^2", "(Z/2)^2", "Z + Z/2" rendered with a direct-sum sign.
    std::string to_string() const;

    friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const FgAbelianGroup& a, const FgAbelianGroup& b) {
        return !(a == b);
    }
};

struct SmithResult {
    IntMat u; // unimodular row transform
    IntMat d; // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMat v; // unimodular column transform
};

/// Smith normal form: D = U * M * V with U, V unimodular.
SmithResult smith_normal_form(const IntMat& m);

/// Z^ambient_rank / <generators>, generators given as integer vectors.
FgAbelianGroup quotient(std::size_t ambient_rank, const std::vector<Vec>& generators);

} // namespace dpell
