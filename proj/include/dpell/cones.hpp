#pragma once

#include <set>
#include <utility>

#include "dpell/catalog.hpp"
#include "dpell/polycone.hpp"

namespace dpell {

/// F_I = H - sum_{i in I} E_i; I is a set of indices in {1, ..., d}.
DivisorClass f_class(const PicardLattice& lattice, const std::set<int>& idx);

/// Index pairs (i, j) of the exceptional vertical classes E_i - E_j of t.
std::vector<std::pair<int, int>> exceptional_verticals(const FibrationType& t);

/// Generators of the curve cone used to cut out the nef cone:
/// e_i for every section E_i, e_i - e_j for every exceptional vertical
/// E_i - E_j, and h - e_i for every index i.
std::vector<CurveClass> curve_cone_generators(const FibrationType& t);

/// The subsets I whose F_I pair non-negatively with every exceptional
/// vertical class, in lexicographic order.
std::vector<std::set<int>> nef_index_sets(const FibrationType& t);

/// Nef cone: the cone spanned by the admissible F_I.
RationalCone nef_cone(const FibrationType& t);

/// Nef cone computed the other way, as the dual of the curve cone above
/// under the divisor-curve pairing; equals nef_cone on every valid catalog.
RationalCone nef_cone_from_curves(const FibrationType& t);

struct NefDecomposition {
    Int coeff_h;                                 // coefficient of H (may be zero)
    std::vector<std::pair<std::set<int>, Int>> terms; // (I, coefficient of F_I), coefficients > 0
    Vec reconstruct(const PicardLattice& lattice) const;
    std::string to_string() const;
};

/// Writes D = a H + sum c_I F_I with non-negative coefficients, following the
/// staircase of multiplicities of D; throws DomainError naming the violated
/// curve class when D is outside the dual of the curve cone.
NefDecomposition nef_decompose(const FibrationType& t, const DivisorClass& d);

/// Effective cone (finite Mordell-Weil only): sections, verticals and F,
/// reduced to extremal rays.
RationalCone eff_cone(const FibrationType& t);

/// Moving cone (finite Mordell-Weil only): the dual of Eff under the
/// intersection form.
RationalCone mov_cone(const FibrationType& t);

} // namespace dpell
