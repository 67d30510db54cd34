#pragma once

#include "dpell/abelian.hpp"
#include "dpell/catalog.hpp"

namespace dpell {

/// Generators of the trivial subgroup T of Pic(X): the full fiber class F,
/// the zero section O, and every proper prime vertical class.
std::vector<DivisorClass> trivial_subgroup(const FibrationType& t);

/// Mordell-Weil group of the fibration: Pic(X) / T via Smith reduction.
FgAbelianGroup mordell_weil(const FibrationType& t);

/// Same quotient with an alternative choice of zero section.
FgAbelianGroup mordell_weil_with_section(const FibrationType& t, std::size_t section_index);

} // namespace dpell
