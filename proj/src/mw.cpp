#include "dpell/mw.hpp"

#include "dpell/errors.hpp"

namespace dpell {

std::vector<DivisorClass> trivial_subgroup(const FibrationType& t) {
    std::vector<DivisorClass> gens;
    gens.push_back(t.lattice().fiber_class());
    gens.push_back(t.zero());
    for (const auto& v : t.verticals) gens.push_back(v);
    return gens;
}

static FgAbelianGroup quotient_by(const FibrationType& t, const DivisorClass& zero) {
    std::vector<Vec> gens;
    gens.push_back(t.lattice().fiber_class().coords);
    gens.push_back(zero.coords);
    for (const auto& v : t.verticals) gens.push_back(v.coords);
    return quotient(t.lattice().rank(), gens);
}

FgAbelianGroup mordell_weil(const FibrationType& t) { return quotient_by(t, t.zero()); }

FgAbelianGroup mordell_weil_with_section(const FibrationType& t, std::size_t section_index) {
    if (section_index >= t.sections.size())
        throw InvalidInput("mordell_weil_with_section: section index out of range");
    return quotient_by(t, t.sections[section_index]);
}

} // namespace dpell
