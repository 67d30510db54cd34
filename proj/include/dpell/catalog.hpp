#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpell/abelian.hpp"
#include "dpell/picard.hpp"

namespace dpell {

/// One fibration type: a catalog row with its sections, proper prime vertical
/// classes, expected Mordell-Weil group and, where known, the extremal curve
/// classes of the Mori cone and the Picard action of the Geiser involution.
struct FibrationType {
    int degree = 0;
    std::string name;
    std::string variant;     // "" when the type has a single row
    int dimension_note = 3;  // fibration dimension n >= 3; metadata only
    std::vector<DivisorClass> sections;
    std::vector<DivisorClass> verticals;
    std::size_t zero_section = 0;
    bool finite_mw = false;
    FgAbelianGroup expected_mw;
    std::optional<std::vector<CurveClass>> mori_curves;
    std::optional<IntMat> involution;

    std::string key() const;
    PicardLattice lattice() const { return PicardLattice(degree); }
    const DivisorClass& zero() const { return sections.at(zero_section); }
};

/// Parsed "degree:name" or "degree:name:variant" key.
struct TypeKey {
    int degree;
    std::string name;
    std::string variant;
};
TypeKey parse_type_key(const std::string& key);

class Catalog {
public:
    /// The embedded default catalog (every known type, variants included).
    static const Catalog& builtin();
    static Catalog load(const std::string& json_text);
    static Catalog load_file(const std::string& path);

    const std::vector<FibrationType>& types() const { return types_; }
    const FibrationType& get(const std::string& key) const;
    bool has(const std::string& key) const;

    std::vector<std::string> list_keys(std::optional<int> degree = std::nullopt,
                                       std::optional<bool> finite_mw = std::nullopt) const;

private:
    std::vector<FibrationType> types_;
    void validate_and_sort();
};

/// JSON text of the embedded default catalog (also shipped as data/catalog.json).
extern const char* const kDefaultCatalogJson;

} // namespace dpell
