#include "dpell/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dpell/errors.hpp"

namespace dpell {

using nlohmann::json;

std::string FibrationType::key() const {
    std::string k = std::to_string(degree) + ":" + name;
    if (!variant.empty()) k += ":" + variant;
    return k;
}

TypeKey parse_type_key(const std::string& key) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : key) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 2 || parts.size() > 3 || parts[0].empty() || parts[1].empty())
        throw InvalidInput("bad type key '" + key + "' (expected degree:name[:variant])");
    TypeKey out;
    try {
        std::size_t used = 0;
        out.degree = std::stoi(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw InvalidInput("bad degree in type key '" + key + "'");
    }
    out.name = parts[1];
    out.variant = parts.size() == 3 ? parts[2] : "";
    return out;
}

namespace {

Vec vec_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + ": expected an integer array");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidInput(std::string(what) + ": non-integer entry");
        v.emplace_back(x.get<long long>());
    }
    return v;
}

FibrationType type_from_json(const json& j) {
    FibrationType t;
    t.degree = j.at("degree").get<int>();
    t.name = j.at("name").get<std::string>();
    if (j.contains("variant") && !j["variant"].is_null())
        t.variant = j["variant"].get<std::string>();
    if (j.contains("dimension_note") && !j["dimension_note"].is_null())
        t.dimension_note = j["dimension_note"].get<int>();
    for (const auto& s : j.at("sections")) t.sections.emplace_back(vec_from_json(s, "section"));
    for (const auto& v : j.at("verticals")) t.verticals.emplace_back(vec_from_json(v, "vertical"));
    t.zero_section = j.at("zero_section").get<std::size_t>();
    t.finite_mw = j.at("finite_mw").get<bool>();
    t.expected_mw.free_rank = j.at("expected_mw").at("rank").get<std::size_t>();
    for (const auto& d : j.at("expected_mw").at("torsion"))
        t.expected_mw.torsion.emplace_back(d.get<long long>());
    if (j.contains("mori_curves") && !j["mori_curves"].is_null()) {
        std::vector<CurveClass> curves;
        for (const auto& c : j["mori_curves"]) curves.emplace_back(vec_from_json(c, "mori curve"));
        t.mori_curves = std::move(curves);
    }
    if (j.contains("involution") && !j["involution"].is_null()) {
        std::vector<Vec> rows;
        for (const auto& r : j["involution"]) rows.push_back(vec_from_json(r, "involution row"));
        t.involution = IntMat::from_rows(std::move(rows));
    }
    return t;
}

} // namespace

Catalog Catalog::load(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("catalog JSON: ") + e.what());
    }
    Catalog cat;
    try {
        for (const auto& tj : j.at("types")) cat.types_.push_back(type_from_json(tj));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("catalog schema: ") + e.what());
    }
    cat.validate_and_sort();
    return cat;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open catalog file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load(ss.str());
}

const Catalog& Catalog::builtin() {
    static const Catalog cat = load(kDefaultCatalogJson);
    return cat;
}

void Catalog::validate_and_sort() {
    for (const auto& t : types_) {
        const std::string where = "catalog entry " + t.key();
        if (t.degree < 1 || t.degree > 4) throw InvalidInput(where + ": degree out of range");
        if (t.dimension_note < 3) throw InvalidInput(where + ": dimension must be at least 3");
        PicardLattice lat(t.degree);
        const DivisorClass f = lat.fiber_class();
        if (t.sections.empty()) throw InvalidInput(where + ": no sections listed");
        if (t.zero_section >= t.sections.size())
            throw InvalidInput(where + ": zero_section index out of range");
        for (const auto& s : t.sections) {
            if (s.coords.size() != lat.rank())
                throw InvalidInput(where + ": section " + divisor_to_string(s.coords) +
                                   " has wrong length");
            Int p = lat.pairing(s, f);
            if (p != Int(1))
                throw InvalidInput(where + ": section " + divisor_to_string(s.coords) +
                                   " pairs " + p.to_string() + " with F (expected 1)");
        }
        for (const auto& v : t.verticals) {
            if (v.coords.size() != lat.rank())
                throw InvalidInput(where + ": vertical " + divisor_to_string(v.coords) +
                                   " has wrong length");
            Int p = lat.pairing(v, f);
            if (!p.is_zero())
                throw InvalidInput(where + ": vertical " + divisor_to_string(v.coords) +
                                   " pairs " + p.to_string() + " with F (expected 0)");
        }
        if (t.finite_mw != (t.expected_mw.free_rank == 0))
            throw InvalidInput(where + ": finite_mw flag contradicts expected_mw rank");
        for (std::size_t i = 0; i < t.expected_mw.torsion.size(); ++i) {
            const Int& d = t.expected_mw.torsion[i];
            if (d <= Int(1)) throw InvalidInput(where + ": torsion factor must exceed 1");
            if (i > 0 && !(t.expected_mw.torsion[i] % t.expected_mw.torsion[i - 1]).is_zero())
                throw InvalidInput(where + ": torsion factors must divide in order");
        }
        if (t.mori_curves)
            for (const auto& c : *t.mori_curves)
                if (c.coords.size() != lat.rank())
                    throw InvalidInput(where + ": mori curve has wrong length");
        if (t.involution) {
            if (t.involution->rows != lat.rank() || t.involution->cols != lat.rank())
                throw InvalidInput(where + ": involution matrix has wrong shape");
            if (!is_unimodular(*t.involution))
                throw InvalidInput(where + ": involution matrix is not unimodular");
        }
    }
    std::sort(types_.begin(), types_.end(), [](const FibrationType& a, const FibrationType& b) {
        return std::tie(a.degree, a.name, a.variant) < std::tie(b.degree, b.name, b.variant);
    });
    for (std::size_t i = 1; i < types_.size(); ++i)
        if (types_[i].key() == types_[i - 1].key())
            throw InvalidInput("catalog: duplicate key " + types_[i].key());
}

bool Catalog::has(const std::string& key) const {
    TypeKey k = parse_type_key(key);
    for (const auto& t : types_)
        if (t.degree == k.degree && t.name == k.name && t.variant == k.variant) return true;
    return false;
}

const FibrationType& Catalog::get(const std::string& key) const {
    TypeKey k = parse_type_key(key);
    for (const auto& t : types_)
        if (t.degree == k.degree && t.name == k.name && t.variant == k.variant) return t;
    // allow "4:X_20" to resolve when exactly one variant exists
    const FibrationType* found = nullptr;
    if (k.variant.empty()) {
        for (const auto& t : types_)
            if (t.degree == k.degree && t.name == k.name) {
                if (found) throw DomainError("ambiguous type key '" + key +
                                             "': specify a variant (a or b)");
                found = &t;
            }
    }
    if (found) return *found;
    throw DomainError("unknown fibration type '" + key + "'");
}

std::vector<std::string> Catalog::list_keys(std::optional<int> degree,
                                            std::optional<bool> finite_mw) const {
    std::vector<std::string> out;
    for (const auto& t : types_) {
        if (degree && t.degree != *degree) continue;
        if (finite_mw && t.finite_mw != *finite_mw) continue;
        out.push_back(t.key());
    }
    return out;
}

} // namespace dpell
