#include "dpell/cones.hpp"

#include <algorithm>
#include <map>

#include "dpell/errors.hpp"

namespace dpell {

DivisorClass f_class(const PicardLattice& lattice, const std::set<int>& idx) {
    Vec v(lattice.rank(), Int(0));
    v[0] = 1;
    for (int i : idx) {
        if (i < 1 || i > lattice.degree()) throw InvalidInput("f_class: index out of range");
        v[static_cast<std::size_t>(i)] = -1;
    }
    return DivisorClass(std::move(v));
}

std::vector<std::pair<int, int>> exceptional_verticals(const FibrationType& t) {
    std::vector<std::pair<int, int>> out;
    const int d = t.degree;
    for (const auto& v : t.verticals) {
        if (!v.coords[0].is_zero()) continue;
        int pos = 0, neg = 0, other = 0;
        for (int i = 1; i <= d; ++i) {
            const Int& c = v.coords[static_cast<std::size_t>(i)];
            if (c == Int(1) && pos == 0)
                pos = i;
            else if (c == Int(-1) && neg == 0)
                neg = i;
            else if (!c.is_zero())
                ++other;
        }
        if (pos && neg && other == 0) out.emplace_back(pos, neg);
    }
    return out;
}

std::vector<CurveClass> curve_cone_generators(const FibrationType& t) {
    const std::size_t n = t.lattice().rank();
    const int d = t.degree;
    std::vector<CurveClass> out;
    for (const auto& s : t.sections) {
        // e_i for sections that are exceptional classes E_i
        for (int i = 1; i <= d; ++i) {
            Vec ei(n, Int(0));
            ei[static_cast<std::size_t>(i)] = 1;
            if (s.coords == ei) {
                out.emplace_back(ei);
                break;
            }
        }
    }
    for (auto [i, j] : exceptional_verticals(t)) {
        Vec v(n, Int(0));
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(j)] = -1;
        out.emplace_back(std::move(v));
    }
    for (int i = 1; i <= d; ++i) {
        Vec v(n, Int(0));
        v[0] = 1;
        v[static_cast<std::size_t>(i)] = -1;
        out.emplace_back(std::move(v));
    }
    return out;
}

std::vector<std::set<int>> nef_index_sets(const FibrationType& t) {
    const int d = t.degree;
    auto excep = exceptional_verticals(t);
    const PicardLattice lat = t.lattice();
    std::vector<std::set<int>> out;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::set<int> idx;
        for (int i = 1; i <= d; ++i)
            if (mask & (1 << (i - 1))) idx.insert(i);
        DivisorClass fi = f_class(lat, idx);
        bool ok = true;
        for (auto [i, j] : excep) {
            Vec v(lat.rank(), Int(0));
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(j)] = -1;
            if (lat.pairing(fi, DivisorClass(v)).is_negative()) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(idx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RationalCone nef_cone(const FibrationType& t) {
    const PicardLattice lat = t.lattice();
    std::vector<Vec> gens;
    for (const auto& idx : nef_index_sets(t)) gens.push_back(f_class(lat, idx).coords);
    return cone_from_generators(lat.rank(), gens);
}

RationalCone nef_cone_from_curves(const FibrationType& t) {
    const PicardLattice lat = t.lattice();
    std::vector<Vec> normals;
    for (const auto& c : curve_cone_generators(t))
        normals.push_back(lat.curve_pairing().apply(c.coords));
    return cone_from_inequalities(lat.rank(), normals);
}

Vec NefDecomposition::reconstruct(const PicardLattice& lattice) const {
    Vec out(lattice.rank(), Int(0));
    out[0] = coeff_h;
    for (const auto& [idx, c] : terms) {
        Vec fi = f_class(lattice, idx).coords;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * fi[k];
    }
    return out;
}

std::string NefDecomposition::to_string() const {
    std::string s;
    auto term = [&](const Int& c, const std::string& name) {
        if (c.is_zero()) return;
        if (!s.empty()) s += " + ";
        if (c != Int(1)) s += c.to_string() + "*";
        s += name;
    };
    term(coeff_h, "H");
    for (const auto& [idx, c] : terms) {
        std::string name = "F_{";
        bool first = true;
        for (int i : idx) {
            if (!first) name += ",";
            name += std::to_string(i);
            first = false;
        }
        name += "}";
        term(c, name);
    }
    return s.empty() ? "0" : s;
}

NefDecomposition nef_decompose(const FibrationType& t, const DivisorClass& d) {
    const PicardLattice lat = t.lattice();
    if (d.coords.size() != lat.rank())
        throw InvalidInput("nef_decompose: divisor length does not match lattice rank");
    for (const auto& c : curve_cone_generators(t)) {
        if (lat.div_curve_pairing(d, c).is_negative())
            throw DomainError("nef_decompose: " + divisor_to_string(d.coords) +
                              " pairs negatively with the curve class " +
                              curve_to_string(c.coords));
    }
    const Int alpha = d.coords[0];
    std::vector<Int> mult; // m_i = -coefficient of E_i
    for (std::size_t i = 1; i < lat.rank(); ++i) mult.push_back(-d.coords[i]);

    std::vector<Int> mus = mult;
    std::sort(mus.begin(), mus.end());
    mus.erase(std::unique(mus.begin(), mus.end()), mus.end());

    NefDecomposition out;
    Int prev = 0;
    Int top = 0;
    for (const auto& mu : mus) {
        if (mu > top) top = mu;
        Int coeff = mu - prev;
        if (!coeff.is_zero() && coeff.sign() > 0) {
            std::set<int> idx;
            for (std::size_t i = 0; i < mult.size(); ++i)
                if (mult[i] >= mu) idx.insert(static_cast<int>(i) + 1);
            out.terms.emplace_back(std::move(idx), coeff);
        }
        prev = mu;
    }
    out.coeff_h = alpha - top;
    Vec rec = out.reconstruct(lat);
    if (rec != d.coords)
        throw DomainError("nef_decompose: reconstruction mismatch for " +
                          divisor_to_string(d.coords));
    return out;
}

RationalCone eff_cone(const FibrationType& t) {
    if (!t.finite_mw)
        throw DomainError("infinite Mordell-Weil group: the effective cone of " + t.key() +
                          " is not generated by sections and verticals");
    const PicardLattice lat = t.lattice();
    std::vector<Vec> gens;
    for (const auto& s : t.sections) gens.push_back(s.coords);
    for (const auto& v : t.verticals) gens.push_back(v.coords);
    gens.push_back(lat.fiber_class().coords);
    return cone_from_generators(lat.rank(), gens);
}

RationalCone mov_cone(const FibrationType& t) {
    if (!t.finite_mw)
        throw DomainError("infinite Mordell-Weil group: moving cone is not rational polyhedral");
    return dual_cone(eff_cone(t), t.lattice().gram());
}

} // namespace dpell
