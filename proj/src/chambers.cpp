#include "dpell/chambers.hpp"

#include <algorithm>
#include <map>

#include "dpell/errors.hpp"

namespace dpell {

std::vector<int> applicable_chamber_indices(const FibrationType& t) {
    std::vector<int> out;
    if (!t.mori_curves) return out;
    const std::size_t n = t.lattice().rank();
    for (int i = 1; i <= t.degree; ++i) {
        Vec hei(n, Int(0));
        hei[0] = 1;
        hei[static_cast<std::size_t>(i)] = -1;
        for (const auto& c : *t.mori_curves)
            if (c.coords == hei) {
                out.push_back(i);
                break;
            }
    }
    return out;
}

RationalCone chamber_Ni(const FibrationType& t, int i) {
    if (!t.finite_mw || t.degree != 4)
        throw DomainError("chamber_Ni: " + t.key() +
                          " is not a finite Mordell-Weil degree-4 type");
    auto valid = applicable_chamber_indices(t);
    if (std::find(valid.begin(), valid.end(), i) == valid.end())
        throw DomainError("chamber_Ni: N_" + std::to_string(i) + " is not defined for " +
                          t.key());
    const PicardLattice lat = t.lattice();
    std::vector<Vec> gens;
    for (const auto& idx : nef_index_sets(t))
        if (idx.count(i)) gens.push_back(f_class(lat, idx).coords);
    Vec h2e(lat.rank(), Int(0));
    h2e[0] = 1;
    h2e[static_cast<std::size_t>(i)] = -2;
    gens.push_back(std::move(h2e));
    return cone_from_generators(lat.rank(), gens);
}

CoverCertificate certify_cover(const std::vector<NamedChamber>& chambers,
                               const RationalCone& target) {
    CoverCertificate cert;
    const std::size_t n = target.ambient;

    cert.full_dimensional = target.is_full_dimensional();
    for (const auto& ch : chambers)
        if (!ch.cone.is_full_dimensional()) cert.full_dimensional = false;

    cert.contained = true;
    for (const auto& ch : chambers) {
        for (const auto& r : ch.cone.rays)
            if (!target.contains(r)) cert.contained = false;
        for (const auto& l : ch.cone.lineality)
            if (!target.contains(l) || !target.contains(vec_neg(l))) cert.contained = false;
    }

    cert.interior_disjoint = true;
    for (std::size_t a = 0; a < chambers.size(); ++a)
        for (std::size_t b = a + 1; b < chambers.size(); ++b) {
            RationalCone meet = intersect(chambers[a].cone, chambers[b].cone);
            if (meet.dim() == n) cert.interior_disjoint = false;
        }

    // Facet matching: every chamber facet lies on the boundary of the target
    // or is the facet of exactly one other chamber.
    struct FacetRecord {
        std::size_t chamber;
        RationalCone cone;
    };
    std::vector<FacetRecord> records;
    for (std::size_t a = 0; a < chambers.size(); ++a)
        for (const auto& f : chambers[a].cone.facets)
            records.push_back({a, face_of(chambers[a].cone, f)});

    auto on_target_boundary = [&](const RationalCone& facet) {
        for (const auto& g : target.facets) {
            bool all_tight = true;
            for (const auto& r : facet.rays)
                if (!dot(r, g).is_zero()) all_tight = false;
            for (const auto& l : facet.lineality)
                if (!dot(l, g).is_zero()) all_tight = false;
            if (all_tight) return true;
        }
        return false;
    };

    cert.facets_matched = true;
    std::vector<bool> used(records.size(), false);
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> same;
        for (std::size_t j = i; j < records.size(); ++j)
            if (!used[j] && records[j].cone == records[i].cone) same.push_back(j);
        for (auto j : same) used[j] = true;
        if (on_target_boundary(records[i].cone)) {
            if (same.size() != 1) cert.facets_matched = false;
            cert.boundary.push_back({records[i].chamber, records[i].cone});
        } else if (same.size() == 2) {
            cert.shared.push_back(
                {records[same[0]].chamber, records[same[1]].chamber, records[i].cone});
        } else {
            cert.facets_matched = false;
        }
    }
    return cert;
}

ChamberDecomposition mori_chambers(const FibrationType& t) {
    if (t.degree != 4 || !t.finite_mw || !t.mori_curves)
        throw DomainError("mori_chambers: " + t.key() +
                          " is not one of the finite Mordell-Weil degree-4 types");
    ChamberDecomposition out;
    out.type_key = t.key();
    out.cover_target = mov_cone(t);
    out.chambers.push_back({"N", nef_cone(t)});
    for (int i : applicable_chamber_indices(t))
        out.chambers.push_back({"N_" + std::to_string(i), chamber_Ni(t, i)});
    if (t.involution) {
        const std::string tag = "sigma" + t.name.substr(t.name.find('_') + 1) + "*";
        const std::size_t base = out.chambers.size();
        for (std::size_t k = 0; k < base; ++k)
            out.chambers.push_back({tag + "(" + out.chambers[k].name + ")",
                                    apply_matrix(*t.involution, out.chambers[k].cone)});
    }
    out.certificate = certify_cover(out.chambers, out.cover_target);
    if (!out.certificate.ok())
        throw DomainError("mori_chambers: cover certificate failed for " + t.key());
    return out;
}

CurveClass flop_image(const CurveClass& gamma, const Int& k, const CurveClass& c) {
    if (gamma.coords.size() != c.coords.size())
        throw InvalidInput("flop_image: curve lengths differ");
    if (k.is_negative()) throw InvalidInput("flop_image: k must be non-negative");
    return CurveClass(vec_add(gamma.coords, vec_scale(k, c.coords)));
}

RationalCone apply_matrix(const IntMat& m, const RationalCone& c) {
    if (!is_unimodular(m)) throw InvalidInput("apply_matrix: matrix is not unimodular");
    return image_cone(m, c);
}

IntMat X11Walker::sigma_basis_b() {
    IntMat s(3, 3);
    s.m = {vec_of({1, 2, 0}), vec_of({0, 1, 1}), vec_of({0, 0, 1})};
    return s;
}

IntMat X11Walker::basis_b_to_standard() {
    // columns: H - E_1 - E_2, E_2 - E_1, E_1 in the basis (H, E_1, E_2)
    IntMat b(3, 3);
    b.m = {vec_of({1, 0, 0}), vec_of({-1, -1, 1}), vec_of({-1, 1, 0})};
    return b;
}

IntMat X11Walker::gram_basis_b() {
    const IntMat b = basis_b_to_standard();
    const IntMat g = PicardLattice(2).gram();
    return b.transpose() * g * b;
}

IntMat X11Walker::sigma_power(long long k) {
    IntMat base = sigma_basis_b();
    if (k < 0) {
        // exact inverse of the unipotent matrix
        IntMat inv(3, 3);
        inv.m = {vec_of({1, -2, 2}), vec_of({0, 1, -1}), vec_of({0, 0, 1})};
        base = inv;
        k = -k;
    }
    IntMat acc = IntMat::identity(3);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Vec X11Walker::apply_power(long long k, const Vec& v) { return sigma_power(k).apply(v); }

std::vector<Vec> X11Walker::closed_form_columns(long long k) {
    const Int kk(k);
    std::vector<Vec> cols;
    cols.push_back(vec_of({1, 0, 0}));                                  // F
    cols.push_back({kk * kk + kk + Int(1), kk + Int(1), Int(1)});       // sigma^k(H - E_1)
    cols.push_back({kk * kk - kk + Int(1), kk, Int(1)});                // sigma^k(H - E_2)
    cols.push_back({Int(2) * kk * kk + Int(1), Int(2) * kk + Int(1), Int(2)}); // sigma^k(H)
    return cols;
}

RationalCone X11Walker::chamber(long long k) {
    constexpr long long kBound = 1000000;
    if (k > kBound || k < -kBound)
        throw InvalidInput("x11 walker: |k| exceeds the implementation bound 10^6");
    // Nef(X_11) in basis B: F, H - E_1, H - E_2, H
    const std::vector<Vec> nef_b = {vec_of({1, 0, 0}), vec_of({1, 1, 1}), vec_of({1, 0, 1}),
                                    vec_of({1, 1, 2})};
    const IntMat p = sigma_power(k);
    std::vector<Vec> gens;
    for (const auto& v : nef_b) gens.push_back(p.apply(v));
    RationalCone powered = cone_from_generators(3, gens);
    RationalCone closed = cone_from_generators(3, closed_form_columns(k));
    if (powered != closed)
        throw DomainError("x11 walker: matrix-power chamber disagrees with the closed form at k=" +
                          std::to_string(k));
    return powered;
}

RationalCone x11_deg2_chamber(long long k) { return X11Walker::chamber(k); }

} // namespace dpell
