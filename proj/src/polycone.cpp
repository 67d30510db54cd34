#include "dpell/polycone.hpp"

#include <algorithm>

#include "dpell/errors.hpp"

namespace dpell {

namespace {

// Incremental double description state for {x : x.a >= 0 / x.a = 0, a processed}.
// Invariants kept after every insertion:
//  - lin is a basis of the current lineality space (all processed normals
//    vanish on it);
//  - rays are primitive, reduced modulo lin, pairwise distinct, and extremal
//    (tight-normal rank = ambient - dim lin - 1).
struct DDState {
    std::size_t n;
    std::vector<Vec> lin;
    std::vector<Vec> rays;
    std::vector<Vec> normals;   // every processed constraint normal
    std::vector<bool> is_eq;

    explicit DDState(std::size_t ambient) : n(ambient) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n, Int(0));
            e[i] = 1;
            lin.push_back(std::move(e));
        }
    }

    void reduce() {
        // canonical representatives modulo the lineality space
        std::vector<Vec> cleaned;
        for (const auto& r : rays) {
            Vec p = project_off_span(r, lin);
            if (!is_zero_vec(p)) cleaned.push_back(std::move(p));
        }
        std::sort(cleaned.begin(), cleaned.end(), lex_less);
        cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());

        if (normals.empty()) {
            rays = std::move(cleaned);
            return;
        }
        const std::size_t target = n - lin.size() - 1;
        std::vector<Vec> kept;
        for (const auto& r : cleaned) {
            std::vector<Vec> tight;
            for (std::size_t k = 0; k < normals.size(); ++k)
                if (is_eq[k] || dot(r, normals[k]).is_zero()) tight.push_back(normals[k]);
            if (rank_of(tight) == target) kept.push_back(r);
        }
        rays = std::move(kept);
    }

    void insert(const Vec& a, bool eq) {
        if (is_zero_vec(a)) return;
        normals.push_back(a);
        is_eq.push_back(eq);

        // lineality pivot: one basis vector leaves the lineality space
        std::size_t piv = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (!dot(lin[i], a).is_zero()) {
                piv = i;
                break;
            }
        if (piv != lin.size()) {
            Vec l0 = lin[piv];
            Int d0 = dot(l0, a);
            std::vector<Vec> newlin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == piv) continue;
                Vec adj = vec_sub(vec_scale(d0, lin[i]), vec_scale(dot(lin[i], a), l0));
                adj = primitive(adj);
                if (!is_zero_vec(adj)) newlin.push_back(std::move(adj));
            }
            lin = std::move(newlin);
            Int d0abs = d0.abs();
            Int sg = d0.is_negative() ? Int(-1) : Int(1);
            for (auto& r : rays) {
                r = primitive(vec_sub(vec_scale(d0abs, r), vec_scale(sg * dot(r, a), l0)));
            }
            if (!eq) rays.push_back(d0.is_negative() ? vec_neg(l0) : l0);
            reduce();
            return;
        }

        // lineality already orthogonal: split rays by sign
        std::vector<Vec> pos, zero, neg;
        for (const auto& r : rays) {
            int s = dot(r, a).sign();
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                zero.push_back(r);
        }
        std::vector<Vec> next = zero;
        if (!eq)
            for (const auto& p : pos) next.push_back(p);
        for (const auto& p : pos)
            for (const auto& m : neg) {
                Vec w = vec_sub(vec_scale(dot(p, a), m), vec_scale(dot(m, a), p));
                w = primitive(w);
                if (!is_zero_vec(w)) next.push_back(std::move(w));
            }
        rays = std::move(next);
        reduce();
    }
};

// V-representation of {x : x.g >= 0 for g in ineqs, x.e = 0 for e in eqs}.
void dd_solve(std::size_t n, const std::vector<Vec>& ineqs, const std::vector<Vec>& eqs,
              std::vector<Vec>& rays_out, std::vector<Vec>& lin_out) {
    DDState st(n);
    for (const auto& e : eqs) st.insert(e, true);
    for (const auto& g : ineqs) st.insert(g, false);
    // canonical lineality: saturated kernel of all normals, HNF form
    std::vector<Vec> normals = st.normals;
    lin_out = normals.empty() ? hnf_rows(st.lin) : kernel_basis(normals, n);
    std::vector<Vec> rays;
    for (const auto& r : st.rays) {
        Vec p = project_off_span(r, lin_out);
        if (!is_zero_vec(p)) rays.push_back(std::move(p));
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    rays_out = std::move(rays);
}

void check_ambient(std::size_t n, const std::vector<Vec>& vs, const char* what) {
    for (const auto& v : vs)
        if (v.size() != n)
            throw InvalidInput(std::string(what) + ": vector length " + std::to_string(v.size()) +
                               " does not match ambient rank " + std::to_string(n));
}

} // namespace

std::size_t RationalCone::dim() const {
    std::vector<Vec> all = rays;
    all.insert(all.end(), lineality.begin(), lineality.end());
    return rank_of(all);
}

bool RationalCone::contains(const Vec& x) const {
    if (x.size() != ambient) throw InvalidInput("RationalCone::contains: length mismatch");
    for (const auto& f : facets)
        if (dot(x, f).is_negative()) return false;
    std::vector<Vec> all = rays;
    all.insert(all.end(), lineality.begin(), lineality.end());
    return in_span(x, all);
}

RationalCone cone_from_generators(std::size_t ambient, const std::vector<Vec>& generators,
                                  const std::vector<Vec>& lineality_generators) {
    check_ambient(ambient, generators, "cone_from_generators");
    check_ambient(ambient, lineality_generators, "cone_from_generators");
    RationalCone c;
    c.ambient = ambient;
    std::vector<Vec> dual_lin;
    dd_solve(ambient, generators, lineality_generators, c.facets, dual_lin);
    std::vector<Vec> ray_lin;
    dd_solve(ambient, c.facets, dual_lin, c.rays, c.lineality);
    return c;
}

RationalCone cone_from_inequalities(std::size_t ambient, const std::vector<Vec>& inequalities,
                                    const std::vector<Vec>& equations) {
    check_ambient(ambient, inequalities, "cone_from_inequalities");
    check_ambient(ambient, equations, "cone_from_inequalities");
    RationalCone c;
    c.ambient = ambient;
    dd_solve(ambient, inequalities, equations, c.rays, c.lineality);
    std::vector<Vec> dual_lin;
    dd_solve(ambient, c.rays, c.lineality, c.facets, dual_lin);
    return c;
}

RationalCone dual_cone(const RationalCone& c) {
    // {x : x . r >= 0 on rays, x . l = 0 on the lineality space}
    return cone_from_inequalities(c.ambient, c.rays, c.lineality);
}

RationalCone dual_cone(const RationalCone& c, const IntMat& pairing) {
    if (pairing.rows != c.ambient || pairing.cols != c.ambient)
        throw InvalidInput("dual_cone: pairing matrix size does not match ambient rank");
    // x^T P r >= 0 is the standard inequality with normal P r
    std::vector<Vec> ineqs, eqs;
    for (const auto& r : c.rays) ineqs.push_back(pairing.apply(r));
    for (const auto& l : c.lineality) eqs.push_back(pairing.apply(l));
    return cone_from_inequalities(c.ambient, ineqs, eqs);
}

std::vector<Vec> extremal_rays(std::size_t ambient, const std::vector<Vec>& vectors) {
    return cone_from_generators(ambient, vectors).rays;
}

std::vector<Vec> span_equations(const RationalCone& c) {
    std::vector<Vec> all = c.rays;
    all.insert(all.end(), c.lineality.begin(), c.lineality.end());
    if (all.empty()) return hnf_rows(IntMat::identity(c.ambient).m);
    return kernel_basis(all, c.ambient);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
    if (a.ambient != b.ambient) throw InvalidInput("intersect: ambient ranks differ");
    std::vector<Vec> ineqs = a.facets;
    ineqs.insert(ineqs.end(), b.facets.begin(), b.facets.end());
    std::vector<Vec> eqs = span_equations(a);
    auto eb = span_equations(b);
    eqs.insert(eqs.end(), eb.begin(), eb.end());
    return cone_from_inequalities(a.ambient, ineqs, eqs);
}

RationalCone face_of(const RationalCone& c, const Vec& normal) {
    std::vector<Vec> eqs = span_equations(c);
    eqs.push_back(normal);
    return cone_from_inequalities(c.ambient, c.facets, eqs);
}

RationalCone image_cone(const IntMat& m, const RationalCone& c) {
    if (m.cols != c.ambient) throw InvalidInput("image_cone: matrix size mismatch");
    std::vector<Vec> gens, lins;
    for (const auto& r : c.rays) gens.push_back(m.apply(r));
    for (const auto& l : c.lineality) lins.push_back(m.apply(l));
    return cone_from_generators(m.rows, gens, lins);
}

} // namespace dpell
