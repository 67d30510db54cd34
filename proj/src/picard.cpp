#include "dpell/picard.hpp"

#include "dpell/errors.hpp"

namespace dpell {

PicardLattice::PicardLattice(int degree) : degree_(degree) {
    if (degree < 1 || degree > 4)
        throw InvalidInput("PicardLattice: degree must be in {1,2,3,4}, got " +
                           std::to_string(degree));
}

void PicardLattice::check_len(const Vec& v, const char* what) const {
    if (v.size() != rank())
        throw InvalidInput(std::string(what) + ": expected length " + std::to_string(rank()) +
                           ", got " + std::to_string(v.size()));
}

IntMat PicardLattice::gram() const {
    Vec d(rank(), Int(-1));
    d[0] = degree_;
    return IntMat::diagonal(d);
}

IntMat PicardLattice::curve_pairing() const {
    Vec d(rank(), Int(-1));
    d[0] = 1;
    return IntMat::diagonal(d);
}

Int PicardLattice::pairing(const DivisorClass& a, const DivisorClass& b) const {
    check_len(a.coords, "pairing (first argument)");
    check_len(b.coords, "pairing (second argument)");
    Int s = Int(degree_) * a.coords[0] * b.coords[0];
    for (std::size_t i = 1; i < rank(); ++i) s -= a.coords[i] * b.coords[i];
    return s;
}

Int PicardLattice::div_curve_pairing(const DivisorClass& d, const CurveClass& c) const {
    check_len(d.coords, "div_curve_pairing (divisor)");
    check_len(c.coords, "div_curve_pairing (curve)");
    Int s = d.coords[0] * c.coords[0];
    for (std::size_t i = 1; i < rank(); ++i) s -= d.coords[i] * c.coords[i];
    return s;
}

DivisorClass PicardLattice::fiber_class() const { return fiber_class_r(degree_); }

DivisorClass PicardLattice::fiber_class_r(int r) const {
    if (r < 1 || r > degree_)
        throw InvalidInput("fiber_class_r: r must be in [1, degree]");
    Vec v(rank(), Int(0));
    v[0] = 1;
    for (int i = 1; i <= r; ++i) v[static_cast<std::size_t>(i)] = -1;
    return DivisorClass(std::move(v));
}

RootTypeResult f_perp_root_type(const PicardLattice& lattice, int r) {
    const int d = lattice.degree();
    if (r <= 1 || r > d)
        throw InvalidInput("f_perp_root_type: r must satisfy 1 < r <= degree");

    const std::size_t n = lattice.rank();
    RootTypeResult out;
    for (int i = 1; i < r; ++i) {
        Vec v(n, Int(0));
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(i) + 1] = -1;
        out.basis.push_back(std::move(v));
    }
    const bool tilde = (r == d);
    if (tilde) out.basis.push_back(lattice.fiber_class().coords);

    auto gram_of = [&](const std::vector<Vec>& vs) {
        IntMat g(vs.size(), vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j)
                g.m[i][j] = lattice.pairing(DivisorClass(vs[i]), DivisorClass(vs[j]));
        return g;
    };
    out.gram = gram_of(out.basis);

    // Definiteness of the (negated) Gram via leading principal minors.
    const std::size_t k = out.basis.size();
    IntMat neg = out.gram;
    for (auto& row : neg.m)
        for (auto& x : row) x = -x;
    bool positive_definite = true;
    for (std::size_t t = 1; t <= k; ++t) {
        IntMat lead(t, t);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) lead.m[i][j] = neg.m[i][j];
        if (det(lead).sign() <= 0) positive_definite = false;
    }
    std::size_t grank = rank_of(out.gram.m);

    if (positive_definite) {
        out.kind = RootLabelKind::A;
        out.index = r - 1;
        out.label = "A" + std::to_string(out.index);
        out.root_basis = out.basis;
        out.cartan_gram = out.gram;
    } else if (grank + 1 == k && tilde) {
        out.kind = RootLabelKind::ATilde;
        out.index = d - 1;
        out.label = "A~" + std::to_string(out.index);
        out.radical = lattice.fiber_class().coords;
        // replace F by the affine root F - E_1 + E_r, which closes the cycle
        out.root_basis = out.basis;
        Vec affine = lattice.fiber_class().coords;
        affine[1] -= 1;
        affine[static_cast<std::size_t>(r)] += 1;
        out.root_basis.back() = std::move(affine);
        out.cartan_gram = gram_of(out.root_basis);
    } else {
        throw DomainError("f_perp_root_type: unexpected Gram signature for degree " +
                          std::to_string(d) + ", r = " + std::to_string(r));
    }
    return out;
}

namespace {

std::string terms_to_string(const Vec& coords, const std::string& head,
                            const std::string& stem) {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Int& c = coords[i];
        if (c.is_zero()) continue;
        std::string name = i == 0 ? head : stem + std::to_string(i);
        Int a = c.abs();
        std::string coef = a == Int(1) ? "" : a.to_string();
        if (s.empty())
            s += (c.is_negative() ? "-" : "") + coef + name;
        else
            s += (c.is_negative() ? "-" : "+") + coef + name;
    }
    return s.empty() ? "0" : s;
}

} // namespace

std::string divisor_to_string(const Vec& coords) { return terms_to_string(coords, "H", "E"); }
std::string curve_to_string(const Vec& coords) { return terms_to_string(coords, "h", "e"); }

} // namespace dpell
