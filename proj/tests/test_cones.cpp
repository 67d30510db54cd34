#include <doctest.h>

#include <random>

#include "dpell/cones.hpp"
#include "dpell/errors.hpp"

using namespace dpell;

namespace {

std::vector<Vec> sorted(std::vector<Vec> vs) {
    sort_vecs(vs);
    return vs;
}

} // namespace

TEST_CASE("nef cone of X_40 is the full F_I hyper-cube") {
    const FibrationType& t = Catalog::builtin().get("4:X_40");
    RationalCone nef = nef_cone(t);
    CHECK(nef.rays.size() == 16);
    CHECK(nef_index_sets(t).size() == 16);
    CHECK(nef == nef_cone_from_curves(t));
}

TEST_CASE("nef cone of X_2 keeps only the nested F_I") {
    const FibrationType& t = Catalog::builtin().get("2:X_2");
    auto sets = nef_index_sets(t);
    CHECK(sets == std::vector<std::set<int>>({{}, {1}, {1, 2}}));
    RationalCone nef = nef_cone(t);
    CHECK(nef.rays ==
          sorted({vec_of({1, 0, 0}), vec_of({1, -1, 0}), vec_of({1, -1, -1})}));
}

TEST_CASE("nef cone of degree-4 X_11 is the chain of nested F_I") {
    const FibrationType& t = Catalog::builtin().get("4:X_11");
    auto sets = nef_index_sets(t);
    CHECK(sets == std::vector<std::set<int>>({{}, {1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}}));
    CHECK(nef_cone(t).rays.size() == 5);
}

TEST_CASE("the F_I filter agrees with the curve-cone dual on every catalog entry") {
    for (const auto& t : Catalog::builtin().types()) {
        INFO("type ", t.key());
        RationalCone filtered = nef_cone(t);
        CHECK(filtered == nef_cone_from_curves(t));
        // every admissible F_I is an extremal ray (hyper-cube vertices)
        std::vector<Vec> fis;
        for (const auto& idx : nef_index_sets(t))
            fis.push_back(f_class(t.lattice(), idx).coords);
        CHECK(filtered.rays == sorted(std::move(fis)));
    }
}

TEST_CASE("nef decomposition of the worked example") {
    const FibrationType& t = Catalog::builtin().get("2:X_11");
    NefDecomposition dec = nef_decompose(t, DivisorClass{3, -2, -1});
    CHECK(dec.coeff_h == Int(1));
    REQUIRE(dec.terms.size() == 2);
    CHECK(dec.terms[0].first == std::set<int>({1, 2}));
    CHECK(dec.terms[0].second == Int(1));
    CHECK(dec.terms[1].first == std::set<int>({1}));
    CHECK(dec.terms[1].second == Int(1));
    CHECK(dec.to_string() == "H + F_{1,2} + F_{1}");
}

TEST_CASE("nef decomposition trivial cases") {
    const FibrationType& t = Catalog::builtin().get("4:X_40");
    NefDecomposition h = nef_decompose(t, DivisorClass{1, 0, 0, 0, 0});
    CHECK(h.coeff_h == Int(1));
    CHECK(h.terms.empty());
    NefDecomposition f = nef_decompose(t, DivisorClass{1, -1, -1, -1, -1});
    CHECK(f.coeff_h == Int(0));
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].first == std::set<int>({1, 2, 3, 4}));
    CHECK(f.terms[0].second == Int(1));
}

TEST_CASE("nef decomposition rejects non-nef classes naming the curve") {
    const FibrationType& t = Catalog::builtin().get("2:X_2");
    // E1 - E2 vertical: m_1 >= m_2 fails for H - 2E2
    CHECK_THROWS_WITH_AS(nef_decompose(t, DivisorClass{1, 0, -2}),
                         doctest::Contains("e1-e2"), DomainError);
    CHECK_THROWS_WITH_AS(nef_decompose(t, DivisorClass{0, 0, 1}),
                         doctest::Contains("e2"), DomainError);
}

TEST_CASE("nef decomposition round-trips on random nef classes") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<long long> coeff(0, 6);
    const Catalog& cat = Catalog::builtin();
    for (int it = 0; it < 500; ++it) {
        const auto& types = cat.types();
        const FibrationType& t = types[static_cast<std::size_t>(it) % types.size()];
        auto sets = nef_index_sets(t);
        Vec d(t.lattice().rank(), Int(0));
        d[0] = coeff(rng);
        for (const auto& idx : sets) {
            Int c(coeff(rng));
            Vec fi = f_class(t.lattice(), idx).coords;
            for (std::size_t k = 0; k < d.size(); ++k) d[k] += c * fi[k];
        }
        NefDecomposition dec = nef_decompose(t, DivisorClass(d));
        CHECK(dec.reconstruct(t.lattice()) == d);
    }
}

TEST_CASE("effective cones of the worked examples") {
    const Catalog& cat = Catalog::builtin();
    CHECK(eff_cone(cat.get("1:X_1")).rays ==
          sorted({vec_of({0, 1}), vec_of({1, -1})}));
    // canonical rays are primitive: 2H-4Ei spans the same ray as H-2Ei
    CHECK(eff_cone(cat.get("2:X_SS")).rays ==
          sorted({vec_of({0, 1, 0}), vec_of({0, 0, 1}), vec_of({1, -2, 0}), vec_of({1, 0, -2})}));
    RationalCone x43 = eff_cone(cat.get("4:X_43"));
    CHECK(x43.rays.size() == 10);
    for (const auto& v : cat.get("4:X_43").verticals)
        CHECK(x43.contains(v.coords));
}

TEST_CASE("F is extremal in Eff only for the degree-1 type") {
    // X_1 has no proper vertical classes, so Eff(X_1) = cone(E1, F) and F is
    // extremal there; everywhere else the sections and verticals absorb it.
    for (const auto& t : Catalog::builtin().types()) {
        if (!t.finite_mw) continue;
        INFO("type ", t.key());
        RationalCone eff = eff_cone(t);
        Vec f = t.lattice().fiber_class().coords;
        CHECK(eff.contains(f));
        bool f_extremal = false;
        for (const auto& r : eff.rays)
            if (r == f) f_extremal = true;
        CHECK(f_extremal == (t.key() == "1:X_1"));
    }
}

TEST_CASE("moving cone of X_1 is cone(H, F)") {
    RationalCone mov = mov_cone(Catalog::builtin().get("1:X_1"));
    CHECK(mov.rays == sorted({vec_of({1, 0}), vec_of({1, -1})}));
}

TEST_CASE("moving cone of X_43 contains the nef cone and the H-2Ei") {
    const FibrationType& t = Catalog::builtin().get("4:X_43");
    RationalCone mov = mov_cone(t);
    for (const auto& r : nef_cone(t).rays) CHECK(mov.contains(r));
    for (int i = 1; i <= 4; ++i) {
        Vec v(5, Int(0));
        v[0] = 1;
        v[static_cast<std::size_t>(i)] = -2;
        CHECK(mov.contains(v));
    }
}

TEST_CASE("nef is contained in mov and the duality certificate holds") {
    for (const auto& t : Catalog::builtin().types()) {
        if (!t.finite_mw) continue;
        INFO("type ", t.key());
        RationalCone eff = eff_cone(t);
        RationalCone mov = mov_cone(t);
        for (const auto& r : nef_cone(t).rays) CHECK(mov.contains(r));
        const PicardLattice lat = t.lattice();
        for (const auto& e : eff.rays)
            for (const auto& m : mov.rays)
                CHECK(lat.pairing(DivisorClass(e), DivisorClass(m)) >= Int(0));
        CHECK(dual_cone(mov, lat.gram()) == eff);
    }
}

TEST_CASE("eff and mov refuse infinite Mordell-Weil types") {
    const FibrationType& t = Catalog::builtin().get("2:X_11");
    CHECK_THROWS_AS(eff_cone(t), DomainError);
    CHECK_THROWS_WITH_AS(mov_cone(t), doctest::Contains("not rational polyhedral"),
                         DomainError);
}
