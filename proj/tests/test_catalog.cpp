#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dpell/catalog.hpp"
#include "dpell/cones.hpp"
#include "dpell/errors.hpp"

using namespace dpell;

TEST_CASE("builtin catalog loads, validates, and has every printed row") {
    const Catalog& cat = Catalog::builtin();
    CHECK(cat.types().size() == 24);
    CHECK(cat.list_keys(1) == std::vector<std::string>({"1:X_1"}));
    CHECK(cat.list_keys(2) ==
          std::vector<std::string>({"2:X_11", "2:X_2", "2:X_SS"}));
    CHECK(cat.list_keys(3).size() == 7);
    CHECK(cat.list_keys(4).size() == 13);
    // names collide across degrees; the degree disambiguates
    CHECK(cat.get("2:X_11").degree == 2);
    CHECK(cat.get("4:X_11").degree == 4);
    CHECK(cat.has("4:X_21:a"));
    CHECK(cat.has("4:X_21:b"));
    CHECK(cat.has("4:X_20:a"));
    CHECK(cat.has("4:X_20:b"));
}

TEST_CASE("degree-4 finite Mordell-Weil filter") {
    const Catalog& cat = Catalog::builtin();
    CHECK(cat.list_keys(4, true) ==
          std::vector<std::string>(
              {"4:X_10", "4:X_11", "4:X_21:a", "4:X_22", "4:X_43"}));
}

TEST_CASE("X_43 row matches the printed table") {
    const FibrationType& t = Catalog::builtin().get("4:X_43");
    CHECK(t.sections.size() == 4);
    CHECK(t.verticals.size() == 6);
    for (int i = 1, k = 0; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j, ++k) {
            Vec v(5, Int(0));
            v[0] = 1;
            v[static_cast<std::size_t>(i)] = -2;
            v[static_cast<std::size_t>(j)] = -2;
            CHECK(t.verticals[static_cast<std::size_t>(k)].coords == v);
        }
    CHECK(t.zero().coords == vec_of({0, 0, 0, 0, 1}));
    CHECK(t.expected_mw.to_string() == "(Z/2)^2");
}

TEST_CASE("X_2 row matches the printed table") {
    const FibrationType& t = Catalog::builtin().get("2:X_2");
    CHECK(t.sections.size() == 1);
    CHECK(t.sections[0].coords == vec_of({0, 0, 1}));
    CHECK(t.verticals.size() == 2);
    CHECK(t.verticals[0].coords == vec_of({0, 1, -1}));
    CHECK(t.verticals[1].coords == vec_of({1, -2, 0}));
}

TEST_CASE("section and vertical pairing invariants hold across the catalog") {
    for (const auto& t : Catalog::builtin().types()) {
        PicardLattice lat = t.lattice();
        DivisorClass f = lat.fiber_class();
        for (const auto& s : t.sections) CHECK(lat.pairing(s, f) == Int(1));
        for (const auto& v : t.verticals) CHECK(lat.pairing(v, f) == Int(0));
        CHECK(t.finite_mw == (t.expected_mw.free_rank == 0));
    }
}

TEST_CASE("validation example: <H-2E1-2E2, F> = 0 in degree 4") {
    PicardLattice lat(4);
    CHECK(lat.pairing(DivisorClass{1, -2, -2, 0, 0}, lat.fiber_class()) == Int(0));
}

TEST_CASE("mori curves pair non-negatively with F and cut out the nef cone") {
    for (const auto& t : Catalog::builtin().types()) {
        if (!t.mori_curves) continue;
        PicardLattice lat = t.lattice();
        for (const auto& c : *t.mori_curves)
            CHECK(lat.div_curve_pairing(lat.fiber_class(), c) >= Int(0));
        std::vector<Vec> curve_vecs;
        for (const auto& c : *t.mori_curves) curve_vecs.push_back(c.coords);
        RationalCone mori = cone_from_generators(lat.rank(), curve_vecs);
        CHECK(dual_cone(mori, lat.curve_pairing()) == nef_cone(t));
        // and the listed curves are already extremal
        CHECK(mori.rays.size() == curve_vecs.size());
    }
}

TEST_CASE("bad catalogs are rejected with the offending class") {
    // section pairing wrong: E1 - E2 is vertical, not a section
    std::string bad = R"({"types":[{"degree":2,"name":"X_bad","variant":null,
      "sections":[[0,1,-1]],"verticals":[],"zero_section":0,"finite_mw":true,
      "expected_mw":{"rank":0,"torsion":[]},"mori_curves":null,"involution":null}]})";
    CHECK_THROWS_WITH_AS(Catalog::load(bad),
                         doctest::Contains("pairs 0 with F"), InvalidInput);
    std::string bad2 = R"({"types":[{"degree":2,"name":"X_bad","variant":null,
      "sections":[[0,0,1]],"verticals":[[1,0,0]],"zero_section":0,"finite_mw":true,
      "expected_mw":{"rank":0,"torsion":[]},"mori_curves":null,"involution":null}]})";
    CHECK_THROWS_WITH_AS(Catalog::load(bad2),
                         doctest::Contains("pairs 2 with F"), InvalidInput);
    CHECK_THROWS_AS(Catalog::load("{"), InvalidInput);
    CHECK_THROWS_AS(Catalog::load(R"({"types":[{"degree":9}]})"), InvalidInput);
}

TEST_CASE("type keys") {
    CHECK_THROWS_AS(parse_type_key("X_43"), InvalidInput);
    CHECK_THROWS_AS(parse_type_key("four:X_43"), InvalidInput);
    TypeKey k = parse_type_key("4:X_21:a");
    CHECK(k.degree == 4);
    CHECK(k.name == "X_21");
    CHECK(k.variant == "a");
    CHECK_THROWS_AS(Catalog::builtin().get("4:X_99"), DomainError);
    CHECK_THROWS_AS(Catalog::builtin().get("4:X_21"), DomainError); // ambiguous
}

TEST_CASE("embedded catalog text matches the shipped data file") {
    std::ifstream in(std::string(DPELL_DATA_DIR) + "/catalog.json", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == std::string(kDefaultCatalogJson));
}
