#include <doctest.h>

#include "dpell/errors.hpp"
#include "dpell/graphs.hpp"

using namespace dpell;

TEST_CASE("X_1 graph: two vertices, one edge") {
    IntersectionGraph g = build_graph(Catalog::builtin().get("1:X_1"));
    REQUIRE(g.vertices.size() == 2);
    CHECK(g.vertices[0].cls.coords == vec_of({0, 1}));   // E1, label 1
    CHECK(g.vertices[0].label == Int(1));
    CHECK(g.vertices[1].cls.coords == vec_of({1, -1}));  // H-E1, label 0
    CHECK(g.vertices[1].label == Int(0));
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].multiplicity == Int(1));
}

TEST_CASE("X_SS graph matches the worked pairings") {
    IntersectionGraph g = build_graph(Catalog::builtin().get("2:X_SS"));
    REQUIRE(g.vertices.size() == 4);
    // order: E1, E2, 2H-4E1, 2H-4E2
    CHECK(g.vertices[0].label == Int(1));
    CHECK(g.vertices[2].label == Int(8));
    auto mult = [&](std::size_t a, std::size_t b) {
        for (const auto& e : g.edges)
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.multiplicity;
        return Int(0);
    };
    CHECK(mult(0, 2) == Int(4)); // E1 -- 2H-4E1
    CHECK(mult(0, 3) == Int(0));
    CHECK(mult(1, 3) == Int(4));
    CHECK(mult(2, 3) == Int(8)); // the two verticals
    CHECK(mult(0, 1) == Int(0)); // disjoint sections
    Int total = 0;
    for (const auto& e : g.edges) total += e.multiplicity;
    CHECK(total == Int(16));
}

TEST_CASE("X_43 graph labels and multiplicities") {
    IntersectionGraph g = build_graph(Catalog::builtin().get("4:X_43"));
    REQUIRE(g.vertices.size() == 10);
    for (std::size_t i = 0; i < 4; ++i) CHECK(g.vertices[i].label == Int(1));
    for (std::size_t i = 4; i < 10; ++i) CHECK(g.vertices[i].label == Int(4));
    auto mult = [&](std::size_t a, std::size_t b) {
        for (const auto& e : g.edges)
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.multiplicity;
        return Int(0);
    };
    // E1 meets H-2E1-2E2 (vertex 4) twice, H-2E3-2E4 (vertex 9) never
    CHECK(mult(0, 4) == Int(2));
    CHECK(mult(0, 9) == Int(0));
    // disjoint verticals meet 4 times, overlapping ones 0 times
    CHECK(mult(4, 9) == Int(4));
    CHECK(mult(4, 5) == Int(0));
}

TEST_CASE("graphs reconstruct the Gram matrix") {
    for (const auto& t : Catalog::builtin().types()) {
        if (!t.finite_mw) continue;
        INFO("type ", t.key());
        IntersectionGraph g = build_graph(t);
        CHECK(graph_matches_gram(g, t.lattice()));
        for (const auto& e : g.edges) CHECK(e.multiplicity > Int(0));
    }
}

TEST_CASE("infinite types are refused") {
    CHECK_THROWS_AS(build_graph(Catalog::builtin().get("4:X_40")), DomainError);
}

TEST_CASE("dot output") {
    IntersectionGraph g = build_graph(Catalog::builtin().get("1:X_1"));
    std::string dot = to_dot(g);
    CHECK(dot == "graph {\n"
                 "  v0 [label=\"E1 (1)\"];\n"
                 "  v1 [label=\"H-E1 (0)\"];\n"
                 "  v0 -- v1;\n"
                 "}\n");
    IntersectionGraph empty;
    CHECK(to_dot(empty) == "graph {\n}\n");
    // X_SS renders 16 parallel edge lines
    std::string ss = to_dot(build_graph(Catalog::builtin().get("2:X_SS")));
    std::size_t lines = 0, at = 0;
    while ((at = ss.find(" -- ", at)) != std::string::npos) {
        ++lines;
        at += 4;
    }
    CHECK(lines == 16);
    // weighted mode: one labelled edge per pair
    std::string w = to_dot(build_graph(Catalog::builtin().get("2:X_SS")), true);
    CHECK(w.find("[label=\"8\"]") != std::string::npos);
}
