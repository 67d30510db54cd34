#include <doctest.h>

#include <random>

#include "dpell/coxcheck.hpp"
#include "dpell/errors.hpp"

using namespace dpell;

namespace {
const std::string kData = DPELL_DATA_DIR;
}

TEST_CASE("parser basics") {
    std::vector<std::string> vars = {"T1", "T2"};
    Polynomial p = parse_polynomial("T1^2 - T2^3", vars);
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms.at({2, 0}) == Rational(Int(1)));
    CHECK(p.terms.at({0, 3}) == Rational(Int(-1)));
    CHECK(p.to_string() == "T1^2 - T2^3");
}

TEST_CASE("three-monomial relation of the degree-4 example") {
    std::vector<std::string> vars;
    for (int i = 1; i <= 9; ++i) vars.push_back("T" + std::to_string(i));
    Polynomial p = parse_polynomial("T4*T9 - T5*T8 - T6*T7", vars);
    REQUIRE(p.terms.size() == 3);
    CHECK(p.terms.at({0, 0, 0, 1, 0, 0, 0, 0, 1}) == Rational(Int(1)));
    CHECK(p.terms.at({0, 0, 0, 0, 1, 0, 0, 1, 0}) == Rational(Int(-1)));
    CHECK(p.terms.at({0, 0, 0, 0, 0, 1, 1, 0, 0}) == Rational(Int(-1)));
}

TEST_CASE("grammar boundaries") {
    std::vector<std::string> vars = {"T1", "T2"};
    CHECK_THROWS_AS(parse_polynomial("T1^2 - T2^(3)", vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("T1^-2", vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2T1", vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("T3", vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("T1 +", vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", vars), ParseError);
    CHECK_THROWS_AS(parse_polynomial("T1/2", vars), ParseError);
    try {
        parse_polynomial("T1 * T9", vars);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("rational coefficients, unary minus, parentheses") {
    std::vector<std::string> vars = {"x", "y"};
    Polynomial p = parse_polynomial("-3/4*x^2 + (x - y)*(x + y)", vars);
    // -3/4 x^2 + x^2 - y^2 = 1/4 x^2 - y^2
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms.at({2, 0}) == Rational(Int(1), Int(4)));
    CHECK(p.terms.at({0, 2}) == Rational(Int(-1)));
    CHECK(parse_polynomial("x - x", vars).is_zero());
    CHECK(parse_polynomial("0", vars).to_string() == "0");
}

TEST_CASE("parse of printed output is the identity on random polynomials") {
    std::mt19937 rng(8080);
    std::uniform_int_distribution<int> nterms(0, 6), expo(0, 4);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    std::vector<std::string> vars = {"T1", "T2", "S"};
    for (int it = 0; it < 500; ++it) {
        Polynomial p;
        p.variables = vars;
        for (int t = nterms(rng); t-- > 0;) {
            std::vector<long long> e = {expo(rng), expo(rng), expo(rng)};
            Rational c(Int(num(rng)), Int(den(rng)));
            if (c.is_zero()) continue;
            p.terms[e] = c;
        }
        Polynomial q = parse_polynomial(p.to_string(), vars);
        CHECK(q.terms == p.terms);
    }
}

TEST_CASE("monomial degrees") {
    // T2 T3 S^2 in the blow-up grading
    std::vector<Vec> degrees = {vec_of({1, 0}), vec_of({1, -2}), vec_of({1, -2}),
                                vec_of({0, 1})};
    CHECK(monomial_degree({0, 1, 1, 2}, degrees) == vec_of({2, -2}));
    CHECK(monomial_degree({0, 0, 0, 0}, degrees) == vec_of({0, 0}));
}

TEST_CASE("blow-up presentation is homogeneous of degree (2,-2)") {
    auto p = GradedPresentation::from_file(kData + "/cox/blowup_point.json");
    CHECK(p.grading_rank() == 2);
    HomogeneityReport rep = check_homogeneity(p);
    CHECK(rep.all_homogeneous);
    for (const auto& r : rep.relations) CHECK(r.degree == vec_of({2, -2}));
}

TEST_CASE("X_SS presentation is homogeneous") {
    auto p = GradedPresentation::from_file(kData + "/cox/xss.json");
    HomogeneityReport rep = check_homogeneity(p);
    CHECK(rep.all_homogeneous);
    CHECK(rep.relations[0].degree == vec_of({2, 0, 0}));
    CHECK(rep.relations[1].degree == vec_of({4, -4, -4}));
}

TEST_CASE("X_43 presentation: all eight relations homogeneous") {
    auto p = GradedPresentation::from_file(kData + "/cox/x43.json");
    CHECK(p.grading_rank() == 5);
    HomogeneityReport rep = check_homogeneity(p);
    REQUIRE(rep.relations.size() == 8);
    CHECK(rep.all_homogeneous);
    CHECK(rep.relations[2].degree == vec_of({2, -2, -2, -2, -2}));
    CHECK(rep.relations[3].degree == vec_of({1, 0, -2, 0, 0}));
    CHECK(rep.relations[5].degree == vec_of({2, -2, 0, 0, 0}));
}

TEST_CASE("X_22 presentation: both relations homogeneous") {
    auto p = GradedPresentation::from_file(kData + "/cox/x22.json");
    HomogeneityReport rep = check_homogeneity(p);
    CHECK(rep.all_homogeneous);
    CHECK(rep.relations[0].degree == vec_of({2, -2, -2, 0, 0}));
    CHECK(rep.relations[1].degree == vec_of({2, -2, -2, -2, -2}));
}

TEST_CASE("X_1: corrected reading passes, printed reading fails by S powers") {
    auto p = GradedPresentation::from_file(kData + "/cox/x1.json");
    CHECK(check_homogeneity(p).all_homogeneous);
    CHECK(check_homogeneity(p).relations[0].degree == vec_of({6, 0}));

    HomogeneityReport printed = check_homogeneity(p, true);
    CHECK(!printed.all_homogeneous);
    const RelationReport& r = printed.relations[0];
    REQUIRE(r.groups.size() == 3);
    // groups tie at two monomials each; the true degree (6,0) wins the
    // lexicographic tie-break, so the S-power blocks are the outliers
    CHECK(r.degree == vec_of({6, 0}));
    auto find_group = [&](const Vec& deg) -> const DegreeGroup& {
        for (const auto& g : r.groups)
            if (g.degree == deg) return g;
        static DegreeGroup none;
        return none;
    };
    CHECK(find_group(vec_of({6, 0})).monomials ==
          std::vector<std::string>({"T1^2", "T2^3"}));
    CHECK(find_group(vec_of({6, 4})).monomials ==
          std::vector<std::string>({"T2*T3^4*S^8", "T2*T4^2*T5^2*S^8"}));
    CHECK(find_group(vec_of({6, 6})).monomials ==
          std::vector<std::string>({"T3^6*S^12", "T4^3*T5^3*S^12"}));
    CHECK(r.outliers.size() == 4);
}

TEST_CASE("X_2: corrected denominator passes, printed one is off by (0,0,2)") {
    auto p = GradedPresentation::from_file(kData + "/cox/x2.json");
    HomogeneityReport fixed = check_homogeneity(p);
    CHECK(fixed.all_homogeneous);
    CHECK(fixed.relations[0].degree == vec_of({4, -2, 0}));

    HomogeneityReport printed = check_homogeneity(p, true);
    CHECK(!printed.all_homogeneous);
    const RelationReport& r = printed.relations[0];
    REQUIRE(r.groups.size() == 2);
    CHECK(r.degree == vec_of({4, -2, 0}));
    auto find_group = [&](const Vec& deg) -> const DegreeGroup& {
        for (const auto& g : r.groups)
            if (g.degree == deg) return g;
        static DegreeGroup none;
        return none;
    };
    CHECK(find_group(vec_of({4, -2, 0})).monomials ==
          std::vector<std::string>({"T3*T4^3", "T5^2"}));
    // exactly the S2^2 * f-tilde monomials are off by (0, 0, 2)
    CHECK(find_group(vec_of({4, -2, 2})).monomials ==
          std::vector<std::string>({"T1^4*S1^2*S2^8", "T3^2*T4^2*S1^2*S2^4"}));
    std::vector<std::string> outliers;
    for (const auto& [mono, deg] : r.outliers) {
        CHECK(deg == vec_of({4, -2, 2}));
        outliers.push_back(mono);
    }
    CHECK(outliers ==
          std::vector<std::string>({"T1^4*S1^2*S2^8", "T3^2*T4^2*S1^2*S2^4"}));
}

TEST_CASE("as-printed request without alternate relations is a domain error") {
    auto p = GradedPresentation::from_file(kData + "/cox/x43.json");
    CHECK_THROWS_AS(check_homogeneity(p, true), DomainError);
}

TEST_CASE("verdict is stable under variable renaming and relation reordering") {
    auto p = GradedPresentation::from_file(kData + "/cox/x22.json");
    GradedPresentation renamed = p;
    for (auto& v : renamed.variables) v = "U" + v.substr(1);
    for (auto& r : renamed.relations) r.variables = renamed.variables;
    std::swap(renamed.relations[0], renamed.relations[1]);
    HomogeneityReport a = check_homogeneity(p);
    HomogeneityReport b = check_homogeneity(renamed);
    CHECK(a.all_homogeneous == b.all_homogeneous);
    CHECK(a.relations[0].degree == b.relations[1].degree);
}

TEST_CASE("grading rank equals the Picard rank of the named variety") {
    const std::vector<std::pair<std::string, std::size_t>> expected = {
        {"x1.json", 2},    {"xss.json", 3}, {"x2.json", 3},
        {"blowup_point.json", 2}, {"x43.json", 5}, {"x22.json", 5}};
    for (const auto& [file, rho] : expected) {
        auto p = GradedPresentation::from_file(kData + "/cox/" + file);
        CHECK(p.grading_rank() == rho);
    }
}

TEST_CASE("presentation schema violations") {
    CHECK_THROWS_AS(GradedPresentation::from_json_text("{"), InvalidInput);
    CHECK_THROWS_AS(GradedPresentation::from_json_text(
                        R"({"name":"x","variables":["T1"],"degrees":[[1],[2]],"relations":[]})"),
                    InvalidInput);
    CHECK_THROWS_AS(GradedPresentation::from_json_text(
                        R"({"name":"x","variables":["T1"],"degrees":[[1]],"relations":["T2"]})"),
                    InvalidInput);
}
