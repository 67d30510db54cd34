#pragma once

#include <map>
#include <string>
#include <vector>

#include "dpell/linalg.hpp"
#include "dpell/rational.hpp"

namespace dpell {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed, ordered variable list.
struct Polynomial {
    std::vector<std::string> variables;
    std::map<std::vector<long long>, Rational> terms; // exponent vector -> nonzero coefficient

    bool is_zero() const { return terms.empty(); }
    /// Canonical rendering; parse(to_string()) reproduces the polynomial.
    std::string to_string() const;
};

/// Grammar: identifiers [A-Za-z][A-Za-z0-9_]*, integers, rationals a/b,
/// operators + - * ^ and parentheses.  Multiplication is always explicit,
/// ^ binds tighter than *, * tighter than +/-, unary minus allowed, and the
/// exponent must be a plain non-negative integer literal.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

std::string monomial_to_string(const std::vector<long long>& exponents,
                               const std::vector<std::string>& variables);

/// Multidegree of a monomial: sum of exponent * variable degree vector.
Vec monomial_degree(const std::vector<long long>& exponents, const std::vector<Vec>& degrees);

/// Generators, grading matrix columns, and relations of a graded ring.
struct GradedPresentation {
    std::string name;
    std::vector<std::string> variables;
    std::vector<Vec> degrees;           // one vector (length rho) per variable
    std::vector<Polynomial> relations;
    std::vector<Polynomial> relations_as_printed; // optional alternate reading

    std::size_t grading_rank() const { return degrees.empty() ? 0 : degrees[0].size(); }

    static GradedPresentation from_json_text(const std::string& json_text);
    static GradedPresentation from_file(const std::string& path);
};

struct DegreeGroup {
    Vec degree;
    std::vector<std::string> monomials;
};

struct RelationReport {
    std::size_t index = 0;
    std::string text;
    bool homogeneous = false;
    Vec degree;                     // the common degree, or the majority degree
    std::vector<DegreeGroup> groups; // sorted by size (desc), then degree (lex)
    std::vector<std::pair<std::string, Vec>> outliers; // monomials off the majority degree
};

struct HomogeneityReport {
    std::string name;
    bool as_printed = false;
    bool all_homogeneous = false;
    std::vector<RelationReport> relations;
    std::string to_text() const;
};

/// Checks each relation for multigrading homogeneity.  Inhomogeneity is a
/// report outcome, never an exception.
HomogeneityReport check_homogeneity(const GradedPresentation& p, bool as_printed = false);

} // namespace dpell
