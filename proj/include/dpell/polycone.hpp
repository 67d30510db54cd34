#pragma once

#include <vector>

#include "dpell/linalg.hpp"

namespace dpell {

/// Exact rational polyhedral cone in canonical form.
///
/// rays      - primitive extremal generators, reduced modulo the lineality
///             space and lexicographically sorted;
/// facets    - primitive inward facet normals (the extremal rays of the dual
///             cone, reduced modulo the orthogonal complement of the span);
/// lineality - HNF-canonical basis of the lineality space.
///
/// Canonical form makes cone equality plain list equality.
struct RationalCone {
    std::size_t ambient = 0;
    std::vector<Vec> rays;
    std::vector<Vec> facets;
    std::vector<Vec> lineality;

    std::size_t dim() const;
    bool is_full_dimensional() const { return dim() == ambient; }
    bool is_pointed() const { return lineality.empty(); }
    bool contains(const Vec& x) const;

    friend bool operator==(const RationalCone& a, const RationalCone& b) {
        return a.ambient == b.ambient && a.rays == b.rays && a.lineality == b.lineality;
    }
    friend bool operator!=(const RationalCone& a, const RationalCone& b) { return !(a == b); }
};

/// Cone generated by the given vectors (plus an optional lineality part).
RationalCone cone_from_generators(std::size_t ambient, const std::vector<Vec>& generators,
                                  const std::vector<Vec>& lineality_generators = {});

/// Cone {x : x . a >= 0 for all inequality normals a, x . e = 0 for all e}.
RationalCone cone_from_inequalities(std::size_t ambient, const std::vector<Vec>& inequalities,
                                    const std::vector<Vec>& equations = {});

/// Dual with respect to the standard dot product: {x : x . y >= 0 on C}.
RationalCone dual_cone(const RationalCone& c);

/// Dual with respect to a bilinear pairing P: {x : x^T P y >= 0 on C}.
RationalCone dual_cone(const RationalCone& c, const IntMat& pairing);

/// Minimal generating subset of cone(vectors): primitive, sorted extremal rays.
/// (For non-pointed input these generate only modulo the lineality space.)
std::vector<Vec> extremal_rays(std::size_t ambient, const std::vector<Vec>& vectors);

RationalCone intersect(const RationalCone& a, const RationalCone& b);

/// The face C ∩ {x . normal = 0}; `normal` is usually one of C's facets.
RationalCone face_of(const RationalCone& c, const Vec& normal);

/// Image cone {M v : v in C}.
RationalCone image_cone(const IntMat& m, const RationalCone& c);

/// Basis of the orthogonal complement of span(C); the implicit equations
/// completing the facet description of a lower-dimensional cone.
std::vector<Vec> span_equations(const RationalCone& c);

} // namespace dpell
