#pragma once

#include <string>
#include <vector>

#include "dpell/catalog.hpp"

namespace dpell {

/// Intersection graph of the extremal effective classes: one vertex per
/// extremal ray of Eff(X) labelled -<D,D>, and <D,D'> parallel edges between
/// distinct vertices.
struct IntersectionGraph {
    struct Vertex {
        DivisorClass cls;
        Int label; // -<D,D>
    };
    struct Edge {
        std::size_t a, b;
        Int multiplicity; // <D_a, D_b> >= 0
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges; // a < b, only positive multiplicities stored
};

/// Builds the graph from the extremal rays of eff_cone(t), ordered by the
/// catalog listing (sections first, then verticals).  Throws DomainError for
/// infinite Mordell-Weil types and InvalidInput if any off-diagonal pairing
/// is negative (a catalog integrity failure).
IntersectionGraph build_graph(const FibrationType& t);

/// Graphviz DOT output; multiplicity m becomes m parallel edges, or a single
/// labelled edge in weighted mode.
std::string to_dot(const IntersectionGraph& g, bool weighted = false);

/// Check that labels and multiplicities reproduce the Gram matrix of the
/// vertex classes exactly.
bool graph_matches_gram(const IntersectionGraph& g, const PicardLattice& lattice);

} // namespace dpell
