#include "dpell/graphs.hpp"

#include <algorithm>

#include "dpell/cones.hpp"
#include "dpell/errors.hpp"

namespace dpell {

IntersectionGraph build_graph(const FibrationType& t) {
    if (!t.finite_mw)
        throw DomainError("build_graph: " + t.key() + " has infinite Mordell-Weil group");
    const PicardLattice lat = t.lattice();
    RationalCone eff = eff_cone(t);

    // Vertices are the catalog classes spanning extremal rays, in listing
    // order; the cone's rays are primitive, so match up to positive scale.
    // catalog classes such as 2H-4E1 keep their printed form (the labels and edge
    // counts are theirs, not their primitive representative's).
    std::vector<Vec> rays = eff.rays;
    std::vector<Vec> ordered;
    auto take = [&](const Vec& v) {
        auto it = std::find(rays.begin(), rays.end(), primitive(v));
        if (it != rays.end()) {
            ordered.push_back(v);
            rays.erase(it);
        }
    };
    for (const auto& s : t.sections) take(s.coords);
    for (const auto& v : t.verticals) take(v.coords);
    // whatever is left (the full fiber class F, for the degree-1 type)
    for (const auto& r : rays) ordered.push_back(r);

    IntersectionGraph g;
    for (const auto& r : ordered) {
        DivisorClass d(r);
        g.vertices.push_back({d, -lat.pairing(d, d)});
    }
    for (std::size_t a = 0; a < ordered.size(); ++a)
        for (std::size_t b = a + 1; b < ordered.size(); ++b) {
            Int m = lat.pairing(DivisorClass(ordered[a]), DivisorClass(ordered[b]));
            if (m.is_negative())
                throw InvalidInput("build_graph: generators " + divisor_to_string(ordered[a]) +
                                   " and " + divisor_to_string(ordered[b]) +
                                   " pair negatively (" + m.to_string() +
                                   "); catalog integrity failure for " + t.key());
            if (!m.is_zero()) g.edges.push_back({a, b, m});
        }
    return g;
}

std::string to_dot(const IntersectionGraph& g, bool weighted) {
    std::string out = "graph {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out += "  v" + std::to_string(i) + " [label=\"" +
               divisor_to_string(g.vertices[i].cls.coords) + " (" +
               g.vertices[i].label.to_string() + ")\"];\n";
    }
    for (const auto& e : g.edges) {
        if (weighted) {
            out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) + " [label=\"" +
                   e.multiplicity.to_string() + "\"];\n";
        } else {
            long long m = e.multiplicity.to_int64().value_or(0);
            for (long long k = 0; k < m; ++k)
                out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

bool graph_matches_gram(const IntersectionGraph& g, const PicardLattice& lattice) {
    const std::size_t n = g.vertices.size();
    IntMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i) gram.m[i][i] = -g.vertices[i].label;
    for (const auto& e : g.edges) {
        gram.m[e.a][e.b] = e.multiplicity;
        gram.m[e.b][e.a] = e.multiplicity;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (gram.m[i][j] !=
                lattice.pairing(g.vertices[i].cls, g.vertices[j].cls))
                return false;
    return true;
}

} // namespace dpell
