#include "dpell/jsonio.hpp"

#include "dpell/errors.hpp"
#include "dpell/picard.hpp"

namespace dpell {

namespace {

long long small(const Int& x) {
    auto v = x.to_int64();
    if (!v) throw DomainError("integer too large for JSON output: " + x.to_string());
    return *v;
}

} // namespace

ordered_json json_of(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(small(x));
    return a;
}

ordered_json json_of(const std::vector<Vec>& vs) {
    ordered_json a = ordered_json::array();
    for (const auto& v : vs) a.push_back(json_of(v));
    return a;
}

ordered_json json_of(const FgAbelianGroup& g) {
    ordered_json j;
    j["rank"] = g.free_rank;
    ordered_json t = ordered_json::array();
    for (const auto& d : g.torsion) t.push_back(small(d));
    j["torsion"] = t;
    return j;
}

ordered_json json_of(const RationalCone& c) {
    ordered_json j;
    j["rays"] = json_of(c.rays);
    j["facets"] = json_of(c.facets);
    j["lineality"] = json_of(c.lineality);
    return j;
}

ordered_json json_of(const NefDecomposition& d) {
    ordered_json j;
    j["H"] = small(d.coeff_h);
    ordered_json terms = ordered_json::array();
    for (const auto& [idx, c] : d.terms) {
        ordered_json t;
        t["I"] = ordered_json::array();
        for (int i : idx) t["I"].push_back(i);
        t["coeff"] = small(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

ordered_json json_of(const IntersectionGraph& g) {
    ordered_json j;
    ordered_json vs = ordered_json::array();
    for (const auto& v : g.vertices) {
        ordered_json jv;
        jv["class"] = json_of(v.cls.coords);
        jv["name"] = divisor_to_string(v.cls.coords);
        jv["label"] = small(v.label);
        vs.push_back(jv);
    }
    j["vertices"] = vs;
    ordered_json es = ordered_json::array();
    for (const auto& e : g.edges) {
        ordered_json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["multiplicity"] = small(e.multiplicity);
        es.push_back(je);
    }
    j["edges"] = es;
    return j;
}

ordered_json json_of(const ChamberDecomposition& d) {
    ordered_json j;
    j["type"] = d.type_key;
    j["mov"] = json_of(d.cover_target);
    ordered_json chambers = ordered_json::array();
    for (const auto& ch : d.chambers) {
        ordered_json jc;
        jc["name"] = ch.name;
        jc["cone"] = json_of(ch.cone);
        chambers.push_back(jc);
    }
    j["chambers"] = chambers;
    ordered_json cert;
    cert["full_dimensional"] = d.certificate.full_dimensional;
    cert["contained"] = d.certificate.contained;
    cert["interior_disjoint"] = d.certificate.interior_disjoint;
    cert["facets_matched"] = d.certificate.facets_matched;
    cert["covers"] = d.certificate.ok();
    ordered_json shared = ordered_json::array();
    for (const auto& s : d.certificate.shared) {
        ordered_json js;
        js["chambers"] = {d.chambers[s.chamber_a].name, d.chambers[s.chamber_b].name};
        js["rays"] = json_of(s.facet.rays);
        shared.push_back(js);
    }
    cert["shared_facets"] = shared;
    ordered_json boundary = ordered_json::array();
    for (const auto& b : d.certificate.boundary) {
        ordered_json jb;
        jb["chamber"] = d.chambers[b.chamber].name;
        jb["rays"] = json_of(b.facet.rays);
        boundary.push_back(jb);
    }
    cert["boundary_facets"] = boundary;
    j["certificate"] = cert;
    return j;
}

ordered_json json_of(const HomogeneityReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["as_printed"] = r.as_printed;
    j["all_homogeneous"] = r.all_homogeneous;
    ordered_json rels = ordered_json::array();
    for (const auto& rel : r.relations) {
        ordered_json jr;
        jr["index"] = rel.index;
        jr["relation"] = rel.text;
        jr["homogeneous"] = rel.homogeneous;
        jr["degree"] = json_of(rel.degree);
        ordered_json groups = ordered_json::array();
        for (const auto& g : rel.groups) {
            ordered_json jg;
            jg["degree"] = json_of(g.degree);
            jg["monomials"] = g.monomials;
            groups.push_back(jg);
        }
        jr["groups"] = groups;
        ordered_json outliers = ordered_json::array();
        for (const auto& [mono, deg] : rel.outliers) {
            ordered_json jo;
            jo["monomial"] = mono;
            jo["degree"] = json_of(deg);
            outliers.push_back(jo);
        }
        jr["outliers"] = outliers;
        rels.push_back(jr);
    }
    j["relations"] = rels;
    return j;
}

} // namespace dpell
