// Command-line front-end: lattice, cone, chamber and grading computations for
// del Pezzo elliptic fibrations with stable text/JSON/DOT output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dpell/chambers.hpp"
#include "dpell/cones.hpp"
#include "dpell/coxcheck.hpp"
#include "dpell/errors.hpp"
#include "dpell/graphs.hpp"
#include "dpell/jsonio.hpp"
#include "dpell/mw.hpp"

namespace {

using namespace dpell;

struct Options {
    std::string format = "text";
    std::string out_path;
    std::string catalog_path;
};

const Catalog& catalog_for(const Options& opt) {
    static std::optional<Catalog> loaded;
    if (!opt.catalog_path.empty()) {
        if (!loaded) loaded = Catalog::load_file(opt.catalog_path);
        return *loaded;
    }
    return Catalog::builtin();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open output file '" + opt.out_path + "'");
    out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

Vec parse_vector(const std::string& text) {
    Vec out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        try {
            out.emplace_back(std::string_view(cur));
        } catch (const InvalidInput&) {
            throw InvalidInput("bad divisor vector entry '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    if (out.empty()) throw InvalidInput("empty divisor vector");
    return out;
}

std::string cone_text(const RationalCone& c) {
    std::ostringstream os;
    auto block = [&](const char* head, const std::vector<Vec>& vs) {
        os << head << ":\n";
        if (vs.empty()) os << "  (none)\n";
        for (const auto& v : vs) os << "  " << vec_to_string(v) << "\n";
    };
    block("rays", c.rays);
    block("facets", c.facets);
    block("lineality", c.lineality);
    return os.str();
}

int run_selftest(const Options& opt) {
    const Catalog& cat = catalog_for(opt);
    std::ostringstream os;
    int failures = 0;
    for (const auto& t : cat.types()) {
        FgAbelianGroup got = mordell_weil(t);
        bool ok = got == t.expected_mw;
        if (!ok) ++failures;
        os << (ok ? "PASS" : "FAIL") << " mw " << t.key() << " -> " << got.to_string();
        if (!ok) os << " (expected " << t.expected_mw.to_string() << ")";
        os << "\n";
    }
    for (const auto& t : cat.types()) {
        if (t.degree != 4 || !t.finite_mw || !t.mori_curves) continue;
        try {
            ChamberDecomposition dec = mori_chambers(t);
            bool ok = dec.certificate.ok();
            if (!ok) ++failures;
            os << (ok ? "PASS" : "FAIL") << " chambers " << t.key() << " -> "
               << dec.chambers.size() << " chambers tile Mov\n";
        } catch (const std::exception& e) {
            ++failures;
            os << "FAIL chambers " << t.key() << " -> " << e.what() << "\n";
        }
    }
    os << (failures == 0 ? "selftest: all checks passed\n"
                         : "selftest: " + std::to_string(failures) + " failure(s)\n");
    emit(opt, os.str());
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice and cone computations for del Pezzo elliptic fibrations"};
    app.require_subcommand(1);
    app.fallthrough(); // global --format/--out/--catalog may follow a subcommand

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "write output to a file instead of stdout");
    app.add_option("--catalog", opt.catalog_path, "load fibration types from a JSON file");

    // types list
    auto* types_cmd = app.add_subcommand("types", "catalog queries");
    types_cmd->require_subcommand(1);
    auto* list_cmd = types_cmd->add_subcommand("list", "list fibration type keys");
    std::optional<int> list_degree;
    bool list_finite = false;
    list_cmd->add_option("--degree", list_degree, "restrict to one degree");
    list_cmd->add_flag("--finite-mw", list_finite, "only finite Mordell-Weil types");

    auto* mw_cmd = app.add_subcommand("mw", "Mordell-Weil group of a fibration type");
    std::string mw_key;
    mw_cmd->add_option("key", mw_key, "type key, e.g. 4:X_43")->required();

    auto* cone_cmd = app.add_subcommand("cone", "nef / effective / moving cone");
    std::string cone_kind, cone_key;
    cone_cmd->add_option("kind", cone_kind, "one of nef, eff, mov")
        ->required()
        ->check(CLI::IsMember({"nef", "eff", "mov"}));
    cone_cmd->add_option("key", cone_key, "type key")->required();

    auto* dec_cmd = app.add_subcommand("decompose", "write a nef class over H and the F_I");
    std::string dec_key, dec_vector;
    dec_cmd->add_option("key", dec_key, "type key")->required();
    dec_cmd->add_option("divisor", dec_vector, "divisor coordinates, e.g. 3,-2,-1")->required();

    auto* ch_cmd = app.add_subcommand("chambers", "Mori chamber decomposition of Mov");
    std::string ch_key;
    ch_cmd->add_option("key", ch_key, "type key")->required();

    auto* walk_cmd = app.add_subcommand("walk-x11", "degree-2 X_11 chamber walk");
    long long kmin = 0, kmax = 0;
    walk_cmd->add_option("--kmin", kmin, "first chamber index")->required();
    walk_cmd->add_option("--kmax", kmax, "last chamber index")->required();

    auto* graph_cmd = app.add_subcommand("graph", "intersection graph of Eff generators");
    std::string graph_key;
    bool graph_dot = false, graph_weighted = false;
    graph_cmd->add_option("key", graph_key, "type key")->required();
    graph_cmd->add_flag("--dot", graph_dot, "force DOT output");
    graph_cmd->add_flag("--weighted", graph_weighted, "one labelled edge per pair");

    auto* cox_cmd = app.add_subcommand("coxcheck", "multigrading homogeneity check");
    std::string cox_file;
    bool cox_printed = false;
    cox_cmd->add_option("file", cox_file, "presentation JSON file")->required();
    cox_cmd->add_flag("--as-printed", cox_printed, "check the as-printed relations");

    auto* self_cmd = app.add_subcommand("selftest", "run the catalog-wide certificates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const bool json = opt.format == "json";
        if (list_cmd->parsed()) {
            const Catalog& cat = catalog_for(opt);
            auto keys = cat.list_keys(list_degree,
                                      list_finite ? std::optional<bool>(true) : std::nullopt);
            if (json) {
                ordered_json arr = ordered_json::array();
                for (const auto& k : keys) {
                    const FibrationType& t = cat.get(k);
                    ordered_json jt;
                    jt["key"] = k;
                    jt["degree"] = t.degree;
                    jt["name"] = t.name;
                    jt["variant"] = t.variant.empty() ? ordered_json(nullptr)
                                                      : ordered_json(t.variant);
                    jt["finite_mw"] = t.finite_mw;
                    jt["mw"] = t.expected_mw.to_string();
                    arr.push_back(jt);
                }
                emit(opt, dump({{"types", arr}}));
            } else {
                std::string out;
                for (const auto& k : keys) out += k + "\n";
                emit(opt, out);
            }
        } else if (mw_cmd->parsed()) {
            const FibrationType& t = catalog_for(opt).get(mw_key);
            FgAbelianGroup g = mordell_weil(t);
            emit(opt, json ? dump(json_of(g)) : g.to_string() + "\n");
        } else if (cone_cmd->parsed()) {
            const FibrationType& t = catalog_for(opt).get(cone_key);
            RationalCone c = cone_kind == "nef"   ? nef_cone(t)
                             : cone_kind == "eff" ? eff_cone(t)
                                                  : mov_cone(t);
            emit(opt, json ? dump(json_of(c)) : cone_text(c));
        } else if (dec_cmd->parsed()) {
            const FibrationType& t = catalog_for(opt).get(dec_key);
            Vec v = parse_vector(dec_vector);
            if (v.size() != t.lattice().rank())
                throw InvalidInput("divisor vector must have length " +
                                   std::to_string(t.lattice().rank()) + " for " + t.key());
            NefDecomposition dec = nef_decompose(t, DivisorClass(v));
            emit(opt, json ? dump(json_of(dec)) : dec.to_string() + "\n");
        } else if (ch_cmd->parsed()) {
            const FibrationType& t = catalog_for(opt).get(ch_key);
            ChamberDecomposition dec = mori_chambers(t);
            if (json) {
                emit(opt, dump(json_of(dec)));
            } else {
                std::ostringstream os;
                os << "type " << dec.type_key << "\n";
                os << "chambers (" << dec.chambers.size() << "):\n";
                for (const auto& ch : dec.chambers)
                    os << "  " << ch.name << ": " << ch.cone.rays.size() << " rays\n";
                os << "certificate: " << (dec.certificate.ok() ? "PASS" : "FAIL")
                   << " (interior-disjoint union equals Mov)\n";
                os << "shared facets: " << dec.certificate.shared.size()
                   << ", boundary facets: " << dec.certificate.boundary.size() << "\n";
                emit(opt, os.str());
            }
        } else if (walk_cmd->parsed()) {
            if (kmin > kmax) throw InvalidInput("walk-x11: kmin must not exceed kmax");
            const IntMat to_std = X11Walker::basis_b_to_standard();
            ordered_json blocks = ordered_json::array();
            std::ostringstream os;
            for (long long k = kmin; k <= kmax; ++k) {
                RationalCone c = x11_deg2_chamber(k);
                Vec shared_gen = X11Walker::apply_power(k, vec_of({1, 1, 1}));
                if (json) {
                    ordered_json jb;
                    jb["k"] = k;
                    jb["rays_basis_b"] = json_of(c.rays);
                    std::vector<Vec> std_rays;
                    for (const auto& r : c.rays) std_rays.push_back(to_std.apply(r));
                    jb["rays"] = json_of(std_rays);
                    jb["shared_face_with_next"] =
                        json_of(std::vector<Vec>{vec_of({1, 0, 0}), shared_gen});
                    blocks.push_back(jb);
                } else {
                    os << "k = " << k << "\n";
                    os << "  rays (basis B):";
                    for (const auto& r : c.rays) os << " " << vec_to_string(r);
                    os << "\n  rays (H, E1, E2):";
                    for (const auto& r : c.rays)
                        os << " " << divisor_to_string(to_std.apply(r));
                    os << "\n  face shared with k = " << (k + 1) << ": cone(F, "
                       << divisor_to_string(to_std.apply(shared_gen)) << ")\n";
                }
            }
            emit(opt, json ? dump({{"chambers", blocks}}) : os.str());
        } else if (graph_cmd->parsed()) {
            const FibrationType& t = catalog_for(opt).get(graph_key);
            IntersectionGraph g = build_graph(t);
            if (json && !graph_dot && !graph_weighted)
                emit(opt, dump(json_of(g)));
            else
                emit(opt, to_dot(g, graph_weighted));
        } else if (cox_cmd->parsed()) {
            GradedPresentation p = GradedPresentation::from_file(cox_file);
            HomogeneityReport rep = check_homogeneity(p, cox_printed);
            emit(opt, json ? dump(json_of(rep)) : rep.to_text());
        } else if (self_cmd->parsed()) {
            return run_selftest(opt);
        }
        return 0;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
