#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rtq/catalog.hpp"
#include "rtq/cycle.hpp"
#include "rtq/io.hpp"
#include "rtq/lfd.hpp"
#include "rtq/quiver.hpp"
#include "rtq/roots.hpp"
#include "rtq/tree.hpp"
#include "rtq/verify.hpp"

namespace {

using namespace rtq;

struct TreeInput {
    std::string name;
    std::vector<int> params;
    std::string file;

    WeightedTree load() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open " + file);
            json j = json::parse(in);
            return tree_from_json(j);
        }
        if (name.empty()) throw std::invalid_argument("either --name or --file is required");
        return catalog_tree(name, params);
    }

    void attach(CLI::App* cmd, bool positional = true, bool with_file = true) {
        cmd->add_option("--name", name, "catalog family name");
        cmd->add_option("--params", params, "family parameters");
        if (with_file) cmd->add_option("--file", file, "tree JSON file");
        if (positional) {
            cmd->add_option("family", name, "catalog family name");
            cmd->add_option("args", params, "family parameters");
        }
    }
};

struct QuiverInput {
    std::string file;
    TreeInput tree;
    std::uint64_t mask = 0;
    std::vector<int> dims;

    Quiver load() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open " + file);
            return quiver_from_json(json::parse(in));
        }
        return Quiver::from_mask(tree.load(), mask);
    }

    DimensionVector load_dims(const Quiver& q) const {
        if (dims.empty()) {
            // Default to the Artin cycle of the underlying tree.
            return DimensionVector::from_divisor(laufer_artin_cycle(q.tree()));
        }
        if (static_cast<int>(dims.size()) != q.size())
            throw std::invalid_argument("dimension vector length mismatch");
        return DimensionVector(dims);
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--file", file, "quiver JSON file (tree plus arrows)");
        tree.attach(cmd, false, false);
        cmd->add_option("--mask", mask, "orientation bitmask over edges (with --name)");
        cmd->add_option("--dims", dims, "dimension vector (defaults to the Artin cycle)");
    }
};

Divisor parse_divisor(const std::vector<long long>& coeffs) { return Divisor(coeffs); }

void print_tree(const WeightedTree& t) {
    std::cout << "vertices: " << t.size() << "\n";
    for (int v = 0; v < t.size(); ++v)
        std::cout << "  " << v << "  " << t.label(v) << "  w=" << t.weight(v) << "\n";
    std::cout << "edges:";
    for (auto [a, b] : t.edges()) std::cout << " (" << a << "," << b << ")";
    std::cout << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact root-system and linear-free-divisor toolkit for rational trees"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // catalog
    auto* cmd_catalog = app.add_subcommand("catalog", "build a named diagram");
    TreeInput cat_in;
    cat_in.attach(cmd_catalog);
    bool cat_list = false;
    cmd_catalog->add_flag("--list", cat_list, "list family names");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "rationality report");
    TreeInput cls_in;
    cls_in.attach(cmd_classify);

    // artin
    auto* cmd_artin = app.add_subcommand("artin", "Artin cycle by Laufer's iteration");
    TreeInput artin_in;
    artin_in.attach(cmd_artin);
    bool artin_trace = false;
    cmd_artin->add_flag("--trace", artin_trace, "print the iteration steps");

    // roots
    auto* cmd_roots = app.add_subcommand("roots", "enumerate the root system");
    TreeInput roots_in;
    roots_in.attach(cmd_roots);
    std::string method = "box";
    cmd_roots->add_option("--method", method, "box or descent")
        ->check(CLI::IsMember({"box", "descent"}));
    bool count_only = false, positive_only = false, condition_iv = false;
    int box_scale = 1;
    cmd_roots->add_flag("--count-only", count_only, "print the count only");
    cmd_roots->add_flag("--positive-only", positive_only, "positive roots only");
    cmd_roots->add_flag("--condition-iv", condition_iv,
                        "apply the divisibility filter (diagnostics)");
    cmd_roots->add_option("--box-scale", box_scale, "multiply the search box bound");

    // count
    auto* cmd_count = app.add_subcommand("count", "closed-form root count");
    std::string count_family;
    std::vector<int> count_params;
    cmd_count->add_option("family", count_family, "family name")->required();
    cmd_count->add_option("params", count_params, "family parameters");

    // reflect
    auto* cmd_reflect = app.add_subcommand("reflect", "reflection functor at a source or sink");
    QuiverInput refl_in;
    refl_in.attach(cmd_reflect);
    int refl_vertex = 0;
    cmd_reflect->add_option("--vertex", refl_vertex, "vertex to reflect at")->required();

    // reduce
    auto* cmd_reduce = app.add_subcommand("reduce", "reduce toward a Dynkin core");
    QuiverInput red_in;
    red_in.attach(cmd_reduce);

    // lfd
    auto* cmd_lfd = app.add_subcommand("lfd", "linear free divisor certificate");
    QuiverInput lfd_in;
    lfd_in.attach(cmd_lfd);
    std::string lfd_mode = "auto";
    cmd_lfd->add_option("--mode", lfd_mode, "direct, compositional or auto")
        ->check(CLI::IsMember({"direct", "compositional", "auto"}));
    int lfd_cap = 12;
    cmd_lfd->add_option("--cap", lfd_cap, "direct-mode dimension cap");
    bool emit_matrix = false, emit_poly = false;
    cmd_lfd->add_flag("--emit-matrix", emit_matrix, "print the action matrix entries");
    cmd_lfd->add_flag("--emit-poly", emit_poly, "print the discriminant polynomial");

    // export
    auto* cmd_export = app.add_subcommand("export", "Graphviz output");
    QuiverInput exp_in;
    exp_in.attach(cmd_export);
    std::vector<long long> exp_divisor;
    cmd_export->add_option("--divisor", exp_divisor, "divisor coefficients for labels");
    bool exp_quiver = false;
    cmd_export->add_flag("--quiver", exp_quiver, "emit an oriented graph");

    // verify-paper
    auto* cmd_verify = app.add_subcommand("verify-paper", "run the verification table");
    unsigned verify_seed = 20240811u;
    cmd_verify->add_option("--seed", verify_seed, "seed for the randomized property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_catalog->parsed()) {
        if (cat_list) {
            for (const auto& f : catalog_families()) std::cout << f << "\n";
            return 0;
        }
        WeightedTree t = cat_in.load();
        if (as_json)
            std::cout << tree_to_json(t).dump(2) << "\n";
        else
            print_tree(t);
        return 0;
    }

    if (cmd_classify->parsed()) {
        RationalityReport rep = classify_rational(cls_in.load());
        if (as_json) {
            std::cout << report_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "negative definite: " << (rep.negative_definite ? "yes" : "no") << "\n";
            if (rep.artin_cycle) std::cout << "Artin cycle:       " << rep.artin_cycle->to_string() << "\n";
            if (rep.pa_of_z) std::cout << "p_a(Z):            " << *rep.pa_of_z << "\n";
            if (rep.multiplicity) std::cout << "multiplicity:      " << *rep.multiplicity << "\n";
            std::cout << "rational:          " << (rep.rational ? "yes" : "no") << "\n";
            if (!rep.valency_violations.empty()) {
                std::cout << "valency violations:";
                for (int v : rep.valency_violations) std::cout << " " << v;
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (cmd_artin->parsed()) {
        WeightedTree t = artin_in.load();
        std::vector<Divisor> trace;
        Divisor z = laufer_artin_cycle(t, artin_trace ? &trace : nullptr);
        if (as_json) {
            json j;
            j["artin_cycle"] = divisor_to_json(z);
            if (artin_trace) {
                json steps = json::array();
                for (const auto& d : trace) steps.push_back(divisor_to_json(d));
                j["trace"] = steps;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "Z = " << z.to_string() << "\n";
            if (artin_trace)
                for (std::size_t i = 0; i < trace.size(); ++i)
                    std::cout << "  Z" << i + 1 << " = " << trace[i].to_string() << "\n";
        }
        return 0;
    }

    if (cmd_roots->parsed()) {
        WeightedTree t = roots_in.load();
        RootSet rs = [&] {
            if (method == "descent") return enumerate_positive_roots_descent(t);
            EnumerationOptions opts;
            opts.box_scale = box_scale;
            opts.condition_iv = condition_iv;
            return enumerate_roots_box(t, opts);
        }();
        if (count_only) {
            std::cout << (positive_only ? rs.positive_roots.size() : rs.roots.size()) << "\n";
            return 0;
        }
        if (as_json) {
            std::cout << rootset_to_json(rs, positive_only).dump(2) << "\n";
        } else {
            std::cout << "roots: " << rs.roots.size() << "  (positive: " << rs.positive_roots.size()
                      << ")\n";
            const auto& src = positive_only ? rs.positive_roots : rs.roots;
            for (const Divisor& d : src) std::cout << "  " << d.to_string() << "\n";
        }
        return 0;
    }

    if (cmd_count->parsed()) {
        std::cout << root_count_formula(count_family, count_params) << "\n";
        return 0;
    }

    if (cmd_reflect->parsed()) {
        Quiver q = refl_in.load();
        DimensionVector a = refl_in.load_dims(q);
        auto [q2, a2] = reflect(q, a, refl_vertex);
        if (as_json) {
            json j = quiver_to_json(q2);
            j["dims"] = a2.dims;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "dims: " << a2.to_string() << "\narrows:";
            for (auto [tail, head] : q2.arrows()) std::cout << " " << tail << "->" << head;
            std::cout << "\n";
        }
        return 0;
    }

    if (cmd_reduce->parsed()) {
        Quiver q = red_in.load();
        DimensionVector a = red_in.load_dims(q);
        ReductionTrail trail = reduce_to_core(q, a);
        if (as_json) {
            std::cout << trail_to_json(trail).dump(2) << "\n";
        } else {
            std::cout << "steps:";
            for (const auto& s : trail.steps)
                std::cout << " " << s.vertex << (s.at_source ? "+" : "-");
            std::cout << "\ncore dims: " << trail.final_dims.to_string() << "\n";
            std::cout << "detached slots: " << trail.split_off_count << "\n";
            for (const auto& comp : core_components(trail.final_quiver, trail.final_dims))
                std::cout << "component " << (comp.dynkin_type.empty() ? "?" : comp.dynkin_type)
                          << " on " << comp.vertices.size() << " vertices\n";
            if (!trail.complete) std::cout << "incomplete: " << trail.diagnostic << "\n";
        }
        return 0;
    }

    if (cmd_lfd->parsed()) {
        Quiver q = lfd_in.load();
        DimensionVector a = lfd_in.load_dims(q);
        CertifyMode mode = lfd_mode == "direct"          ? CertifyMode::direct
                           : lfd_mode == "compositional" ? CertifyMode::compositional
                                                         : CertifyMode::automatic;
        if (emit_matrix) {
            LinearFormMatrix m = infinitesimal_action_matrix(RepSpace(q, a));
            for (const auto& row : m.entries) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    std::cout << (j ? "  " : "") << row[j].to_string();
                std::cout << "\n";
            }
        }
        LfdCertificate cert = certify_lfd(q, a, mode, lfd_cap);
        if (as_json) {
            std::cout << certificate_to_json(cert).dump(2) << "\n";
        } else {
            std::cout << "verdict: " << (cert.verdict ? "linear free divisor" : "not certified")
                      << "\ndegree: " << cert.degree << "\n";
            if (emit_poly && cert.discriminant_poly)
                std::cout << "discriminant: " << cert.discriminant_poly->to_string() << "\n";
            if (emit_poly && cert.core_discriminant)
                std::cout << "core discriminant: " << cert.core_discriminant->to_string() << "\n";
            if (!cert.core_types.empty()) {
                std::cout << "core:";
                for (const auto& s : cert.core_types) std::cout << " " << s;
                std::cout << "  (+" << cert.split_off_count << " detached coordinates)\n";
            }
            if (!cert.diagnostic.empty()) std::cout << "note: " << cert.diagnostic << "\n";
        }
        return cert.verdict ? 0 : 1;
    }

    if (cmd_export->parsed()) {
        if (exp_quiver) {
            Quiver q = exp_in.load();
            DimensionVector a = exp_in.load_dims(q);
            std::cout << quiver_to_dot(q, &a);
        } else {
            WeightedTree t = exp_in.file.empty() ? exp_in.tree.load() : exp_in.load().tree();
            if (exp_divisor.empty()) {
                std::cout << tree_to_dot(t);
            } else {
                Divisor d = parse_divisor(exp_divisor);
                check_divisor(t, d);
                std::cout << tree_to_dot(t, &d);
            }
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        auto results = run_paper_verification(verify_seed);
        bool all = true;
        for (const auto& r : results) {
            std::printf("[%s] %-32s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
            all = all && r.pass;
        }
        std::cout << (all ? "all checks passed" : "FAILURES present") << "\n";
        return all ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
