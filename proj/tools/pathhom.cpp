// Command-line front end over the C API.
#include "CLI11.hpp"
#include "pathhom_c.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

enum Exit { kOk = 0, kComputation = 1, kInput = 2, kUndefined = 3 };

int exit_code(ph_status s) {
    switch (s) {
        case PH_OK: return kOk;
        case PH_ERR_UNDEFINED: return kUndefined;
        case PH_ERR_LOOP_ARROW:
        case PH_ERR_DUPLICATE_ARROW:
        case PH_ERR_UNKNOWN_ENDPOINT:
        case PH_ERR_EMPTY_VERTEX_SET:
        case PH_ERR_DUPLICATE_VERTEX:
        case PH_ERR_UNKNOWN_VERTEX:
        case PH_ERR_LABEL_COLLISION:
        case PH_ERR_NOT_A_MAP:
        case PH_ERR_INVALID_THEORY:
        case PH_ERR_PARSE:
        case PH_ERR_INVALID_ARGUMENT: return kInput;
        default: return kComputation;
    }
}

int report_failure(ph_status s, const std::string& where = {}) {
    std::cerr << "error: " << (where.empty() ? "" : where + ": ") << ph_status_name(s) << ": " << ph_last_error()
              << '\n';
    return exit_code(s);
}

struct DigraphHandle {
    ph_digraph* g = nullptr;
    ~DigraphHandle() { ph_digraph_free(g); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { ph_string_free(s); }
};

// "-" reads standard input.
bool slurp(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int load(const std::string& path, DigraphHandle& h) {
    std::string text;
    if (!slurp(path, text)) {
        std::cerr << "error: cannot read " << path << '\n';
        return kInput;
    }
    const ph_status s = ph_digraph_parse(text.c_str(), &h.g);
    return s == PH_OK ? kOk : report_failure(s, path);
}

int write_digraph(const ph_digraph* g, const std::string& format) {
    StringHandle out;
    const ph_status s = format == "json" ? ph_digraph_to_json(g, &out.s) : ph_digraph_to_text(g, &out.s);
    if (s != PH_OK) return report_failure(s);
    std::cout << out.s;
    if (format == "json") std::cout << '\n';
    return kOk;
}

struct ComputeArgs {
    std::string input = "-";
    std::string theory = "primitive";
    std::string from, to;
    int max_dim = 4;
    std::string coeff = "Z";
    bool reduced = false;
    std::string format = "table";
};

int run_compute(const ComputeArgs& a, const CLI::App& cmd) {
    DigraphHandle g;
    if (int rc = load(a.input, g)) return rc;
    ph_compute_options opts;
    ph_compute_options_init(&opts);
    opts.theory = a.theory.c_str();
    opts.from = cmd.count("--from") ? a.from.c_str() : nullptr;
    opts.to = cmd.count("--to") ? a.to.c_str() : nullptr;
    opts.max_dim = a.max_dim;
    opts.coefficients = a.coeff.c_str();
    opts.reduced = a.reduced ? 1 : 0;
    ph_report* raw = nullptr;
    ph_status s = ph_compute(g.g, &opts, &raw);
    if (s != PH_OK) return report_failure(s);
    std::unique_ptr<ph_report, decltype(&ph_report_free)> report(raw, ph_report_free);
    StringHandle out;
    s = a.format == "json" ? ph_report_to_json(report.get(), &out.s) : ph_report_to_table(report.get(), &out.s);
    if (s != PH_OK) return report_failure(s);
    std::cout << out.s;
    if (a.format == "json") std::cout << '\n';
    return kOk;
}

struct ConstructArgs {
    std::string input = "-";
    std::string format = "text";
    unsigned cube = 0;
    std::string apex = "a";
    std::string a = "a", b = "b";
    std::string left, right;
    std::string from, to;
};

int construct_from(const ConstructArgs& args, const std::function<ph_status(const ph_digraph*, ph_digraph**)>& f) {
    DigraphHandle g, out;
    if (int rc = load(args.input, g)) return rc;
    const ph_status s = f(g.g, &out.g);
    if (s != PH_OK) return report_failure(s);
    return write_digraph(out.g, args.format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path homology of digraphs: path, primitive, cluster, tail and head theories"};
    app.set_version_flag("--version", std::string(ph_version()));
    app.require_subcommand(1);
    int rc = kOk;

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Homology groups of a digraph");
    compute->add_option("-i,--input", ca.input, "Digraph file (text or json; - for stdin)")->capture_default_str();
    compute->add_option("-t,--theory", ca.theory, "Theory")
        ->check(CLI::IsMember({"path", "primitive", "cluster", "tail", "head"}))
        ->capture_default_str();
    compute->add_option("--from", ca.from, "Tail vertex for cluster and tail");
    compute->add_option("--to", ca.to, "Head vertex for cluster and head");
    compute->add_option("--max-dim", ca.max_dim, "Highest degree")->check(CLI::NonNegativeNumber)->capture_default_str();
    compute->add_option("--coeff", ca.coeff, "Z, Q or Fp:P")->capture_default_str();
    compute->add_flag("--reduced", ca.reduced, "Augmented complex (path and primitive only)");
    compute->add_option("--format", ca.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    compute->callback([&] { rc = run_compute(ca, *compute); });

    ConstructArgs co;
    auto* construct = app.add_subcommand("construct", "Build a digraph and print it");
    construct->require_subcommand(1);
    construct->fallthrough();
    construct->add_option("--format", co.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    const auto with_input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", co.input, "Digraph file (- for stdin)")->capture_default_str();
        return sub;
    };

    auto* cube = construct->add_subcommand("cube", "The n-cube on 2^n vertices");
    cube->add_option("n", co.cube, "Dimension")->required()->check(CLI::Range(0u, 20u));
    cube->callback([&] {
        DigraphHandle out;
        const ph_status s = ph_construct_cube(co.cube, &out.g);
        rc = s != PH_OK ? report_failure(s) : write_digraph(out.g, co.format);
    });

    with_input(construct->add_subcommand("inverse", "Reverse every arrow"))->callback([&] {
        rc = construct_from(co, ph_construct_inverse);
    });
    auto* cone = with_input(construct->add_subcommand("cone", "New apex with an arrow from every vertex"));
    cone->add_option("--apex", co.apex)->capture_default_str();
    cone->callback([&] {
        rc = construct_from(co, [&](const ph_digraph* g, ph_digraph** o) { return ph_construct_cone(g, co.apex.c_str(), o); });
    });
    auto* icone = with_input(construct->add_subcommand("inv-cone", "New apex with an arrow to every vertex"));
    icone->add_option("--apex", co.apex)->capture_default_str();
    icone->callback([&] {
        rc = construct_from(co, [&](const ph_digraph* g, ph_digraph** o) { return ph_construct_inv_cone(g, co.apex.c_str(), o); });
    });
    const auto two_apexes = [&](CLI::App* sub) {
        sub->add_option("--a", co.a, "First apex label")->capture_default_str();
        sub->add_option("--b", co.b, "Second apex label")->capture_default_str();
        return sub;
    };
    two_apexes(with_input(construct->add_subcommand("suspension", "Two apexes, arrows into both")))->callback([&] {
        rc = construct_from(co, [&](const ph_digraph* g, ph_digraph** o) {
            return ph_construct_suspension(g, co.a.c_str(), co.b.c_str(), o);
        });
    });
    two_apexes(with_input(construct->add_subcommand("inv-suspension", "Two apexes, arrows out of both")))->callback([&] {
        rc = construct_from(co, [&](const ph_digraph* g, ph_digraph** o) {
            return ph_construct_inv_suspension(g, co.a.c_str(), co.b.c_str(), o);
        });
    });
    two_apexes(with_input(construct->add_subcommand("dir-suspension", "Arrows a -> v -> b for every vertex v")))
        ->callback([&] {
            rc = construct_from(co, [&](const ph_digraph* g, ph_digraph** o) {
                return ph_construct_dir_suspension(g, co.a.c_str(), co.b.c_str(), o);
            });
        });

    auto* box = construct->add_subcommand("box", "Box product G □ H");
    box->add_option("G", co.left, "First digraph file")->required();
    box->add_option("H", co.right, "Second digraph file")->required();
    box->callback([&] {
        DigraphHandle g, h, out;
        if ((rc = load(co.left, g)) || (rc = load(co.right, h))) return;
        const ph_status s = ph_construct_box(g.g, h.g, &out.g);
        rc = s != PH_OK ? report_failure(s) : write_digraph(out.g, co.format);
    });

    auto* cluster = with_input(construct->add_subcommand("cluster", "Subgraph of all allowed paths from A to B"));
    cluster->add_option("--from", co.from)->required();
    cluster->add_option("--to", co.to)->required();
    cluster->callback([&] {
        rc = construct_from(co, [&](const ph_digraph* g, ph_digraph** o) {
            return ph_construct_cluster(g, co.from.c_str(), co.to.c_str(), o);
        });
    });
    auto* tail = with_input(construct->add_subcommand("tail", "Subgraph reachable from A"));
    tail->add_option("--from", co.from)->required();
    tail->callback([&] {
        rc = construct_from(co, [&](const ph_digraph* g, ph_digraph** o) { return ph_construct_tail(g, co.from.c_str(), o); });
    });
    auto* head = with_input(construct->add_subcommand("head", "Subgraph that reaches B"));
    head->add_option("--to", co.to)->required();
    head->callback([&] {
        rc = construct_from(co, [&](const ph_digraph* g, ph_digraph** o) { return ph_construct_head(g, co.to.c_str(), o); });
    });

    ph_verify_options vo;
    ph_verify_options_init(&vo);
    auto* verify = app.add_subcommand("verify", "Run the randomized identity checks");
    verify->add_option("--seed", vo.seed)->capture_default_str();
    verify->add_option("--instances", vo.instances)->capture_default_str();
    verify->add_option("--max-vertices", vo.max_vertices)->check(CLI::Range(2, 8))->capture_default_str();
    verify->add_option("--max-dim", vo.max_dim)->check(CLI::Range(0, 6))->capture_default_str();
    verify->callback([&] {
        int passed = 0;
        StringHandle text;
        const ph_status s = ph_verify(&vo, &passed, &text.s);
        if (s != PH_OK) {
            rc = report_failure(s);
            return;
        }
        std::cout << text.s;
        std::cout << (passed ? "all checks passed" : "some checks failed") << '\n';
        rc = passed ? kOk : kComputation;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }
    return rc;
}
