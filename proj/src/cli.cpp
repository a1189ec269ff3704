#include "ccg/cli.hpp"

#include "ccg/cca.hpp"
#include "ccg/homcore.hpp"
#include "ccg/verify.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace ccg {

namespace {

std::string vec_str(const Vec& v) {
    std::string s;
    for (size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s;
}

std::string basis_str(const Subspace& s) {
    if (s.basis.empty()) return "0";
    std::string out;
    for (size_t t = 0; t < s.basis.size(); ++t)
        out += (t ? "; " : "") + vec_str(s.basis[t]);
    return out;
}

/// "1,0,0;0,1,0" -> basis rows. Empty string is the zero subspace.
Subspace parse_basis(const FieldSpec& f, const std::string& text) {
    std::vector<Vec> rows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        Vec v;
        std::stringstream vs(part);
        std::string coord;
        while (std::getline(vs, coord, ',')) {
            size_t pos = 0;
            int x = std::stoi(coord, &pos);
            if (x < 0 || x >= f.p)
                throw std::invalid_argument("coordinate " + std::to_string(x) +
                                            " outside [0, p-1]");
            v.push_back(x);
        }
        if (static_cast<int>(v.size()) != f.d)
            throw std::invalid_argument("basis vector '" + part +
                                        "' does not have length d");
        rows.push_back(std::move(v));
    }
    return span(f, std::span<const Vec>(rows));
}

struct CommonOpts {
    std::string input;
    long long max_vertices = 4096;
    int threads = 0;
};

int cmd_check_cca(const CommonOpts& opts, const std::string& v_text,
                  const std::string& w_text) {
    ConnectionSet c = load_connection_document(opts.input);
    CCAWitness w{parse_basis(c.field, v_text), parse_basis(c.field, w_text)};
    CcaResult r = cca_check(c, w);
    if (r.ok) {
        std::cout << "cca holds: V = [" << basis_str(w.V) << "], W = ["
                  << basis_str(w.W) << "], dim V = " << w.V.dim() << "\n";
        return 0;
    }
    std::cout << "cca fails: " << r.reason() << "\n";
    return 1;
}

int cmd_find_witness(const CommonOpts& opts) {
    ConnectionSet c = load_connection_document(opts.input);
    WitnessSearchResult r = find_witness(c, opts.max_vertices);
    if (r.witness) {
        std::cout << "witness found\n"
                  << "  V = [" << basis_str(r.witness->V) << "]\n"
                  << "  W = [" << basis_str(r.witness->W) << "]\n"
                  << "  dim V = " << r.witness->V.dim() << "\n";
    } else {
        std::cout << "none (exhaustive: " << r.v_candidates
                  << " candidate V subspaces, " << r.pairs_checked
                  << " (V, W) pairs checked)\n";
    }
    return 0;
}

int cmd_core(const CommonOpts& opts, const std::string& report_path) {
    ConnectionSet c = load_connection_document(opts.input);
    Graph g = materialize(c, opts.max_vertices);
    CoreCertificate cert =
        compute_core(g, static_cast<int>(std::min<long long>(
                            opts.max_vertices, g.n)));
    const char* kind = cert.kind == CoreCertificate::Kind::Complete
                           ? "complete"
                           : cert.kind == CoreCertificate::Kind::Self
                                 ? "self"
                                 : "general";
    std::cout << "core order " << cert.core_vertices.size() << ", " << kind
              << "\n";
    if (!report_path.empty()) {
        nlohmann::json doc{{"order", cert.core_vertices.size()},
                           {"kind", kind},
                           {"core_vertices", cert.core_vertices},
                           {"retraction", cert.retraction.img},
                           {"evidence", cert.evidence}};
        std::ofstream out(report_path);
        if (!out)
            throw std::invalid_argument("cannot write report to " +
                                        report_path);
        out << doc.dump(2) << "\n";
    } else {
        std::cout << "retraction:";
        for (int w : cert.retraction.img) std::cout << " " << w;
        std::cout << "\n";
    }
    return 0;
}

int cmd_is_core(const CommonOpts& opts) {
    ConnectionSet c = load_connection_document(opts.input);
    Graph g = materialize(c, opts.max_vertices);
    bool core = is_core(g, static_cast<int>(std::min<long long>(
                               opts.max_vertices, g.n)));
    std::cout << (core ? "core" : "not a core") << "\n";
    return 0;
}

int cmd_graph_info(const CommonOpts& opts) {
    ConnectionSet c = load_connection_document(opts.input);
    Graph g = materialize(c, opts.max_vertices);
    auto parts = components(c, opts.max_vertices);
    std::cout << "p = " << c.field.p << ", d = " << c.field.d << "\n"
              << "|C| = " << c.size() << " (degree)\n"
              << "vertices = " << g.n << ", edges = " << g.edge_count() << "\n"
              << "components = " << parts.size() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int table, int p, int d,
               const std::string& report_path, const std::string& format,
               int threads) {
    std::vector<SweepReport> reports;
    if (suite == "tables") {
        if (table)
            reports.push_back(verify_table(table, d ? d : 4, p));
        else {
            reports.push_back(verify_table(1, 4));
            reports.push_back(verify_table(2, d ? d : 5));
            reports.push_back(verify_table(3, d ? d : 5));
            reports.push_back(verify_table(4, d ? d : 5));
            reports.push_back(verify_table(5, d ? d : 2, 5));
            reports.push_back(verify_table(6, 0, p));
        }
    } else if (suite == "sweep") {
        reports.push_back(sweep_proposition(p ? p : 2, d ? d : 4, false,
                                            threads));
    } else if (suite == "theorem") {
        reports.push_back(
            verify_theorem_end_to_end(p ? p : 2, d ? d : 3, true, threads));
    } else if (suite == "counterexamples") {
        if (p)
            reports.push_back(verify_counterexamples(p));
        else
            for (int prime : {2, 3, 5})
                reports.push_back(verify_counterexamples(prime));
    } else {
        std::cerr << "unknown suite '" << suite
                  << "' (expected tables|sweep|theorem|counterexamples)\n";
        return 2;
    }

    bool all_ok = true;
    nlohmann::json combined = nlohmann::json::array();
    for (const SweepReport& r : reports) {
        all_ok = all_ok && r.ok();
        combined.push_back(r.to_json());
        if (format == "json")
            std::cout << r.to_json().dump() << "\n";
        else
            std::cout << r.summary() << "\n";
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            throw std::invalid_argument("cannot write report to " +
                                        report_path);
        out << (reports.size() == 1 ? reports[0].to_json() : combined).dump(2)
            << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Cayley graph core toolkit for elementary abelian groups"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string v_text, w_text, report_path, format = "text", suite;
    int table = 0, p = 0, d = 0;

    auto add_common = [&](CLI::App* cmd, bool need_input) {
        auto* in = cmd->add_option("--input", opts.input,
                                   "connection-set document (JSON)");
        if (need_input) in->required();
        cmd->add_option("--max-vertices", opts.max_vertices,
                        "materialization / search cap");
        cmd->add_option("--threads", opts.threads,
                        "worker threads (0 = all available)");
    };

    CLI::App* check = app.add_subcommand("check-cca", "check a claimed (V, W) witness");
    add_common(check, true);
    check->add_option("--v", v_text, "V basis, e.g. \"1,0;0,1\"")->required();
    check->add_option("--w", w_text, "W basis")->required();

    CLI::App* findw = app.add_subcommand("find-witness", "search for a witness");
    add_common(findw, true);

    CLI::App* core = app.add_subcommand("core", "compute the graph core");
    add_common(core, true);
    core->add_option("--report", report_path, "write the certificate as JSON");

    CLI::App* iscore = app.add_subcommand("is-core", "decide whether the graph is a core");
    add_common(iscore, true);

    CLI::App* info = app.add_subcommand("graph-info", "basic graph facts");
    add_common(info, true);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "tables|sweep|theorem|counterexamples")
        ->required();
    verify->add_option("--table", table, "single table id (1-6)");
    verify->add_option("--p", p, "prime modulus");
    verify->add_option("--d", d, "ambient dimension");
    verify->add_option("--report", report_path, "write the JSON report here");
    verify->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--threads", opts.threads, "worker threads");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check_cca(opts, v_text, w_text);
        if (findw->parsed()) return cmd_find_witness(opts);
        if (core->parsed()) return cmd_core(opts, report_path);
        if (iscore->parsed()) return cmd_is_core(opts);
        if (info->parsed()) return cmd_graph_info(opts);
        if (verify->parsed())
            return cmd_verify(suite, table, p, d, report_path, format,
                              opts.threads);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace ccg
