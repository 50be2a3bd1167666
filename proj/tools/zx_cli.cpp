#include "zx/circuit.hpp"
#include "zx/egraph.hpp"
#include "zx/errors.hpp"
#include "zx/prop.hpp"
#include "zx/render.hpp"
#include "zx/rules.hpp"
#include "zx/semantics.hpp"
#include "zx/text.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw zx::Error("io-error", "cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw zx::Error("io-error", "cannot write '" + path + "'");
    }
    out << content;
}

int run_dims(const std::string& file) {
    const zx::Diagram d = zx::parse_term(read_file(file));
    const zx::Dims dm = zx::dims(d);
    std::cout << "in=" << dm.in << " out=" << dm.out << "\n";
    return 0;
}

int run_eval(const std::string& file, const std::string& spider_backend) {
    const zx::Diagram d = zx::parse_term(read_file(file));
    const zx::SpiderBackend backend = spider_backend == "braket" ? zx::SpiderBackend::Braket
                                                                 : zx::SpiderBackend::Direct;
    std::cout << zx::dump(zx::eval(d, backend));
    return 0;
}

int run_prop(const std::string& file1, const std::string& file2, double tol) {
    const zx::Diagram a = zx::parse_term(read_file(file1));
    const zx::Diagram b = zx::parse_term(read_file(file2));
    const zx::PropResult res = zx::proportional(a, b, tol);
    if (res.is_proportional()) {
        std::cout << "proportional c=" << zx::format_complex(res.factor) << "\n";
        return 0;
    }
    std::cout << "not-proportional\n";
    return 1;
}

int run_rewrite(const std::string& file, const std::string& rule_name, const std::string& path,
                const std::string& dir, const std::vector<std::string>& raw_params,
                const std::string& out_path) {
    const zx::Diagram d = zx::parse_term(read_file(file));
    const zx::Rule& rule = zx::find_rule(rule_name);

    zx::RuleParams params;
    for (const std::string& kv : raw_params) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
            throw zx::SyntaxError("expected --param name=value, got '" + kv + "'");
        }
        const std::string name = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        const zx::ParamSpec* spec = nullptr;
        for (const zx::ParamSpec& s : rule.params) {
            if (s.name == name) {
                spec = &s;
                break;
            }
        }
        if (spec == nullptr) {
            throw zx::SyntaxError("rule '" + rule_name + "' has no parameter '" + name + "'");
        }
        switch (spec->kind) {
        case zx::ParamSpec::Kind::Nat:
            params.nats[name] = std::strtoull(value.c_str(), nullptr, 10);
            break;
        case zx::ParamSpec::Kind::Angle:
            params.angles[name] = zx::parse_angle(value);
            break;
        case zx::ParamSpec::Kind::Term:
            params.terms.emplace(name, zx::parse_term(value));
            break;
        }
    }

    const zx::Direction direction = dir == "r2l" ? zx::Direction::R2L : zx::Direction::L2R;
    const zx::Diagram result =
        zx::apply_at(d, rule, params, zx::parse_path(path), direction);
    const std::string text = zx::print_term(result) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    return 0;
}

int run_ingest(const std::string& file, const std::string& out_path, bool verify, double tol) {
    const zx::Circuit circuit = zx::parse_circuit(read_file(file));
    const zx::Diagram d = zx::ingest(circuit);
    const std::string text = zx::print_term(d) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    if (!verify) {
        return 0;
    }
    const zx::PropResult res = zx::proportional_matrices(zx::eval(d), zx::unitary(circuit), tol);
    if (res.is_proportional()) {
        std::cerr << "verified: diagram matches the circuit unitary, c="
                  << zx::format_complex(res.factor) << "\n";
        return 0;
    }
    std::cerr << "verification failed: " << res.reason << "\n";
    return 1;
}

int run_struct_eq(const std::string& file1, const std::string& file2, std::size_t iters,
                  std::size_t nodes, bool refute, std::uint64_t seed) {
    const zx::structural::SymDiagram t1 = zx::parse_sym_term(read_file(file1));
    const zx::structural::SymDiagram t2 = zx::parse_sym_term(read_file(file2));
    zx::structural::Limits limits;
    limits.max_iters = iters;
    limits.max_nodes = nodes;
    const zx::structural::StructEqResult res = zx::structural::struct_equiv(t1, t2, limits);
    if (res.equal) {
        std::cout << "equal (iterations=" << res.stats.iterations << " nodes=" << res.stats.nodes
                  << ")\n";
        return 0;
    }
    if (refute) {
        const zx::structural::RefuteOutcome outcome = zx::structural::refute_by_instantiation(t1, t2, 50, seed);
        if (outcome.refuted) {
            std::cout << "refuted: " << outcome.witness << "\n";
            return 1;
        }
    }
    std::cout << "not-proved";
    if (!res.note.empty()) {
        std::cout << " (" << res.note << ")";
    } else if (res.stats.budget_exceeded) {
        std::cout << " (budget exceeded)";
    }
    std::cout << "\n";
    return 1;
}

int run_check_rules(std::size_t samples, std::size_t max_dim, std::uint64_t seed, double tol) {
    bool all_ok = true;
    auto run = [&](const zx::Rule& rule) {
        const zx::RuleReport report = zx::check_rule(rule, samples, max_dim, seed, tol);
        std::printf("%-4s %-36s %zu samples, %zu failures\n", report.ok() ? "PASS" : "FAIL",
                    report.rule.c_str(), report.samples, report.failures.size());
        if (!report.ok()) {
            all_ok = false;
            for (const zx::RuleFailure& f : report.failures) {
                std::printf("     %s: %s\n", f.params.c_str(), f.detail.c_str());
            }
        }
    };
    for (const zx::Rule& rule : zx::catalog()) {
        run(rule);
    }
    for (const zx::Rule& rule : zx::catalog()) {
        run(zx::colorswapped(rule));
    }
    for (const zx::Rule& rule : zx::catalog()) {
        run(zx::transposed(rule));
    }
    return all_ok ? 0 : 1;
}

int run_render(const std::string& file, const std::string& out_path, bool ascii, double scale) {
    const zx::structural::SymDiagram d = zx::parse_sym_term(read_file(file));
    const zx::Scene scene = zx::layout(d, scale);
    const std::string text = ascii ? zx::to_ascii(scene) : zx::to_svg(scene);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block-structured ZX-calculus engine"};
    app.require_subcommand(1);

    std::string file;
    std::string file2;
    std::string out_path;
    std::string rule_name;
    std::string path_text;
    std::string direction = "l2r";
    std::vector<std::string> raw_params;
    double tol = zx::kDefaultTol;
    double scale = 40.0;
    bool verify = false;
    bool refute = false;
    bool ascii = false;
    std::size_t samples = 50;
    std::size_t max_dim = 4;
    std::size_t iters = 30;
    std::size_t nodes = 100000;
    std::uint64_t seed = 0xce5a11ab;

    CLI::App* dims_cmd = app.add_subcommand("dims", "Print a term's dimensions");
    dims_cmd->add_option("file", file)->required();

    std::string spider_backend = "direct";
    CLI::App* eval_cmd = app.add_subcommand("eval", "Print a term's semantics matrix");
    eval_cmd->add_option("file", file)->required();
    eval_cmd->add_option("--spider", spider_backend, "Z-spider construction")
        ->check(CLI::IsMember({"direct", "braket"}));

    CLI::App* prop_cmd = app.add_subcommand("prop", "Decide proportionality of two terms");
    prop_cmd->add_option("file1", file)->required();
    prop_cmd->add_option("file2", file2)->required();
    prop_cmd->add_option("--tol", tol);

    CLI::App* rewrite_cmd = app.add_subcommand("rewrite", "Apply a catalog rule at a path");
    rewrite_cmd->add_option("file", file)->required();
    rewrite_cmd->add_option("--rule", rule_name)->required();
    rewrite_cmd->add_option("--path", path_text);
    rewrite_cmd->add_option("--dir", direction)->check(CLI::IsMember({"l2r", "r2l"}));
    rewrite_cmd->add_option("--param", raw_params);
    rewrite_cmd->add_option("-o,--out", out_path);

    CLI::App* ingest_cmd = app.add_subcommand("ingest", "Translate a circuit into a ZX term");
    ingest_cmd->add_option("file", file)->required();
    ingest_cmd->add_option("-o,--out", out_path);
    ingest_cmd->add_flag("--verify", verify);
    ingest_cmd->add_option("--tol", tol);

    CLI::App* structeq_cmd =
        app.add_subcommand("struct-eq", "Structural equivalence up to AC/identity/cast laws");
    structeq_cmd->add_option("file1", file)->required();
    structeq_cmd->add_option("file2", file2)->required();
    structeq_cmd->add_option("--iters", iters);
    structeq_cmd->add_option("--nodes", nodes);
    structeq_cmd->add_flag("--refute", refute);
    structeq_cmd->add_option("--seed", seed);

    CLI::App* check_cmd = app.add_subcommand("check-rules", "Validate the rule catalog");
    check_cmd->add_option("--samples", samples);
    check_cmd->add_option("--max-dim", max_dim);
    check_cmd->add_option("--seed", seed);
    check_cmd->add_option("--tol", tol);

    CLI::App* render_cmd = app.add_subcommand("render", "Render a term as SVG or ASCII");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("-o,--out", out_path);
    render_cmd->add_flag("--ascii", ascii);
    render_cmd->add_option("--scale", scale);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dims_cmd->parsed()) return run_dims(file);
        if (eval_cmd->parsed()) return run_eval(file, spider_backend);
        if (prop_cmd->parsed()) return run_prop(file, file2, tol);
        if (rewrite_cmd->parsed())
            return run_rewrite(file, rule_name, path_text, direction, raw_params, out_path);
        if (ingest_cmd->parsed()) return run_ingest(file, out_path, verify, tol);
        if (structeq_cmd->parsed())
            return run_struct_eq(file, file2, iters, nodes, refute, seed);
        if (check_cmd->parsed()) return run_check_rules(samples, max_dim, seed, tol);
        if (render_cmd->parsed()) return run_render(file, out_path, ascii, scale);
    } catch (const zx::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
