// Command-line front end: validate, combine, canonicalize and convert
// diagram files, evaluate terms, and run the scaling benchmarks.

#include "har/benchrun.hpp"
#include "har/circuits.hpp"
#include "har/har.hpp"
#include "har/hypergraph.hpp"
#include "har/io.hpp"
#include "har/term.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

har::Har load_har(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return har::read_har(in);
}

void save_har(const std::string& path, const har::Har& h) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    har::write_har(out, h);
}

// Loads and validates, naming the violated clause on failure.
har::Har load_valid_har(const std::string& path) {
    har::Har h = load_har(path);
    if (auto v = har::validate(h)) {
        std::ostringstream msg;
        msg << path << ": invalid diagram: " << v->clause;
        if (v->node < h.node_count()) {
            msg << " (node " << v->node << ")";
        }
        throw std::runtime_error(msg.str());
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adjacency-matrix representation of string diagrams"};
    app.require_subcommand(1);

    std::string in_a, in_b, out_path, sig_path, expr, term_path, csv_path, gnuplot_path;

    auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file");
    validate_cmd->add_option("file", in_a, "diagram file")->required();

    auto* compose_cmd = app.add_subcommand("compose", "Sequential composition of two diagrams");
    compose_cmd->add_option("f", in_a, "left diagram")->required();
    compose_cmd->add_option("g", in_b, "right diagram")->required();
    compose_cmd->add_option("-o,--out", out_path, "output file")->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two diagrams");
    tensor_cmd->add_option("f", in_a, "left diagram")->required();
    tensor_cmd->add_option("g", in_b, "right diagram")->required();
    tensor_cmd->add_option("-o,--out", out_path, "output file")->required();

    auto* canon_cmd = app.add_subcommand("canon", "Canonical representative of a diagram");
    canon_cmd->add_option("file", in_a, "diagram file")->required();
    canon_cmd->add_option("-o,--out", out_path, "output file")->required();

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term into a diagram");
    eval_cmd->add_option("termfile", term_path, "file holding one term");
    eval_cmd->add_option("--expr", expr, "inline term");
    eval_cmd->add_option("--sig", sig_path, "signature file (name arity coarity lines)")
        ->required();
    eval_cmd->add_option("-o,--out", out_path, "output file")->required();

    auto* tohyp_cmd = app.add_subcommand("to-hyp", "Convert a diagram to a hypergraph dump");
    tohyp_cmd->add_option("file", in_a, "diagram file")->required();
    tohyp_cmd->add_option("-o,--out", out_path, "output file")->required();

    auto* fromhyp_cmd = app.add_subcommand("from-hyp", "Convert a hypergraph dump to a diagram");
    fromhyp_cmd->add_option("file", in_a, "hypergraph file")->required();
    fromhyp_cmd->add_option("-o,--out", out_path, "output file")->required();

    har::BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a scaling benchmark family");
    bench_cmd->add_option("--family", bench.family, "tensor | compose-small | compose-large | adder")
        ->required();
    bench_cmd->add_option("--max-k", bench.max_k, "largest size exponent");
    bench_cmd->add_option("--reps", bench.reps, "timed repetitions per size");
    bench_cmd->add_option("--timeout", bench.timeout_s, "per-measurement timeout in seconds");
    bench_cmd->add_option("--seed", bench.seed, "run seed recorded with the results");
    bench_cmd->add_option("-o,--out", csv_path, "output CSV")->required();
    bench_cmd->add_option("--gnuplot", gnuplot_path, "also write a gnuplot script");

    int k_min = 1, k_max = 64;
    auto* slope_cmd = app.add_subcommand("slope", "Fit a log-log slope to benchmark CSV");
    slope_cmd->add_option("--csv", csv_path, "benchmark CSV")->required();
    slope_cmd->add_option("--k-min", k_min, "first k included");
    slope_cmd->add_option("--k-max", k_max, "last k included");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) {
            har::Har h = load_har(in_a);
            if (auto v = har::validate(h)) {
                std::cerr << "invalid: " << v->clause;
                if (v->node < h.node_count()) {
                    std::cerr << " (node " << v->node << ")";
                }
                std::cerr << "\n";
                return 1;
            }
            std::cout << "ok: " << h.left_arity << " -> " << h.right_arity << ", "
                      << h.node_count() << " nodes, " << h.adjacency.nnz() << " edges\n";
        } else if (compose_cmd->parsed()) {
            save_har(out_path, har::compose(load_valid_har(in_a), load_valid_har(in_b)));
        } else if (tensor_cmd->parsed()) {
            save_har(out_path, har::tensor(load_valid_har(in_a), load_valid_har(in_b)));
        } else if (canon_cmd->parsed()) {
            save_har(out_path, har::canonicalize(load_valid_har(in_a)));
        } else if (eval_cmd->parsed()) {
            if (expr.empty() == term_path.empty()) {
                throw std::runtime_error("eval: give exactly one of <termfile> or --expr");
            }
            std::ifstream sig_in(sig_path);
            if (!sig_in) {
                throw std::runtime_error("cannot open '" + sig_path + "'");
            }
            har::SignaturePtr sig = har::read_signature(sig_in);
            std::string text = expr.empty() ? read_file(term_path) : expr;
            save_har(out_path, har::eval_har(*har::parse_term(text), sig));
        } else if (tohyp_cmd->parsed()) {
            std::ofstream out(out_path);
            if (!out) {
                throw std::runtime_error("cannot open '" + out_path + "' for writing");
            }
            har::write_hypergraph(out, har::from_har(load_valid_har(in_a)));
        } else if (fromhyp_cmd->parsed()) {
            std::ifstream in(in_a);
            if (!in) {
                throw std::runtime_error("cannot open '" + in_a + "'");
            }
            har::MaHypergraph h = har::read_hypergraph(in);
            if (auto v = har::validate_ma(h)) {
                throw std::runtime_error(in_a + ": invalid hypergraph: " + v->clause);
            }
            save_har(out_path, har::to_har(h));
        } else if (bench_cmd->parsed()) {
            auto records = har::run_benchmark(bench);
            std::ofstream out(csv_path);
            if (!out) {
                throw std::runtime_error("cannot open '" + csv_path + "' for writing");
            }
            har::write_bench_csv(out, records);
            if (!gnuplot_path.empty()) {
                std::ofstream gp(gnuplot_path);
                har::write_gnuplot_script(gp, csv_path, bench.family);
            }
            for (const auto& r : records) {
                std::cout << "k=" << r.k << " K=" << r.result_nodes
                          << " mean_ns=" << r.mean_ns << (r.omitted ? " omitted" : "")
                          << "\n";
            }
        } else if (slope_cmd->parsed()) {
            std::ifstream in(csv_path);
            if (!in) {
                throw std::runtime_error("cannot open '" + csv_path + "'");
            }
            auto fit = har::slope_fit(har::read_bench_csv(in), k_min, k_max);
            std::cout << "slope " << fit.slope << " intercept " << fit.intercept
                      << " rms_residual " << fit.rms_residual << " points " << fit.points
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
