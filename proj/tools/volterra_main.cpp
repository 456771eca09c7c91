#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "volterra/errors.hpp"
#include "volterra/eval.hpp"
#include "volterra/parse.hpp"
#include "volterra/print.hpp"
#include "volterra/rewrite.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct IoOptions {
    std::string input = "-";
    std::string output;
};

void add_io(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("input", io.input, "input file ('-' for stdin)")->capture_default_str();
    cmd->add_option("-o,--output", io.output, "output file (default: stdout)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"volterra: rewrites separable Volterra integral polynomials into "
                 "operator-linear (iterated-integral) form"};
    app.require_subcommand(1);

    IoOptions reduce_io, trace_io, render_io, metrics_io, verify_io;
    CLI::App* cmd_reduce =
        app.add_subcommand("reduce", "parse, reduce to branch-free form, print");
    add_io(cmd_reduce, reduce_io);
    CLI::App* cmd_trace = app.add_subcommand("trace", "print one line per rewrite step");
    add_io(cmd_trace, trace_io);
    CLI::App* cmd_render = app.add_subcommand("render", "print DOT digraphs for the parsed forest");
    add_io(cmd_render, render_io);
    CLI::App* cmd_metrics =
        app.add_subcommand("metrics", "print E/N/D for every tree of the parsed forest");
    add_io(cmd_metrics, metrics_io);
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "reduce, then compare input and output numerically under a bindings file");
    add_io(cmd_verify, verify_io);
    std::string bindings_path;
    std::vector<double> samples{0.25, 0.5, 1.0};
    int subintervals = 64;
    double tol = 1e-6;
    cmd_verify->add_option("--bindings", bindings_path, "bindings file")->required();
    cmd_verify->add_option("--samples", samples, "sample points")->capture_default_str();
    cmd_verify->add_option("--n", subintervals, "quadrature subintervals (even, >= 2)")
        ->capture_default_str();
    cmd_verify->add_option("--tol", tol, "relative tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_reduce->parsed()) {
            const volterra::Forest f = volterra::parse(read_input(reduce_io.input));
            write_output(reduce_io.output, volterra::print_operator(volterra::reduce(f).output) + "\n");
            return 0;
        }
        if (cmd_trace->parsed()) {
            const volterra::Forest f = volterra::parse(read_input(trace_io.input));
            write_output(trace_io.output, volterra::format_trace(volterra::reduce(f).trace));
            return 0;
        }
        if (cmd_render->parsed()) {
            const volterra::Forest f = volterra::parse(read_input(render_io.input));
            write_output(render_io.output, volterra::render_dot(f));
            return 0;
        }
        if (cmd_metrics->parsed()) {
            const volterra::Forest f = volterra::parse(read_input(metrics_io.input));
            std::string out;
            for (const auto& [tree, coeff] : f.terms())
                out += volterra::format_metrics(volterra::metrics(tree)) + "\n";
            write_output(metrics_io.output, out);
            return 0;
        }
        // verify
        const volterra::Forest f = volterra::parse(read_input(verify_io.input));
        const volterra::Bindings b = volterra::Bindings::load_file(bindings_path);
        const volterra::ReduceResult r = volterra::reduce(f);
        const volterra::VerifyReport rep =
            volterra::verify_equivalence(f, r.output, b, samples, subintervals, tol);
        std::string out;
        for (const volterra::VerifySample& s : rep.samples)
            out += "x=" + fmt(s.x) + " lhs=" + fmt(s.lhs) + " rhs=" + fmt(s.rhs) +
                   " abs_dev=" + fmt(s.abs_dev) + " rel_dev=" + fmt(s.rel_dev) + "\n";
        out += std::string("result: ") + (rep.passed ? "PASS" : "FAIL") +
               " (max rel dev " + fmt(rep.max_rel_dev) + ", tol " + fmt(rep.tol) + ")\n";
        write_output(verify_io.output, out);
        return rep.passed ? 0 : 1;
    } catch (const volterra::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const volterra::EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const volterra::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
