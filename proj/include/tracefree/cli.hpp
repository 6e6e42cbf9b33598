#pragma once

// Command-line front end.  Four subcommands over the tensor file
// format: project (write the projection, print its squared norm),
// traces (print every trace), verify (closed form against the
// least-squares oracle, write a report), and gen (seeded example
// inputs).  Exit codes: 0 success, 1 verification failure, 2 parse or
// I/O error, 3 dimension or shape error.

#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "tracefree/geometry.hpp"
#include "tracefree/oracle.hpp"
#include "tracefree/projection3.hpp"
#include "tracefree/projection4.hpp"
#include "tracefree/random.hpp"
#include "tracefree/tensor_file.hpp"

namespace tracefree::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitShapeError = 3;

// Residual above which verify reports disagreement between the closed
// form and the oracle.
inline constexpr double kVerifyTolerance = 1e-8;

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline void print_vector(std::ostream& out, const std::string& name, const Eigen::VectorXd& v) {
    out << name << ":";
    for (int i = 0; i < v.size(); ++i) out << " " << format_number(v[i]);
    out << "\n";
}

inline void print_matrix(std::ostream& out, const std::string& name, const Eigen::MatrixXd& m) {
    out << name << ":";
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out << " " << format_number(m(i, j));
    out << "\n";
}

inline int run_project(const std::string& in, const std::string& out_path, std::ostream& out) {
    const TensorFile file = load_tensor_file(in);
    std::visit(
        [&](const auto& t) {
            save_tensor_file(out_path, to_file(project(t), file.metadata));
            out << format_number(minimal_norm_squared(t)) << "\n";
        },
        to_tensor(file));
    return kExitSuccess;
}

inline int run_traces(const std::string& in, std::ostream& out) {
    const TensorFile file = load_tensor_file(in);
    const auto tensor = to_tensor(file);
    if (const Tensor3* t = std::get_if<Tensor3>(&tensor)) {
        const TraceSet3 s = traces(*t);
        print_vector(out, "t1", s.t1);
        print_vector(out, "t2", s.t2);
        print_vector(out, "t3", s.t3);
    } else {
        const TraceSet4 s = traces(std::get<Tensor4>(tensor));
        print_matrix(out, "m12", s.m12);
        print_matrix(out, "m13", s.m13);
        print_matrix(out, "m14", s.m14);
        print_matrix(out, "m23", s.m23);
        print_matrix(out, "m24", s.m24);
        print_matrix(out, "m34", s.m34);
        out << "d1234: " << format_number(s.d1234) << "\n";
        out << "d1324: " << format_number(s.d1324) << "\n";
        out << "d1423: " << format_number(s.d1423) << "\n";
    }
    return kExitSuccess;
}

inline int run_verify(const std::string& in, std::string report_path, std::ostream& out) {
    const TensorFile file = load_tensor_file(in);
    if (report_path.empty()) report_path = in + ".report.json";
    OracleReport report;
    double trace_residual = 0.0;
    std::visit(
        [&](const auto& t) {
            report = verify(t);
            trace_residual = max_trace_residual(project(t));
        },
        to_tensor(file));
    save_report_file(report_path, report, trace_residual);
    const bool ok = report.proj_residual <= kVerifyTolerance;
    out << "order " << report.order << " dim " << report.dim << " gram_rank " << report.gram_rank
        << " proj_residual " << format_number(report.proj_residual) << " trace_residual "
        << format_number(trace_residual) << " -> " << (ok ? "PASS" : "FAIL") << "\n";
    out << "report written to " << report_path << "\n";
    return ok ? kExitSuccess : kExitVerifyFailed;
}

inline int run_gen(const std::string& kind, int dim, std::uint64_t seed, int order,
                   const std::string& out_path, std::ostream& out) {
    std::map<std::string, std::string> metadata = {
        {"kind", kind}, {"dim", std::to_string(dim)}, {"seed", std::to_string(seed)}};
    TensorFile file;
    if (kind == "curvature") {
        file = to_file(random_algebraic_curvature(dim, seed).tensor, std::move(metadata));
    } else if (kind == "cotton") {
        const CottonInput input = random_cotton_input(dim, seed);
        std::string r_text;
        for (int i = 0; i < input.r.size(); ++i)
            r_text += (i == 0 ? "" : " ") + format_number(input.r[i]);
        metadata["cotton_r"] = r_text;
        file = to_file(input.t, std::move(metadata));
    } else {  // random
        metadata["order"] = std::to_string(order);
        if (order == 3)
            file = to_file(random_tensor3(dim, seed), std::move(metadata));
        else
            file = to_file(random_tensor4(dim, seed), std::move(metadata));
    }
    save_tensor_file(out_path, file);
    out << "wrote " << out_path << "\n";
    return kExitSuccess;
}

}  // namespace detail

// Parse and run.  args must not include the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimal-norm trace-free projections of order-3 and order-4 tensors"};
    app.name("tracefree");
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::string report_path;
    std::string kind;
    int dim = 0;
    std::uint64_t seed = 0;
    int order = 3;

    CLI::App* cmd_project = app.add_subcommand("project", "write the trace-free projection");
    cmd_project->add_option("--in", in_path, "input tensor file")->required();
    cmd_project->add_option("--out", out_path, "output tensor file")->required();

    CLI::App* cmd_traces = app.add_subcommand("traces", "print every trace of a tensor");
    cmd_traces->add_option("--in", in_path, "input tensor file")->required();

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "cross-check the closed form against a least-squares solve");
    cmd_verify->add_option("--in", in_path, "input tensor file")->required();
    cmd_verify->add_option("--out", report_path, "report file (default: <in>.report.json)");

    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a seeded example tensor");
    cmd_gen->add_option("--kind", kind, "curvature, cotton, or random")
        ->required()
        ->check(CLI::IsMember({"curvature", "cotton", "random"}));
    cmd_gen->add_option("--dim", dim, "tensor dimension")->required();
    cmd_gen->add_option("--seed", seed, "generator seed (default 0)");
    cmd_gen->add_option("--order", order, "tensor order for --kind random (default 3)")
        ->check(CLI::IsMember({3, 4}));
    cmd_gen->add_option("--out", out_path, "output tensor file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitParseError;
    }

    try {
        if (cmd_project->parsed()) return detail::run_project(in_path, out_path, out);
        if (cmd_traces->parsed()) return detail::run_traces(in_path, out);
        if (cmd_verify->parsed()) return detail::run_verify(in_path, report_path, out);
        if (cmd_gen->parsed()) return detail::run_gen(kind, dim, seed, order, out_path, out);
    } catch (const DimTooSmall& e) {
        err << "error: " << e.what() << "\n";
        return kExitShapeError;
    } catch (const LengthMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitShapeError;
    } catch (const ShapeMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitShapeError;
    } catch (const SymmetryViolated& e) {
        err << "error: " << e.what() << "\n";
        return kExitShapeError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    err << "error: no command\n";
    return kExitParseError;
}

}  // namespace tracefree::cli
