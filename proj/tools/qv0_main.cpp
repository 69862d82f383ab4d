// qv0 — truncated q-series toolkit and congruence verification harness for
// the coefficients v0(n) of the order-8 mock theta function V0(q).
//
// Subcommands:
//   expand  evaluate an expression and print its coefficients
//   verify  run a named verification suite, text or JSON report
//   matrix  print the top-left block of one of the recurrence matrices
//   scan    search progressions a*n+b for v0 == 0 mod m (candidates only)
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage/parse error,
// 3 resource cap exceeded.

#include "qv0/congruence.hpp"
#include "qv0/opmatrix.hpp"
#include "qv0/qexpr.hpp"
#include "qv0/report.hpp"
#include "qv0/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open output file " + path);
        f << text;
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "write output to a file instead of stdout");
}

int run_expand(const std::string& expr_text, std::size_t order,
               std::optional<std::uint64_t> modulus, const Output& out) {
    qv0::qexpr::EvalContext ctx;
    ctx.order = order;
    if (modulus) ctx.ring = qv0::RingTag::modular(qv0::BigInt(*modulus));
    auto ast = qv0::qexpr::parse(expr_text);
    auto coeffs = qv0::qexpr::evaluate_to_strings(*ast, ctx);
    std::ostringstream s;
    if (out.format == "json") {
        nlohmann::json j = coeffs;
        s << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) s << (i ? " " : "") << coeffs[i];
        s << "\n";
    }
    out.emit(s.str());
    return kExitPass;
}

int run_verify(const std::string& suite, std::optional<std::size_t> order,
               std::uint64_t mem_cap, const Output& out) {
    qv0::congruence::V0ModCache cache(mem_cap);
    qv0::Report report = qv0::suites::run_named(suite, cache, order);
    out.emit(out.format == "json" ? qv0::report_to_json(report) + "\n"
                                  : qv0::report_to_text(report));
    return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_matrix(const std::string& name, std::size_t rows, std::size_t cols, const Output& out) {
    qv0::opmatrix::Tables tables;
    auto entry = [&](std::size_t i, std::size_t j) -> qv0::BigInt {
        if (name == "M") return tables.base_entry(qv0::opmatrix::Base::M, i, j);
        if (name == "N") return tables.base_entry(qv0::opmatrix::Base::N, i, j);
        if (name == "P") return tables.base_entry(qv0::opmatrix::Base::P, i, j);
        if (name == "A") return tables.derived_entry(qv0::opmatrix::DerivedName::A, i, j);
        if (name == "B") return tables.derived_entry(qv0::opmatrix::DerivedName::B, i, j);
        if (name == "C") return tables.derived_entry(qv0::opmatrix::DerivedName::C, i, j);
        if (name == "D") return tables.derived_entry(qv0::opmatrix::DerivedName::D, i, j);
        throw CLI::ValidationError("matrix name must be one of M, N, P, A, B, C, D");
    };
    std::vector<std::vector<std::string>> block(rows, std::vector<std::string>(cols));
    std::size_t width = 1;
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) {
            block[i - 1][j - 1] = entry(i, j).str();
            width = std::max(width, block[i - 1][j - 1].size());
        }
    std::ostringstream s;
    if (out.format == "json") {
        nlohmann::json j = block;
        s << j.dump() << "\n";
    } else {
        for (const auto& row : block) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) s << " ";
                s << std::string(width - row[j].size(), ' ') << row[j];
            }
            s << "\n";
        }
    }
    out.emit(s.str());
    return kExitPass;
}

int run_scan(std::optional<std::uint64_t> a, std::optional<std::uint64_t> a_max,
             std::uint64_t modulus, std::uint64_t count, std::uint64_t mem_cap,
             const Output& out) {
    if (!a == !a_max)
        throw CLI::ValidationError("scan needs exactly one of --a or --amax");
    qv0::congruence::V0ModCache cache(mem_cap);
    std::vector<qv0::congruence::ScanHit> hits =
        a ? qv0::congruence::scan(*a, modulus, count, cache)
          : qv0::congruence::discover(*a_max, modulus, count, cache);
    std::ostringstream s;
    if (out.format == "json") {
        nlohmann::json j;
        j["modulus"] = modulus;
        j["count"] = count;
        j["label"] = "unproven";
        j["candidates"] = nlohmann::json::array();
        for (const auto& h : hits) j["candidates"].push_back({{"a", h.a}, {"b", h.b}});
        s << j.dump() << "\n";
    } else {
        for (const auto& h : hits)
            s << "a=" << h.a << " b=" << h.b << "  (unproven candidate: v0(" << h.a << "n+" << h.b
              << ") == 0 mod " << modulus << " for all n < " << count << ")\n";
        if (hits.empty()) s << "no candidates\n";
    }
    out.emit(s.str());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "truncated q-series toolkit and congruence verification harness for the\n"
        "coefficient sequence v0(n) of the order-8 mock theta function V0(q)"};
    app.require_subcommand(1);

    std::string expr_text;
    std::string suite;
    std::string matrix_name;
    std::size_t order = 32;
    std::optional<std::size_t> verify_order;
    std::optional<std::uint64_t> modulus, scan_a, scan_amax;
    std::uint64_t scan_mod = 2, scan_count = 50;
    std::uint64_t mem_cap = std::uint64_t(1) << 30;
    std::size_t mrows = 8, mcols = 8;
    Output out_expand, out_verify, out_matrix, out_scan;

    auto* expand = app.add_subcommand("expand", "expand an expression to coefficients");
    expand->add_option("expr", expr_text, "expression, e.g. \"psi(q)\" or \"v0()\"")->required();
    expand->add_option("--order", order, "number of coefficients to print")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    expand->add_option("--mod", modulus, "evaluate over the integers mod this")
        ->check(CLI::Range(std::uint64_t(2), std::uint64_t(1) << 62));
    add_output_flags(expand, out_expand);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "suite name (see --help-suites)")->required();
    verify->add_option("--order", verify_order,
                       "override the comparison order of identity suites");
    verify->add_option("--mem-cap", mem_cap, "memory cap in bytes for series expansions")
        ->capture_default_str();
    add_output_flags(verify, out_verify);

    auto* matrix = app.add_subcommand("matrix", "print a recurrence-matrix block");
    matrix->add_option("name", matrix_name, "M, N, P, A, B, C or D")->required();
    matrix->add_option("rows", mrows, "rows to print")->check(CLI::PositiveNumber);
    matrix->add_option("cols", mcols, "columns to print")->check(CLI::PositiveNumber);
    add_output_flags(matrix, out_matrix);

    auto* scan = app.add_subcommand("scan", "search for zero progressions of v0 mod m");
    scan->add_option("--a", scan_a, "fixed progression scale a");
    scan->add_option("--amax", scan_amax, "scan all scales 1..amax");
    scan->add_option("--mod", scan_mod, "modulus")->required();
    scan->add_option("--count", scan_count, "values of n to test per progression")
        ->capture_default_str();
    scan->add_option("--mem-cap", mem_cap, "memory cap in bytes for series expansions");
    add_output_flags(scan, out_scan);

    try {
        app.parse(argc, argv);
        if (expand->parsed()) return run_expand(expr_text, order, modulus, out_expand);
        if (verify->parsed()) return run_verify(suite, verify_order, mem_cap, out_verify);
        if (matrix->parsed()) return run_matrix(matrix_name, mrows, mcols, out_matrix);
        if (scan->parsed())
            return run_scan(scan_a, scan_amax, scan_mod, scan_count, mem_cap, out_scan);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const qv0::congruence::ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const qv0::qexpr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
