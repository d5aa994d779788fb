// derivpoly: exact tables, derivative polynomials, Taylor series and identity
// verification from the command line.
//
// Exit codes: 0 success (all verdicts pass), 1 some verdict failed or was
// inconclusive, 2 usage error.

#include "derivpoly/derivative_polys.hpp"
#include "derivpoly/io.hpp"
#include "derivpoly/kernels.hpp"
#include "derivpoly/runner.hpp"
#include "derivpoly/verifier.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace derivpoly;

constexpr int kExitUsage = 2;

std::optional<Rational> parse_opt(const std::optional<std::string>& text, const char* flag)
{
    if (!text)
        return std::nullopt;
    try {
        return Rational::parse(*text);
    } catch (const UsageError& e) {
        throw UsageError(std::string("--") + flag + ": " + e.what());
    }
}

Rational require(const std::optional<Rational>& v, const char* flag, const std::string& context)
{
    if (!v)
        throw UsageError(context + " requires --" + flag);
    return *v;
}

struct RationalFlags {
    std::optional<std::string> r, a, b, d, u0, v0, q, p, s;

    void attach(CLI::App* cmd, bool with_initial, bool with_logistic)
    {
        cmd->add_option("--r", r, "Riccati coefficient r (p/q)");
        cmd->add_option("--a", a, "Root a (p/q)");
        cmd->add_option("--b", b, "Root b (p/q)");
        cmd->add_option("--d", d, "Shift d (p/q)");
        if (with_initial) {
            cmd->add_option("--u0", u0, "u(0) (p/q)");
            cmd->add_option("--v0", v0, "v(0) (p/q)");
        }
        if (with_logistic) {
            cmd->add_option("--q", q, "Logistic height q > 0");
            cmd->add_option("--p", p, "Logistic offset p > 1");
            cmd->add_option("--s", s, "Logistic rate s > 0");
        }
    }
};

std::string format_list(const std::vector<std::string>& items, const std::string& format)
{
    if (format == "csv") {
        std::string out;
        for (size_t i = 0; i < items.size(); ++i)
            out += (i ? "," : "") + items[i];
        return out;
    }
    return io::bracket_list(items);
}

int run_table(const std::string& kind, int n, const std::string& format)
{
    const auto table = io::build_number_table(kind, n);
    if (format == "json")
        std::cout << io::table_to_json(table).dump() << '\n';
    else if (format == "csv")
        std::cout << io::table_to_csv(table);
    else
        std::cout << io::table_to_plain(table);
    return 0;
}

int run_poly(const std::string& family, int n, const RationalFlags& flags, const std::string& format)
{
    io::PolyRecord rec;
    rec.family = family;
    rec.n = n;
    const auto r = parse_opt(flags.r, "r");
    const auto a = parse_opt(flags.a, "a");
    const auto b = parse_opt(flags.b, "b");
    const auto d = parse_opt(flags.d, "d");
    const std::string context = "poly " + family;

    if (family == "P" || family == "Q" || family == "S") {
        const RiccatiParams params(r.value_or(Rational(1)), require(a, "a", context), require(b, "b", context));
        rec.r = params.r();
        rec.a = params.a();
        rec.b = params.b();
        if (family == "P") {
            rec.poly = build_P(n, params);
        } else if (family == "Q") {
            rec.poly = build_Q(n, params);
        } else {
            rec.d = require(d, "d", context);
            rec.poly = build_S(n, ShiftedParams{params, *rec.d});
        }
    } else if (family == "E") {
        rec.poly = build_E(n);
    } else if (family == "A") {
        rec.poly = build_A(n);
    } else {
        rec.poly = build_M(n);
    }

    if (format == "json")
        std::cout << io::poly_record_to_json(rec).dump() << '\n';
    else
        std::cout << format_list(rec.poly.coefficient_strings(), format) << '\n';
    return 0;
}

int run_series(const std::string& which, int order, const RationalFlags& flags, const std::string& format)
{
    const auto q = parse_opt(flags.q, "q");
    const auto p = parse_opt(flags.p, "p");
    const auto s = parse_opt(flags.s, "s");
    std::optional<Rational> u0 = parse_opt(flags.u0, "u0");
    std::optional<Rational> v0 = parse_opt(flags.v0, "v0");
    const auto d = parse_opt(flags.d, "d").value_or(Rational(0));
    const std::string context = "series " + which;

    std::optional<RiccatiParams> params;
    if (q || p || s) {
        if (flags.r || flags.a || flags.b)
            throw UsageError("logistic flags --q/--p/--s exclude --r/--a/--b");
        const auto li = logistic_instance(require(q, "q", context), require(p, "p", context), require(s, "s", context));
        params = li.params;
        if (!u0)
            u0 = li.u0;
        if (!v0)
            v0 = li.v0;
    } else {
        params = RiccatiParams(require(parse_opt(flags.r, "r"), "r", context),
                               require(parse_opt(flags.a, "a"), "a", context),
                               require(parse_opt(flags.b, "b"), "b", context));
    }
    if (order < 1)
        throw UsageError("--order must be >= 1");

    OracleInstance inst{ShiftedParams{*params, d}, require(u0, "u0", context), v0.value_or(Rational(1)), order};
    inst.validate();
    const auto series = which == "riccati" ? riccati_series(inst) : v_series(inst);

    if (format == "json") {
        std::cout << io::series_to_json(series).dump() << '\n';
    } else {
        std::vector<std::string> items;
        for (const auto& c : series.coefficients())
            items.push_back(c.to_string());
        std::cout << format_list(items, format) << '\n';
    }
    return 0;
}

int run_verify(const std::string& suite_name, const SuiteBounds& bounds, bool serial, const std::string& format)
{
    const auto suite = parse_suite(suite_name);
    if (!suite)
        throw UsageError("unknown suite '" + suite_name + "'");
    const auto jobs = suite_jobs(*suite, bounds);
    const auto verdicts = serial ? run_jobs_serial(jobs) : run_jobs_parallel(jobs);
    for (const auto& v : verdicts) {
        if (format == "json")
            std::cout << io::verdict_to_json(v).dump() << '\n';
        else
            std::cout << io::verdict_to_plain(v) << '\n';
    }
    const auto summary = summarize(verdicts);
    std::cerr << summary.total << " verdicts: " << summary.passed << " passed, " << summary.failed << " failed, "
              << summary.inconclusive << " inconclusive\n";
    return summary.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    kernels::apply_thread_cap_from_env();

    CLI::App app{"Exact special-number tables, derivative polynomials and identity verification"};
    app.require_subcommand(1);

    std::string format = "plain";
    auto add_format = [&format](CLI::App* cmd, std::vector<std::string> allowed) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
    };

    // table
    auto* table = app.add_subcommand("table", "Eulerian, MacMahon or Bernoulli tables");
    std::string table_kind;
    int table_n = 0;
    table->add_option("kind", table_kind, "Table kind")
        ->required()
        ->check(CLI::IsMember({"eulerian", "macmahon", "bernoulli", "bernoulli-poly"}));
    table->add_option("--n", table_n, "Largest row index (>= 1)")->required();
    add_format(table, {"plain", "json", "csv"});

    // poly
    auto* poly = app.add_subcommand("poly", "Coefficients of P_n, Q_n, S_n, E_n, A_n or M_n");
    std::string family;
    int poly_n = 0;
    RationalFlags poly_flags;
    poly->add_option("family", family, "Polynomial family")->required()->check(CLI::IsMember({"P", "Q", "S", "E", "A", "M"}));
    poly->add_option("--n", poly_n, "Index n")->required();
    poly_flags.attach(poly, false, false);
    add_format(poly, {"plain", "json", "csv"});

    // series
    auto* series = app.add_subcommand("series", "Taylor coefficients of u or v at z = 0");
    std::string which;
    int order = 0;
    RationalFlags series_flags;
    series->add_option("which", which, "riccati or v")->required()->check(CLI::IsMember({"riccati", "v"}));
    series->add_option("--order", order, "Truncation order N (>= 1)")->required();
    series_flags.attach(series, true, true);
    add_format(series, {"plain", "json", "csv"});

    // verify
    auto* verify = app.add_subcommand("verify", "Run identity suites; one verdict per line");
    std::string suite_name = "all";
    std::optional<int> n_max, m_max, verify_order;
    std::optional<std::string> va, vb, vd;
    bool serial = false;
    verify->add_option("suite", suite_name, "Suite name")->check(CLI::IsMember(suite_names()));
    verify->add_option("--n-max", n_max, "Upper index for polynomial and integral suites");
    verify->add_option("--m-max", m_max, "Upper m for Grosset-Veselov");
    verify->add_option("--order", verify_order, "Oracle order for theorem suites");
    verify->add_option("--a", va, "Integrals: left endpoint a (p/q)");
    verify->add_option("--b", vb, "Integrals: right endpoint b (p/q)");
    verify->add_option("--d", vd, "Integrals: shift d for S_n (p/q)");
    verify->add_flag("--serial", serial, "Use the serial reference runner");
    add_format(verify, {"plain", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*table)
            return run_table(table_kind, table_n, format);
        if (*poly)
            return run_poly(family, poly_n, poly_flags, format);
        if (*series)
            return run_series(which, order, series_flags, format);
        SuiteBounds bounds;
        bounds.n_max = n_max;
        bounds.m_max = m_max;
        bounds.order = verify_order;
        bounds.a = parse_opt(va, "a");
        bounds.b = parse_opt(vb, "b");
        bounds.d = parse_opt(vd, "d");
        return run_verify(suite_name, bounds, serial, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
