// Acceptance criteria 1-9: prints one PASS/FAIL line per criterion.
//
//   acceptance                          exit 0 iff every criterion passes
//   acceptance --known-red 4            exit 0 iff exactly criterion 4 fails
//   acceptance --require-red 1,2,4,5    exit 0 iff at least these fail
//   acceptance --skip 9                 do not evaluate criterion 9

#include "derivpoly/derivative_polys.hpp"
#include "derivpoly/io.hpp"
#include "derivpoly/quadrature.hpp"
#include "derivpoly/special_numbers.hpp"
#include "derivpoly/verifier.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace derivpoly;

namespace {

Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }

// Collects verdicts for one criterion and keeps the first failure for the report.
struct Tally {
    int total = 0;
    int failed = 0;
    std::vector<std::string> notes;

    void add(const Verdict& v)
    {
        ++total;
        if (!v.passed()) {
            if (failed == 0)
                notes.push_back("first failure: " + io::verdict_to_plain(v));
            ++failed;
        }
    }
    void require(bool ok, const std::string& what)
    {
        ++total;
        if (!ok) {
            ++failed;
            notes.push_back("failed: " + what);
        }
    }
    void note(std::string s) { notes.push_back(std::move(s)); }
    bool ok() const { return failed == 0; }
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s; // <= 0 means none
    std::function<void(Tally&)> body;
};

OracleInstance oracle(Rational r, Rational a, Rational b, Rational u0, Rational d = 0, Rational v0 = 1)
{
    return OracleInstance{{RiccatiParams(r, a, b), d}, u0, v0, 16};
}

const std::vector<OracleInstance>& theorem_instances()
{
    static const std::vector<OracleInstance> inst{
        oracle(1, 0, 1, q(1, 3)), oracle(-1, -1, 1, 0), oracle(q(-1, 2), 2, 0, q(1, 2))};
    return inst;
}

int run_command(const std::string& cmd)
{
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion1(Tally& t)
{
    const Triangle tri = build_eulerian_triangle(12);
    t.require(tri.row(3) == std::vector<Integer>{1, 4, 1}, "Eulerian row 3 == (1, 4, 1)");
    for (int n = 1; n <= 12; ++n)
        t.add(check_eulerian_explicit(n));
}

void criterion2(Tally& t)
{
    for (const auto& inst : theorem_instances())
        t.add(check_theorem1(inst, 15));
}

void criterion3(Tally& t)
{
    for (const auto& base : theorem_instances()) {
        for (const Rational& v0 : {Rational(1), q(5, 2)}) {
            OracleInstance inst = base;
            inst.v0 = v0;
            t.add(check_theorem2(inst, 12));
            for (const Rational& d : {q(1, 4), q(-1, 2)}) {
                inst.params.d = d;
                t.add(check_theorem3(inst, 12));
            }
            inst.params.d = 0;
        }
    }
}

void criterion4(Tally& t)
{
    constexpr int N = 10;
    t.add(check_egf_eulerian(N));
    t.add(check_egf_A(N));
    // The MacMahon display exactly as stated, with equal exponential rates in
    // numerator and denominator, in both its plain and halved-argument forms.
    t.add(check_egf_macmahon_equal_rate(N));
    t.add(check_egf_macmahon_halved_equal_rate(N));
    for (const Rational& u0 : {q(1, 3), q(1, 2), q(1, 5), q(3, 4)}) {
        t.add(check_F_closed_form(u0, N));
        for (const Rational& d : {Rational(0), q(1, 4), q(-1, 2)})
            t.add(check_H_closed_form(u0, d, N));
        t.add(check_F_H_relation(u0, N));
    }

    // Reported alongside, not counted: the corrected MacMahon identity.
    const Verdict fixed = check_egf_macmahon(N), fixed_half = check_egf_macmahon_halved(N);
    t.note(std::string("analysis: the stated MacMahon EGF is false from y^1 on, since M_1 = 1 + x while "
                       "(1-x)e^{(1-x)y}/(1-x e^{(1-x)y}) = 1 + y + O(y^2); the denominator rate must be "
                       "doubled. Corrected (sum M_n y^n/n!)(1 - x e^{2(1-x)y}) = (1-x)e^{(1-x)y}: ") +
           std::string(to_string(fixed.status)) + "; corrected halved form: " + std::string(to_string(fixed_half.status)));
}

void criterion5(Tally& t)
{
    for (int n = 1; n <= 15; ++n) {
        t.add(check_lemma1(n));
        t.add(check_classical(n));
    }
}

void criterion6(Tally& t)
{
    const std::vector<std::pair<Rational, Rational>> pairs{{0, 1}, {-1, 1}, {q(5, 2), -3}};
    for (const auto& [a, b] : pairs) {
        for (int n = 1; n <= 20; ++n)
            t.add(check_integral_P(n, a, b));
        for (int n = 0; n <= 20; ++n)
            t.add(check_integral_Q(n, a, b));
    }
    const std::vector<std::array<Rational, 3>> triples{{0, 1, q(1, 3)}, {-1, 1, q(1, 2)}, {2, 5, -1}};
    for (const auto& [a, b, d] : triples)
        for (int n = 1; n <= 12; ++n)
            t.add(check_integral_S(n, a, b, d));
}

void criterion7(Tally& t)
{
    for (int m = 1; m <= 8; ++m)
        t.add(grosset_veselov_exact(m));
    for (int m = 1; m <= 3; ++m)
        t.add(grosset_veselov_numeric(m, 1e-8));

    const auto reduced = grosset_veselov_reduced_integrand(1);
    t.require(reduced && poly_definite_integral(*reduced, -1, 1) == q(4, 3), "exact int_{-1}^{1} (1-u^2) du == 4/3");
    t.require(bernoulli(2) == q(1, 6), "B_2 == 1/6");
    const auto sech4 = integrate_adaptive([](double x) { return std::pow(1.0 / std::cosh(x), 4); }, -20, 20, 1e-10);
    t.require(sech4.converged && std::abs(sech4.value - 4.0 / 3.0) < 1e-8, "numeric int sech^4 == 4/3 within 1e-8");
}

void criterion8(Tally& t)
{
    for (int n = 0; n <= 20; ++n)
        t.add(check_integrality(n));
}

void criterion9(Tally& t)
{
    const auto start = std::chrono::steady_clock::now();
    const int rc = run_command(std::string("'") + DERIVPOLY_CLI_PATH + "' verify all");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.require(rc == 0, "`derivpoly verify all` exits 0 (got " + std::to_string(rc) + ")");
    t.require(secs < 60.0, "`derivpoly verify all` under 60 s (took " + std::to_string(secs) + " s)");

    const int mutant_rc = run_command(std::string("'") + DERIVPOLY_MUTANT_CLI_PATH + "' verify all");
    t.require(mutant_rc == 1, "mutated Eulerian recurrence: `verify all` exits 1 (got " + std::to_string(mutant_rc) + ")");
    const int accept_rc =
        run_command(std::string("'") + DERIVPOLY_MUTANT_ACCEPTANCE_PATH + "' --skip 9 --require-red 1,2,4,5");
    t.require(accept_rc == 0, "mutated Eulerian recurrence turns criteria 1, 2, 4, 5 red");
}

std::set<int> parse_ids(const std::string& text)
{
    std::set<int> ids;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            ids.insert(std::stoi(item));
    return ids;
}

std::string join_ids(const std::set<int>& ids)
{
    std::string out;
    for (int id : ids)
        out += (out.empty() ? "" : ",") + std::to_string(id);
    return out.empty() ? "none" : out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria runner"};
    std::string known_red, require_red, skip;
    app.add_option("--known-red", known_red, "Criteria expected to fail, comma separated; all others must pass");
    app.add_option("--require-red", require_red, "Criteria that must fail, comma separated");
    app.add_option("--skip", skip, "Criteria not to evaluate, comma separated");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "Eulerian row 3 and recurrence == explicit formula, n <= 12", 1.0, criterion1},
        {2, "Riccati Taylor coefficients == r^n P_{n+1}(u0), 1 <= n <= 15", 1.0, criterion2},
        {3, "v Taylor coefficients == v0 (r/2)^n Q_n(u0) and S_n(u0), n <= 12", 0.0, criterion3},
        {4, "EGF identities (Eulerian, A, MacMahon, F, H) through order 9", 5.0, criterion4},
        {5, "P_{n+1} binomial recurrence and the classical Eulerian formulas, n <= 15", 0.0, criterion5},
        {6, "integral representations of P_n, Q_n, S_n", 0.0, criterion6},
        {7, "Grosset-Veselov formula, exact m <= 8 and numeric m <= 3", 0.0, criterion7},
        {8, "2^{-n} S_n(u;0,1,-1/2) integral and == P_{n+1}(u;0,1)/u, n <= 20", 0.0, criterion8},
        {9, "end to end `verify all` and mutation sanity check", 60.0, criterion9},
    };

    const std::set<int> skipped = parse_ids(skip);
    std::set<int> red;
    for (const auto& c : criteria) {
        if (skipped.count(c.id)) {
            std::cout << "criterion " << c.id << ": SKIP " << c.title << "\n";
            continue;
        }
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(t);
        } catch (const std::exception& e) {
            t.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s)
            t.require(false, "time limit " + std::to_string(c.time_limit_s) + " s exceeded");
        if (!t.ok())
            red.insert(c.id);

        std::ostringstream secs_text;
        secs_text.precision(3);
        secs_text << std::fixed << secs;
        std::cout << "criterion " << c.id << ": " << (t.ok() ? "PASS" : "FAIL") << " " << c.title << " ["
                  << (t.total - t.failed) << "/" << t.total << " checks, " << secs_text.str() << " s]\n";
        for (const auto& n : t.notes)
            std::cout << "    " << n << "\n";
    }

    std::cout << "failing criteria: " << join_ids(red) << "\n";
    if (!require_red.empty()) {
        for (int id : parse_ids(require_red))
            if (!red.count(id)) {
                std::cout << "criterion " << id << " was required to fail but passed\n";
                return 1;
            }
        return 0;
    }
    const std::set<int> expected = parse_ids(known_red);
    if (red != expected) {
        std::cout << "expected failing criteria: " << join_ids(expected) << "\n";
        return 1;
    }
    return 0;
}
