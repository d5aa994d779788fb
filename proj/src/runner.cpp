#include "derivpoly/runner.hpp"

#include "derivpoly/kernels.hpp"

#include <algorithm>
#include <array>

namespace derivpoly {

namespace {

struct SuiteName {
    Suite suite;
    std::string_view name;
};

constexpr std::array<SuiteName, 10> kSuites{{
    {Suite::All, "all"},
    {Suite::Theorem1, "theorem1"},
    {Suite::Theorem2, "theorem2"},
    {Suite::Theorem3, "theorem3"},
    {Suite::Egf, "egf"},
    {Suite::Lemma1, "lemma1"},
    {Suite::Classical, "classical"},
    {Suite::Integrals, "integrals"},
    {Suite::GrossetVeselov, "grosset-veselov"},
    {Suite::Relations, "relations"},
}};

Rational q(long num, long den = 1) { return Rational(Integer(num), Integer(den)); }

OracleInstance instance(Rational r, Rational a, Rational b, Rational d, Rational u0, Rational v0, int order)
{
    return OracleInstance{ShiftedParams{RiccatiParams(std::move(r), std::move(a), std::move(b)), std::move(d)},
                          std::move(u0), std::move(v0), order};
}

OracleInstance logistic(Rational d, int order)
{
    // q = 2, p = 3, s = 1
    const auto li = logistic_instance(2, 3, 1);
    return OracleInstance{ShiftedParams{li.params, std::move(d)}, li.u0, li.v0, order};
}

const std::vector<Rational>& substitution_samples()
{
    static const std::vector<Rational> samples{q(1, 3), q(2), q(-5, 7), q(7, 2), q(3, 11)};
    return samples;
}

void add_theorem1(std::vector<VerdictJob>& jobs, int order)
{
    std::vector<OracleInstance> insts;
    // u' = u^2 - u, with four starting values
    for (const auto& u0 : {q(1, 3), q(1, 2), q(3, 4), q(2)})
        insts.push_back(instance(1, 0, 1, 0, u0, 1, order));
    insts.push_back(instance(-1, -1, 1, 0, 0, 1, order));      // tanh
    insts.push_back(instance(-1, -1, 1, 0, q(1, 2), 1, order)); // tanh, off-centre
    insts.push_back(instance(1, -1, 1, 0, 2, 1, order));        // coth
    insts.push_back(instance(-1, 0, 1, 0, q(1, 3), 1, order));  // 1/(1+e^{-z})
    insts.push_back(logistic(0, order));
    for (auto& inst : insts)
        jobs.push_back([inst, order] { return check_theorem1(inst, order); });
}

void add_theorem2(std::vector<VerdictJob>& jobs, int order)
{
    std::vector<OracleInstance> insts{
        instance(-1, -1, 1, 0, 0, 1, order),           // tanh / sech
        instance(1, 0, 1, 0, q(1, 3), 1, order),       // 1/(1+e^z)
        instance(1, -1, 1, 0, 2, q(3, 5), order),      // coth / csch
        instance(-1, 0, 1, 0, q(2, 3), q(-4), order),  // 1/(1+e^{-z})
        logistic(0, order),
    };
    for (auto& inst : insts)
        jobs.push_back([inst, order] { return check_theorem2(inst, order); });
}

void add_theorem3(std::vector<VerdictJob>& jobs, int order)
{
    std::vector<OracleInstance> insts{
        instance(1, 0, 1, q(1, 4), q(1, 3), 1, order),
        instance(1, 0, 1, q(-1, 2), q(1, 3), 1, order),
        instance(1, 0, 1, q(2, 3), q(3, 4), q(1, 2), order),
        instance(-1, -1, 1, q(1, 4), 0, 2, order),
        logistic(q(-1, 2), order),
    };
    for (auto& inst : insts)
        jobs.push_back([inst, order] { return check_theorem3(inst, order); });
}

void add_egf(std::vector<VerdictJob>& jobs, int n)
{
    jobs.push_back([n] { return check_egf_eulerian(n); });
    jobs.push_back([n] { return check_egf_A(n); });
    jobs.push_back([n] { return check_egf_macmahon(n); });
    jobs.push_back([n] { return check_egf_macmahon_halved(n); });
    for (const auto& u0 : {q(1, 2), q(1, 3)})
        jobs.push_back([u0, n] { return check_F_closed_form(u0, n); });
    const std::array<std::pair<Rational, Rational>, 4> h{{{q(1, 3), q(1, 4)}, {q(1, 3), q(-1, 2)},
                                                         {q(1, 2), q(0)}, {q(1, 3), q(0)}}};
    for (const auto& [u0, d] : h)
        jobs.push_back([u0, d, n] { return check_H_closed_form(u0, d, n); });
    jobs.push_back([n] { return check_F_H_relation(q(1, 3), n); });
}

void add_integrals(std::vector<VerdictJob>& jobs, const SuiteBounds& bounds)
{
    if (bounds.a) {
        const int n_max = bounds.n_max.value_or(20);
        const Rational a = *bounds.a, b = *bounds.b, d = bounds.d.value_or(q(1, 4));
        for (int n = 1; n <= n_max; ++n)
            jobs.push_back([n, a, b] { return check_integral_P(n, a, b); });
        for (int n = 0; n <= n_max; ++n)
            jobs.push_back([n, a, b] { return check_integral_Q(n, a, b); });
        for (int n = 1; n <= n_max; ++n)
            jobs.push_back([n, a, b, d] { return check_integral_S(n, a, b, d); });
        return;
    }
    const int pq_max = bounds.n_max.value_or(20);
    const int s_max = bounds.n_max.value_or(12);
    const int i3_max = bounds.n_max.value_or(16);
    const std::array<std::pair<Rational, Rational>, 3> pairs{{{q(0), q(1)}, {q(-1), q(1)}, {q(5, 2), q(-3)}}};
    for (const auto& [a, b] : pairs) {
        for (int n = 1; n <= pq_max; ++n)
            jobs.push_back([n, a, b] { return check_integral_P(n, a, b); });
        for (int n = 0; n <= pq_max; ++n)
            jobs.push_back([n, a, b] { return check_integral_Q(n, a, b); });
    }
    const std::array<std::array<Rational, 3>, 4> triples{{{q(0), q(1), q(1, 3)},
                                                          {q(-1), q(1), q(1, 2)},
                                                          {q(2), q(5), q(-1)},
                                                          {q(3), q(-1), q(1, 5)}}};
    for (const auto& t : triples)
        for (int n = 1; n <= s_max; ++n)
            jobs.push_back([n, t] { return check_integral_S(n, t[0], t[1], t[2]); });
    for (int n = 1; n <= i3_max; ++n)
        jobs.push_back([n] { return check_integral_i3(n); });
}

void add_grosset_veselov(std::vector<VerdictJob>& jobs, int m_max)
{
    for (int m = 1; m <= m_max; ++m)
        jobs.push_back([m] { return grosset_veselov_exact(m); });
    for (int m = 1; m <= std::min(m_max, 3); ++m)
        jobs.push_back([m] { return grosset_veselov_numeric(m, 1e-8); });
}

void add_relations(std::vector<VerdictJob>& jobs, const SuiteBounds& bounds)
{
    const int sub_max = bounds.n_max.value_or(12);
    const int hom_max = bounds.n_max.value_or(10);
    const int int_max = bounds.n_max.value_or(20);
    for (int n = 1; n <= sub_max; ++n)
        jobs.push_back([n] { return check_eulerian_explicit(n); });
    const std::array<RiccatiParams, 3> params{RiccatiParams(1, 0, 1), RiccatiParams(-1, -1, 1),
                                              RiccatiParams(q(-1, 2), 2, 0)};
    for (const auto& p : params) {
        for (int n = 1; n <= sub_max; ++n)
            jobs.push_back([n, p] { return check_substitution_E(n, p, substitution_samples()); });
        for (int n = 0; n <= sub_max; ++n)
            jobs.push_back([n, p] { return check_substitution_M(n, p, substitution_samples()); });
    }
    const RiccatiParams hom_base(1, q(1, 2), -2);
    for (const auto& lambda : {q(2), q(-3), q(1, 5)})
        for (int n = 0; n <= hom_max; ++n)
            jobs.push_back([n, hom_base, lambda] {
                return check_homogeneity_Q(n, hom_base, lambda, substitution_samples());
            });
    for (int n = 0; n <= int_max; ++n)
        jobs.push_back([n] { return check_integrality(n); });
}

// Exceptions must not escape an OpenMP region; a throwing job becomes a failed verdict.
Verdict run_guarded(const VerdictJob& job)
{
    try {
        return job();
    } catch (const std::exception& e) {
        Verdict v;
        v.identity = "error";
        v.status = Status::Fail;
        v.first_failure = 0;
        v.witness = Witness{e.what(), "no exception"};
        return v;
    }
}

std::vector<Verdict> canonical(std::vector<Verdict> v)
{
    std::stable_sort(v.begin(), v.end(), verdict_less);
    return v;
}

} // namespace

std::optional<Suite> parse_suite(std::string_view name)
{
    for (const auto& s : kSuites)
        if (s.name == name)
            return s.suite;
    return std::nullopt;
}

std::string_view to_string(Suite suite)
{
    for (const auto& s : kSuites)
        if (s.suite == suite)
            return s.name;
    return "all";
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites)
            v.emplace_back(s.name);
        return v;
    }();
    return names;
}

void SuiteBounds::validate() const
{
    if (n_max && (*n_max < 1 || *n_max > kMaxNBound))
        throw UsageError("--n-max must be in [1, " + std::to_string(kMaxNBound) + "]");
    if (m_max && (*m_max < 1 || *m_max > kMaxMBound))
        throw UsageError("--m-max must be in [1, " + std::to_string(kMaxMBound) + "]");
    if (order && (*order < 1 || *order > kMaxOrderBound))
        throw UsageError("--order must be in [1, " + std::to_string(kMaxOrderBound) + "]");
    if (a.has_value() != b.has_value())
        throw UsageError("--a and --b must be given together");
    if (a && *a == *b)
        throw UsageError("--a and --b must differ");
    if (d && !a)
        throw UsageError("--d requires --a and --b");
}

std::vector<VerdictJob> suite_jobs(Suite suite, const SuiteBounds& bounds)
{
    bounds.validate();
    std::vector<VerdictJob> jobs;
    const int order = bounds.order.value_or(16);
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Theorem1)
        add_theorem1(jobs, order);
    if (all || suite == Suite::Theorem2)
        add_theorem2(jobs, order);
    if (all || suite == Suite::Theorem3)
        add_theorem3(jobs, order);
    if (all || suite == Suite::Egf)
        add_egf(jobs, bounds.n_max.value_or(10));
    if (all || suite == Suite::Lemma1)
        for (int n = 1; n <= bounds.n_max.value_or(15); ++n)
            jobs.push_back([n] { return check_lemma1(n); });
    if (all || suite == Suite::Classical)
        for (int n = 1; n <= bounds.n_max.value_or(15); ++n)
            jobs.push_back([n] { return check_classical(n); });
    if (all || suite == Suite::Integrals)
        add_integrals(jobs, bounds);
    if (all || suite == Suite::GrossetVeselov)
        add_grosset_veselov(jobs, bounds.m_max.value_or(8));
    if (all || suite == Suite::Relations)
        add_relations(jobs, bounds);
    return jobs;
}

std::vector<Verdict> run_jobs_serial(const std::vector<VerdictJob>& jobs)
{
    return canonical(kernels::map_indexed_serial<Verdict>(jobs.size(), [&](size_t i) { return run_guarded(jobs[i]); }));
}

std::vector<Verdict> run_jobs_parallel(const std::vector<VerdictJob>& jobs)
{
    return canonical(kernels::map_indexed<Verdict>(jobs.size(), [&](size_t i) { return run_guarded(jobs[i]); }));
}

RunSummary summarize(const std::vector<Verdict>& verdicts)
{
    RunSummary s;
    for (const auto& v : verdicts) {
        ++s.total;
        switch (v.status) {
        case Status::Pass:
            ++s.passed;
            break;
        case Status::Fail:
            ++s.failed;
            break;
        case Status::Inconclusive:
            ++s.inconclusive;
            break;
        }
    }
    return s;
}

} // namespace derivpoly
