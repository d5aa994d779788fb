#pragma once

#include "derivpoly/verifier.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace derivpoly {

enum class Suite {
    All,
    Theorem1,
    Theorem2,
    Theorem3,
    Egf,
    Lemma1,
    Classical,
    Integrals,
    GrossetVeselov,
    Relations,
};

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);
const std::vector<std::string>& suite_names();

/// Upper bounds accepted from the command line.
inline constexpr int kMaxNBound = 40;
inline constexpr int kMaxMBound = 12;
inline constexpr int kMaxOrderBound = 40;

/// Optional overrides; unset fields fall back to the suite defaults.
struct SuiteBounds {
    std::optional<int> n_max;  // lemma1, classical, integrals, relations, egf N
    std::optional<int> m_max;  // grosset-veselov
    std::optional<int> order;  // theorem1..3 oracle order and check bound
    std::optional<Rational> a; // integrals: a single (a, b[, d]) instead of the defaults
    std::optional<Rational> b;
    std::optional<Rational> d;

    /// Throws UsageError for bounds outside the accepted maxima or an
    /// incomplete/degenerate (a, b) pair.
    void validate() const;
};

using VerdictJob = std::function<Verdict()>;

std::vector<VerdictJob> suite_jobs(Suite suite, const SuiteBounds& bounds = {});

/// Runs every job in turn and returns verdicts in canonical order.
std::vector<Verdict> run_jobs_serial(const std::vector<VerdictJob>& jobs);

/// OpenMP-parallel twin of run_jobs_serial; identical output.
std::vector<Verdict> run_jobs_parallel(const std::vector<VerdictJob>& jobs);

struct RunSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int inconclusive = 0;

    /// 0 all pass, 1 any failure or inconclusive.
    int exit_code() const { return (failed + inconclusive) == 0 ? 0 : 1; }
};

RunSummary summarize(const std::vector<Verdict>& verdicts);

} // namespace derivpoly
