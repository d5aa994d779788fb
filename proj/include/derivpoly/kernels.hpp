#pragma once

// Data-parallel kernels. Each kernel has a serial reference twin with the
// same contract; tests hold the two to identical results.

#include <cstddef>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace derivpoly::kernels {

/// Below this many output coefficients the parallel kernel runs serially.
inline constexpr std::size_t kParallelConvolutionThreshold = 16;

/// out[n] = sum_{i+j=n} a[i]*b[j] for n = 0..len-1, where len = a.size() = b.size().
template <class Ring>
std::vector<Ring> convolve_truncated_serial(std::span<const Ring> a, std::span<const Ring> b)
{
    const std::size_t len = a.size();
    std::vector<Ring> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        Ring acc{};
        for (std::size_t i = 0; i <= n; ++i)
            acc += a[i] * b[n - i];
        out[n] = std::move(acc);
    }
    return out;
}

template <class Ring>
std::vector<Ring> convolve_truncated(std::span<const Ring> a, std::span<const Ring> b)
{
    const std::size_t len = a.size();
    if (len < kParallelConvolutionThreshold)
        return convolve_truncated_serial(a, b);

    std::vector<Ring> out(len);
    const long long count = static_cast<long long>(len);
    // Output coefficients are independent; late ones cost more, hence dynamic.
#pragma omp parallel for schedule(dynamic, 1)
    for (long long n = count - 1; n >= 0; --n) {
        const auto un = static_cast<std::size_t>(n);
        Ring acc{};
        for (std::size_t i = 0; i <= un; ++i)
            acc += a[i] * b[un - i];
        out[un] = std::move(acc);
    }
    return out;
}

/// Evaluates every job into results[i] = job(i) for i in [0, count).
template <class Result, class Job>
std::vector<Result> map_indexed_serial(std::size_t count, const Job& job)
{
    std::vector<Result> results(count);
    for (std::size_t i = 0; i < count; ++i)
        results[i] = job(i);
    return results;
}

template <class Result, class Job>
std::vector<Result> map_indexed(std::size_t count, const Job& job)
{
    std::vector<Result> results(count);
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i)
        results[static_cast<std::size_t>(i)] = job(static_cast<std::size_t>(i));
    return results;
}

/// Applies the thread cap from the DERIVPOLY_THREADS environment variable,
/// if set to a positive integer. Returns the cap in effect (0 = runtime default).
int apply_thread_cap_from_env();

} // namespace derivpoly::kernels
