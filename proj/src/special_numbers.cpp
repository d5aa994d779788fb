#include "derivpoly/special_numbers.hpp"

#include <mutex>

namespace derivpoly {

std::string_view to_string(TriangleKind kind)
{
    return kind == TriangleKind::Eulerian ? "eulerian" : "macmahon";
}

Triangle::Triangle(TriangleKind kind, std::vector<std::vector<Integer>> rows)
    : kind_(kind), rows_(std::move(rows))
{
}

const std::vector<Integer>& Triangle::row(int n) const
{
    if (n < 1 || n > n_max())
        throw UsageError("triangle row " + std::to_string(n) + " not stored");
    return rows_[static_cast<size_t>(n - 1)];
}

Integer Triangle::at(int n, int k) const
{
    if (n < 1 || n > n_max())
        return 0;
    // Eulerian support is k = 0..n-1, MacMahon k = 1..n.
    const int index = kind_ == TriangleKind::Eulerian ? k : k - 1;
    if (index < 0 || index >= n)
        return 0;
    return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(index)];
}

Triangle build_eulerian_triangle(int n_max)
{
    if (n_max < 1)
        throw UsageError("eulerian triangle needs n_max >= 1");
    std::vector<std::vector<Integer>> rows;
    rows.reserve(static_cast<size_t>(n_max));
    rows.push_back({Integer(1)});
    for (int n = 1; n < n_max; ++n) {
        const auto& prev = rows.back();
        auto at = [&](int k) -> Integer {
            return (k < 0 || k >= n) ? Integer(0) : prev[static_cast<size_t>(k)];
        };
        std::vector<Integer> next(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
#ifdef DERIVPOLY_MUTATE_EULERIAN
            // Deliberate off-by-one for the mutation sanity check.
            next[static_cast<size_t>(k)] = (k + 2) * at(k) + (n - k + 1) * at(k - 1);
#else
            // <n+1,k> = (k+1)<n,k> + (n-k+1)<n,k-1>
            next[static_cast<size_t>(k)] = (k + 1) * at(k) + (n - k + 1) * at(k - 1);
#endif
        }
        rows.push_back(std::move(next));
    }
    return Triangle(TriangleKind::Eulerian, std::move(rows));
}

Triangle build_macmahon_triangle(int n_max)
{
    if (n_max < 1)
        throw UsageError("macmahon triangle needs n_max >= 1");
    std::vector<std::vector<Integer>> rows;
    rows.reserve(static_cast<size_t>(n_max));
    rows.push_back({Integer(1)});
    for (int n = 2; n <= n_max; ++n) {
        const auto& prev = rows.back();
        auto at = [&](int k) -> Integer {
            return (k < 1 || k > n - 1) ? Integer(0) : prev[static_cast<size_t>(k - 1)];
        };
        std::vector<Integer> next(static_cast<size_t>(n));
        next[0] = 1;
        for (int k = 2; k <= n; ++k)
            next[static_cast<size_t>(k - 1)] = (2 * k - 1) * at(k) + (2 * n - 2 * k + 1) * at(k - 1);
        rows.push_back(std::move(next));
    }
    return Triangle(TriangleKind::MacMahon, std::move(rows));
}

namespace {

// Grow-only memo of a triangle. Readers get values by copy under the lock.
class TriangleMemo {
public:
    using Builder = Triangle (*)(int);
    TriangleMemo(TriangleKind kind, Builder build) : build_(build), table_(kind, {}) {}

    Integer at(int n, int k)
    {
        std::lock_guard lock(mutex_);
        if (n > table_.n_max())
            table_ = build_(std::max(n, 2 * table_.n_max()));
        return table_.at(n, k);
    }

private:
    Builder build_;
    std::mutex mutex_;
    Triangle table_;
};

TriangleMemo& eulerian_memo()
{
    static TriangleMemo memo(TriangleKind::Eulerian, &build_eulerian_triangle);
    return memo;
}

TriangleMemo& macmahon_memo()
{
    static TriangleMemo memo(TriangleKind::MacMahon, &build_macmahon_triangle);
    return memo;
}

} // namespace

Integer eulerian(int n, int k)
{
    if (n < 1)
        throw UsageError("eulerian: n must be >= 1");
    return eulerian_memo().at(n, k);
}

Integer eulerian_explicit(int n, int k)
{
    if (n < 1)
        throw UsageError("eulerian_explicit: n must be >= 1");
    if (k < 0 || k > n - 1)
        throw UsageError("eulerian_explicit: k out of range");
    Integer sum = 0;
    for (int j = 0; j <= k; ++j) {
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k - j + 1), static_cast<unsigned long>(n));
        term *= binomial(n + 1, j);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

Integer macmahon(int n, int k)
{
    if (n < 1)
        throw UsageError("macmahon: n must be >= 1");
    return macmahon_memo().at(n, k);
}

BernoulliCache bernoulli_numbers(int n_max)
{
    if (n_max < 0)
        throw UsageError("bernoulli_numbers: negative bound");
    // (e^t - 1)/t = sum_j t^j/(j+1)!. Coefficient n of the product with
    // sum B_k t^k/k! must vanish for n >= 1:
    //   B_n/n! = -sum_{k<n} (B_k/k!) / (n-k+1)!
    std::vector<Rational> b(static_cast<size_t>(n_max) + 1);
    std::vector<Rational> scaled(b.size()); // B_k / k!
    b[0] = 1;
    scaled[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Rational acc;
        for (int k = 0; k < n; ++k)
            acc += scaled[static_cast<size_t>(k)] * Rational(Integer(1), factorial(n - k + 1));
        scaled[static_cast<size_t>(n)] = -acc;
        b[static_cast<size_t>(n)] = -acc * Rational(factorial(n));
    }
    return BernoulliCache(std::move(b));
}

Rational bernoulli(int n)
{
    if (n < 0)
        throw UsageError("bernoulli: negative index");
    static std::mutex mutex;
    static BernoulliCache cache = bernoulli_numbers(32);
    std::lock_guard lock(mutex);
    if (n > cache.max_index())
        cache = bernoulli_numbers(std::max(n, 2 * cache.max_index()));
    return cache[n];
}

Poly bernoulli_poly(int n)
{
    if (n < 0)
        throw UsageError("bernoulli_poly: negative index");
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    // coefficient of x^{n-k} is C(n,k) B_k
    for (int k = 0; k <= n; ++k)
        c[static_cast<size_t>(n - k)] = Rational(binomial(n, k)) * bernoulli(k);
    return Poly(std::move(c));
}

Rational bernoulli_value(int n, const Rational& x) { return bernoulli_poly(n).eval(x); }

} // namespace derivpoly
