#include "henon/morse.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "henon/errors.hpp"

namespace henon {

namespace {

constexpr double kTieTolerance = 1e-9;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t s = 0;
    if (__builtin_add_overflow(a, b, &s))
        throw InvalidArgs("integer overflow in Morse count");
    return s;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t s = 0;
    if (__builtin_mul_overflow(a, b, &s))
        throw InvalidArgs("integer overflow in Morse count");
    return s;
}

// binom(n, k) with exact intermediate division.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) / i is exact; split by gcd to delay overflow
        const std::uint64_t num = n - k + i;
        std::uint64_t g = std::gcd(r, i);
        const std::uint64_t r_red = r / g;
        const std::uint64_t i_red = i / g;
        r = checked_mul(r_red, num / i_red);
    }
    return r;
}

std::uint64_t multiplicity_sum(int N, int upto)
{
    std::uint64_t s = 0;
    for (int j = 1; j <= upto; ++j)
        s = checked_add(s, spherical_multiplicity(N, j));
    return s;
}

int ceil_half_root(double radicand)
{
    return static_cast<int>(std::ceil(std::sqrt(radicand) / 2.0));
}

void check_dimension(int N)
{
    if (N < 2)
        throw InvalidArgs("N must be >= 2, got " + std::to_string(N));
}

} // namespace

std::uint64_t spherical_multiplicity(int N, int j)
{
    check_dimension(N);
    if (j < 0)
        throw InvalidArgs("j must be >= 0");
    if (j == 0)
        return 1;
    if (N == 2)
        return 2;
    // harmonic polynomials of degree j = homogeneous degree j minus degree j-2
    const auto n = static_cast<std::uint64_t>(N);
    const auto jj = static_cast<std::uint64_t>(j);
    const std::uint64_t hi = binomial(n + jj - 1, n - 1);
    const std::uint64_t lo = jj >= 2 ? binomial(n + jj - 3, n - 1) : 0;
    return hi - lo;
}

MorseReport morse_index(const std::vector<double>& Lambda_hat, int N, double alpha)
{
    check_dimension(N);
    MorseReport out;
    out.alpha = alpha;
    out.N = N;
    out.Lambda_hat = Lambda_hat;
    for (std::size_t k = 0; k < Lambda_hat.size(); ++k) {
        const double L = Lambda_hat[k];
        if (!(L < 0.0))
            throw InvalidArgs("Morse count needs negative eigenvalues, got " + std::to_string(L));
        // positive root of j^2 + (N-2) j + L
        const double root = 0.5 * (-(N - 2.0) + std::sqrt((N - 2.0) * (N - 2.0) - 4.0 * L));
        const int cap = static_cast<int>(std::floor(root)) + 1;
        for (int j = 0; j <= cap; ++j) {
            const double shifted = L + static_cast<double>(j) * (N - 2.0 + j);
            const MorsePair pair{static_cast<int>(k) + 1, j, spherical_multiplicity(N, j)};
            if (std::abs(shifted) <= kTieTolerance) {
                out.degenerate.push_back(pair);
            } else if (shifted < 0.0) {
                out.pairs.push_back(pair);
                out.total_index = checked_add(out.total_index, pair.multiplicity);
            }
        }
    }
    return out;
}

std::uint64_t morse_index_exhaustive(const std::vector<double>& Lambda_hat, int N, int j_max)
{
    std::uint64_t total = 0;
    for (double L : Lambda_hat) {
        for (int j = 0; j <= j_max; ++j) {
            const double shifted = L + static_cast<double>(j) * (N - 2.0 + j);
            if (shifted < -kTieTolerance)
                total = checked_add(total, spherical_multiplicity(N, j));
        }
    }
    return total;
}

BoundJ lower_bound_J(double alpha, int N, double lambda_m, int m)
{
    check_dimension(N);
    if (!(lambda_m < 0.0))
        throw InvalidArgs("lambda_m must be negative");
    if (m < 1)
        throw InvalidArgs("m must be >= 1");
    BoundJ out;
    out.J = ceil_half_root((N - 2.0) * (N - 2.0) - 0.5 * lambda_m * alpha * alpha);
    const auto mm = static_cast<std::uint64_t>(m);
    out.bound = checked_add(mm, checked_mul(mm, multiplicity_sum(N, out.J)));
    return out;
}

BoundK lower_bound_K(double alpha, int N, double lambda_m_minus_1, int m, double theta)
{
    check_dimension(N);
    if (m < 2)
        throw InvalidArgs("K bound needs m >= 2, got m = " + std::to_string(m));
    if (!(theta > 1.0))
        throw InvalidArgs("K bound needs theta > 1, got " + std::to_string(theta));
    if (!(lambda_m_minus_1 < 0.0))
        throw InvalidArgs("lambda_{m-1} must be negative");
    BoundK out;
    out.theta = theta;
    out.K = ceil_half_root((N - 2.0) * (N - 2.0) - lambda_m_minus_1 / theta * alpha * alpha);
    const auto mm = static_cast<std::uint64_t>(m);
    out.bound = checked_add(mm, checked_mul(mm - 1, multiplicity_sum(N, out.K)));
    return out;
}

} // namespace henon
