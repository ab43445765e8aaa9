#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace henon {

/// Dimension of the degree-j spherical harmonics on S^{N-1}; 1 for j = 0.
/// Throws InvalidArgs when the result does not fit in 64 bits.
std::uint64_t spherical_multiplicity(int N, int j);

struct MorsePair {
    int i;  // 1-based radial index
    int j;
    std::uint64_t multiplicity;
};

struct BoundJ {
    int J = 0;
    std::uint64_t bound = 0;
};

struct BoundK {
    double theta = 0.0;
    int K = 0;
    std::uint64_t bound = 0;
};

struct MorseReport {
    double alpha = 0.0;
    int N = 3;
    std::vector<double> Lambda_hat;
    std::vector<MorsePair> pairs;
    std::vector<MorsePair> degenerate;  // |Lambda_hat_i + j(N-2+j)| <= 1e-9, not counted
    std::uint64_t total_index = 0;
    std::optional<BoundJ> bound_J;
    std::optional<BoundK> bound_K;
};

/// Count of (i, j, multiplicity) with Lambda_hat_i + j(N-2+j) < 0.
MorseReport morse_index(const std::vector<double>& Lambda_hat, int N, double alpha = 0.0);

/// J = ceil(sqrt((N-2)^2 - (lambda_m/2) alpha^2) / 2),  bound = m + m sum_{j=1}^J N_j.
BoundJ lower_bound_J(double alpha, int N, double lambda_m, int m);

/// K = ceil(sqrt((N-2)^2 - (lambda_{m-1}/theta) alpha^2) / 2),
/// bound = m + (m-1) sum_{j=1}^K N_j.  Needs m >= 2 and theta > 1.
BoundK lower_bound_K(double alpha, int N, double lambda_m_minus_1, int m, double theta);

/// Reference count by enumerating j = 0..j_max without the closed-form cap.
std::uint64_t morse_index_exhaustive(const std::vector<double>& Lambda_hat, int N, int j_max);

} // namespace henon
