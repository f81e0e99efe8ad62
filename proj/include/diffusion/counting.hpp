#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "diffusion/engine.hpp"

namespace diffusion {

using BigCount = boost::multiprecision::cpp_int;
using Polynomial = std::vector<BigCount>;  // coefficient of x^i at index i

// a_1..a_{n_max} from a_n = 5a_{n-1} - 7a_{n-2} + 4a_{n-3} (n >= 5),
// seeded with 1, 2, 6, 19.
std::vector<BigCount> recurrence_counts(std::size_t n_max);

Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// First `terms` coefficients of the power series numerator/denominator,
/// by exact long division. The denominator's constant term must be +-1.
Polynomial series_divide(const Polynomial& numerator, const Polynomial& denominator, std::size_t terms);

// Coefficients of x^1..x^{n_max} of x(1-x)^3 / (1 - 5x + 7x^2 - 4x^3).
std::vector<BigCount> gf_coefficients(std::size_t n_max);

// Board-pile n-omino count as a sum over strip-length compositions of the
// number of admissible offset vectors. Polynomial time.
BigCount board_pile_count(std::size_t n);

// Roots of x^3 - 5x^2 + 7x - 4.
struct CubicRoots {
    long double alpha1 = 0;  // the real root
    std::complex<long double> alpha2;  // imag < 0
    std::complex<long double> alpha3;  // conj(alpha2)
};

inline long double cubic_residual(std::complex<long double> x) {
    return std::abs(((x - 5.0L) * x + 7.0L) * x - 4.0L);
}

/// Newton's method on the real root, then on the conjugate pair seeded by
/// deflation. Throws ConvergenceError if a root does not settle within
/// 200 iterations.
CubicRoots dominant_root();

/// c_1..c_3 with a_k = sum_i c_i alpha_i^k for every k >= 2, fitted on
/// a_2, a_3, a_4. (The closed form does not hold at k = 1 because the
/// generating function has a numerator of higher degree than its
/// denominator.)
std::array<std::complex<long double>, 3> closed_form_coefficients(const CubicRoots& roots);

/// Independent route to one coefficient:
/// -(-7a^-2 + 13a^-1 - 5) / ((192a^-2 - 224a^-1 + 80) a^-1).
std::complex<long double> displayed_coefficient(std::complex<long double> alpha);

/// c_1 * alpha_1^k.
long double asymptotic_estimate(std::size_t k);

// Ordered set partitions of an n-set: a(n) = sum_k C(n,k) a(n-k), a(0) = 1.
BigCount ordered_bell(std::size_t n);

BigCount binomial(std::size_t n, std::size_t k);
BigCount factorial(std::size_t n);

/// Normalised labelled period configurations of K_n: the sum over
/// compositions (c_1..c_N) of n of
///   n!/(c_1!...c_N!) * prod_{i=2..N} (c_{i-1} + c_i - 1).
/// Evaluated by dynamic programming over (cells used, last part).
BigCount labelled_period_count(std::size_t n);

inline constexpr std::size_t kUnlabelledBruteForceCap = 8;
inline constexpr std::size_t kLabelledBruteForceCap = 5;

/// All normalised period configurations of K_n as sorted multisets, found by
/// scanning every nondecreasing multiset with min 0 and max <= 2n and
/// keeping those fixed by two firings. Sorted lexicographically.
std::vector<std::vector<Stack>> brute_force_period_multisets(std::size_t n,
                                                             std::size_t cap = kUnlabelledBruteForceCap);

BigCount brute_force_unlabelled(std::size_t n, std::size_t cap = kUnlabelledBruteForceCap);

/// Scans labelled vectors in [0, 2n]^n with min 0 on the labelled K_n.
BigCount brute_force_labelled(std::size_t n, std::size_t cap = kLabelledBruteForceCap);

}  // namespace diffusion
