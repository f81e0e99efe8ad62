#include "diffusion/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diffusion/errors.hpp"

namespace diffusion {

namespace {

using Complex = std::complex<long double>;

constexpr int kMaxNewtonIterations = 200;
constexpr long double kRootTolerance = 1e-15L;

Complex cubic(Complex x) { return ((x - 5.0L) * x + 7.0L) * x - 4.0L; }
Complex cubic_derivative(Complex x) { return (3.0L * x - 10.0L) * x + 7.0L; }

Complex newton(Complex x) {
    for (int it = 0; it < kMaxNewtonIterations; ++it) {
        const Complex step = cubic(x) / cubic_derivative(x);
        x -= step;
        if (std::abs(step) < kRootTolerance * std::max(1.0L, std::abs(x))) return x;
    }
    throw ConvergenceError("cubic root refinement did not converge in " + std::to_string(kMaxNewtonIterations) +
                           " iterations");
}

// Gaussian elimination with partial pivoting on a 3x3 complex system.
std::array<Complex, 3> solve3(std::array<std::array<Complex, 3>, 3> m, std::array<Complex, 3> rhs) {
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = col + 1; r < 3; ++r) {
            const Complex factor = m[r][col] / m[col][col];
            for (std::size_t k = col; k < 3; ++k) m[r][k] -= factor * m[col][k];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::array<Complex, 3> x{};
    for (std::size_t r = 3; r-- > 0;) {
        Complex acc = rhs[r];
        for (std::size_t k = r + 1; k < 3; ++k) acc -= m[r][k] * x[k];
        x[r] = acc / m[r][r];
    }
    return x;
}

}  // namespace

std::vector<BigCount> recurrence_counts(std::size_t n_max) {
    if (n_max < 1) throw InputError("recurrence_counts needs n_max >= 1");
    std::vector<BigCount> a{1, 2, 6, 19};
    a.resize(std::min<std::size_t>(n_max, 4));
    while (a.size() < n_max) {
        const std::size_t n = a.size();
        a.push_back(5 * a[n - 1] - 7 * a[n - 2] + 4 * a[n - 3]);
    }
    return a;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Polynomial series_divide(const Polynomial& numerator, const Polynomial& denominator, std::size_t terms) {
    if (denominator.empty() || (denominator[0] != 1 && denominator[0] != -1)) {
        throw InputError("series_divide: denominator constant term must be 1 or -1");
    }
    Polynomial remainder(std::max(terms, numerator.size()), 0);
    std::copy(numerator.begin(), numerator.end(), remainder.begin());
    Polynomial quotient(terms, 0);
    for (std::size_t k = 0; k < terms; ++k) {
        quotient[k] = remainder[k] * denominator[0];  // divide by +-1
        for (std::size_t j = 0; j < denominator.size() && k + j < remainder.size(); ++j) {
            remainder[k + j] -= quotient[k] * denominator[j];
        }
    }
    return quotient;
}

std::vector<BigCount> gf_coefficients(std::size_t n_max) {
    if (n_max < 1) throw InputError("gf_coefficients needs n_max >= 1");
    const Polynomial one_minus_x{1, -1};
    Polynomial numerator{0, 1};
    for (int i = 0; i < 3; ++i) numerator = multiply(numerator, one_minus_x);
    const Polynomial denominator{1, -5, 7, -4};
    auto series = series_divide(numerator, denominator, n_max + 1);
    return {series.begin() + 1, series.end()};
}

BigCount board_pile_count(std::size_t n) {
    if (n < 1) throw InputError("board_pile_count needs n >= 1");
    // ways[m][c]: stacks of strips with m cells whose top strip has c cells.
    std::vector<std::vector<BigCount>> ways(n + 1, std::vector<BigCount>(n + 1, 0));
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t c = 1; c <= m; ++c) {
            if (c == m) {
                ways[m][c] = 1;
                continue;
            }
            for (std::size_t below = 1; below <= m - c; ++below) ways[m][c] += ways[m - c][below] * (below + c - 1);
        }
    }
    BigCount total = 0;
    for (std::size_t c = 1; c <= n; ++c) total += ways[n][c];
    return total;
}

CubicRoots dominant_root() {
    const long double real = newton(Complex(4.0L, 0.0L)).real();
    // x^3 - 5x^2 + 7x - 4 = (x - r)(x^2 + b x + c)
    const long double b = real - 5.0L;
    const long double c = 4.0L / real;
    const long double disc = c - b * b / 4.0L;
    if (disc <= 0) throw ConvergenceError("deflated quadratic has no complex roots");
    Complex lower = newton(Complex(-b / 2.0L, -std::sqrt(disc)));
    CubicRoots roots;
    roots.alpha1 = real;
    roots.alpha2 = Complex(lower.real(), -std::abs(lower.imag()));
    roots.alpha3 = std::conj(roots.alpha2);
    return roots;
}

std::array<Complex, 3> closed_form_coefficients(const CubicRoots& roots) {
    const std::array<Complex, 3> alpha{Complex(roots.alpha1, 0.0L), roots.alpha2, roots.alpha3};
    const auto a = recurrence_counts(4);
    std::array<std::array<Complex, 3>, 3> m{};
    std::array<Complex, 3> rhs{};
    for (std::size_t row = 0; row < 3; ++row) {
        const int k = static_cast<int>(row) + 2;
        for (std::size_t i = 0; i < 3; ++i) m[row][i] = std::pow(alpha[i], k);
        rhs[row] = Complex(a[row + 1].convert_to<long double>(), 0.0L);
    }
    return solve3(m, rhs);
}

Complex displayed_coefficient(Complex alpha) {
    const Complex inv = 1.0L / alpha;
    const Complex top = -7.0L * inv * inv + 13.0L * inv - 5.0L;
    const Complex bottom = (192.0L * inv * inv - 224.0L * inv + 80.0L) * inv;
    return -top / bottom;
}

long double asymptotic_estimate(std::size_t k) {
    if (k < 1) throw InputError("asymptotic_estimate needs k >= 1");
    const auto roots = dominant_root();
    const auto c = closed_form_coefficients(roots);
    return c[0].real() * std::pow(roots.alpha1, static_cast<long double>(k));
}

BigCount binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigCount out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

BigCount factorial(std::size_t n) {
    BigCount out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= i;
    return out;
}

BigCount ordered_bell(std::size_t n) {
    std::vector<BigCount> a(n + 1, 0);
    a[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 1; k <= m; ++k) a[m] += binomial(m, k) * a[m - k];
    return a[n];
}

BigCount labelled_period_count(std::size_t n) {
    if (n < 1) throw InputError("labelled_period_count needs n >= 1");
    // ways[m][c]: labelled strip stacks using m of the n vertices, top strip
    // of size c. Choosing labels part by part gives the multinomial.
    std::vector<std::vector<BigCount>> ways(n + 1, std::vector<BigCount>(n + 1, 0));
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t c = 1; c <= m; ++c) {
            const BigCount choose = binomial(n - (m - c), c);
            if (c == m) {
                ways[m][c] = choose;
                continue;
            }
            BigCount below_sum = 0;
            for (std::size_t below = 1; below <= m - c; ++below) below_sum += ways[m - c][below] * (below + c - 1);
            ways[m][c] = below_sum * choose;
        }
    }
    BigCount total = 0;
    for (std::size_t c = 1; c <= n; ++c) total += ways[n][c];
    return total;
}

}  // namespace diffusion
