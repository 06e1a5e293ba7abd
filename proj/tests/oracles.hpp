#ifndef ITLIM_TESTS_ORACLES_HPP
#define ITLIM_TESTS_ORACLES_HPP

// Reference values computed independently of the library's series machinery.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include <itlim/series.hpp>

namespace itlim::testing
{

inline double factorial(int n)
{
    double f = 1;
    for (int m = 2; m <= n; ++m) {
        f *= m;
    }
    return f;
}

// e^x - 1 - x around 0, N = 64, window [-0.5, 0.5].
inline taylor_series expm1_minus_x(double radius = 0.5)
{
    std::vector<double> c(65, 0.0);
    for (int j = 2; j <= 64; ++j) {
        c[static_cast<std::size_t>(j)] = 1.0 / factorial(j);
    }
    return taylor_series(0.0, radius, c);
}

inline taylor_series x_squared(double radius = 0.5)
{
    return taylor_series(0.0, radius, {0.0, 0.0, 1.0});
}

// I_n of e^x - 1 - x is e^x - sum_{m<=n+1} x^m/m! = sum_{m>=n+2} x^m/m!, and
// I_n of x^2 is 2 x^(n+2)/(n+2)!. Their quotient is
// (1/2) sum_{i>=0} x^i (n+2)!/(n+2+i)!, summed here until the terms vanish.
inline double expm1_over_x2_ratio(double x, int n)
{
    double sum = 0;
    double term = 1;
    for (int i = 0; i < 200 && term != 0; ++i) {
        sum += term;
        term *= x / (n + 3 + i);
    }
    return 0.5 * sum;
}

// Same closed form evaluated literally, usable for small n only (the
// subtraction cancels catastrophically as n grows).
inline double expm1_minus_x_iterated_literal(double x, int n)
{
    double partial = 0;
    for (int m = 0; m <= n + 1; ++m) {
        partial += std::pow(x, m) / factorial(m);
    }
    return std::exp(x) - partial;
}

inline double x_squared_iterated_literal(double x, int n)
{
    return 2 * std::pow(x, n + 2) / factorial(n + 2);
}

inline bool rel_close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Random series with N in [1, max_order] and coefficients in [-1, 1].
inline taylor_series random_series(std::mt19937_64 &rng, std::size_t max_order = 64)
{
    std::uniform_int_distribution<std::size_t> order(1, max_order);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> center(-2.0, 2.0);
    std::uniform_real_distribution<double> radius(0.1, 1.0);
    std::vector<double> c(order(rng) + 1u);
    for (auto &v : c) {
        v = coeff(rng);
    }
    return taylor_series(center(rng), radius(rng), c);
}

// n applications of the single-step antiderivative.
inline taylor_series repeated_antiderivative(taylor_series s, std::size_t n)
{
    for (std::size_t k = 0; k < n; ++k) {
        s = antiderivative(s);
    }
    return s;
}

} // namespace itlim::testing

#endif
