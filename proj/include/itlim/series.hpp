#ifndef ITLIM_SERIES_HPP
#define ITLIM_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <itlim/error.hpp>

namespace itlim
{

inline constexpr std::size_t default_series_order = 64;
inline constexpr double default_vanishing_tol = 1e-12;

// Truncated Taylor expansion of an analytic function around a center.
//
// coeffs()[j] holds f^(j)(center)/j!, so a raw derivative is recovered as
// j! * coeffs()[j]. The series is only evaluated inside the closed window
// [center - radius, center + radius].
template <std::floating_point Real>
class basic_taylor_series
{
public:
    using value_type = Real;

    basic_taylor_series(Real center, Real radius, std::vector<Real> coeffs)
        : m_center(center), m_radius(radius), m_coeffs(std::move(coeffs))
    {
        if (!std::isfinite(m_center)) {
            throw error(errc::invalid_series, "center must be finite");
        }
        if (!std::isfinite(m_radius) || !(m_radius > 0)) {
            throw error(errc::invalid_series, "radius must be finite and positive");
        }
        if (m_coeffs.empty()) {
            throw error(errc::invalid_series, "coefficient list is empty");
        }
        for (auto c : m_coeffs) {
            if (!std::isfinite(c)) {
                throw error(errc::invalid_series, "coefficients must be finite");
            }
        }
    }

    Real center() const noexcept
    {
        return m_center;
    }
    Real radius() const noexcept
    {
        return m_radius;
    }
    const std::vector<Real> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    // Truncation degree N; there are N + 1 coefficients.
    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1u;
    }
    // Coefficient of (x - center)^j, zero past the truncation degree.
    Real coeff(std::size_t j) const noexcept
    {
        return j < m_coeffs.size() ? m_coeffs[j] : Real(0);
    }

    // Grid nodes computed as center + i*h may land an ulp or two past the
    // window edge, so membership tolerates a few ulps of the window scale.
    bool in_window(Real x) const noexcept
    {
        const auto slack = 4 * std::numeric_limits<Real>::epsilon() * (std::abs(m_center) + m_radius);
        return std::abs(x - m_center) <= m_radius + slack;
    }

    friend bool operator==(const basic_taylor_series &, const basic_taylor_series &) = default;

private:
    Real m_center;
    Real m_radius;
    std::vector<Real> m_coeffs;
};

using taylor_series = basic_taylor_series<double>;

template <std::floating_point Real>
basic_taylor_series<Real> series_from_coeffs(Real center, Real radius, std::vector<Real> coeffs)
{
    return basic_taylor_series<Real>(center, radius, std::move(coeffs));
}

inline taylor_series series_from_coeffs(double center, double radius, std::initializer_list<double> coeffs)
{
    return taylor_series(center, radius, std::vector<double>(coeffs));
}

// Horner evaluation of sum_j a_j (x - center)^j.
template <std::floating_point Real>
Real eval(const basic_taylor_series<Real> &s, Real x)
{
    if (!s.in_window(x)) {
        throw error(errc::out_of_window, "evaluation point " + std::to_string(x) + " lies outside the series window");
    }
    const auto t = x - s.center();
    const auto &a = s.coeffs();
    Real acc(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

template <std::floating_point Real>
basic_taylor_series<Real> derivative(const basic_taylor_series<Real> &s)
{
    if (s.order() == 0u) {
        throw error(errc::degenerate_order, "cannot differentiate a series of order 0");
    }
    const auto &a = s.coeffs();
    std::vector<Real> b(a.size() - 1u);
    for (std::size_t j = 0; j < b.size(); ++j) {
        b[j] = static_cast<Real>(j + 1u) * a[j + 1u];
    }
    return basic_taylor_series<Real>(s.center(), s.radius(), std::move(b));
}

// Antiderivative vanishing at the center (the center is the lower limit of
// integration).
template <std::floating_point Real>
basic_taylor_series<Real> antiderivative(const basic_taylor_series<Real> &s)
{
    const auto &a = s.coeffs();
    std::vector<Real> c(a.size() + 1u);
    c[0] = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        c[j + 1u] = a[j] / static_cast<Real>(j + 1u);
    }
    return basic_taylor_series<Real>(s.center(), s.radius(), std::move(c));
}

// n-fold antiderivative from the center: the coefficient of degree j + n is
// a_j * j!/(j+n)!, with the factor accumulated as 1/(j+1) * ... * 1/(j+n).
template <std::floating_point Real>
basic_taylor_series<Real> iterated_antiderivative(const basic_taylor_series<Real> &s, std::size_t n)
{
    if (n == 0u) {
        return s;
    }
    const auto &a = s.coeffs();
    std::vector<Real> c(a.size() + n, Real(0));
    for (std::size_t j = 0; j < a.size(); ++j) {
        Real factor(1);
        for (std::size_t m = 1; m <= n; ++m) {
            factor *= Real(1) / static_cast<Real>(j + m);
        }
        c[j + n] = a[j] * factor;
    }
    return basic_taylor_series<Real>(s.center(), s.radius(), std::move(c));
}

// Smallest j with |a_j| > tol * max_k |a_k|. Returns order() + 1 when no
// coefficient clears the threshold (identically zero series).
template <std::floating_point Real>
std::size_t vanishing_order(const basic_taylor_series<Real> &s, Real tol = Real(default_vanishing_tol))
{
    if (!(tol >= 0)) {
        throw error(errc::invalid_argument, "vanishing-order tolerance must be non-negative");
    }
    const auto &a = s.coeffs();
    Real scale(0);
    for (auto c : a) {
        scale = std::max(scale, std::abs(c));
    }
    const auto threshold = tol * scale;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::abs(a[j]) > threshold) {
            return j;
        }
    }
    return a.size();
}

// Uniform bound C on the bracketed remainder
//
//   f^(K+2)(x0) t + sum_{i>=2} f^(K+1+i)(x0) / ((K+3+n)...(K+1+i+n)) t^i,   |t| <= R,
//
// valid for every n >= 0. Taking n = 0 in the falling factors gives the
// largest term magnitudes, and in Taylor coefficients each term collapses to
// (K+2)! |a_{K+1+i}| R^i.
template <std::floating_point Real>
Real tail_constant(const basic_taylor_series<Real> &s, int K, Real R)
{
    if (K < -1) {
        throw error(errc::invalid_argument, "vanishing order K must be >= -1");
    }
    if (static_cast<std::size_t>(K + 2) > s.order()) {
        throw error(errc::insufficient_order,
                    "tail constant needs order >= K+2 = " + std::to_string(K + 2) + ", series has order "
                        + std::to_string(s.order()));
    }
    if (!(R > 0) || R > s.radius()) {
        throw error(errc::out_of_window, "tail radius must lie in (0, series radius]");
    }
    const auto first = static_cast<std::size_t>(K + 2);
    const auto &a = s.coeffs();
    // Horner on sum_{i>=1} |a_{K+1+i}| R^i.
    Real acc(0);
    for (std::size_t j = a.size() - 1u; j >= first; --j) {
        acc = (acc + std::abs(a[j])) * R;
    }
    Real fact(1);
    for (int m = 2; m <= K + 2; ++m) {
        fact *= static_cast<Real>(m);
    }
    return fact * acc;
}

// Copy of s with zero coefficients appended up to the given order.
template <std::floating_point Real>
basic_taylor_series<Real> pad_to_order(const basic_taylor_series<Real> &s, std::size_t order)
{
    if (order <= s.order()) {
        return s;
    }
    auto c = s.coeffs();
    c.resize(order + 1u, Real(0));
    return basic_taylor_series<Real>(s.center(), s.radius(), std::move(c));
}

} // namespace itlim

#endif
