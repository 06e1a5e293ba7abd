#ifndef ITLIM_QUAD_HPP
#define ITLIM_QUAD_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <itlim/error.hpp>
#include <itlim/series.hpp>

namespace itlim
{

// Samples of a function at center + i*h for i = -M..M. values()[M] is the
// center sample.
template <std::floating_point Real>
class basic_grid_function
{
public:
    using value_type = Real;

    basic_grid_function(Real center, Real step, std::vector<Real> values)
        : m_center(center), m_step(step), m_values(std::move(values))
    {
        if (!std::isfinite(m_center)) {
            throw error(errc::invalid_argument, "grid center must be finite");
        }
        if (!std::isfinite(m_step) || !(m_step > 0)) {
            throw error(errc::invalid_argument, "grid step must be finite and positive");
        }
        if (m_values.size() % 2u != 1u) {
            throw error(errc::invalid_argument, "grid needs an odd number of samples");
        }
        for (auto v : m_values) {
            if (!std::isfinite(v)) {
                throw error(errc::invalid_argument, "grid values must be finite");
            }
        }
    }

    Real center() const noexcept
    {
        return m_center;
    }
    Real step() const noexcept
    {
        return m_step;
    }
    const std::vector<Real> &values() const noexcept
    {
        return m_values;
    }
    // Samples per side.
    std::ptrdiff_t half_width() const noexcept
    {
        return static_cast<std::ptrdiff_t>(m_values.size() / 2u);
    }
    Real at(std::ptrdiff_t i) const
    {
        return m_values.at(static_cast<std::size_t>(i + half_width()));
    }
    Real point(std::ptrdiff_t i) const noexcept
    {
        return m_center + static_cast<Real>(i) * m_step;
    }

    friend bool operator==(const basic_grid_function &, const basic_grid_function &) = default;

private:
    Real m_center;
    Real m_step;
    std::vector<Real> m_values;
};

using grid_function = basic_grid_function<double>;

inline constexpr std::ptrdiff_t min_samples_per_side = 5;

namespace detail
{

// One-sided running integral from the center along u[0], u[1], ...; the
// element u[-1] (the first sample on the other side) is passed separately.
// Even offsets use composite Simpson. Odd offsets i >= 3 finish with the
// Simpson 3/8 rule over the last three panels, and i = 1 uses the four-point
// cubic rule h/24 (-u[-1] + 13 u[0] + 13 u[1] - u[2]). Every node is
// therefore exact for cubics.
template <std::floating_point Real>
std::vector<Real> one_sided_integral(const std::vector<Real> &u, Real before, Real h)
{
    const auto n = u.size();
    std::vector<Real> v(n, Real(0));
    for (std::size_t i = 2; i < n; i += 2) {
        v[i] = v[i - 2u] + h / 3 * (u[i - 2u] + 4 * u[i - 1u] + u[i]);
    }
    v[1] = h / 24 * (-before + 13 * u[0] + 13 * u[1] - u[2]);
    for (std::size_t i = 3; i < n; i += 2) {
        v[i] = v[i - 3u] + 3 * h / 8 * (u[i - 3u] + 3 * u[i - 2u] + 3 * u[i - 1u] + u[i]);
    }
    return v;
}

} // namespace detail

// v(x) ~ integral of u from the center to x, with v(center) = 0. The negative
// side integrates the mirrored samples and flips the sign, so odd integrands
// yield bit-exactly even results.
template <std::floating_point Real>
basic_grid_function<Real> cumulative_integral(const basic_grid_function<Real> &u)
{
    const auto M = u.half_width();
    if (M < min_samples_per_side) {
        throw error(errc::insufficient_grid, "cumulative integration needs at least "
                                                 + std::to_string(min_samples_per_side) + " samples per side");
    }
    const auto &vals = u.values();
    const auto mid = static_cast<std::size_t>(M);
    const std::vector<Real> fwd(vals.begin() + static_cast<std::ptrdiff_t>(mid), vals.end());
    const std::vector<Real> bwd(vals.rbegin() + static_cast<std::ptrdiff_t>(mid), vals.rend());

    const auto pos = detail::one_sided_integral(fwd, bwd[1], u.step());
    const auto neg = detail::one_sided_integral(bwd, fwd[1], u.step());

    std::vector<Real> out(vals.size());
    for (std::size_t k = 0; k <= mid; ++k) {
        out[mid + k] = pos[k];
        out[mid - k] = -neg[k];
    }
    out[mid] = 0;
    return basic_grid_function<Real>(u.center(), u.step(), std::move(out));
}

template <std::floating_point Real>
basic_grid_function<Real> iterated_cumulative_integral(basic_grid_function<Real> u, std::size_t n)
{
    for (std::size_t k = 0; k < n; ++k) {
        u = cumulative_integral(u);
    }
    return u;
}

template <std::floating_point Real>
void check_compatible(const basic_grid_function<Real> &a, const basic_grid_function<Real> &b)
{
    if (a.center() != b.center() || a.step() != b.step() || a.values().size() != b.values().size()) {
        throw error(errc::incompatible_grids, "grids differ in center, step or sample count");
    }
}

// Quotient of the n-fold cumulative integrals of fu and gu at grid index i.
template <std::floating_point Real>
Real iterated_ratio_numeric(const basic_grid_function<Real> &fu, const basic_grid_function<Real> &gu,
                            std::ptrdiff_t i, std::size_t n)
{
    check_compatible(fu, gu);
    if (i == 0) {
        throw error(errc::removable_point, "the iterated ratio is 0/0 at the center");
    }
    if (i < -fu.half_width() || i > fu.half_width()) {
        throw error(errc::out_of_window, "grid index out of range");
    }
    const auto If = iterated_cumulative_integral(fu, n);
    const auto Ig = iterated_cumulative_integral(gu, n);
    return If.at(i) / Ig.at(i);
}

template <std::floating_point Real>
basic_grid_function<Real> grid_from_series(const basic_taylor_series<Real> &s, std::size_t M, Real h)
{
    if (!(h > 0)) {
        throw error(errc::invalid_argument, "grid step must be positive");
    }
    if (!s.in_window(s.center() + static_cast<Real>(M) * h)) {
        throw error(errc::out_of_window, "grid half-width M*h exceeds the series radius");
    }
    const auto m = static_cast<std::ptrdiff_t>(M);
    std::vector<Real> values;
    values.reserve(2u * M + 1u);
    for (std::ptrdiff_t i = -m; i <= m; ++i) {
        values.push_back(eval(s, s.center() + static_cast<Real>(i) * h));
    }
    return basic_grid_function<Real>(s.center(), h, std::move(values));
}

} // namespace itlim

#endif
