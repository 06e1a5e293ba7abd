#ifndef ITLIM_LIMITS_HPP
#define ITLIM_LIMITS_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <itlim/error.hpp>
#include <itlim/series.hpp>

namespace itlim
{

template <std::floating_point Real>
class basic_limit_problem;

template <std::floating_point Real>
basic_limit_problem<Real> make_problem(const basic_taylor_series<Real> &f, const basic_taylor_series<Real> &g,
                                       Real tol = Real(default_vanishing_tol));

// A 0/0 quotient f/g at a common center, checked against the hypotheses of
// the iterated-integration limit theorem: both series vanish through order K,
// g's Taylor coefficient of order K+1 is nonzero. K == -1 means g does not
// vanish at the center at all.
//
// Both series are stored zero-padded to a common order of at least K+2 so the
// tail constants are always defined; a padded series represents the same
// polynomial.
template <std::floating_point Real>
class basic_limit_problem
{
public:
    using series_type = basic_taylor_series<Real>;

    const series_type &f() const noexcept
    {
        return m_f;
    }
    const series_type &g() const noexcept
    {
        return m_g;
    }
    Real center() const noexcept
    {
        return m_f.center();
    }
    int K() const noexcept
    {
        return m_K;
    }
    // Half-width of the window V = [x0 - R, x0 + R].
    Real R() const noexcept
    {
        return m_R;
    }
    // f^(K+1)(x0) / g^(K+1)(x0).
    Real limit() const noexcept
    {
        return m_limit;
    }
    Real tol() const noexcept
    {
        return m_tol;
    }
    Real tail_f() const noexcept
    {
        return m_tail_f;
    }
    Real tail_g() const noexcept
    {
        return m_tail_g;
    }
    // Raw derivatives f^(K+1)(x0) and g^(K+1)(x0).
    Real leading_f() const noexcept
    {
        return m_fact * m_f.coeff(static_cast<std::size_t>(m_K + 1));
    }
    Real leading_g() const noexcept
    {
        return m_fact * m_g.coeff(static_cast<std::size_t>(m_K + 1));
    }
    bool identical_pair() const noexcept
    {
        return m_f.coeffs() == m_g.coeffs();
    }

    bool in_window(Real x) const noexcept
    {
        const auto slack = 4 * std::numeric_limits<Real>::epsilon() * (std::abs(center()) + m_R);
        return std::abs(x - center()) <= m_R + slack;
    }

    // Same problem restricted to a window of half-width r <= R().
    basic_limit_problem with_radius(Real r) const
    {
        if (!(r > 0) || r > m_R) {
            throw error(errc::out_of_window, "window radius must lie in (0, " + std::to_string(m_R) + "]");
        }
        auto p = *this;
        p.m_R = r;
        p.refresh_tails();
        return p;
    }

    template <std::floating_point T>
    friend basic_limit_problem<T> make_problem(const basic_taylor_series<T> &, const basic_taylor_series<T> &, T);

private:
    basic_limit_problem(series_type f, series_type g, int K, Real limit, Real tol)
        : m_f(std::move(f)), m_g(std::move(g)), m_K(K), m_R(std::min(m_f.radius(), m_g.radius())), m_limit(limit),
          m_tol(tol)
    {
        m_fact = 1;
        for (int m = 2; m <= K + 1; ++m) {
            m_fact *= static_cast<Real>(m);
        }
        refresh_tails();
    }

    void refresh_tails()
    {
        m_tail_f = tail_constant(m_f, m_K, m_R);
        m_tail_g = tail_constant(m_g, m_K, m_R);
    }

    series_type m_f;
    series_type m_g;
    int m_K;
    Real m_R;
    Real m_limit;
    Real m_tol;
    Real m_fact{1};
    Real m_tail_f{0};
    Real m_tail_g{0};
};

using limit_problem = basic_limit_problem<double>;

template <std::floating_point Real>
basic_limit_problem<Real> make_problem(const basic_taylor_series<Real> &f, const basic_taylor_series<Real> &g,
                                       Real tol)
{
    if (f.center() != g.center()) {
        throw error(errc::incompatible_centers, "f and g must be expanded around the same center");
    }
    const auto order_g = vanishing_order(g, tol);
    if (order_g > g.order()) {
        throw error(errc::degenerate_denominator, "g is identically zero");
    }
    const auto order_f = vanishing_order(f, tol);
    if (order_f < order_g) {
        throw error(errc::hypothesis_violation, "f vanishes to order " + std::to_string(order_f)
                                                    + " but g to order " + std::to_string(order_g)
                                                    + "; f/g diverges at the center");
    }
    const int K = static_cast<int>(order_g) - 1;
    const auto lead = static_cast<std::size_t>(K + 1);
    const auto L = f.coeff(lead) / g.coeff(lead);
    const auto common = std::max({f.order(), g.order(), static_cast<std::size_t>(K + 2)});
    return basic_limit_problem<Real>(pad_to_order(f, common), pad_to_order(g, common), K, L, tol);
}

template <std::floating_point Real>
Real lhopital_limit(const basic_limit_problem<Real> &p) noexcept
{
    return p.limit();
}

namespace detail
{

// Weights w_j = j!/(j+n)! * (anchor+n)!/anchor!, normalised to 1 at the
// anchor. Multiplying the iterated antiderivative by (anchor+n)!/anchor! / t^n
// keeps its coefficients O(1) for any n, where the plain coefficients
// underflow long before the ratio stops changing.
template <std::floating_point Real>
std::vector<Real> iterated_weights(std::size_t size, std::size_t n, std::size_t anchor)
{
    std::vector<Real> w(size, Real(0));
    if (anchor >= size) {
        return w;
    }
    const auto nn = static_cast<Real>(n);
    w[anchor] = 1;
    for (std::size_t j = anchor + 1u; j < size; ++j) {
        const auto jj = static_cast<Real>(j);
        w[j] = w[j - 1u] * (jj / (jj + nn));
    }
    for (std::size_t j = anchor; j-- > 0u;) {
        const auto jj = static_cast<Real>(j + 1u);
        w[j] = w[j + 1u] * ((jj + nn) / jj);
    }
    return w;
}

template <std::floating_point Real>
Real weighted_horner(const std::vector<Real> &a, const std::vector<Real> &w, Real t)
{
    Real acc(0);
    for (std::size_t j = a.size(); j-- > 0u;) {
        acc = acc * t + a[j] * w[j];
    }
    return acc;
}

template <std::floating_point Real>
void check_ratio_point(const basic_limit_problem<Real> &p, Real x)
{
    if (x == p.center()) {
        throw error(errc::removable_point, "the iterated ratio is 0/0 at the center for every n");
    }
    if (!p.in_window(x)) {
        throw error(errc::out_of_window, "point " + std::to_string(x) + " lies outside the problem window");
    }
}

} // namespace detail

// I_n^f(x) / I_n^g(x). Evaluated through rescaled coefficients, which leaves
// the quotient unchanged and stays finite for arbitrarily large n.
template <std::floating_point Real>
Real iterated_ratio(const basic_limit_problem<Real> &p, Real x, std::size_t n)
{
    detail::check_ratio_point(p, x);
    const auto t = x - p.center();
    const auto w = detail::iterated_weights<Real>(p.f().coeffs().size(), n, static_cast<std::size_t>(p.K() + 1));
    return detail::weighted_horner(p.f().coeffs(), w, t) / detail::weighted_horner(p.g().coeffs(), w, t);
}

inline constexpr double bound_safety_factor = 0.5;

// Uniform bound on |I_n^f/I_n^g - L| over the window minus the center.
//
// With F = f^(K+1)(x0), G = g^(K+1)(x0) and eps = max(C_f, C_g)/(K+2+n) the
// quotient is (F + d_f)/(G + d_g) with |d_f|, |d_g| <= eps, hence an error of
// at most eps (1 + |F/G|) / (|G| - eps). Returns nullopt until
// eps <= bound_safety_factor * |G|.
template <std::floating_point Real>
std::optional<Real> error_bound(const basic_limit_problem<Real> &p, std::size_t n)
{
    // f == g gives a quotient of exactly one at every point and every n.
    if (p.identical_pair()) {
        return Real(0);
    }
    const auto G = std::abs(p.leading_g());
    const auto ratio = std::abs(p.limit());
    const auto eps = std::max(p.tail_f(), p.tail_g()) / (static_cast<Real>(p.K() + 2) + static_cast<Real>(n));
    if (eps > Real(bound_safety_factor) * G) {
        return std::nullopt;
    }
    return (eps + ratio * eps) / (G - eps);
}

template <std::floating_point Real>
struct iteration_result {
    Real estimate;
    std::size_t n_used;
    bool converged;
};

// First n whose error bound is within tol, and the quotient at that n. The
// bound is monotone in n, so the crossing is located in closed form and then
// nudged to the smallest qualifying n.
template <std::floating_point Real>
iteration_result<Real> limit_via_iteration(const basic_limit_problem<Real> &p, Real x, Real tol, std::size_t n_max)
{
    if (!(tol > 0)) {
        throw error(errc::invalid_argument, "tolerance must be positive");
    }
    detail::check_ratio_point(p, x);
    const auto meets = [&](std::size_t n) {
        const auto b = error_bound(p, n);
        return b.has_value() && *b <= tol;
    };

    std::optional<std::size_t> found;
    if (meets(0u)) {
        found = 0u;
    } else {
        const auto G = std::abs(p.leading_g());
        const auto eps_max = std::min(Real(bound_safety_factor) * G, tol * G / (1 + std::abs(p.limit()) + tol));
        const auto c_max = std::max(p.tail_f(), p.tail_g());
        if (eps_max > 0) {
            const auto guess = std::ceil(c_max / eps_max - static_cast<Real>(p.K() + 2));
            if (guess <= static_cast<Real>(n_max) + 1) {
                auto n = static_cast<std::size_t>(std::max(guess, Real(0)));
                while (n > 0u && meets(n - 1u)) {
                    --n;
                }
                while (n <= n_max && !meets(n)) {
                    ++n;
                }
                if (n <= n_max) {
                    found = n;
                }
            }
        }
    }
    if (found) {
        return {iterated_ratio(p, x, *found), *found, true};
    }
    return {iterated_ratio(p, x, n_max), n_max, false};
}

// Largest R' <= R such that every derivative of order 0..K+1 of f and g keeps
// a strict, clearly nonzero sign on each side of the center, sampled at
// `samples` points per side. A failed check shrinks R' by bisection. Sampling
// cannot prove the absence of zeros; it is a practical screen.
template <std::floating_point Real>
Real validate_window(const basic_limit_problem<Real> &p, std::size_t samples, Real tol = Real(default_vanishing_tol))
{
    if (samples < 2u) {
        throw error(errc::invalid_argument, "window validation needs at least 2 samples per side");
    }
    std::vector<basic_taylor_series<Real>> derivs;
    for (const auto *s : {&p.f(), &p.g()}) {
        auto d = *s;
        derivs.push_back(d);
        for (int k = 1; k <= p.K() + 1; ++k) {
            d = derivative(d);
            derivs.push_back(d);
        }
    }

    const auto x0 = p.center();
    std::vector<Real> left(samples), right(samples);
    const auto passes = [&](Real r) {
        for (const auto &d : derivs) {
            Real scale(0);
            for (std::size_t i = 0; i < samples; ++i) {
                const auto t = r * static_cast<Real>(i + 1u) / static_cast<Real>(samples);
                left[i] = eval(d, x0 - t);
                right[i] = eval(d, x0 + t);
                scale = std::max({scale, std::abs(left[i]), std::abs(right[i])});
            }
            const auto threshold = tol * scale;
            for (const auto *side : {&left, &right}) {
                const bool positive = (*side)[0] > 0;
                for (auto v : *side) {
                    if (std::abs(v) <= threshold || (v > 0) != positive) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    const auto R = p.R();
    if (passes(R)) {
        return R;
    }
    auto lo = R * Real(1e-6);
    auto hi = R;
    if (!passes(lo)) {
        throw error(errc::no_valid_window, "derivatives vanish arbitrarily close to the center");
    }
    for (int it = 0; it < 60 && hi - lo > R * Real(1e-12); ++it) {
        const auto mid = lo + (hi - lo) / 2;
        if (passes(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

template <std::floating_point Real>
struct convergence_row {
    std::size_t n;
    Real x;
    Real ratio;
    Real abs_error;
    std::optional<Real> bound;
};

template <std::floating_point Real>
struct convergence_summary {
    std::size_t n;
    // sup over the grid of |ratio - L|
    Real sup_error;
    std::optional<Real> bound;
    // max - min of the ratio over the grid
    Real spread;
};

template <std::floating_point Real>
struct basic_convergence_report {
    std::vector<Real> grid;
    std::vector<convergence_row<Real>> entries;
    std::vector<convergence_summary<Real>> per_n;
    Real tail_f{0};
    Real tail_g{0};
    Real limit{0};
    std::vector<std::string> notes;
};

using convergence_report = basic_convergence_report<double>;

// grid_points nodes spaced evenly over [x0 - R, x0 + R]; the center node,
// present for odd counts, is dropped.
template <std::floating_point Real>
std::vector<Real> symmetric_grid(Real center, Real R, std::size_t grid_points)
{
    if (grid_points < 2u) {
        throw error(errc::invalid_argument, "grid needs at least 2 points");
    }
    std::vector<Real> grid;
    const auto denom = static_cast<Real>(grid_points - 1u);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const auto num = 2 * static_cast<Real>(i) - denom;
        if (num == 0) {
            continue;
        }
        grid.push_back(center + R * (num / denom));
    }
    return grid;
}

template <std::floating_point Real>
void summarise(basic_convergence_report<Real> &rep, std::size_t n, std::optional<Real> bound, std::size_t first_row)
{
    Real sup(0);
    auto lo = std::numeric_limits<Real>::infinity();
    auto hi = -lo;
    for (std::size_t i = first_row; i < rep.entries.size(); ++i) {
        const auto &e = rep.entries[i];
        sup = std::max(sup, e.abs_error);
        lo = std::min(lo, e.ratio);
        hi = std::max(hi, e.ratio);
    }
    rep.per_n.push_back({n, sup, bound, hi - lo});
}

template <std::floating_point Real>
basic_convergence_report<Real> run_convergence(const basic_limit_problem<Real> &p, std::size_t grid_points,
                                               std::size_t n_max)
{
    if (n_max < 1u) {
        throw error(errc::invalid_argument, "n_max must be at least 1");
    }
    basic_convergence_report<Real> rep;
    rep.grid = symmetric_grid(p.center(), p.R(), grid_points);
    rep.tail_f = p.tail_f();
    rep.tail_g = p.tail_g();
    rep.limit = p.limit();
    rep.notes.emplace_back("nonvanishing of f and its derivatives on the window is a hypothesis of the theorem only; "
                           "the quotient needs g alone to stay nonzero");
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto bound = error_bound(p, n);
        const auto first = rep.entries.size();
        for (auto x : rep.grid) {
            const auto r = iterated_ratio(p, x, n);
            rep.entries.push_back({n, x, r, std::abs(r - p.limit()), bound});
        }
        summarise(rep, n, bound, first);
    }
    return rep;
}

} // namespace itlim

#endif
