#ifndef ITLIM_ENTROPY_HPP
#define ITLIM_ENTROPY_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <itlim/error.hpp>
#include <itlim/limits.hpp>
#include <itlim/series.hpp>

namespace itlim
{

inline constexpr double default_entropy_window = 0.9;
inline constexpr double distribution_sum_tol = 1e-12;

// Finite probability vector p_1..p_W with the entropy unit k_B.
template <std::floating_point Real>
class basic_probability_distribution
{
public:
    explicit basic_probability_distribution(std::vector<Real> p, Real k_B = Real(1))
        : m_p(std::move(p)), m_kB(k_B)
    {
        if (m_p.empty()) {
            throw error(errc::invalid_distribution, "distribution has no configurations");
        }
        if (!std::isfinite(m_kB) || !(m_kB > 0)) {
            throw error(errc::invalid_distribution, "k_B must be finite and positive");
        }
        Real sum(0);
        for (auto v : m_p) {
            if (!std::isfinite(v) || v < 0) {
                throw error(errc::invalid_distribution, "probabilities must be finite and non-negative");
            }
            sum += v;
        }
        if (std::abs(sum - 1) > Real(distribution_sum_tol)) {
            throw error(errc::invalid_distribution, "probabilities must sum to 1");
        }
    }

    const std::vector<Real> &p() const noexcept
    {
        return m_p;
    }
    std::size_t W() const noexcept
    {
        return m_p.size();
    }
    Real k_B() const noexcept
    {
        return m_kB;
    }

private:
    std::vector<Real> m_p;
    Real m_kB;
};

using probability_distribution = basic_probability_distribution<double>;

namespace detail
{

template <std::floating_point Real>
void require_positive(const basic_probability_distribution<Real> &d)
{
    for (auto v : d.p()) {
        if (v == 0) {
            throw error(errc::zero_probability, "zero probabilities must be removed before use");
        }
    }
}

} // namespace detail

// k_B (1 - sum_i p_i^q) / (q - 1)
template <std::floating_point Real>
Real tsallis_entropy(const basic_probability_distribution<Real> &d, Real q)
{
    if (q == 1) {
        throw error(errc::removable_singularity,
                    "Tsallis entropy is 0/0 at q = 1; use shannon_entropy or entropy_family");
    }
    detail::require_positive(d);
    Real sum(0);
    for (auto v : d.p()) {
        sum += std::pow(v, q);
    }
    return d.k_B() * (1 - sum) / (q - 1);
}

// -k_B sum_i p_i ln p_i
template <std::floating_point Real>
Real shannon_entropy(const basic_probability_distribution<Real> &d)
{
    detail::require_positive(d);
    Real acc(0);
    for (auto v : d.p()) {
        acc -= v * std::log(v);
    }
    return d.k_B() * acc;
}

// Taylor series of 1 - sum_i p_i^q around q = 1. Writing
// p^q = p exp((q-1) ln p) gives a_0 = 0 and a_j = -sum_i p_i (ln p_i)^j / j!.
template <std::floating_point Real>
basic_taylor_series<Real> tsallis_numerator_series(const basic_probability_distribution<Real> &d,
                                                   std::size_t N = default_series_order,
                                                   Real radius = Real(default_entropy_window))
{
    if (N < 2u) {
        throw error(errc::invalid_argument, "numerator series needs order >= 2");
    }
    detail::require_positive(d);
    std::vector<Real> a(N + 1u, Real(0));
    for (auto v : d.p()) {
        const auto lp = std::log(v);
        Real term = v;
        for (std::size_t j = 1; j <= N; ++j) {
            term *= lp / static_cast<Real>(j);
            a[j] -= term;
        }
    }
    return basic_taylor_series<Real>(Real(1), radius, std::move(a));
}

// q - 1 around q = 1.
template <std::floating_point Real>
basic_taylor_series<Real> tsallis_denominator_series(Real radius = Real(default_entropy_window))
{
    return basic_taylor_series<Real>(Real(1), radius, std::vector<Real>{0, 1});
}

template <std::floating_point Real>
basic_limit_problem<Real> entropy_problem(const basic_probability_distribution<Real> &d,
                                          std::size_t N = default_series_order,
                                          Real radius = Real(default_entropy_window))
{
    return make_problem(tsallis_numerator_series(d, N, radius), tsallis_denominator_series(radius));
}

// k_B I_n^f(q) / I_n^g(q) for the Tsallis numerator f and denominator
// g = q - 1, both integrated n times from q = 1. n = 0 is the Tsallis entropy;
// n -> infinity gives the Shannon entropy for every admissible q.
template <std::floating_point Real>
Real entropy_family(const basic_limit_problem<Real> &problem, Real k_B, Real q, std::size_t n)
{
    if (q == 1) {
        throw error(errc::removable_point, "entropy family members are 0/0 at q = 1");
    }
    return k_B * iterated_ratio(problem, q, n);
}

template <std::floating_point Real>
Real entropy_family(const basic_probability_distribution<Real> &d, Real q, std::size_t n)
{
    return entropy_family(entropy_problem(d), d.k_B(), q, n);
}

// k_B times the uniform error bound of the underlying limit problem.
template <std::floating_point Real>
std::optional<Real> entropy_error_bound(const basic_probability_distribution<Real> &d, std::size_t n)
{
    const auto b = error_bound(entropy_problem(d), n);
    if (!b) {
        return std::nullopt;
    }
    return d.k_B() * *b;
}

// entropy_family tabulated over q_list and n = 0..n_max against the Shannon
// limit. The report's grid holds the q values; spread is max - min over q.
template <std::floating_point Real>
basic_convergence_report<Real> q_independence_report(const basic_probability_distribution<Real> &d,
                                                     const std::vector<Real> &q_list, std::size_t n_max)
{
    if (q_list.empty()) {
        throw error(errc::invalid_argument, "q list is empty");
    }
    const auto problem = entropy_problem(d);
    for (auto q : q_list) {
        if (q == 1) {
            throw error(errc::removable_singularity, "q = 1 is the removable point of the Tsallis entropy");
        }
        if (!problem.in_window(q)) {
            throw error(errc::out_of_window, "q = " + std::to_string(q) + " lies outside the expansion window");
        }
    }
    basic_convergence_report<Real> rep;
    rep.grid = q_list;
    rep.limit = shannon_entropy(d);
    rep.tail_f = problem.tail_f();
    rep.tail_g = problem.tail_g();
    rep.notes.emplace_back("finite-n family members are not normalised to satisfy entropy axioms");
    for (std::size_t n = 0; n <= n_max; ++n) {
        auto bound = error_bound(problem, n);
        if (bound) {
            *bound *= d.k_B();
        }
        const auto first = rep.entries.size();
        for (auto q : q_list) {
            const auto s = entropy_family(problem, d.k_B(), q, n);
            rep.entries.push_back({n, q, s, std::abs(s - rep.limit), bound});
        }
        summarise(rep, n, bound, first);
    }
    return rep;
}

} // namespace itlim

#endif
