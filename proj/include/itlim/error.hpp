#ifndef ITLIM_ERROR_HPP
#define ITLIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace itlim
{

enum class errc {
    invalid_series,
    out_of_window,
    degenerate_order,
    insufficient_order,
    incompatible_centers,
    hypothesis_violation,
    degenerate_denominator,
    removable_point,
    no_valid_window,
    insufficient_grid,
    incompatible_grids,
    invalid_distribution,
    zero_probability,
    removable_singularity,
    invalid_argument,
    parse_error,
};

inline const char *errc_name(errc e) noexcept
{
    switch (e) {
        case errc::invalid_series: return "invalid-series";
        case errc::out_of_window: return "out-of-window";
        case errc::degenerate_order: return "degenerate-order";
        case errc::insufficient_order: return "insufficient-order";
        case errc::incompatible_centers: return "incompatible-centers";
        case errc::hypothesis_violation: return "hypothesis-violation";
        case errc::degenerate_denominator: return "degenerate-denominator";
        case errc::removable_point: return "removable-point";
        case errc::no_valid_window: return "no-valid-window";
        case errc::insufficient_grid: return "insufficient-grid";
        case errc::incompatible_grids: return "incompatible-grids";
        case errc::invalid_distribution: return "invalid-distribution";
        case errc::zero_probability: return "zero-probability";
        case errc::removable_singularity: return "removable-singularity";
        case errc::invalid_argument: return "invalid-argument";
        case errc::parse_error: return "parse-error";
    }
    return "unknown";
}

// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), m_code(code)
    {
    }

    errc code() const noexcept
    {
        return m_code;
    }

private:
    errc m_code;
};

} // namespace itlim

#endif
