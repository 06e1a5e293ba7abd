#ifndef ITLIM_IO_HPP
#define ITLIM_IO_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <itlim/entropy.hpp>
#include <itlim/error.hpp>
#include <itlim/limits.hpp>
#include <itlim/quad.hpp>
#include <itlim/series.hpp>

namespace itlim::io
{

inline constexpr double distribution_file_tol = 1e-9;

// Shortest-independent fixed form: 17 significant digits, '.' separator.
inline std::string format_real(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline double parse_real(std::string_view tok)
{
    if (!tok.empty() && tok.front() == '+') {
        tok.remove_prefix(1);
    }
    double v = 0;
    const auto *end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) {
        throw error(errc::parse_error, "not a finite decimal number: '" + std::string(tok) + "'");
    }
    return v;
}

namespace detail
{

inline std::vector<std::string> split_ws(const std::string &line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) {
        out.push_back(tok);
    }
    return out;
}

// Non-blank, non-comment lines, each split on whitespace.
inline std::vector<std::vector<std::string>> content_lines(std::istream &in)
{
    std::vector<std::vector<std::string>> out;
    for (std::string line; std::getline(in, line);) {
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') {
            continue;
        }
        out.push_back(std::move(toks));
    }
    return out;
}

inline double keyed_scalar(const std::vector<std::string> &line, std::string_view key)
{
    if (line.front() != key || line.size() != 2u) {
        throw error(errc::parse_error, "expected '" + std::string(key) + " <decimal>'");
    }
    return parse_real(line[1]);
}

inline std::vector<double> keyed_list(const std::vector<std::string> &line, std::string_view key)
{
    if (line.front() != key || line.size() < 2u) {
        throw error(errc::parse_error, "expected '" + std::string(key) + " <v0> <v1> ...'");
    }
    std::vector<double> out;
    for (std::size_t i = 1; i < line.size(); ++i) {
        out.push_back(parse_real(line[i]));
    }
    return out;
}

inline std::ifstream open_input(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw error(errc::parse_error, "cannot open '" + path + "'");
    }
    return in;
}

} // namespace detail

// center <decimal>
// radius <decimal>
// coeffs <a0> <a1> ... <aN>
inline taylor_series read_series(std::istream &in)
{
    const auto lines = detail::content_lines(in);
    if (lines.size() != 3u) {
        throw error(errc::parse_error, "series file needs exactly the center, radius and coeffs lines");
    }
    const auto center = detail::keyed_scalar(lines[0], "center");
    const auto radius = detail::keyed_scalar(lines[1], "radius");
    auto coeffs = detail::keyed_list(lines[2], "coeffs");
    return taylor_series(center, radius, std::move(coeffs));
}

inline taylor_series read_series_file(const std::string &path)
{
    auto in = detail::open_input(path);
    return read_series(in);
}

inline void write_series(std::ostream &out, const taylor_series &s)
{
    out << "center " << format_real(s.center()) << '\n' << "radius " << format_real(s.radius()) << '\n' << "coeffs";
    for (auto c : s.coeffs()) {
        out << ' ' << format_real(c);
    }
    out << '\n';
}

// center <decimal>
// step <decimal>
// values <v_-M> ... <v_M>
inline grid_function read_grid(std::istream &in)
{
    const auto lines = detail::content_lines(in);
    if (lines.size() != 3u) {
        throw error(errc::parse_error, "grid file needs exactly the center, step and values lines");
    }
    const auto center = detail::keyed_scalar(lines[0], "center");
    const auto step = detail::keyed_scalar(lines[1], "step");
    auto values = detail::keyed_list(lines[2], "values");
    return grid_function(center, step, std::move(values));
}

inline grid_function read_grid_file(const std::string &path)
{
    auto in = detail::open_input(path);
    return read_grid(in);
}

inline void write_grid(std::ostream &out, const grid_function &u)
{
    out << "center " << format_real(u.center()) << '\n' << "step " << format_real(u.step()) << '\n' << "values";
    for (auto v : u.values()) {
        out << ' ' << format_real(v);
    }
    out << '\n';
}

// One probability per line. The total must be within 1e-9 of one; the values
// are then divided by their sum.
inline probability_distribution read_distribution(std::istream &in, double k_B = 1)
{
    std::vector<double> p;
    for (const auto &line : detail::content_lines(in)) {
        if (line.size() != 1u) {
            throw error(errc::parse_error, "distribution file holds one probability per line");
        }
        p.push_back(parse_real(line[0]));
    }
    if (p.empty()) {
        throw error(errc::invalid_distribution, "distribution file has no probabilities");
    }
    double sum = 0;
    for (auto v : p) {
        if (v < 0) {
            throw error(errc::invalid_distribution, "negative probability");
        }
        sum += v;
    }
    if (std::abs(sum - 1) > distribution_file_tol) {
        throw error(errc::invalid_distribution, "probabilities sum to " + format_real(sum) + ", not 1");
    }
    for (auto &v : p) {
        v /= sum;
    }
    return probability_distribution(std::move(p), k_B);
}

inline probability_distribution read_distribution_file(const std::string &path, double k_B = 1)
{
    auto in = detail::open_input(path);
    return read_distribution(in, k_B);
}

// n,x,ratio,abs_error,bound -- bound left empty while not yet valid.
inline void write_convergence_csv(std::ostream &out, const convergence_report &rep)
{
    out << "n,x,ratio,abs_error,bound\n";
    for (const auto &e : rep.entries) {
        out << e.n << ',' << format_real(e.x) << ',' << format_real(e.ratio) << ',' << format_real(e.abs_error) << ',';
        if (e.bound) {
            out << format_real(*e.bound);
        }
        out << '\n';
    }
}

// q,n,S,shannon,abs_diff
inline void write_entropy_csv(std::ostream &out, const convergence_report &rep)
{
    out << "q,n,S,shannon,abs_diff\n";
    for (const auto &e : rep.entries) {
        out << format_real(e.x) << ',' << e.n << ',' << format_real(e.ratio) << ',' << format_real(rep.limit) << ','
            << format_real(e.abs_error) << '\n';
    }
}

} // namespace itlim::io

#endif
