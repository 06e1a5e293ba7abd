#ifndef ITLIM_CLI_HPP
#define ITLIM_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <itlim/entropy.hpp>
#include <itlim/error.hpp>
#include <itlim/io.hpp>
#include <itlim/limits.hpp>
#include <itlim/quad.hpp>
#include <itlim/series.hpp>

namespace itlim::cli
{

enum exit_status : int { exit_ok = 0, exit_input_error = 1, exit_unconverged = 2 };

inline constexpr double quadcheck_threshold = 1e-5;

struct run_config {
    std::string command;
    std::vector<std::string> inputs{};
    double x = 0;
    double tol = 1e-6;
    std::size_t n_max = 0;
    std::size_t grid_points = 10;
    std::vector<double> q{};
    double h = 1e-3;
    std::size_t samples = 0;
    std::string output = "-";
};

namespace detail
{

// Runs fn against the configured output stream ("-" is the given stream).
inline int with_output(const run_config &cfg, std::ostream &out, std::ostream &err,
                       const std::function<int(std::ostream &)> &fn)
{
    if (cfg.output == "-") {
        return fn(out);
    }
    std::ofstream file(cfg.output);
    if (!file) {
        err << "error: cannot open output '" << cfg.output << "'\n";
        return exit_input_error;
    }
    const auto status = fn(file);
    file.flush();
    if (!file) {
        err << "error: failed writing '" << cfg.output << "'\n";
        return exit_input_error;
    }
    return status;
}

inline limit_problem load_problem(const run_config &cfg)
{
    return make_problem(io::read_series_file(cfg.inputs.at(0)), io::read_series_file(cfg.inputs.at(1)));
}

} // namespace detail

inline int cmd_limit(const run_config &cfg, std::ostream &out, std::ostream &err)
{
    const auto p = detail::load_problem(cfg);
    const auto res = limit_via_iteration(p, cfg.x, cfg.tol, cfg.n_max);
    return detail::with_output(cfg, out, err, [&](std::ostream &os) {
        os << "L_hopital=" << io::format_real(lhopital_limit(p)) << " iterated=" << io::format_real(res.estimate)
           << " n_used=" << res.n_used << " converged=" << (res.converged ? "true" : "false") << '\n';
        return res.converged ? exit_ok : exit_unconverged;
    });
}

inline int cmd_converge(const run_config &cfg, std::ostream &out, std::ostream &err)
{
    const auto rep = run_convergence(detail::load_problem(cfg), cfg.grid_points, cfg.n_max);
    return detail::with_output(cfg, out, err, [&](std::ostream &os) {
        io::write_convergence_csv(os, rep);
        return exit_ok;
    });
}

inline int cmd_entropy(const run_config &cfg, std::ostream &out, std::ostream &err)
{
    const auto d = io::read_distribution_file(cfg.inputs.at(0));
    const auto rep = q_independence_report(d, cfg.q, cfg.n_max);
    return detail::with_output(cfg, out, err, [&](std::ostream &os) {
        io::write_entropy_csv(os, rep);
        return exit_ok;
    });
}

// Largest |series route - quadrature route| of the n-fold iterated quotient
// over the outer 90% of the grid. Within a few steps of the center I_n g
// behaves like x^(n+2) and no fixed-order rule resolves it, so indices
// |i| < ceil(M/10) are skipped.
inline double quadcheck_discrepancy(const limit_problem &p, double h, std::size_t M, std::size_t n)
{
    if (!p.in_window(p.center() + static_cast<double>(M) * h)) {
        throw error(errc::out_of_window, "grid half-width M*h exceeds the problem window");
    }
    const auto If = iterated_cumulative_integral(grid_from_series(p.f(), M, h), n);
    const auto Ig = iterated_cumulative_integral(grid_from_series(p.g(), M, h), n);
    double worst = 0;
    const auto m = static_cast<std::ptrdiff_t>(M);
    const auto inner = std::max<std::ptrdiff_t>(1, (m + 9) / 10);
    for (std::ptrdiff_t i = -m; i <= m; ++i) {
        if (std::abs(i) < inner) {
            continue;
        }
        const auto numeric = If.at(i) / Ig.at(i);
        const auto series = iterated_ratio(p, If.point(i), n);
        worst = std::max(worst, std::abs(numeric - series));
    }
    return worst;
}

inline int cmd_quadcheck(const run_config &cfg, std::ostream &out, std::ostream &err)
{
    const auto p = detail::load_problem(cfg);
    if (!(cfg.h > 0)) {
        throw error(errc::invalid_argument, "--h must be positive");
    }
    auto M = cfg.samples;
    if (M == 0u) {
        M = static_cast<std::size_t>(std::floor(p.R() / cfg.h * (1 + 1e-12)));
    }
    const auto worst = quadcheck_discrepancy(p, cfg.h, M, cfg.n_max);
    return detail::with_output(cfg, out, err, [&](std::ostream &os) {
        os << "max_discrepancy=" << io::format_real(worst) << " samples_per_side=" << M << " n=" << cfg.n_max << '\n';
        return worst <= quadcheck_threshold ? exit_ok : exit_unconverged;
    });
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Limits of 0/0 quotients by iterated integration"};
    app.require_subcommand(1);
    // -h is taken by the grid-step option
    app.set_help_flag("--help", "Print this help message and exit");

    run_config limit_cfg{.command = "limit", .n_max = 1000000};
    run_config converge_cfg{.command = "converge", .n_max = 50};
    run_config entropy_cfg{.command = "entropy", .n_max = 100};
    run_config quad_cfg{.command = "quadcheck", .n_max = 5};

    const auto add_common = [](CLI::App *sub, run_config &cfg) {
        sub->add_option("--n-max", cfg.n_max, "Largest number of integrations")
            ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
        sub->add_option("--output", cfg.output, "Output path, '-' for standard output");
    };

    auto *limit = app.add_subcommand("limit", "Limit of f/g by L'Hopital and by iterated integration");
    limit->add_option("f", limit_cfg.inputs, "Numerator and denominator series files")->expected(2)->required();
    limit->add_option("--x", limit_cfg.x, "Evaluation point (not the center)")->required();
    limit->add_option("--tol", limit_cfg.tol, "Target error bound")->check(CLI::PositiveNumber);
    add_common(limit, limit_cfg);

    auto *converge = app.add_subcommand("converge", "Convergence table of the iterated quotient as CSV");
    converge->add_option("f", converge_cfg.inputs, "Numerator and denominator series files")->expected(2)->required();
    converge->add_option("--grid-points", converge_cfg.grid_points, "Points on the symmetric window grid")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    add_common(converge, converge_cfg);

    auto *entropy = app.add_subcommand("entropy", "Integrated Tsallis entropy family as CSV");
    entropy->add_option("dist", entropy_cfg.inputs, "Distribution file")->expected(1)->required();
    entropy->add_option("--q", entropy_cfg.q, "Comma-separated q values")->delimiter(',')->required();
    add_common(entropy, entropy_cfg);

    auto *quad = app.add_subcommand("quadcheck", "Compare the series route with repeated quadrature");
    quad->add_option("f", quad_cfg.inputs, "Numerator and denominator series files")->expected(2)->required();
    quad->add_option("--h", quad_cfg.h, "Grid step")->check(CLI::PositiveNumber);
    quad->add_option("--samples", quad_cfg.samples, "Samples per side of the center (default: fill the window)");
    add_common(quad, quad_cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*limit) {
            return cmd_limit(limit_cfg, out, err);
        }
        if (*converge) {
            return cmd_converge(converge_cfg, out, err);
        }
        if (*entropy) {
            return cmd_entropy(entropy_cfg, out, err);
        }
        return cmd_quadcheck(quad_cfg, out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

} // namespace itlim::cli

#endif
