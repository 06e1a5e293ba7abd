#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <itlim/cli.hpp>

namespace
{

const std::string data_dir = ITLIM_DATA_DIR;
const std::string f_path = data_dir + "/expm1_minus_x.series";
const std::string g_path = data_dir + "/x_squared.series";

struct outcome {
    int status;
    std::string out;
    std::string err;
};

outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "itlim");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const auto status = itlim::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            cells.emplace_back();
        }
        rows.push_back(cells);
    }
    return rows;
}

double field(const std::string &line, const std::string &key)
{
    const auto pos = line.find(key + "=");
    EXPECT_NE(pos, std::string::npos) << key;
    return std::stod(line.substr(pos + key.size() + 1u));
}

std::string temp_file(const std::string &name, const std::string &content)
{
    const auto path = std::filesystem::temp_directory_path() / ("itlim_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST(CliLimit, TestPairConverges)
{
    const auto r = run({"limit", f_path, g_path, "--x", "0.5", "--tol", "1e-2"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NEAR(field(r.out, "L_hopital"), 0.5, 1e-2);
    EXPECT_NEAR(field(r.out, "iterated"), 0.5, 1e-2);
    EXPECT_NE(r.out.find("converged=true"), std::string::npos);
    EXPECT_EQ(r.out.rfind("L_hopital=", 0), 0u);
}

TEST(CliLimit, IdenticalFiles)
{
    const auto r = run({"limit", f_path, f_path, "--x", "0.25", "--tol", "1e-9"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "L_hopital=1 iterated=1 n_used=0 converged=true\n");
}

TEST(CliLimit, UnconvergedExitsTwo)
{
    const auto r = run({"limit", f_path, g_path, "--x", "0.5", "--tol", "1e-30", "--n-max", "10"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("n_used=10 converged=false"), std::string::npos);
}

TEST(CliLimit, InputErrorsExitOne)
{
    const auto bad = temp_file("bad.series", "center 0\nradius 0.5\ncoeffs 0 0 one\n");
    auto r = run({"limit", bad, g_path, "--x", "0.5"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("parse-error"), std::string::npos);
    EXPECT_TRUE(r.out.empty());

    r = run({"limit", f_path, g_path, "--x", "0"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("removable-point"), std::string::npos);

    const auto lin = temp_file("lin.series", "center 0\nradius 0.5\ncoeffs 0 1\n");
    r = run({"limit", lin, g_path, "--x", "0.5"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("hypothesis-violation"), std::string::npos);

    EXPECT_EQ(run({"limit", f_path, g_path}).status, 1);
    EXPECT_EQ(run({"limit", f_path, g_path, "--x", "0.5", "--tol", "-1"}).status, 1);
    EXPECT_EQ(run({"bogus"}).status, 1);
    EXPECT_EQ(run({}).status, 1);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(CliConverge, IdenticalPairHasZeroErrors)
{
    const auto r = run({"converge", f_path, f_path, "--grid-points", "4", "--n-max", "3"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 1u + 4u * 4u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "x", "ratio", "abs_error", "bound"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i][2], "1");
        EXPECT_EQ(rows[i][3], "0");
    }
}

TEST(CliConverge, ErrorsStayBelowBound)
{
    const auto r = run({"converge", f_path, g_path, "--grid-points", "21", "--n-max", "30"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 1u + 31u * 20u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 5u);
        ASSERT_FALSE(rows[i][4].empty());
        EXPECT_LE(std::stod(rows[i][3]), std::stod(rows[i][4]));
    }
}

TEST(CliConverge, RowCountAndDeterminism)
{
    const auto a = run({"converge", f_path, g_path, "--grid-points", "2", "--n-max", "1"});
    EXPECT_EQ(csv_rows(a.out).size(), 5u);
    const auto b = run({"converge", f_path, g_path, "--grid-points", "2", "--n-max", "1"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"converge", f_path, g_path, "--grid-points", "1"}).status, 1);
    EXPECT_EQ(run({"converge", f_path, g_path, "--n-max", "0"}).status, 1);
}

TEST(CliConverge, WritesToFile)
{
    const auto path = (std::filesystem::temp_directory_path() / "itlim_cli_converge.csv").string();
    const auto r = run({"converge", f_path, g_path, "--grid-points", "2", "--n-max", "1", "--output", path});
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), run({"converge", f_path, g_path, "--grid-points", "2", "--n-max", "1"}).out);
    EXPECT_EQ(run({"converge", f_path, g_path, "--output", "/nonexistent/dir/out.csv"}).status, 1);
}

TEST(CliEntropy, UniformTwoStates)
{
    const auto r = run({"entropy", data_dir + "/uniform2.dist", "--q", "1.5", "--n-max", "100"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 102u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"q", "n", "S", "shannon", "abs_diff"}));
    EXPECT_EQ(rows.back()[1], "100");
    EXPECT_LE(std::stod(rows.back()[4]), 2e-2);
    EXPECT_NEAR(std::stod(rows[1][2]), 0.5857864, 1e-7);
}

TEST(CliEntropy, CertainDistribution)
{
    const auto r = run({"entropy", data_dir + "/certain.dist", "--q", "0.5,1.2,1.8", "--n-max", "5"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 1u + 3u * 6u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(std::stod(rows[i][2]), 0.0);
    }
}

TEST(CliEntropy, QEqualToOneIsRejected)
{
    const auto r = run({"entropy", data_dir + "/uniform2.dist", "--q", "1.5,1", "--n-max", "5"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("removable-singularity"), std::string::npos);
    EXPECT_EQ(run({"entropy", data_dir + "/missing.dist", "--q", "1.5"}).status, 1);
}

TEST(CliQuadcheck, FineGridAgrees)
{
    const auto r = run({"quadcheck", f_path, g_path, "--h", "1e-3", "--n-max", "5"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_LE(field(r.out, "max_discrepancy"), 1e-6);
    EXPECT_NE(r.out.find("samples_per_side=500"), std::string::npos);
}

TEST(CliQuadcheck, IdenticalPairIsExact)
{
    const auto r = run({"quadcheck", f_path, f_path, "--h", "1e-2", "--n-max", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(field(r.out, "max_discrepancy"), 0.0);
}

TEST(CliQuadcheck, CoarseGrids)
{
    const auto coarse = run({"quadcheck", f_path, g_path, "--h", "0.05", "--n-max", "5"});
    EXPECT_EQ(coarse.status, 2);
    EXPECT_GT(field(coarse.out, "max_discrepancy"), 1e-5);
    // h = 0.2 leaves two samples per side in a 0.5 window
    const auto tiny = run({"quadcheck", f_path, g_path, "--h", "0.2"});
    EXPECT_EQ(tiny.status, 1);
    EXPECT_NE(tiny.err.find("insufficient-grid"), std::string::npos);
    EXPECT_EQ(run({"quadcheck", f_path, g_path, "--h", "1e-3", "--samples", "600"}).status, 1);
}
