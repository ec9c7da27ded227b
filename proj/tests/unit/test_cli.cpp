#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fduffing/cli/commands.hpp"
#include "fduffing/io.hpp"

using namespace fduffing;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("fduffing_test_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

/// Runs the installed binary through the shell and returns its exit status.
int run_binary(const std::string& args) {
    const std::string cmd = std::string(FDUFFING_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct InProcess {
    int code;
    std::string out;
    std::string err;
};

InProcess run_in_process(std::vector<std::string> args) {
    args.insert(args.begin(), "fduffing");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("simulate writes both trajectories and the difference") {
    const auto dir = scratch_dir("both");
    const auto r = run_in_process({"simulate", "--forcing", "manufactured", "--lambda", "0.1",
                                   "--T", "1", "--N", "10", "--order", "linear:0.8:-0.5", "--out",
                                   dir.string()});
    REQUIRE(r.code == cli::kOk);
    for (const char* name : {"trajectory_efds.csv", "trajectory_abm.csv"}) {
        const auto text = read_file(dir / name);
        CHECK(text.rfind("t,x,y,aux\n", 0) == 0);
        CHECK(count_lines(text) == 12);  // header + N + 1 rows
    }
    const auto diff = read_file(dir / "diff.csv");
    CHECK(diff.rfind("t,abs_dx\n", 0) == 0);
    CHECK(count_lines(diff) == 12);
}

TEST_CASE("simulate with zero state and no forcing writes zeros") {
    const auto dir = scratch_dir("zero");
    const auto r = run_in_process({"simulate", "--scheme", "abm", "--forcing", "none", "--N", "50",
                                   "--out", dir.string()});
    REQUIRE(r.code == cli::kOk);
    const auto tr = read_trajectory_csv(dir / "trajectory_abm.csv");
    CHECK(tr.size() == 51);
    for (std::size_t k = 0; k < tr.size(); ++k) {
        CHECK(tr.x[k] == 0.0);
        CHECK(tr.y[k] == 0.0);
    }
    CHECK_FALSE(fs::exists(dir / "trajectory_efds.csv"));
    CHECK_FALSE(fs::exists(dir / "diff.csv"));
}

TEST_CASE("simulate output is byte-identical across runs") {
    const auto a = scratch_dir("det_a");
    const auto b = scratch_dir("det_b");
    const std::vector<std::string> common{"simulate", "--N", "600", "--T", "30"};
    auto args_a = common;
    args_a.insert(args_a.end(), {"--out", a.string()});
    auto args_b = common;
    args_b.insert(args_b.end(), {"--out", b.string()});
    REQUIRE(run_in_process(args_a).code == 0);
    REQUIRE(run_in_process(args_b).code == 0);
    for (const char* name : {"trajectory_efds.csv", "trajectory_abm.csv", "diff.csv"}) {
        CHECK(read_file(a / name) == read_file(b / name));
    }
}

TEST_CASE("converge writes the report with empty first-row orders") {
    const auto dir = scratch_dir("converge");
    const auto r = run_in_process({"converge", "--forcing", "manufactured", "--lambda", "0.1",
                                   "--delta", "0", "--T", "1", "--order", "linear:0.8:-0.5",
                                   "--n-start", "10", "--levels", "2", "--mode", "exact", "--out",
                                   dir.string()});
    REQUIRE(r.code == cli::kOk);
    const auto text = read_file(dir / "convergence.csv");
    std::istringstream lines(text);
    std::string header, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == "N,h,xi_efds,p_efds,xi_abm,p_abm,p2_efds,p2_abm");
    CHECK(count_lines(text) == 3);
    CHECK(row1.rfind("10,0.10000000000000001,", 0) == 0);
    // first row: p_efds, p_abm, p2 cells are empty
    CHECK(std::count(row1.begin(), row1.end(), ',') == 7);
    CHECK(row1.find(",,") != std::string::npos);
    CHECK(row2.rfind("20,", 0) == 0);
    CHECK(row2.find(",,") == std::string::npos);
    const auto meta = read_file(dir / "convergence_meta.txt");
    CHECK(meta.find("inconsistent") != std::string::npos);
}

TEST_CASE("converge in exact mode needs the manufactured problem") {
    const auto r = run_in_process({"converge", "--mode", "exact", "--out", scratch_dir("x").string()});
    CHECK(r.code == cli::kConfigError);
}

TEST_CASE("converge renders metric-domain errors as empty cells and warnings") {
    // Runge differences on the limit-cycle problem at very coarse steps exceed one.
    const auto dir = scratch_dir("domain");
    const auto r = run_in_process({"converge", "--mode", "runge", "--T", "20", "--n-start", "4",
                                   "--levels", "2", "--scheme", "both", "--out", dir.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.err.find("warning:") != std::string::npos);
}

TEST_CASE("plot writes SVG and refuses empty data") {
    const auto dir = scratch_dir("plot");
    REQUIRE(run_in_process({"simulate", "--forcing", "manufactured", "--lambda", "0.1", "--T", "1",
                            "--N", "80", "--order", "linear:0.8:-0.5", "--out", dir.string()})
                .code == 0);
    const auto svg_path = dir / "fig1.svg";
    const auto r = run_in_process({"plot", "--kind", "overlay", "--exact-cubic", "--input",
                                   (dir / "trajectory_efds.csv").string(), "--input",
                                   (dir / "trajectory_abm.csv").string(), "--out",
                                   svg_path.string()});
    REQUIRE(r.code == cli::kOk);
    const auto svg = read_file(svg_path);
    CHECK(svg.find(">efds</text>") != std::string::npos);
    CHECK(svg.find(">abm</text>") != std::string::npos);
    CHECK(svg.find(">exact t^3</text>") != std::string::npos);

    write_file_atomic(dir / "empty.csv", "t,x,y,aux\n");
    const auto empty_svg = dir / "empty.svg";
    const auto e = run_in_process({"plot", "--input", (dir / "empty.csv").string(), "--out",
                                   empty_svg.string()});
    CHECK(e.code == cli::kIoError);
    CHECK_FALSE(fs::exists(empty_svg));

    write_file_atomic(dir / "broken.csv", "t,x,y,aux\n0,0,0,0\n0.1,zz,0,0\n");
    const auto b = run_in_process({"plot", "--input", (dir / "broken.csv").string(), "--out",
                                   (dir / "broken.svg").string()});
    CHECK(b.code == cli::kIoError);
    CHECK(b.err.find("line 3") != std::string::npos);
}

TEST_CASE("binary exit codes") {
    const auto dir = scratch_dir("exit");
    CHECK(run_binary("simulate --N 20 --T 2 --out " + dir.string()) == cli::kOk);
    CHECK(run_binary("simulate --order linear:0.8:-0.01 --T 100 --out " + dir.string()) ==
          cli::kConfigError);
    CHECK(run_binary("simulate --bogus-flag") == cli::kConfigError);
    CHECK(run_binary("") == cli::kConfigError);
    CHECK(run_binary("simulate --scheme abm --x0 50 --forcing none --T 100 --N 10 --out " +
                     dir.string()) == cli::kSolverAbort);
    // Output directory path blocked by a regular file.
    write_file_atomic(dir / "file", "x");
    CHECK(run_binary("simulate --N 5 --T 1 --out " + (dir / "file" / "sub").string()) ==
          cli::kIoError);
}
