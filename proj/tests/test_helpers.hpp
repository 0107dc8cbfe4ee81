#pragma once

#include "wignerlab/spin_algebra.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifdef __unix__
#include <sys/wait.h>
#endif

namespace testhelp {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5151u);
    return gen;
}

inline wignerlab::Vec3 random_unit_axis() {
    std::normal_distribution<double> n(0.0, 1.0);
    wignerlab::Vec3 v(n(rng()), n(rng()), n(rng()));
    while (v.norm() < 1e-3)
        v = wignerlab::Vec3(n(rng()), n(rng()), n(rng()));
    return v.normalized();
}

inline wignerlab::Mat2c random_su2() {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * wignerlab::pi);
    return wignerlab::su2_rotation(random_unit_axis(), ang(rng())).matrix;
}

struct CliResult {
    int exit_code = -1;
    std::string stdout_text;
};

/// Runs the built CLI (path from WIGNERLAB_CLI) with the given arguments.
inline CliResult run_cli(const std::string& args, const std::string& tag) {
    const char* cli = std::getenv("WIGNERLAB_CLI");
    if (!cli)
        throw std::runtime_error("WIGNERLAB_CLI is not set (run through ctest)");
    const std::string out_path = "cli_" + tag + ".out";
    const std::string cmd = std::string(cli) + " " + args + " > " + out_path + " 2> cli_" + tag + ".err";
    const int status = std::system(cmd.c_str());
    CliResult r;
#ifdef __unix__
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    r.exit_code = status;
#endif
    std::ifstream f(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    r.stdout_text = ss.str();
    return r;
}

inline std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

/// Parses a simple numeric CSV (as emitted by the CLI) into rows.
inline std::vector<std::vector<double>> parse_csv_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty())
            continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            row.push_back(std::strtod(cell.c_str(), nullptr));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace testhelp
