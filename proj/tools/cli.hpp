#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tricolor::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInvalidConfig = 2, kCapRefused = 3, kPropertyViolation = 4 };

struct RunConfig {
    std::string command;
    std::string kind = "torus";  // box | torus
    int d = 2;
    int n = 4;
    int q = 3;
    std::string rho = "11/50";
    std::uint64_t seed = 1;
    long long cap = 10'000'000;       // enumeration cap
    long long max_states = 2'000'000; // transition-matrix cap
    int exact_cap = 5000;             // exact TV arithmetic at or below this state count
    long long max_iterations = 1'000'000;
    unsigned threads = 0;             // 0 = available parallelism
    std::string out = ".";
    std::string bc = "none";          // none | odd-zero | even-zero | odd-zero-center
    // sample / torpid-demo
    long long steps = 0;              // sample: 0 means 100 sweeps
    long long thinning = 0;           // 0 means one record per sweep
    std::string start = "even";       // even | odd phase start
    std::string input;                // coloring file (sample, cutsets)
    int chains = 32;
    long long sweeps = 4000;
    // entropy
    std::vector<int> widths{2, 3, 4, 5, 6, 7, 8};
    int entropy_n = 1;
    std::vector<int> m_values{2, 3};
    // enumerate / conductance
    bool list = false;
    bool with_tau = false;
};

/// Parses argv (including a key=value config file given by --config; flags win).
/// Returns the exit code to use immediately, or -1 when `config` is ready to run.
int parse(int argc, const char* const* argv, RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs one command: writes the report files under config.out and echoes the JSON
/// report to `out`. Failures go to `err` as one JSON line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tricolor::cli
