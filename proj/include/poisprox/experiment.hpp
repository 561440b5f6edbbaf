#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "poisprox/convolution.hpp"
#include "poisprox/objective.hpp"
#include "poisprox/sim.hpp"
#include "poisprox/solvers.hpp"

namespace poisprox {

enum class AlgChoice { primal, primal_dual, both };

// Harness configuration shared by the CLI subcommands.
struct RunConfig {
    std::string phantom_spec =
        "point-sources:width=32,height=32,count=8,scale=30,background=1";
    std::string psf_spec = "gaussian:sigma=1.5,size=7";
    double gamma = 0.0;  // 0 -> heuristic 0.01 * max(y)
    AlgChoice alg = AlgChoice::both;
    std::size_t n_iter = 500;
    double mu = 1.0;
    double sigma = 0.0;  // 0 -> suggested steps from zeta
    double tau = 0.0;
    std::uint64_t seed = 42;
    std::filesystem::path out_dir = "out";
    // optional explicit inputs for deconv; default to files under out_dir
    std::optional<std::filesystem::path> counts_path;
    std::optional<std::filesystem::path> psf_path;
    std::optional<std::filesystem::path> truth_path;
    int verbosity = 0;
};

std::string format_alg(AlgChoice alg);
AlgChoice parse_alg(const std::string& text);

struct SimulateOutcome {
    ImageGrid truth;
    ImageGrid psf;
    CountMap counts;
    std::int64_t total_counts = 0;
    std::int64_t max_count = 0;
};

// Phantom -> blur -> Poisson draw, in memory.
SimulateOutcome simulate(const RunConfig& cfg);

// simulate() plus truth.txt / psf.txt / counts.txt under cfg.out_dir.
SimulateOutcome cmd_simulate(const RunConfig& cfg);

// Problem assembly used by deconv and by the test harness: orthonormal Haar
// dictionary on the count-map shape, unit-sum PSF blur, gamma heuristic when
// unset.
ProblemInstance build_instance(CountMap counts, const ImageGrid& psf, double gamma);

struct DeconvOutcome {
    RunConfig config;  // with gamma/sigma/tau resolved to their actual values
    double zeta = 0.0;
    std::optional<RunResult> primal;
    std::optional<RunResult> primal_dual;
    // relative final-objective discrepancy, in `both` mode
    std::optional<double> discrepancy;
    std::optional<double> mae_primal;
    std::optional<double> mae_primal_dual;
    double wallclock_primal_s = 0.0;
    double wallclock_primal_dual_s = 0.0;
};

// Runs the selected solver(s) on in-memory inputs.
DeconvOutcome deconv(const RunConfig& cfg, const CountMap& counts, const ImageGrid& psf,
                     const ImageGrid* truth);

// Loads inputs from files, runs deconv, writes recon.txt / trace.csv /
// summary.txt (plus per-algorithm files in `both` mode).
DeconvOutcome cmd_deconv(const RunConfig& cfg);

struct CompareOutcome {
    std::size_t within_1pct_iter_a = 0;
    std::size_t within_1pct_iter_b = 0;
    double within_1pct_time_a = 0.0;
    double within_1pct_time_b = 0.0;
};

// Merges two trace CSVs and reports when each first comes within 1% of its
// final objective; writes compare.csv and compare_report.txt.
CompareOutcome cmd_compare(const std::filesystem::path& trace_a,
                           const std::filesystem::path& trace_b,
                           const std::filesystem::path& out_dir);

// summary.txt body; the trailing [timing] section is machine-dependent,
// everything above it is reproducible for a fixed seed.
std::string format_summary(const DeconvOutcome& outcome);

}  // namespace poisprox
