#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace poisprox {

// One monitored iteration. objective and fidelity live on the extended real
// line (+inf while the iterate is outside the domain); mae is NaN when no
// ground truth was supplied.
struct TraceRecord {
    std::size_t iter = 0;
    double objective = 0.0;
    double fidelity = 0.0;
    double penalty = 0.0;
    double pos_violation = 0.0;
    double mae = 0.0;
    double elapsed_s = 0.0;
};

struct SolverTrace {
    std::vector<TraceRecord> records;

    bool empty() const { return records.empty(); }
    const TraceRecord& back() const { return records.back(); }
};

// CSV with header iter,objective,fidelity,penalty,pos_violation,mae,elapsed_s;
// infinities serialize as "inf", missing MAE as "nan".
void write_trace_csv(const SolverTrace& trace, const std::filesystem::path& path);
SolverTrace read_trace_csv(const std::filesystem::path& path);

// First record whose objective is within frac * |final objective| of the
// final objective; requires a finite final objective.
std::size_t first_index_within_fraction(const SolverTrace& trace, double frac);

// Merges two traces row by row (iter, objective_a, elapsed_a, objective_b,
// elapsed_b) up to the shorter length; the elapsed columns carry the
// time-axis view of the same comparison.
void write_merged_trace_csv(const SolverTrace& a, const SolverTrace& b,
                            const std::filesystem::path& path);

}  // namespace poisprox
