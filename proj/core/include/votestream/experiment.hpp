#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "votestream/streaming.hpp"
#include "votestream/types.hpp"

namespace votestream {

// Synthetic workload for one experiment batch. The whole election is
// materialized per trial so full-election oracle scores can be computed;
// this scaffolding is deliberately outside the space accounting, which is
// measured on the sampler alone.
enum class WorkloadKind {
    impartial_approval,
    impartial_borda,
    polarized_approval
};

struct WorkloadSpec {
    WorkloadKind kind = WorkloadKind::impartial_approval;
    std::int64_t n = 0;
    int m = 0;
    double p = 0.5;   // impartial_approval
    int blocks = 1;   // polarized_approval
};

Election make_workload(const WorkloadSpec& spec, std::uint64_t seed);

struct ExperimentConfig {
    RuleSpec rule = RuleSpec::approval_cc();
    int k = 1;
    double epsilon = 0.1;
    int trials = 1;
    std::uint64_t seed_base = 0;
    WorkloadSpec workload;
    SamplerChoice sampler = SamplerChoice::reservoir;
    double delta = 0.5;
    bool timing = false;  // off by default so identical runs byte-match
    std::uint64_t committee_cap = 1'000'000;
};

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    std::optional<Committee> committee;
    Score sample_score = 0;
    Score full_score = 0;
    Score opt_score = 0;
    Score surrogate_gap = 0;
    bool success = false;
    bool clamped = false;
    std::int64_t votes_stored = 0;
    std::int64_t peak_stored_votes = 0;
    double wall_time_ms = 0.0;
    std::string error;  // empty when the trial succeeded
};

struct ExperimentSummary {
    int trials = 0;
    int successes = 0;
    int errors = 0;
    int clamped_trials = 0;
    double success_rate = 0.0;
    double mean_peak_stored_votes = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialRecord> records;
    ExperimentSummary summary;
};

// Runs `trials` seeded independent trials: generate the workload, stream it
// through the sampler, solve the sample, then score the returned committee
// against the full-election optimum. A trial's failure is recorded in its
// row and the batch continues.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Fixed-schema CSV: header, one row per trial in trial order, then a final
// '#'-prefixed summary line. Deterministic under fixed seeds (timing column
// prints 0 unless config.timing).
extern const char* const kTrialCsvHeader;
void write_csv(std::ostream& out, const ExperimentResult& result);

}  // namespace votestream
