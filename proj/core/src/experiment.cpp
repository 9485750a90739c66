#include "votestream/experiment.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "votestream/generators.hpp"
#include "votestream/rng.hpp"
#include "votestream/winner.hpp"

namespace votestream {

Election make_workload(const WorkloadSpec& spec, std::uint64_t seed) {
    switch (spec.kind) {
        case WorkloadKind::impartial_approval:
            return gen_impartial_approval(spec.n, spec.m, spec.p, seed);
        case WorkloadKind::impartial_borda:
            return gen_impartial_borda(spec.n, spec.m, seed);
        case WorkloadKind::polarized_approval:
            return gen_polarized_approval(spec.n, spec.m, spec.blocks, seed);
    }
    throw ParameterError("unknown workload kind");
}

const char* const kTrialCsvHeader =
    "trial,seed,committee,sample_score,full_score,opt_score,surrogate_gap,"
    "success,clamped,votes_stored,peak_stored_votes,wall_time_ms,error";

namespace {

std::string committee_csv(const std::optional<Committee>& committee) {
    if (!committee) return "\"\"";
    std::string out = "\"";
    const auto& members = committee->members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(members[i]);
    }
    return out + "\"";
}

std::string format_ms(double ms) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << ms;
    return out.str();
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) throw ParameterError("trials must be >= 1");

    ExperimentResult result;
    result.config = config;
    result.records.reserve(static_cast<std::size_t>(config.trials));

    double peak_sum = 0.0;
    for (int trial = 0; trial < config.trials; ++trial) {
        TrialRecord rec;
        rec.trial = trial;
        rec.seed = config.seed_base + static_cast<std::uint64_t>(trial);
        const auto started = std::chrono::steady_clock::now();
        try {
            // Independent sub-seeds for the workload and the sampler.
            Election full =
                make_workload(config.workload, mix_seed(rec.seed, 0));
            StreamingResult streamed = streaming_winner(
                full.votes(), full.m(), config.rule, config.k, config.epsilon,
                config.sampler, mix_seed(rec.seed, 1), config.delta,
                config.committee_cap);

            WinnerResult exact =
                exact_winner(full, config.rule, config.k, config.committee_cap);
            Score full_score =
                committee_score(full, config.rule, streamed.committee);
            GapReport gap = make_gap_report(exact.opt_score, full_score,
                                            config.epsilon, full.n(),
                                            config.rule.max_satisfaction());

            rec.committee = streamed.committee;
            rec.sample_score = streamed.sample_opt_score;
            rec.full_score = full_score;
            rec.opt_score = exact.opt_score;
            rec.surrogate_gap = gap.gap;
            rec.success = gap.within;
            rec.clamped = streamed.clamped;
            rec.votes_stored = streamed.stats.votes_stored;
            rec.peak_stored_votes = streamed.stats.peak_stored_votes;
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        if (config.timing) {
            const auto elapsed = std::chrono::steady_clock::now() - started;
            rec.wall_time_ms =
                std::chrono::duration<double, std::milli>(elapsed).count();
        }

        if (rec.error.empty() && rec.success) ++result.summary.successes;
        if (!rec.error.empty()) ++result.summary.errors;
        if (rec.clamped) ++result.summary.clamped_trials;
        peak_sum += static_cast<double>(rec.peak_stored_votes);
        result.records.push_back(std::move(rec));
    }

    result.summary.trials = config.trials;
    result.summary.success_rate =
        static_cast<double>(result.summary.successes) /
        static_cast<double>(config.trials);
    result.summary.mean_peak_stored_votes =
        peak_sum / static_cast<double>(config.trials);
    return result;
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
    out << kTrialCsvHeader << '\n';
    for (const TrialRecord& rec : result.records) {
        out << rec.trial << ',' << rec.seed << ','
            << committee_csv(rec.committee) << ',' << rec.sample_score << ','
            << rec.full_score << ',' << rec.opt_score << ','
            << rec.surrogate_gap << ',' << (rec.success ? 1 : 0) << ','
            << (rec.clamped ? 1 : 0) << ',' << rec.votes_stored << ','
            << rec.peak_stored_votes << ',' << format_ms(rec.wall_time_ms)
            << ',' << '"' << rec.error << '"' << '\n';
    }
    const ExperimentSummary& s = result.summary;
    std::ostringstream rate;
    rate.setf(std::ios::fixed);
    rate.precision(4);
    rate << s.success_rate;
    std::ostringstream mean_peak;
    mean_peak.setf(std::ios::fixed);
    mean_peak.precision(2);
    mean_peak << s.mean_peak_stored_votes;
    out << "# summary trials=" << s.trials << " successes=" << s.successes
        << " errors=" << s.errors << " clamped_trials=" << s.clamped_trials
        << " success_rate=" << rate.str()
        << " mean_peak_stored_votes=" << mean_peak.str() << '\n';
}

}  // namespace votestream
