#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "advid/attack.hpp"
#include "advid/captions.hpp"
#include "advid/media_io.hpp"
#include "advid/surrogate.hpp"

namespace advid {

/// One model's cosine-similarity trajectory over attack iterations
/// (one value per recorded iterate, init included).
struct SimilarityTrajectory {
    std::string model_id;
    std::vector<double> values;
};

enum class SweepAxis { beta, alpha, iterations, lambda_ratio, epsilon, propagation };

std::string to_string(SweepAxis a);
SweepAxis sweep_axis_from_string(const std::string& name);

struct SweepSpec {
    SweepAxis axis = SweepAxis::beta;
    std::vector<std::string> values;  // parsed per axis
    AttackConfig fixed;

    void validate() const;
};

struct SweepCell {
    std::string axis_value;
    bool ok = false;
    std::string error;  // when !ok
    double mean_clean_adv_cosine = 0.0;   // target feature cosine, clean vs adversarial
    double mean_similarity_drop = 0.0;    // 1 - cosine
    double max_linf = 0.0;
};

struct SweepTable {
    SweepAxis axis = SweepAxis::beta;
    std::vector<SweepCell> cells;

    bool all_ok() const;
};

/// Surrogate-side trajectory straight from a trace (recorded cos_st values).
SimilarityTrajectory surrogate_trajectory(const AttackTrace& trace, const std::string& model_id);

/// Rebuild the adversarial video at every snapshot, feed it to the target,
/// and record the clean-vs-adversarial feature cosine. Requires snapshots
/// recorded at every iteration (config.snapshot_every == 1).
SimilarityTrajectory trace_target_similarity(const AttackTrace& trace, const FrameSequence& seq,
                                             const TargetOracle& target,
                                             const FlowEstimator* estimator = nullptr);

/// One corpus entry for sweeps.
struct CorpusEntry {
    FrameSequence seq;
    CaptionSet captions;
};

/// One attack + target-similarity evaluation per axis value. Per-cell
/// failures are recorded and the sweep continues.
SweepTable run_sweep(const SweepSpec& spec, const std::vector<CorpusEntry>& corpus,
                     const SurrogateModel& surrogate, const TargetOracle& target,
                     std::size_t workers = 1);

std::string format_sweep_table(const SweepTable& table);

}  // namespace advid
