#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "advid/captions.hpp"
#include "advid/media_io.hpp"
#include "advid/objective.hpp"
#include "advid/propagation.hpp"
#include "advid/surrogate.hpp"

namespace advid {

enum class PropagationMethod { direct, bilinear, flow, none };

std::string to_string(PropagationMethod m);
PropagationMethod propagation_from_string(const std::string& name);

struct AttackConfig {
    double epsilon = 16.0;  // pixel units on the 0-255 scale
    double alpha = 1.0;     // sign-step size
    std::size_t iterations = 50;
    double beta = 0.30;  // key-frame ratio
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    PropagationMethod propagation = PropagationMethod::direct;
    std::uint64_t seed = 0;
    bool pixel_clamp = true;
    /// Record the adversarial key-frame batch every k-th iteration
    /// (0 = disabled, 1 = every iteration). Snapshot 0 is the random init.
    std::size_t snapshot_every = 0;

    void validate() const;  // throws std::invalid_argument
};

/// One recorded optimizer state: loss terms plus the flattened
/// spatiotemporal cosine at that iterate.
struct TraceEntry {
    std::size_t iteration = 0;
    LossBreakdown losses;
    double cos_st = 0.0;
};

/// Per-run record: iteration 0 is the state right after random init, so the
/// list has iterations + 1 entries.
struct AttackTrace {
    std::vector<TraceEntry> entries;
    double wall_time_sec = 0.0;
    AttackConfig config;
    PixelGrid initial_delta;                // delta_0 as drawn
    double final_linf = 0.0;
    std::vector<KeyFrameBatch> snapshots;   // adversarial iterates, if enabled
    std::vector<std::size_t> snapshot_iterations;
};

/// Sign-PGD over the combined surrogate objective on the key-frames of
/// `seq`. Returns the final key-frame perturbation and the full trace.
std::pair<KeyFramePerturbation, AttackTrace> pgd_attack(const SurrogateModel& model,
                                                        const FrameSequence& seq,
                                                        const CaptionSet& captions,
                                                        const AttackConfig& config);

/// Per-frame baseline: every frame of the video is perturbed independently
/// to minimize the mean patch-row cosine of its encoder embeddings. No
/// pooling, no projector terms, captions unused.
std::pair<FullPerturbation, AttackTrace> i2v_baseline_attack(const SurrogateModel& model,
                                                             const FrameSequence& seq,
                                                             const AttackConfig& config);

/// White-box baseline: perturb exactly the frames the target's sampling
/// rule selects, minimizing the cosine between the target's clean and
/// adversarial video features. Other frames stay untouched unless a
/// propagation method is configured.
std::pair<FullPerturbation, AttackTrace> vanilla_baseline_attack(const TargetOracle& target,
                                                                 const FrameSequence& seq,
                                                                 const AttackConfig& config);

/// Control condition: seeded uniform noise in [-epsilon, epsilon] per pixel.
FullPerturbation random_noise_control(const FrameSequence& seq, const AttackConfig& config);

/// Expand a key-frame perturbation to all frames with the configured method.
/// `none` zero-fills the non-key frames.
FullPerturbation propagate(const FrameSequence& seq, const ClipPartition& partition,
                           const KeyFramePerturbation& delta, PropagationMethod method,
                           const FlowEstimator* estimator = nullptr);

}  // namespace advid
