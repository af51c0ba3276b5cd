#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "advid/media_io.hpp"
#include "advid/tensor.hpp"

namespace advid {

/// Per-key-frame perturbation, bounded in L-infinity.
struct KeyFramePerturbation {
    PixelGrid delta;  // K x H x W x 3
    double epsilon = 0.0;
};

/// Per-pixel displacement (dx, dy) from a source frame to a destination
/// frame. Layout (row, col, {dx, dy}).
struct FlowField {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> displacement;  // height * width * 2

    FlowField() = default;
    FlowField(std::size_t h, std::size_t w)
        : height(h), width(w), displacement(h * w * 2, 0.0) {}

    double& dx(std::size_t y, std::size_t x) { return displacement[(y * width + x) * 2]; }
    double& dy(std::size_t y, std::size_t x) { return displacement[(y * width + x) * 2 + 1]; }
    double dx(std::size_t y, std::size_t x) const { return displacement[(y * width + x) * 2]; }
    double dy(std::size_t y, std::size_t x) const { return displacement[(y * width + x) * 2 + 1]; }
};

/// Flow estimator contract. flow(a, a) must be the zero field and results
/// must be deterministic.
class FlowEstimator {
public:
    virtual ~FlowEstimator() = default;

    /// Estimate per-pixel displacement carrying frame_a's content to frame_b.
    virtual FlowField flow(const FrameSequence& seq, std::size_t frame_a,
                           std::size_t frame_b) const = 0;
};

/// Replicate each key-frame's perturbation across its whole clip.
FullPerturbation propagate_direct(const ClipPartition& partition,
                                  const KeyFramePerturbation& delta);

/// Linearly interpolate between consecutive key-frame perturbations; frames
/// at or after the last key index reuse the last key's perturbation.
FullPerturbation propagate_bilinear(const ClipPartition& partition,
                                    const KeyFramePerturbation& delta);

/// Warp each clip's perturbation frame to frame along estimated flow.
/// Destination pixels no source pixel maps to fall back to the clip's
/// key-frame perturbation; each frame is clamped to [-epsilon, epsilon].
FullPerturbation propagate_flow(const FrameSequence& seq, const ClipPartition& partition,
                                const KeyFramePerturbation& delta,
                                const FlowEstimator& estimator);

/// Exhaustive block-matching flow: per block, the displacement within
/// +-radius minimizing the sum of absolute differences. Ties prefer smaller
/// |dx|+|dy|, then lexicographic (dy, dx). Edge blocks are truncated.
class BlockMatchingFlow : public FlowEstimator {
public:
    explicit BlockMatchingFlow(std::size_t block = 16, std::size_t radius = 8)
        : block_(block), radius_(radius) {}

    FlowField flow(const FrameSequence& seq, std::size_t frame_a,
                   std::size_t frame_b) const override;

    std::size_t block() const { return block_; }
    std::size_t radius() const { return radius_; }

private:
    std::size_t block_;
    std::size_t radius_;
};

/// Two-frame convenience entry point for the block matcher.
FlowField estimate_flow_block_matching(const FrameSequence& seq, std::size_t frame_a,
                                       std::size_t frame_b, std::size_t block = 16,
                                       std::size_t radius = 8);

}  // namespace advid
