#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "advid/captions.hpp"
#include "advid/media_io.hpp"
#include "advid/objective.hpp"
#include "advid/tensor.hpp"

namespace advid {

/// Visual and/or textual features after multimodal projection. Either side
/// may be absent depending on which projector call produced it.
struct ProjectedFeatures {
    Matrix visual;   // N1 x D2
    Matrix textual;  // N2 x D2
};

/// How a model expects pixels to be prepared. Preprocessing is part of the
/// differentiable graph: gradients flow back to 0-255 pixels.
struct Preprocessing {
    std::optional<std::pair<std::size_t, std::size_t>> input_size;  // nullopt = native
    double mean = 0.0;
    double std = 1.0;
};

struct LossWeights {
    double lambda1 = 1.0;
    double lambda2 = 1.0;
};

/// Scalar loss plus its exact derivative w.r.t. the adversarial key-frame
/// pixels, with the per-term breakdown used for traces.
struct GradientResult {
    double loss = 0.0;
    PixelGrid grad;  // same shape as the adversarial batch
    LossBreakdown breakdown;
    double cos_st = 0.0;  // cosine of flattened spatiotemporal embeddings
};

/// White-box surrogate contract: frame encoder, visual projector, text
/// embedder, and the loss-and-gradient oracle. Implementations must be
/// deterministic given fixed parameters and inputs.
class SurrogateModel {
public:
    virtual ~SurrogateModel() = default;

    /// Encode K frames independently into K x N x D1 patch embeddings.
    virtual FrameEmbeddings encode_frames(const KeyFrameBatch& batch) const = 0;

    /// Project frame embeddings into N1 x D2 visual features.
    virtual ProjectedFeatures project_visual(const FrameEmbeddings& embeddings) const = 0;

    /// Embed captions into N2 x D2 textual features (one row per caption).
    virtual ProjectedFeatures embed_text(const CaptionSet& captions) const = 0;

    /// Whether the projector aligns text as well as vision. Models without a
    /// multimodal projector cannot supply the visual-to-text loss term.
    virtual bool has_multimodal_projector() const = 0;

    virtual Preprocessing preprocessing() const = 0;

    /// Evaluate the combined objective on this model's features and return
    /// its exact gradient w.r.t. the adversarial pixels.
    virtual GradientResult loss_and_grad(const KeyFrameBatch& clean,
                                         const KeyFrameBatch& adv,
                                         const CaptionSet& captions,
                                         const LossWeights& weights) const = 0;

    /// Gradient oracle for the frame-level objective (mean patch-row cosine
    /// between clean and adversarial embeddings, no pooling, no projector).
    /// Used by per-frame baseline attacks.
    virtual GradientResult frame_loss_and_grad(const KeyFrameBatch& clean,
                                               const KeyFrameBatch& adv) const = 0;
};

/// Free-function form of the gradient oracle.
GradientResult loss_and_grad(const SurrogateModel& model, const KeyFrameBatch& clean,
                             const KeyFrameBatch& adv, const CaptionSet& captions,
                             const LossWeights& weights);

/// Black-box target contract: a video goes in, a flat feature vector comes
/// out. The frame sampling strategy is internal to the oracle.
class TargetOracle {
public:
    virtual ~TargetOracle() = default;

    virtual std::vector<double> encode_video(const FrameSequence& seq) const = 0;

    virtual std::string model_id() const = 0;
};

/// A target that additionally exposes gradients and its sampling rule, for
/// white-box baseline attacks at desk scale.
class DifferentiableTarget : public TargetOracle {
public:
    /// Frame indices the oracle reads for a video of `frame_count` frames.
    virtual std::vector<std::size_t> sampled_indices(std::size_t frame_count) const = 0;

    /// Loss = cosine(features(clean), features(adv)); gradient is w.r.t. the
    /// sampled adversarial frames, in sampling order.
    virtual GradientResult feature_cosine_and_grad(const FrameSequence& clean,
                                                   const FrameSequence& adv) const = 0;
};

/// Cosine between a target's features for two videos.
double target_feature_cosine(const TargetOracle& target, const FrameSequence& a,
                             const FrameSequence& b);

}  // namespace advid
