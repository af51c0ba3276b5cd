#pragma once

#include <cstddef>
#include <vector>

#include "advid/tensor.hpp"

namespace advid {

/// Per-frame patch embeddings from a vision encoder: K frames, N patches
/// per frame, D1 channels. Layout (frame, patch, channel).
struct FrameEmbeddings {
    std::size_t frames = 0;   // K
    std::size_t patches = 0;  // N
    std::size_t dim = 0;      // D1
    std::vector<double> values;

    FrameEmbeddings() = default;
    FrameEmbeddings(std::size_t k, std::size_t n, std::size_t d)
        : frames(k), patches(n), dim(d), values(k * n * d, 0.0) {}

    double* row(std::size_t k, std::size_t n) {
        return values.data() + (k * patches + n) * dim;
    }
    const double* row(std::size_t k, std::size_t n) const {
        return values.data() + (k * patches + n) * dim;
    }

    bool same_shape(const FrameEmbeddings& o) const {
        return frames == o.frames && patches == o.patches && dim == o.dim;
    }
};

/// Pooled views of a FrameEmbeddings block:
///   temporal row i = mean over frames of patch i's embeddings   (N x D1)
///   spatial  row k = mean over patches of frame k's embeddings  (K x D1)
///   combined      = [temporal; spatial]                         ((N+K) x D1)
struct SpatioTemporalEmbeddings {
    Matrix temporal;
    Matrix spatial;
    Matrix combined;
};

/// All loss terms of one objective evaluation plus their weights.
struct LossBreakdown {
    double l_v = 0.0;
    double l_v_s = 0.0;
    double l_v_t = 0.0;
    double l_p_v = 0.0;
    double l_p_v2t = 0.0;
    double l_p = 0.0;
    double l_total = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

/// Row-wise cosines with a zero-norm guard: rows whose norm falls below
/// `tau` get cosine 0 and raise the degenerate flag.
struct CosineRows {
    std::vector<double> values;
    bool degenerate = false;
};

SpatioTemporalEmbeddings pool_spatiotemporal(const FrameEmbeddings& embeddings);

CosineRows cosine_rows(const Matrix& a, const Matrix& b, double tau = 1e-12);

/// Mean over the N+K combined rows of row-wise cosine similarity.
double loss_vision(const SpatioTemporalEmbeddings& st_clean,
                   const SpatioTemporalEmbeddings& st_adv);

/// Mean over the K spatial rows of cosine between pooled spatial embeddings.
double loss_vision_spatial(const FrameEmbeddings& clean, const FrameEmbeddings& adv);

/// Mean over the N temporal rows of cosine between pooled temporal embeddings.
double loss_vision_temporal(const FrameEmbeddings& clean, const FrameEmbeddings& adv);

/// Mean over N1 rows of row-wise cosine between clean and adversarial
/// projected visual features.
double loss_projector_visual(const Matrix& vis_clean, const Matrix& vis_adv);

/// Mean over all N1 x N2 pairs of cosine between adversarial visual rows and
/// textual rows. Throws if the text set is empty; callers disable the term
/// instead of feeding it nothing.
double loss_projector_v2t(const Matrix& vis_adv, const Matrix& text);

/// Assemble the weighted total. Without a multimodal projector the v2t term
/// is reported as 0 and excluded from l_p.
LossBreakdown loss_total(double l_v, double l_v_s, double l_v_t, double l_p_v,
                         double l_p_v2t, double lambda1, double lambda2,
                         bool has_multimodal_projector);

/// Cosine of two matrices flattened to single vectors; used for the
/// similarity trajectories rather than the row-mean losses.
double cosine_flat(const Matrix& a, const Matrix& b, double tau = 1e-12);

}  // namespace advid
