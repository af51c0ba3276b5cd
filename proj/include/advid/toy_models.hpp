#pragma once

#include <cstdint>
#include <memory>

#include "advid/surrogate.hpp"

namespace advid {

/// Dimensions of the toy reference models.
struct ToyDims {
    std::size_t patch_size = 16;  // must divide the input height and width
    std::size_t d1 = 32;          // encoder embedding dim
    std::size_t d2 = 32;          // projected feature dim
    std::size_t n1 = 8;           // visual query rows after projection
};

/// Deterministic desk-scale surrogate: patchify -> linear -> tanh encoder,
/// an attention-pooling visual projector with N1 learned queries, and a
/// hashed bag-of-tokens text embedder. All parameters come from the seed.
std::shared_ptr<SurrogateModel> make_toy_surrogate(std::uint64_t seed, const ToyDims& dims);

/// Deterministic desk-scale transfer target: an independently seeded encoder
/// behind uniform-stride frame sampling (up to `max_sampled_frames`), pooled
/// and flattened into a single feature vector.
std::shared_ptr<DifferentiableTarget> make_toy_target(std::uint64_t seed, const ToyDims& dims,
                                                      std::size_t max_sampled_frames = 8);

}  // namespace advid
