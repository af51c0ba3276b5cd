#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "advid/tensor.hpp"

namespace advid {

/// A video as T frames of HxWx3 pixels on the 0-255 real scale.
struct FrameSequence {
    PixelGrid pixels;
    std::string video_id;
    std::optional<double> fps;  // informational only

    std::size_t frame_count() const { return pixels.count; }
    std::size_t height() const { return pixels.height; }
    std::size_t width() const { return pixels.width; }
};

/// K contiguous half-open clip ranges tiling [0, T); the key-frame of each
/// clip is its first frame.
struct ClipPartition {
    std::vector<std::pair<std::size_t, std::size_t>> clips;  // [start, end)
    std::vector<std::size_t> key_frame_indices;

    std::size_t clip_count() const { return clips.size(); }
    std::size_t frame_count() const { return clips.empty() ? 0 : clips.back().second; }
};

/// The K selected key-frames of a sequence.
struct KeyFrameBatch {
    PixelGrid pixels;

    std::size_t frame_count() const { return pixels.count; }
};

/// A perturbation covering every frame of a video, bounded in L-infinity.
struct FullPerturbation {
    PixelGrid delta;
    double epsilon = 0.0;
};

/// Split `frame_count` frames into K = max(1, floor(frame_count * beta))
/// near-equal contiguous clips. Clip k covers [floor(k*T/K), floor((k+1)*T/K)).
ClipPartition split_into_clips(std::size_t frame_count, double beta);

/// Copy the key-frame of each clip out of the sequence.
KeyFrameBatch extract_key_frames(const FrameSequence& seq, const ClipPartition& partition);

/// Per-pixel sum of sequence and perturbation, clamped to [0, 255].
/// The result's video_id is seq.video_id + id_suffix.
FrameSequence compose_adversarial(const FrameSequence& seq, const FullPerturbation& delta,
                                  const std::string& id_suffix = "_adv");

/// Read a frame directory: frame_000000.png ... plus a frames.json index.
FrameSequence load_frame_directory(const std::filesystem::path& dir);

/// Write a sequence as 8-bit RGB PNGs plus the frames.json index.
/// Pixels are rounded to the nearest integer and clamped to [0, 255], so a
/// save/load round trip reproduces values within +-0.5.
void save_frame_directory(const FrameSequence& seq, const std::filesystem::path& dir);

}  // namespace advid
