#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace advid {

struct PngImage {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<std::uint8_t> rgb;  // height * width * 3
};

PngImage read_png_rgb8(const std::filesystem::path& path);

void write_png_rgb8(const std::filesystem::path& path, std::size_t height,
                    std::size_t width, const std::vector<std::uint8_t>& rgb);

}  // namespace advid
