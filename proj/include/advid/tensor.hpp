#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace advid {

/// Dense row-major matrix of doubles. Small helper shared by the feature
/// and loss code; not a linear-algebra library.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }

    bool empty() const { return rows == 0 || cols == 0; }

    bool same_shape(const Matrix& other) const {
        return rows == other.rows && cols == other.cols;
    }
};

/// A stack of RGB frames as real-valued pixels on the 0-255 scale.
/// Layout: (frame, row, col, channel), row-major.
struct PixelGrid {
    std::size_t count = 0;   // number of frames
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> data;

    PixelGrid() = default;
    PixelGrid(std::size_t n, std::size_t h, std::size_t w, double fill = 0.0)
        : count(n), height(h), width(w), data(n * h * w * 3, fill) {}

    std::size_t frame_size() const { return height * width * 3; }

    double& at(std::size_t f, std::size_t y, std::size_t x, std::size_t c) {
        return data[((f * height + y) * width + x) * 3 + c];
    }
    double at(std::size_t f, std::size_t y, std::size_t x, std::size_t c) const {
        return data[((f * height + y) * width + x) * 3 + c];
    }

    double* frame(std::size_t f) { return data.data() + f * frame_size(); }
    const double* frame(std::size_t f) const { return data.data() + f * frame_size(); }

    bool same_shape(const PixelGrid& other) const {
        return count == other.count && height == other.height && width == other.width;
    }

    bool empty() const { return count == 0 || height == 0 || width == 0; }
};

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        double a = x < 0 ? -x : x;
        if (a > m) m = a;
    }
    return m;
}

inline double max_abs(const PixelGrid& g) { return max_abs(g.data); }

}  // namespace advid
