#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinoforge {

/// Axis-aligned rectangle in image coordinates (row/col of the top-left
/// corner, extent in pixels).
struct Rect {
    int row = 0;
    int col = 0;
    int height = 0;
    int width = 0;

    bool empty() const { return height <= 0 || width <= 0; }
};

/// Dense 2-D grid of real intensities, row-major. Rows index projection
/// angles, columns index detector positions when the image is a sinogram.
/// Values are nominally in [0,1]; operations that need that range clamp or
/// normalize explicitly.
class Image {
public:
    Image() = default;
    Image(int height, int width, float fill = 0.0f);
    Image(int height, int width, std::vector<float> data);

    int height() const { return height_; }
    int width() const { return width_; }
    std::size_t size() const { return data_.size(); }

    float& at(int r, int c) { return data_[static_cast<std::size_t>(r) * width_ + c]; }
    float at(int r, int c) const { return data_[static_cast<std::size_t>(r) * width_ + c]; }

    std::vector<float>& data() { return data_; }
    const std::vector<float>& data() const { return data_; }

    Image crop(const Rect& rect) const;
    void paste(const Image& patch, int row, int col);

    float min_value() const;
    float max_value() const;
    double mean() const;
    double sum() const;

    void clamp01();
    /// Affine rescale so min -> 0 and max -> 1; a constant image maps to all
    /// zeros.
    void minmax_normalize();

    bool same_shape(const Image& other) const {
        return height_ == other.height_ && width_ == other.width_;
    }

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<float> data_;
};

/// Binary mask aligned with an Image: 1 = known pixel, 0 = missing.
class Mask {
public:
    Mask() = default;
    Mask(int height, int width, std::uint8_t fill = 1);

    static Mask ones(int height, int width) { return Mask(height, width, 1); }
    static Mask zeros(int height, int width) { return Mask(height, width, 0); }

    int height() const { return height_; }
    int width() const { return width_; }
    std::size_t size() const { return bits_.size(); }

    std::uint8_t& at(int r, int c) { return bits_[static_cast<std::size_t>(r) * width_ + c]; }
    std::uint8_t at(int r, int c) const { return bits_[static_cast<std::size_t>(r) * width_ + c]; }

    std::vector<std::uint8_t>& bits() { return bits_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    Mask crop(const Rect& rect) const;

    /// Fraction of zero (missing) bits.
    double zero_fraction() const;
    std::size_t count_ones() const;

    bool same_shape(const Image& img) const {
        return height_ == img.height() && width_ == img.width();
    }
    bool same_shape(const Mask& other) const {
        return height_ == other.height_ && width_ == other.width_;
    }

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<std::uint8_t> bits_;
};

[[noreturn]] void throw_dimension_error(const std::string& what);

void check_rect(const Rect& rect, int height, int width, const char* who);

} // namespace sinoforge
