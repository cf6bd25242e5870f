#include "sinoforge/core/image.hpp"

#include <algorithm>
#include <numeric>

namespace sinoforge {

Image::Image(int height, int width, float fill)
    : height_(height),
      width_(width),
      data_(static_cast<std::size_t>(height) * static_cast<std::size_t>(width), fill) {
    if (height < 0 || width < 0) throw_dimension_error("Image: negative dimensions");
}

Image::Image(int height, int width, std::vector<float> data)
    : height_(height), width_(width), data_(std::move(data)) {
    if (height < 0 || width < 0) throw_dimension_error("Image: negative dimensions");
    if (data_.size() != static_cast<std::size_t>(height) * static_cast<std::size_t>(width))
        throw_dimension_error("Image: data size does not match dimensions");
}

Image Image::crop(const Rect& rect) const {
    check_rect(rect, height_, width_, "Image::crop");
    Image out(rect.height, rect.width);
    for (int r = 0; r < rect.height; ++r) {
        const float* src = data_.data() + static_cast<std::size_t>(rect.row + r) * width_ + rect.col;
        float* dst = out.data_.data() + static_cast<std::size_t>(r) * rect.width;
        std::copy(src, src + rect.width, dst);
    }
    return out;
}

void Image::paste(const Image& patch, int row, int col) {
    Rect rect{row, col, patch.height(), patch.width()};
    check_rect(rect, height_, width_, "Image::paste");
    for (int r = 0; r < patch.height(); ++r) {
        const float* src = patch.data_.data() + static_cast<std::size_t>(r) * patch.width_;
        float* dst = data_.data() + static_cast<std::size_t>(row + r) * width_ + col;
        std::copy(src, src + patch.width_, dst);
    }
}

float Image::min_value() const {
    return data_.empty() ? 0.0f : *std::min_element(data_.begin(), data_.end());
}

float Image::max_value() const {
    return data_.empty() ? 0.0f : *std::max_element(data_.begin(), data_.end());
}

double Image::mean() const {
    if (data_.empty()) return 0.0;
    return sum() / static_cast<double>(data_.size());
}

double Image::sum() const {
    return std::accumulate(data_.begin(), data_.end(), 0.0);
}

void Image::clamp01() {
    for (float& v : data_) v = std::clamp(v, 0.0f, 1.0f);
}

void Image::minmax_normalize() {
    if (data_.empty()) return;
    const float lo = min_value();
    const float hi = max_value();
    const float range = hi - lo;
    if (range <= 0.0f) {
        std::fill(data_.begin(), data_.end(), 0.0f);
        return;
    }
    for (float& v : data_) v = (v - lo) / range;
}

Mask::Mask(int height, int width, std::uint8_t fill)
    : height_(height),
      width_(width),
      bits_(static_cast<std::size_t>(height) * static_cast<std::size_t>(width), fill) {
    if (height < 0 || width < 0) throw_dimension_error("Mask: negative dimensions");
}

Mask Mask::crop(const Rect& rect) const {
    check_rect(rect, height_, width_, "Mask::crop");
    Mask out(rect.height, rect.width, 0);
    for (int r = 0; r < rect.height; ++r) {
        const std::uint8_t* src =
            bits_.data() + static_cast<std::size_t>(rect.row + r) * width_ + rect.col;
        std::uint8_t* dst = out.bits_.data() + static_cast<std::size_t>(r) * rect.width;
        std::copy(src, src + rect.width, dst);
    }
    return out;
}

double Mask::zero_fraction() const {
    if (bits_.empty()) return 0.0;
    const std::size_t ones = count_ones();
    return 1.0 - static_cast<double>(ones) / static_cast<double>(bits_.size());
}

std::size_t Mask::count_ones() const {
    std::size_t n = 0;
    for (std::uint8_t b : bits_) n += (b != 0);
    return n;
}

void throw_dimension_error(const std::string& what) {
    throw std::invalid_argument(what);
}

void check_rect(const Rect& rect, int height, int width, const char* who) {
    if (rect.row < 0 || rect.col < 0 || rect.height < 0 || rect.width < 0 ||
        rect.row + rect.height > height || rect.col + rect.width > width) {
        throw std::out_of_range(std::string(who) + ": rectangle out of bounds");
    }
}

} // namespace sinoforge
