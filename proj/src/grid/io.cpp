#include "sinoforge/grid/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace sinoforge::grid {

namespace {

void write_u32le(std::ostream& os, std::uint32_t v) {
    const unsigned char b[4] = {
        static_cast<unsigned char>(v & 0xff),
        static_cast<unsigned char>((v >> 8) & 0xff),
        static_cast<unsigned char>((v >> 16) & 0xff),
        static_cast<unsigned char>((v >> 24) & 0xff),
    };
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_f32le(std::ostream& os, float v) {
    std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
    write_u32le(os, bits);
}

float read_f32le(std::istream& is) {
    return std::bit_cast<float>(read_u32le(is));
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

void expect_magic(std::istream& is, const char* magic, const std::string& path) {
    char got[4];
    is.read(got, 4);
    if (!is || std::memcmp(got, magic, 4) != 0) {
        throw std::runtime_error("bad magic in " + path + " (expected " + magic + ")");
    }
}

void check_dims(std::uint32_t h, std::uint32_t w, const std::string& path) {
    constexpr std::uint64_t kMaxPixels = 1ULL << 30;
    if (h == 0 || w == 0 || static_cast<std::uint64_t>(h) * w > kMaxPixels) {
        throw std::runtime_error("unreasonable dimensions in " + path);
    }
}

} // namespace

void save_sgf(const Image& img, const std::string& path) {
    auto os = open_out(path);
    os.write("SGF1", 4);
    write_u32le(os, static_cast<std::uint32_t>(img.height()));
    write_u32le(os, static_cast<std::uint32_t>(img.width()));
    for (float v : img.data()) write_f32le(os, v);
    if (!os) throw std::runtime_error("write failed: " + path);
}

Image load_sgf(const std::string& path) {
    auto is = open_in(path);
    expect_magic(is, "SGF1", path);
    const std::uint32_t h = read_u32le(is);
    const std::uint32_t w = read_u32le(is);
    check_dims(h, w, path);
    Image img(static_cast<int>(h), static_cast<int>(w));
    for (float& v : img.data()) v = read_f32le(is);
    if (!is) throw std::runtime_error("truncated file: " + path);
    return img;
}

void save_sgm(const Mask& mask, const std::string& path) {
    auto os = open_out(path);
    os.write("SGM1", 4);
    write_u32le(os, static_cast<std::uint32_t>(mask.height()));
    write_u32le(os, static_cast<std::uint32_t>(mask.width()));
    os.write(reinterpret_cast<const char*>(mask.bits().data()),
             static_cast<std::streamsize>(mask.bits().size()));
    if (!os) throw std::runtime_error("write failed: " + path);
}

Mask load_sgm(const std::string& path) {
    auto is = open_in(path);
    expect_magic(is, "SGM1", path);
    const std::uint32_t h = read_u32le(is);
    const std::uint32_t w = read_u32le(is);
    check_dims(h, w, path);
    Mask mask(static_cast<int>(h), static_cast<int>(w), 0);
    is.read(reinterpret_cast<char*>(mask.bits().data()),
            static_cast<std::streamsize>(mask.bits().size()));
    if (!is) throw std::runtime_error("truncated file: " + path);
    for (std::uint8_t b : mask.bits()) {
        if (b > 1) throw std::runtime_error("mask byte outside {0,1} in " + path);
    }
    return mask;
}

void save_pgm16(const Image& img, const std::string& path) {
    auto os = open_out(path);
    os << "P5\n" << img.width() << " " << img.height() << "\n65535\n";
    for (float v : img.data()) {
        const double clamped = std::clamp(static_cast<double>(v), 0.0, 1.0);
        const auto q = static_cast<std::uint16_t>(std::lround(65535.0 * clamped));
        const unsigned char b[2] = {
            static_cast<unsigned char>((q >> 8) & 0xff),
            static_cast<unsigned char>(q & 0xff),
        };
        os.write(reinterpret_cast<const char*>(b), 2);
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

} // namespace sinoforge::grid
