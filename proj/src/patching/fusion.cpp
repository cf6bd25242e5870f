#include "sinoforge/patching/fusion.hpp"

#include <stdexcept>

namespace sinoforge::patching {

namespace {

Image mean_pair(const Image& a, const Image& b, const char* who) {
    if (!a.same_shape(b)) throw std::invalid_argument(std::string(who) + ": shape mismatch");
    Image out(a.height(), a.width());
    for (std::size_t i = 0; i < out.data().size(); ++i) {
        out.data()[i] = 0.5f * (a.data()[i] + b.data()[i]);
    }
    return out;
}

} // namespace

Image fuse_mid(const Image& x_mid, const Image& up_low) {
    return mean_pair(up_low, x_mid, "fuse_mid");
}

Image fuse_patch(const Image& x_patch, const Image& mid_region_up) {
    return mean_pair(mid_region_up, x_patch, "fuse_patch");
}

} // namespace sinoforge::patching
