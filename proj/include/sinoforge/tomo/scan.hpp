#pragma once

#include "sinoforge/core/image.hpp"

namespace sinoforge::tomo {

/// Parallel-beam scan: `angles` projection directions uniformly covering
/// [0, pi), `detectors` bins per projection. The sinogram is angles x
/// detectors (row = angle, column = detector).
struct ScanGeometry {
    int angles = 180;
    int detectors = 128;
};

/// Forward projection of a square image: for angle theta_i = i*pi/angles the
/// image is sampled along lines perpendicular to the detector axis (bilinear,
/// out-of-bounds reads as 0) and summed with unit pixel spacing. Detector d
/// sits at offset (d+0.5)*(n/D) - n/2 from the rotation center (n-1)/2.
Image radon(const Image& img, const ScanGeometry& geom);

/// Filtered back-projection: each sinogram row is convolved with the
/// discrete ramp (Ram-Lak) kernel h[0]=1/4, h[odd k]=-1/(pi*k)^2, h[even]=0
/// via FFT on a power-of-two length >= 2*detectors (exact linear
/// convolution), back-projected with linear interpolation along the detector
/// axis, then min-max normalized and clamped to [0,1].
Image fbp(const Image& sino, const ScanGeometry& geom, int out_size);

} // namespace sinoforge::tomo
