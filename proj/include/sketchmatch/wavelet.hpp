#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sketchmatch/image.hpp"

namespace sketchmatch {

// One analysis level: approximation plus vertical/horizontal/diagonal detail.
// All four bands share the same dimensions, the ceil-halving of the input.
struct HaarLevel {
    GrayImage approx;   // low-pass rows, low-pass columns
    GrayImage detail_v; // low-pass rows, high-pass columns
    GrayImage detail_h; // high-pass rows, low-pass columns
    GrayImage detail_d; // high-pass rows, high-pass columns
    int level = 1;
};

struct WaveletPyramid {
    std::vector<HaarLevel> levels; // level j at index j-1
    int source_width = 0;
    int source_height = 0;

    int depth() const { return static_cast<int>(levels.size()); }
};

// Single orthonormal Haar analysis step. Odd-length signals are extended by
// replicating the last sample before pairing; both outputs have length
// ceil(len/2). approx[k] = (s[2k]+s[2k+1])/sqrt(2), detail[k] = (s[2k]-s[2k+1])/sqrt(2).
std::pair<std::vector<double>, std::vector<double>>
haar_step_1d(std::span<const double> signal);

// 2D step: 1D analysis along every row, then along every column of both
// row outputs, producing the four filter combinations.
HaarLevel haar_step_2d(const GrayImage& img);

// Repeated 2D steps, each level computed from the previous approximation.
// Every step requires both current dimensions >= 2.
WaveletPyramid decompose(const GrayImage& img, int levels);

// Diagonal detail band of level j (1-based).
const GrayImage& diagonal_band(const WaveletPyramid& pyramid, int level);

// Exact inverse of haar_step_2d; reconstructs to the padded even size and
// truncates back to orig dimensions. Test oracle for the analysis step.
GrayImage reconstruct_step_2d(const HaarLevel& level, int orig_width, int orig_height);

} // namespace sketchmatch
