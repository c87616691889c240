#include "sketchmatch/wavelet.hpp"

#include <cmath>
#include <string>

#include "sketchmatch/error.hpp"

namespace sketchmatch {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int ceil_half(int n) { return (n + 1) / 2; }

} // namespace

std::pair<std::vector<double>, std::vector<double>>
haar_step_1d(std::span<const double> signal) {
    if (signal.empty())
        throw DataError("haar_step_1d: empty signal");
    const size_t n = signal.size();
    const size_t half = (n + 1) / 2;
    std::vector<double> approx(half), detail(half);
    for (size_t k = 0; k < half; ++k) {
        const double a = signal[2 * k];
        const double b = (2 * k + 1 < n) ? signal[2 * k + 1] : a; // replicate pad
        approx[k] = (a + b) * kInvSqrt2;
        detail[k] = (a - b) * kInvSqrt2;
    }
    return {std::move(approx), std::move(detail)};
}

HaarLevel haar_step_2d(const GrayImage& img) {
    img.check_valid();
    const int out_w = ceil_half(img.width);
    const int out_h = ceil_half(img.height);

    // row pass
    GrayImage row_lo(out_w, img.height), row_hi(out_w, img.height);
    std::vector<double> row(static_cast<size_t>(img.width));
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x)
            row[x] = img.at(x, y);
        auto [a, d] = haar_step_1d(row);
        for (int x = 0; x < out_w; ++x) {
            row_lo.at(x, y) = a[x];
            row_hi.at(x, y) = d[x];
        }
    }

    // column pass on both row outputs
    HaarLevel out;
    out.approx = GrayImage(out_w, out_h);
    out.detail_v = GrayImage(out_w, out_h);
    out.detail_h = GrayImage(out_w, out_h);
    out.detail_d = GrayImage(out_w, out_h);
    std::vector<double> col(static_cast<size_t>(img.height));
    for (int x = 0; x < out_w; ++x) {
        for (int y = 0; y < img.height; ++y)
            col[y] = row_lo.at(x, y);
        auto [la, ld] = haar_step_1d(col);
        for (int y = 0; y < out_h; ++y) {
            out.approx.at(x, y) = la[y];
            out.detail_v.at(x, y) = ld[y];
        }
        for (int y = 0; y < img.height; ++y)
            col[y] = row_hi.at(x, y);
        auto [ha, hd] = haar_step_1d(col);
        for (int y = 0; y < out_h; ++y) {
            out.detail_h.at(x, y) = ha[y];
            out.detail_d.at(x, y) = hd[y];
        }
    }
    return out;
}

WaveletPyramid decompose(const GrayImage& img, int levels) {
    img.check_valid();
    if (levels < 1)
        throw UsageError("decompose: level count must be >= 1");

    WaveletPyramid pyramid;
    pyramid.source_width = img.width;
    pyramid.source_height = img.height;
    const GrayImage* current = &img;
    for (int j = 1; j <= levels; ++j) {
        if (current->width < 2 || current->height < 2)
            throw DataError("decompose: dimensions exhausted at level " + std::to_string(j) +
                            " (" + std::to_string(current->width) + "x" +
                            std::to_string(current->height) + " cannot be paired)");
        HaarLevel level = haar_step_2d(*current);
        level.level = j;
        pyramid.levels.push_back(std::move(level));
        current = &pyramid.levels.back().approx;
    }
    return pyramid;
}

const GrayImage& diagonal_band(const WaveletPyramid& pyramid, int level) {
    if (level < 1 || level > pyramid.depth())
        throw UsageError("diagonal_band: level " + std::to_string(level) +
                         " out of range 1.." + std::to_string(pyramid.depth()));
    return pyramid.levels[static_cast<size_t>(level - 1)].detail_d;
}

namespace {

// Inverse of the 1D step at padded even length, truncated to orig_len.
std::vector<double> inverse_step_1d(std::span<const double> approx,
                                    std::span<const double> detail, int orig_len) {
    std::vector<double> out(static_cast<size_t>(orig_len));
    for (size_t k = 0; k < approx.size(); ++k) {
        const double a = (approx[k] + detail[k]) * kInvSqrt2;
        const double b = (approx[k] - detail[k]) * kInvSqrt2;
        if (2 * k < out.size()) out[2 * k] = a;
        if (2 * k + 1 < out.size()) out[2 * k + 1] = b;
    }
    return out;
}

} // namespace

GrayImage reconstruct_step_2d(const HaarLevel& level, int orig_width, int orig_height) {
    const GrayImage& a = level.approx;
    if (!a.same_dims(level.detail_v) || !a.same_dims(level.detail_h) ||
        !a.same_dims(level.detail_d))
        throw DataError("reconstruct_step_2d: band dimensions disagree");
    if (ceil_half(orig_width) != a.width || ceil_half(orig_height) != a.height)
        throw DataError("reconstruct_step_2d: original dimensions inconsistent with bands");

    // invert the column pass: recover the two row-pass outputs
    GrayImage row_lo(a.width, orig_height), row_hi(a.width, orig_height);
    std::vector<double> ca(static_cast<size_t>(a.height)), cd(static_cast<size_t>(a.height));
    for (int x = 0; x < a.width; ++x) {
        for (int y = 0; y < a.height; ++y) {
            ca[y] = level.approx.at(x, y);
            cd[y] = level.detail_v.at(x, y);
        }
        auto lo = inverse_step_1d(ca, cd, orig_height);
        for (int y = 0; y < orig_height; ++y)
            row_lo.at(x, y) = lo[y];
        for (int y = 0; y < a.height; ++y) {
            ca[y] = level.detail_h.at(x, y);
            cd[y] = level.detail_d.at(x, y);
        }
        auto hi = inverse_step_1d(ca, cd, orig_height);
        for (int y = 0; y < orig_height; ++y)
            row_hi.at(x, y) = hi[y];
    }

    // invert the row pass
    GrayImage out(orig_width, orig_height);
    std::vector<double> ra(static_cast<size_t>(a.width)), rd(static_cast<size_t>(a.width));
    for (int y = 0; y < orig_height; ++y) {
        for (int x = 0; x < a.width; ++x) {
            ra[x] = row_lo.at(x, y);
            rd[x] = row_hi.at(x, y);
        }
        auto s = inverse_step_1d(ra, rd, orig_width);
        for (int x = 0; x < orig_width; ++x)
            out.at(x, y) = s[x];
    }
    return out;
}

} // namespace sketchmatch
