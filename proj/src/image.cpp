#include "sketchmatch/image.hpp"

#include <algorithm>
#include <cmath>

#include "sketchmatch/error.hpp"

namespace sketchmatch {

GrayImage::GrayImage(int w, int h, double fill)
    : width(w), height(h) {
    if (w < 1 || h < 1)
        throw DataError("GrayImage dimensions must be positive");
    pixels.assign(static_cast<size_t>(w) * h, fill);
}

void GrayImage::check_valid() const {
    if (width < 1 || height < 1)
        throw DataError("GrayImage dimensions must be positive");
    if (pixels.size() != static_cast<size_t>(width) * height)
        throw DataError("GrayImage pixel count does not match dimensions");
    for (double v : pixels)
        if (!std::isfinite(v))
            throw DataError("GrayImage contains a non-finite pixel value");
}

GrayImage rgb_to_gray(const RgbImage& img) {
    if (img.width < 1 || img.height < 1 ||
        img.pixels.size() != static_cast<size_t>(img.width) * img.height)
        throw DataError("RgbImage pixel count does not match dimensions");
    GrayImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixels.size(); ++i) {
        const Rgb& p = img.pixels[i];
        out.pixels[i] = 0.299 * p.r + 0.587 * p.g + 0.114 * p.b;
    }
    return out;
}

GrayImage resize_bilinear(const GrayImage& img, int out_w, int out_h) {
    img.check_valid();
    if (out_w < 1 || out_h < 1)
        throw UsageError("resize target dimensions must be positive");

    GrayImage out(out_w, out_h);
    const double sx = static_cast<double>(img.width) / out_w;
    const double sy = static_cast<double>(img.height) / out_h;
    for (int j = 0; j < out_h; ++j) {
        double fy = (j + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, img.height - 1);
        const double ty = fy - y0;
        for (int i = 0; i < out_w; ++i) {
            double fx = (i + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const double tx = fx - x0;
            const double p00 = img.at(x0, y0), p10 = img.at(x1, y0);
            const double p01 = img.at(x0, y1), p11 = img.at(x1, y1);
            const double top = p00 + tx * (p10 - p00);
            const double bot = p01 + tx * (p11 - p01);
            const double v = top + ty * (bot - top);
            // keep the interpolant inside the 4-neighbor range (rounding guard)
            const double lo = std::min(std::min(p00, p10), std::min(p01, p11));
            const double hi = std::max(std::max(p00, p10), std::max(p01, p11));
            out.at(i, j) = std::clamp(v, lo, hi);
        }
    }
    return out;
}

} // namespace sketchmatch
