#include "sketchmatch/modality.hpp"

#include <algorithm>
#include <cmath>

#include "sketchmatch/error.hpp"
#include "sketchmatch/wavelet.hpp"

namespace sketchmatch {

GrayImage rescale_to_byte_range(const GrayImage& band) {
    band.check_valid();
    const auto [lo_it, hi_it] = std::minmax_element(band.pixels.begin(), band.pixels.end());
    const double lo = *lo_it, hi = *hi_it;
    GrayImage out(band.width, band.height);
    if (hi == lo)
        return out; // degenerate band: all zeros
    const double scale = 255.0 / (hi - lo);
    for (size_t i = 0; i < band.pixels.size(); ++i)
        out.pixels[i] = (band.pixels[i] - lo) * scale;
    return out;
}

GrayImage negative(const GrayImage& img) {
    img.check_valid();
    GrayImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixels.size(); ++i) {
        const double v = img.pixels[i];
        if (v < 0.0 || v > 255.0)
            throw DataError("negative: pixel value outside [0,255]");
        out.pixels[i] = 255.0 - v;
    }
    return out;
}

namespace {

double set_mean(const std::vector<GrayImage>& images, const char* which) {
    if (images.empty())
        throw DataError(std::string("compute_offset: empty ") + which + " set");
    double sum = 0.0;
    size_t count = 0;
    for (const GrayImage& img : images) {
        img.check_valid();
        for (double v : img.pixels)
            sum += v;
        count += img.pixel_count();
    }
    return sum / static_cast<double>(count);
}

} // namespace

OffsetI compute_offset(const std::vector<GrayImage>& training,
                       const std::vector<GrayImage>& testing) {
    const double diff = set_mean(training, "training") - set_mean(testing, "testing");
    return OffsetI{static_cast<int>(std::round(std::abs(diff)))};
}

GrayImage apply_offset(const GrayImage& img, OffsetI offset) {
    img.check_valid();
    GrayImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixels.size(); ++i)
        out.pixels[i] = img.pixels[i] + offset.value;
    return out;
}

NewDimensionImage to_new_dimension(const GrayImage& img, SourceKind kind,
                                   std::optional<OffsetI> offset, int levels) {
    const WaveletPyramid pyramid = decompose(img, levels);
    GrayImage stage = negative(rescale_to_byte_range(diagonal_band(pyramid, levels)));
    if (kind == SourceKind::sketch && offset.has_value())
        stage = apply_offset(stage, *offset);
    return NewDimensionImage{std::move(stage), kind};
}

} // namespace sketchmatch
