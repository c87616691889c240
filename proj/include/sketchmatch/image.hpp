#pragma once

#include <cstdint>
#include <vector>

namespace sketchmatch {

// Real-valued grayscale image, row-major. Values are nominally in [0,255]
// but intermediate pipeline stages (wavelet bands, offset images) may leave
// that range; quantization happens only at PGM export.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels; // size width*height

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0);

    double& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    size_t pixel_count() const { return pixels.size(); }

    bool same_dims(const GrayImage& other) const {
        return width == other.width && height == other.height;
    }

    // Throws DataError if dimensions and pixel count disagree or a value is not finite.
    void check_valid() const;
};

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
};

struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels; // row-major, size width*height
};

// BT.601 luma: 0.299 r + 0.587 g + 0.114 b, kept as a real number.
GrayImage rgb_to_gray(const RgbImage& img);

// Bilinear resize with center-aligned sampling: target pixel (i,j) samples
// source coordinate ((i+0.5)*in_w/out_w - 0.5, (j+0.5)*in_h/out_h - 0.5),
// clamped to the image bounds. Resizing to the same size is the identity.
GrayImage resize_bilinear(const GrayImage& img, int out_w, int out_h);

} // namespace sketchmatch
