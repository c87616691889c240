#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sketchmatch/image.hpp"

namespace sketchmatch {

// Parses a binary PGM ("P5", maxval <= 255) byte stream. Header whitespace
// may include '#' comments running to end of line. Throws DataError with a
// distinct message for: unsupported magic, non-positive dimensions,
// maxval > 255, truncated payload.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// Serializes as binary PGM with maxval 255. Pixel values are clamped to
// [0,255] and rounded half away from zero, so read_pgm(write_pgm(img))
// reproduces img exactly when its values are integers in [0,255].
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& img);

} // namespace sketchmatch
