#pragma once

#include <optional>
#include <vector>

#include "sketchmatch/image.hpp"

namespace sketchmatch {

enum class SourceKind { photo, sketch };

// Brightness offset added to sketch-side images; an integer by contract,
// |mean(training set) - mean(testing set)| rounded half away from zero.
struct OffsetI {
    int value = 0;
};

enum class OffsetSpace { post_negative, pre_negative };

// A transformed diagonal band: the representation photos and sketches are
// matched in. Dimensions equal the scale-J diagonal band of the source.
struct NewDimensionImage {
    GrayImage img;
    SourceKind source_kind = SourceKind::photo;
};

// Per-image linear min-max map onto [0,255]; a constant band maps to all
// zeros. Makes the negative well-defined for signed wavelet coefficients.
GrayImage rescale_to_byte_range(const GrayImage& band);

// Per-pixel 255 - v. Input values must lie in [0,255].
GrayImage negative(const GrayImage& img);

// Mean over every pixel of every training image minus the same for testing,
// absolute value, rounded half away from zero. Aggregation is in index order.
OffsetI compute_offset(const std::vector<GrayImage>& training,
                       const std::vector<GrayImage>& testing);

// Per-pixel v + I, unclamped.
GrayImage apply_offset(const GrayImage& img, OffsetI offset);

// Full modality transform: decompose at `levels`, take the top diagonal
// band, rescale to [0,255], negate, and for sketches add the offset when
// one is supplied (training-stage sketches run without it so the offset
// can be computed from the post-negative sets).
NewDimensionImage to_new_dimension(const GrayImage& img, SourceKind kind,
                                   std::optional<OffsetI> offset = std::nullopt,
                                   int levels = 3);

} // namespace sketchmatch
