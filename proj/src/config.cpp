#include "sketchmatch/config.hpp"

#include <string>

#include "sketchmatch/error.hpp"

namespace sketchmatch {

void PipelineConfig::validate() const {
    if (resize_w < 1 || resize_h < 1)
        throw UsageError("config: resize dimensions must be positive");
    if (wavelet_levels < 1)
        throw UsageError("config: wavelet levels must be >= 1");
    int w = resize_w, h = resize_h;
    for (int j = 1; j <= wavelet_levels; ++j) {
        if (w < 2 || h < 2)
            throw UsageError("config: wavelet level " + std::to_string(j) +
                             " exhausts the " + std::to_string(resize_w) + "x" +
                             std::to_string(resize_h) + " dimensions");
        w = (w + 1) / 2;
        h = (h + 1) / 2;
    }
    if (eigen_threshold < 0.0)
        throw UsageError("config: eigen threshold must be >= 0");
    if (knn_epsilon < 0.0)
        throw UsageError("config: knn epsilon must be >= 0");
    if (svm_c <= 0.0)
        throw UsageError("config: svm C must be positive");
    if (top_n < 1)
        throw UsageError("config: top_n must be >= 1");
}

std::string to_string(CenteringMode mode) {
    return mode == CenteringMode::per_image_scalar ? "per_image_scalar"
                                                   : "global_mean_vector";
}

std::string to_string(Classifier classifier) {
    return classifier == Classifier::knn ? "knn" : "svm";
}

std::string to_string(OffsetSpace space) {
    return space == OffsetSpace::post_negative ? "post_negative" : "pre_negative";
}

CenteringMode centering_from_string(const std::string& s) {
    if (s == "per_image_scalar")
        return CenteringMode::per_image_scalar;
    if (s == "global_mean_vector")
        return CenteringMode::global_mean_vector;
    throw UsageError("unknown centering mode: " + s);
}

Classifier classifier_from_string(const std::string& s) {
    if (s == "knn")
        return Classifier::knn;
    if (s == "svm")
        return Classifier::svm;
    throw UsageError("unknown classifier: " + s);
}

OffsetSpace offset_space_from_string(const std::string& s) {
    if (s == "post_negative")
        return OffsetSpace::post_negative;
    if (s == "pre_negative")
        return OffsetSpace::pre_negative;
    throw UsageError("unknown offset space: " + s);
}

} // namespace sketchmatch
