#pragma once

#include <string>

#include "sketchmatch/eigenspace.hpp"
#include "sketchmatch/modality.hpp"

namespace sketchmatch {

enum class Classifier { knn, svm };

// End-to-end pipeline parameters. Defaults follow the reference setup:
// 50x65 inputs, scale-3 decomposition, scalar per-image centering.
struct PipelineConfig {
    int resize_w = 50;
    int resize_h = 65;
    int wavelet_levels = 3;
    CenteringMode centering = CenteringMode::per_image_scalar;
    double eigen_threshold = 1e-10; // relative to lambda_max
    Classifier classifier = Classifier::knn;
    double knn_epsilon = 1e-8; // ridge, relative to lambda_max
    double svm_c = 1.0;
    int top_n = 5;
    OffsetSpace offset_space = OffsetSpace::post_negative;

    // Throws UsageError on bad values, including wavelet_levels that exhaust
    // the configured dimensions. Runs before any image data is touched.
    void validate() const;
};

std::string to_string(CenteringMode mode);
std::string to_string(Classifier classifier);
std::string to_string(OffsetSpace space);
CenteringMode centering_from_string(const std::string& s);
Classifier classifier_from_string(const std::string& s);
OffsetSpace offset_space_from_string(const std::string& s);

} // namespace sketchmatch
