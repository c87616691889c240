#pragma once

#include <string>
#include <vector>

#include "sketchmatch/dataset.hpp"
#include "sketchmatch/evaluate.hpp"
#include "sketchmatch/model_io.hpp"

namespace sketchmatch {

// Resize to the configured dimensions (inputs are already grayscale PGM).
GrayImage preprocess(const GrayImage& img, const PipelineConfig& config);

// Row-major flattening of a new-dimension image.
FeatureVector to_feature(const NewDimensionImage& nd, std::string label);

// Trains the full pipeline on the manifest's photos: modality transform,
// PCA, offset I from the photo set vs the available sketch set (0 plus a
// recorded warning when no sketches exist), and SVM weights when the
// configured classifier is svm.
Model train_pipeline(const PipelineConfig& config, const DatasetManifest& data);

// Sketch branch of the modality transform with the model's stored offset,
// projection, and ranking with the configured classifier. Returns the full
// rank list; callers truncate for display.
RankedMatches query_model(const Model& model, const GrayImage& sketch_image);

struct EvaluationReport {
    ModalityReport modality;
    CmcCurve cmc_knn;
    CmcCurve cmc_svm;
    int gallery_size = 0;

    std::string to_text() const;
    std::string to_csv() const;
};

// Runs the modality report over every photo/sketch pair and the cumulative
// match curves (both classifier variants) over every sketch query.
EvaluationReport evaluate_pipeline(const Model& model, const DatasetManifest& data);

} // namespace sketchmatch
