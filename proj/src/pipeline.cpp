#include "sketchmatch/pipeline.hpp"

#include <cstdio>
#include <utility>

#include "sketchmatch/error.hpp"
#include "sketchmatch/pgm.hpp"
#include "sketchmatch/wavelet.hpp"

namespace sketchmatch {

GrayImage preprocess(const GrayImage& img, const PipelineConfig& config) {
    return resize_bilinear(img, config.resize_w, config.resize_h);
}

FeatureVector to_feature(const NewDimensionImage& nd, std::string label) {
    return FeatureVector{nd.img.pixels, std::move(label)};
}

namespace {

// Band after rescale (pre_negative) or after negation (post_negative):
// the space the offset means are taken in.
GrayImage offset_space_image(const GrayImage& preprocessed, const PipelineConfig& cfg) {
    const WaveletPyramid pyr = decompose(preprocessed, cfg.wavelet_levels);
    GrayImage stage = rescale_to_byte_range(diagonal_band(pyr, cfg.wavelet_levels));
    if (cfg.offset_space == OffsetSpace::post_negative)
        stage = negative(stage);
    return stage;
}

double lambda_ridge(const Model& model) {
    const double lambda_max =
        model.eigen.eigenvalues.empty() ? 0.0 : model.eigen.eigenvalues.front();
    return model.config.knn_epsilon * lambda_max;
}

const LinearSvmModel& ensure_svm(const Model& model, std::optional<LinearSvmModel>& local) {
    if (model.svm)
        return *model.svm;
    if (!local)
        local = svm_train(model.eigen.gallery, model.config.svm_c);
    return *local;
}

} // namespace

Model train_pipeline(const PipelineConfig& config, const DatasetManifest& data) {
    config.validate();
    if (data.entries.size() < 2)
        throw DataError("training needs at least 2 photos, got " +
                        std::to_string(data.entries.size()));

    Model model;
    model.config = config;

    std::vector<FeatureVector> features;
    std::vector<GrayImage> photo_space, sketch_space;
    features.reserve(data.entries.size());
    for (const DatasetEntry& entry : data.entries) {
        const GrayImage photo = preprocess(load_pgm(entry.photo), config);
        features.push_back(to_feature(
            to_new_dimension(photo, SourceKind::photo, {}, config.wavelet_levels),
            entry.label));
        photo_space.push_back(offset_space_image(photo, config));
        if (entry.sketch) {
            const GrayImage sketch = preprocess(load_pgm(*entry.sketch), config);
            sketch_space.push_back(offset_space_image(sketch, config));
        }
    }

    model.eigen = train_eigenspace(features, config.centering, config.eigen_threshold);
    if (sketch_space.empty()) {
        model.eigen.offset = OffsetI{0};
        model.warnings.push_back("no sketches found; offset I defaulted to 0");
    } else {
        model.eigen.offset = compute_offset(photo_space, sketch_space);
    }

    if (config.classifier == Classifier::svm)
        model.svm = svm_train(model.eigen.gallery, config.svm_c);
    return model;
}

RankedMatches query_model(const Model& model, const GrayImage& sketch_image) {
    const GrayImage preprocessed = preprocess(sketch_image, model.config);
    const auto nd = to_new_dimension(preprocessed, SourceKind::sketch,
                                     model.eigen.offset, model.config.wavelet_levels);
    const FeatureVector feature = to_feature(nd, "");
    const std::vector<double> coords = project(model.eigen, feature);
    if (model.config.classifier == Classifier::svm) {
        std::optional<LinearSvmModel> local;
        return svm_rank(ensure_svm(model, local), coords);
    }
    return knn_rank(model.eigen, coords, lambda_ridge(model));
}

namespace {

std::string percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%6.1f", fraction * 100.0);
    return buf;
}

} // namespace

std::string EvaluationReport::to_text() const {
    std::string out = modality.to_text();
    out += "\nCumulative match scores (%), " + std::to_string(cmc_knn.n_probes) +
           " probes, gallery of " + std::to_string(gallery_size) + "\n";
    out += "Rank                        ";
    for (size_t r = 0; r < cmc_knn.ranks.size(); ++r) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%6zu", r + 1);
        out += buf;
    }
    out += "\nNew dimension + PCA + K-NN  ";
    for (double v : cmc_knn.ranks)
        out += percent(v);
    out += "\nNew dimension + PCA + SVM   ";
    for (double v : cmc_svm.ranks)
        out += percent(v);
    out += "\n";
    return out;
}

std::string EvaluationReport::to_csv() const {
    std::string out = modality.to_csv();
    out += "\nmethod";
    for (size_t r = 0; r < cmc_knn.ranks.size(); ++r)
        out += ",rank" + std::to_string(r + 1);
    out += "\n";
    char buf[32];
    out += "new_dimension_pca_knn";
    for (double v : cmc_knn.ranks) {
        std::snprintf(buf, sizeof(buf), ",%.17g", v);
        out += buf;
    }
    out += "\nnew_dimension_pca_svm";
    for (double v : cmc_svm.ranks) {
        std::snprintf(buf, sizeof(buf), ",%.17g", v);
        out += buf;
    }
    out += "\n";
    return out;
}

EvaluationReport evaluate_pipeline(const Model& model, const DatasetManifest& data) {
    std::vector<PhotoSketchPair> pairs;
    for (const DatasetEntry& entry : data.entries) {
        if (!entry.sketch)
            continue;
        pairs.push_back({entry.label, preprocess(load_pgm(entry.photo), model.config),
                         preprocess(load_pgm(*entry.sketch), model.config)});
    }
    if (pairs.empty())
        throw DataError("evaluation needs photo/sketch pairs; none found");

    EvaluationReport report;
    report.gallery_size = static_cast<int>(model.eigen.gallery.size());
    report.modality =
        modality_report(pairs, model.eigen.offset, model.config.wavelet_levels);

    std::optional<LinearSvmModel> local_svm;
    const LinearSvmModel& svm = ensure_svm(model, local_svm);
    std::vector<std::pair<std::string, RankedMatches>> knn_lists, svm_lists;
    for (const PhotoSketchPair& pair : pairs) {
        const auto nd = to_new_dimension(pair.sketch, SourceKind::sketch,
                                         model.eigen.offset, model.config.wavelet_levels);
        const std::vector<double> coords = project(model.eigen, to_feature(nd, ""));
        knn_lists.emplace_back(pair.label,
                               knn_rank(model.eigen, coords, lambda_ridge(model)));
        svm_lists.emplace_back(pair.label, svm_rank(svm, coords));
    }
    report.cmc_knn = cmc(knn_lists, model.config.top_n);
    report.cmc_svm = cmc(svm_lists, model.config.top_n);
    return report;
}

} // namespace sketchmatch
