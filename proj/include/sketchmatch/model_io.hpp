#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sketchmatch/classify.hpp"
#include "sketchmatch/config.hpp"
#include "sketchmatch/eigenspace.hpp"

namespace sketchmatch {

// A trained pipeline: config snapshot, eigenspace (with sketch offset and
// projected gallery), optional SVM weights, and any training warnings.
struct Model {
    PipelineConfig config;
    EigenModel eigen;
    std::optional<LinearSvmModel> svm;
    std::vector<std::string> warnings;
};

// Versioned decimal-text model file ("SKETCHMATCH-MODEL", version 1).
// Numeric fields are written with 17 significant digits, so load(save(m))
// reproduces every double bit-exactly and identical models serialize to
// byte-identical files.
std::string serialize_model(const Model& model);
Model deserialize_model(const std::string& text);

void save_model(const std::filesystem::path& path, const Model& model);
Model load_model(const std::filesystem::path& path);

} // namespace sketchmatch
