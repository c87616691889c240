#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sketchmatch {

struct DatasetEntry {
    std::string label; // file stem, unique within a dataset
    std::filesystem::path photo;
    std::optional<std::filesystem::path> sketch;
};

// Dataset layout: <root>/photos/*.pgm and <root>/sketches/*.pgm, paired by
// identical basename. Entries are ordered lexicographically by basename.
struct DatasetManifest {
    std::filesystem::path root;
    std::vector<DatasetEntry> entries;

    int photo_count() const { return static_cast<int>(entries.size()); }
    int sketch_count() const;
};

// Scans and validates the layout: every listed file must parse as PGM.
// Throws DataError (with the offending path) otherwise.
DatasetManifest ingest(const std::filesystem::path& root);

} // namespace sketchmatch
