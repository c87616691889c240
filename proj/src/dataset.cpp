#include "sketchmatch/dataset.hpp"

#include <algorithm>

#include "sketchmatch/error.hpp"
#include "sketchmatch/pgm.hpp"

namespace sketchmatch {

namespace fs = std::filesystem;

int DatasetManifest::sketch_count() const {
    int n = 0;
    for (const auto& e : entries)
        if (e.sketch)
            ++n;
    return n;
}

DatasetManifest ingest(const fs::path& root) {
    if (!fs::is_directory(root))
        throw DataError("dataset root does not exist: " + root.string());
    const fs::path photos_dir = root / "photos";
    const fs::path sketches_dir = root / "sketches";
    if (!fs::is_directory(photos_dir))
        throw DataError("dataset has no photos/ directory: " + photos_dir.string());

    std::vector<fs::path> photo_files;
    for (const auto& entry : fs::directory_iterator(photos_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".pgm")
            photo_files.push_back(entry.path());
    if (photo_files.empty())
        throw DataError("dataset photos/ directory contains no .pgm files: " +
                        photos_dir.string());
    std::sort(photo_files.begin(), photo_files.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.filename().string() < b.filename().string();
              });

    DatasetManifest manifest;
    manifest.root = root;
    for (const fs::path& photo : photo_files) {
        DatasetEntry entry;
        entry.label = photo.stem().string();
        entry.photo = photo;
        load_pgm(photo); // validate: must exist and parse
        const fs::path sketch = sketches_dir / photo.filename();
        if (fs::is_regular_file(sketch)) {
            load_pgm(sketch);
            entry.sketch = sketch;
        }
        manifest.entries.push_back(std::move(entry));
    }
    return manifest;
}

} // namespace sketchmatch
