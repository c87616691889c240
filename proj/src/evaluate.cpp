#include "sketchmatch/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sketchmatch/error.hpp"

namespace sketchmatch {

double rmse(const GrayImage& f, const GrayImage& s) {
    f.check_valid();
    s.check_valid();
    if (!f.same_dims(s))
        throw DataError("rmse: image dimensions disagree");
    double sum = 0.0;
    for (size_t i = 0; i < f.pixels.size(); ++i) {
        const double d = f.pixels[i] - s.pixels[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(f.pixels.size()));
}

namespace {

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

} // namespace

std::string ModalityReport::to_text() const {
    std::string out = "Pair            RMSE original   RMSE new dimension\n";
    for (const Row& r : rows) {
        std::string label = r.label;
        if (label.size() < 16)
            label.resize(16, ' ');
        out += label + format_fixed(r.original_rmse, 4) + "          " +
               format_fixed(r.new_dimension_rmse, 4) + "\n";
    }
    return out;
}

std::string ModalityReport::to_csv() const {
    std::string out = "pair,rmse_original,rmse_new_dimension\n";
    char buf[96];
    for (const Row& r : rows) {
        std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g\n", r.label.c_str(),
                      r.original_rmse, r.new_dimension_rmse);
        out += buf;
    }
    return out;
}

ModalityReport modality_report(const std::vector<PhotoSketchPair>& pairs,
                               OffsetI offset, int levels) {
    ModalityReport report;
    report.rows.reserve(pairs.size());
    for (const PhotoSketchPair& pair : pairs) {
        if (!pair.photo.same_dims(pair.sketch))
            throw DataError("modality_report: pair \"" + pair.label +
                            "\" has mismatched dimensions");
        const auto photo_nd = to_new_dimension(pair.photo, SourceKind::photo, {}, levels);
        const auto sketch_nd =
            to_new_dimension(pair.sketch, SourceKind::sketch, offset, levels);
        report.rows.push_back({pair.label, rmse(pair.photo, pair.sketch),
                               rmse(photo_nd.img, sketch_nd.img)});
    }
    return report;
}

CmcCurve cmc(const std::vector<std::pair<std::string, RankedMatches>>& rank_lists,
             int max_rank) {
    if (max_rank < 1)
        throw UsageError("cmc: max_rank must be >= 1");
    if (rank_lists.empty())
        throw DataError("cmc: no rank lists");

    std::vector<long> hits(static_cast<size_t>(max_rank), 0);
    for (const auto& [true_label, matches] : rank_lists) {
        const auto it = std::find_if(
            matches.entries.begin(), matches.entries.end(),
            [&](const RankedMatches::Entry& e) { return e.label == true_label; });
        if (it == matches.entries.end())
            throw DataError("cmc: true label \"" + true_label +
                            "\" absent from its rank list");
        const long position = 1 + (it - matches.entries.begin());
        for (int r = 0; r < max_rank; ++r)
            if (position <= r + 1)
                ++hits[static_cast<size_t>(r)];
    }

    CmcCurve curve;
    curve.n_probes = static_cast<int>(rank_lists.size());
    curve.ranks.resize(static_cast<size_t>(max_rank));
    for (int r = 0; r < max_rank; ++r)
        curve.ranks[static_cast<size_t>(r)] =
            static_cast<double>(hits[static_cast<size_t>(r)]) / curve.n_probes;
    return curve;
}

} // namespace sketchmatch
