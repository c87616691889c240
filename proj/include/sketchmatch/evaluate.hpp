#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sketchmatch/classify.hpp"
#include "sketchmatch/image.hpp"
#include "sketchmatch/modality.hpp"

namespace sketchmatch {

// Root mean square pixel error between two equal-size images.
double rmse(const GrayImage& f, const GrayImage& s);

struct PhotoSketchPair {
    std::string label;
    GrayImage photo;
    GrayImage sketch;
};

// Per-pair RMSE in the original pixel space and in the new-dimension space.
struct ModalityReport {
    struct Row {
        std::string label;
        double original_rmse = 0.0;
        double new_dimension_rmse = 0.0;
    };

    std::vector<Row> rows;

    std::string to_text() const;
    std::string to_csv() const;
};

// Both operands of each pair are run through the modality transform (photo
// and sketch branches; the sketch side gets the offset) and compared within
// each space. Pairs must share dimensions.
ModalityReport modality_report(const std::vector<PhotoSketchPair>& pairs,
                               OffsetI offset, int levels = 3);

// Cumulative match curve: entry r is the fraction of probes whose true label
// appears at rank <= r+1.
struct CmcCurve {
    std::vector<double> ranks;
    int n_probes = 0;
};

// Positions beyond max_rank contribute zero to every entry. The true label
// must occur somewhere in its rank list.
CmcCurve cmc(const std::vector<std::pair<std::string, RankedMatches>>& rank_lists,
             int max_rank);

} // namespace sketchmatch
