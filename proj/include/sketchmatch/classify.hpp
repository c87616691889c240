#pragma once

#include <span>
#include <string>
#include <vector>

#include "sketchmatch/eigenspace.hpp"

namespace sketchmatch {

// Full rank list for one probe, best match first. Mahalanobis scores sort
// ascending (smaller is better), SVM margins descending.
struct RankedMatches {
    enum class Metric { mahalanobis, svm_margin };

    struct Entry {
        std::string label;
        double score = 0.0;
    };

    Metric metric = Metric::mahalanobis;
    std::vector<Entry> entries;
};

// sqrt( sum_i (x_i - y_i)^2 / (lambda_i + epsilon) ). In PCA coordinates the
// covariance is diagonal with the model eigenvalues, so Mahalanobis reduces
// to eigenvalue-weighted Euclidean distance.
double mahalanobis_distance(std::span<const double> x, std::span<const double> y,
                            std::span<const double> eigenvalues, double epsilon);

// Ranks every gallery entry by Mahalanobis distance to the probe, ties
// broken by gallery insertion order. With duplicate labels only the best
// entry per label is kept (nearest-exemplar identification).
RankedMatches knn_rank(const EigenModel& model, std::span<const double> probe,
                       double epsilon);

// One-vs-rest linear SVMs trained by dual coordinate descent.
struct LinearSvmModel {
    struct ClassModel {
        std::string label;
        std::vector<double> weights;
        double bias = 0.0;
    };

    std::vector<ClassModel> classes; // first-appearance order of labels
    double c = 1.0;

    // training diagnostics
    double max_kkt_violation = 0.0; // worst class at termination
    bool degenerate = false;        // every weight vector is ~0; ranking falls back to biases
};

// Solves each one-vs-rest soft-margin dual by coordinate ascent over the box
// 0 <= alpha_i <= C, until the maximal KKT violation drops below 1e-3 or the
// update budget (10 * M * #classes per class) runs out. w = sum alpha_i y_i x_i;
// the bias averages y_i - w.x_i over interior support vectors, falling back
// to the midpoint of the extreme margins.
LinearSvmModel svm_train(const std::vector<EigenModel::GalleryEntry>& gallery, double c);

// Scores w_c . probe + b_c per class, sorted descending; ties broken by
// lexicographic label order.
RankedMatches svm_rank(const LinearSvmModel& model, std::span<const double> probe);

} // namespace sketchmatch
