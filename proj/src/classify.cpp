#include "sketchmatch/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "sketchmatch/error.hpp"

namespace sketchmatch {

double mahalanobis_distance(std::span<const double> x, std::span<const double> y,
                            std::span<const double> eigenvalues, double epsilon) {
    if (x.size() != y.size() || x.size() != eigenvalues.size())
        throw DataError("mahalanobis_distance: length mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (eigenvalues[i] < 0.0)
            throw NumericError("mahalanobis_distance: negative eigenvalue");
        const double d = x[i] - y[i];
        sum += d * d / (eigenvalues[i] + epsilon);
    }
    return std::sqrt(sum);
}

RankedMatches knn_rank(const EigenModel& model, std::span<const double> probe,
                       double epsilon) {
    if (model.gallery.empty())
        throw DataError("knn_rank: empty gallery");
    RankedMatches out;
    out.metric = RankedMatches::Metric::mahalanobis;
    out.entries.reserve(model.gallery.size());
    for (const auto& entry : model.gallery)
        out.entries.push_back(
            {entry.label,
             mahalanobis_distance(probe, entry.coords, model.eigenvalues, epsilon)});
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const auto& a, const auto& b) { return a.score < b.score; });
    // keep the best exemplar per label
    std::unordered_set<std::string> seen;
    std::erase_if(out.entries,
                  [&](const auto& e) { return !seen.insert(e.label).second; });
    return out;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

struct BinarySolution {
    std::vector<double> weights;
    std::vector<double> alpha;
    double kkt_violation = 0.0;
};

// Dual coordinate descent for one one-vs-rest subproblem.
BinarySolution solve_binary(const std::vector<EigenModel::GalleryEntry>& points,
                            const std::vector<double>& labels, double c,
                            long update_budget) {
    const size_t m = points.size();
    const size_t dim = points[0].coords.size();
    BinarySolution sol;
    sol.weights.assign(dim, 0.0);
    sol.alpha.assign(m, 0.0);

    std::vector<double> diag(m);
    for (size_t i = 0; i < m; ++i)
        diag[i] = dot(points[i].coords, points[i].coords);

    constexpr double kTol = 1e-3;
    long updates = 0;
    double max_violation = 0.0;
    while (updates < update_budget) {
        max_violation = 0.0;
        for (size_t i = 0; i < m && updates < update_budget; ++i, ++updates) {
            const double y = labels[i];
            const double g = y * dot(sol.weights, points[i].coords) - 1.0;
            double pg = g;
            if (sol.alpha[i] <= 0.0)
                pg = std::min(g, 0.0);
            else if (sol.alpha[i] >= c)
                pg = std::max(g, 0.0);
            max_violation = std::max(max_violation, std::abs(pg));
            if (pg == 0.0)
                continue;
            double next;
            if (diag[i] > 0.0)
                next = std::clamp(sol.alpha[i] - g / diag[i], 0.0, c);
            else
                next = (g < 0.0) ? c : 0.0; // objective linear in alpha_i
            const double delta = next - sol.alpha[i];
            if (delta != 0.0) {
                sol.alpha[i] = next;
                for (size_t d = 0; d < dim; ++d)
                    sol.weights[d] += delta * y * points[i].coords[d];
            }
        }
        if (max_violation < kTol)
            break;
    }

    // final violation with frozen weights
    sol.kkt_violation = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double g = labels[i] * dot(sol.weights, points[i].coords) - 1.0;
        double pg = g;
        if (sol.alpha[i] <= 0.0)
            pg = std::min(g, 0.0);
        else if (sol.alpha[i] >= c)
            pg = std::max(g, 0.0);
        sol.kkt_violation = std::max(sol.kkt_violation, std::abs(pg));
    }
    return sol;
}

double compute_bias(const std::vector<EigenModel::GalleryEntry>& points,
                    const std::vector<double>& labels, const BinarySolution& sol,
                    double c) {
    double sum = 0.0;
    int interior = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        if (sol.alpha[i] > 0.0 && sol.alpha[i] < c) {
            sum += labels[i] - dot(sol.weights, points[i].coords);
            ++interior;
        }
    }
    if (interior > 0)
        return sum / interior;
    // no interior support vectors: center between the extreme margins
    double min_pos = std::numeric_limits<double>::infinity();
    double max_neg = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < points.size(); ++i) {
        const double s = dot(sol.weights, points[i].coords);
        if (labels[i] > 0.0)
            min_pos = std::min(min_pos, s);
        else
            max_neg = std::max(max_neg, s);
    }
    return -(min_pos + max_neg) / 2.0;
}

} // namespace

LinearSvmModel svm_train(const std::vector<EigenModel::GalleryEntry>& gallery, double c) {
    if (gallery.empty())
        throw DataError("svm_train: empty gallery");
    if (c <= 0.0)
        throw UsageError("svm_train: regularization C must be positive");
    const size_t dim = gallery[0].coords.size();
    for (const auto& e : gallery)
        if (e.coords.size() != dim)
            throw DataError("svm_train: inconsistent coordinate lengths");

    std::vector<std::string> class_labels;
    for (const auto& e : gallery)
        if (std::find(class_labels.begin(), class_labels.end(), e.label) == class_labels.end())
            class_labels.push_back(e.label);
    if (class_labels.size() < 2)
        throw DataError("svm_train: need at least 2 distinct labels");

    const long budget = 10L * static_cast<long>(gallery.size()) *
                        static_cast<long>(class_labels.size());

    LinearSvmModel model;
    model.c = c;
    model.max_kkt_violation = 0.0;
    double weight_peak = 0.0;
    for (const std::string& label : class_labels) {
        std::vector<double> y(gallery.size());
        for (size_t i = 0; i < gallery.size(); ++i)
            y[i] = (gallery[i].label == label) ? 1.0 : -1.0;
        const BinarySolution sol = solve_binary(gallery, y, c, budget);
        const double bias = compute_bias(gallery, y, sol, c);
        for (double w : sol.weights)
            weight_peak = std::max(weight_peak, std::abs(w));
        model.max_kkt_violation = std::max(model.max_kkt_violation, sol.kkt_violation);
        model.classes.push_back({label, sol.weights, bias});
    }
    model.degenerate = weight_peak < 1e-12;
    return model;
}

RankedMatches svm_rank(const LinearSvmModel& model, std::span<const double> probe) {
    RankedMatches out;
    out.metric = RankedMatches::Metric::svm_margin;
    out.entries.reserve(model.classes.size());
    for (const auto& cls : model.classes) {
        if (cls.weights.size() != probe.size())
            throw DataError("svm_rank: probe length does not match model weights");
        out.entries.push_back({cls.label, dot(probe, cls.weights) + cls.bias});
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
        if (a.score != b.score)
            return a.score > b.score;
        return a.label < b.label;
    });
    return out;
}

} // namespace sketchmatch
