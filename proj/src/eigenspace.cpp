#include "sketchmatch/eigenspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sketchmatch/error.hpp"

namespace sketchmatch {
namespace {

constexpr double kOffDiagTol = 1e-12; // relative to ||A||_F
constexpr double kSymmetryTol = 1e-10;
constexpr int kMaxSweeps = 100;

// Flip each column so its entry of largest magnitude (first such index) is
// non-negative. Fixes the sign ambiguity so runs and routes agree.
void normalize_column_signs(Matrix& v) {
    for (int c = 0; c < v.cols; ++c) {
        int arg = 0;
        double best = -1.0;
        for (int r = 0; r < v.rows; ++r) {
            const double mag = std::abs(v.at(r, c));
            if (mag > best) {
                best = mag;
                arg = r;
            }
        }
        if (v.at(arg, c) < 0.0)
            for (int r = 0; r < v.rows; ++r)
                v.at(r, c) = -v.at(r, c);
    }
}

void sort_eigenpairs_descending(std::vector<double>& values, Matrix& vectors) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] > values[b]; });
    std::vector<double> sorted_values(values.size());
    Matrix sorted_vectors(vectors.rows, vectors.cols);
    for (int c = 0; c < n; ++c) {
        sorted_values[c] = values[order[c]];
        for (int r = 0; r < vectors.rows; ++r)
            sorted_vectors.at(r, c) = vectors.at(r, order[c]);
    }
    values = std::move(sorted_values);
    vectors = std::move(sorted_vectors);
}

} // namespace

std::vector<double> center(std::span<const double> v, CenteringMode mode,
                           std::span<const double> global_mean) {
    std::vector<double> out(v.begin(), v.end());
    if (mode == CenteringMode::per_image_scalar) {
        double mean = 0.0;
        for (double x : v)
            mean += x;
        mean /= static_cast<double>(v.size());
        for (double& x : out)
            x -= mean;
    } else {
        if (global_mean.size() != v.size())
            throw DataError("center: global mean length does not match vector length");
        for (size_t i = 0; i < out.size(); ++i)
            out[i] -= global_mean[i];
    }
    return out;
}

SymmetricEigenResult eig_symmetric(const Matrix& input) {
    if (input.rows != input.cols)
        throw DataError("eig_symmetric: matrix is not square");
    const int n = input.rows;
    const double scale = frobenius_norm(input);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(input.at(i, j) - input.at(j, i)) > kSymmetryTol * (scale > 0.0 ? scale : 1.0))
                throw DataError("eig_symmetric: matrix is not symmetric");

    Matrix a = input;
    Matrix v = Matrix::identity(n);
    const double off_tol = kOffDiagTol * scale;

    auto max_off_diagonal = [&]() {
        double m = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                m = std::max(m, std::abs(a.at(p, q)));
        return m;
    };

    int sweep = 0;
    while (max_off_diagonal() > off_tol) {
        if (++sweep > kMaxSweeps)
            throw NumericError("eig_symmetric: no convergence after " +
                               std::to_string(kMaxSweeps) + " sweeps");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::abs(apq) <= off_tol)
                    continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a.at(p, p), aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a.at(r, p), arq = a.at(r, q);
                        a.at(r, p) = arp - s * (arq + tau * arp);
                        a.at(p, r) = a.at(r, p);
                        a.at(r, q) = arq + s * (arp - tau * arq);
                        a.at(q, r) = a.at(r, q);
                    }
                    const double vrp = v.at(r, p), vrq = v.at(r, q);
                    v.at(r, p) = vrp - s * (vrq + tau * vrp);
                    v.at(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    SymmetricEigenResult result;
    result.eigenvalues.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        result.eigenvalues[i] = a.at(i, i);
    result.eigenvectors = std::move(v);
    sort_eigenpairs_descending(result.eigenvalues, result.eigenvectors);
    normalize_column_signs(result.eigenvectors);
    return result;
}

EigenModel train_eigenspace(const std::vector<FeatureVector>& features,
                            CenteringMode mode, double eigen_threshold,
                            CovarianceRoute route) {
    const int m = static_cast<int>(features.size());
    if (m < 2)
        throw DataError("train_eigenspace: need at least 2 feature vectors");
    const int dim = static_cast<int>(features[0].values.size());
    if (dim < 1)
        throw DataError("train_eigenspace: empty feature vectors");
    for (const FeatureVector& f : features)
        if (static_cast<int>(f.values.size()) != dim)
            throw DataError("train_eigenspace: inconsistent feature lengths");
    if (eigen_threshold < 0.0)
        throw UsageError("train_eigenspace: eigen threshold must be >= 0");

    EigenModel model;
    model.dim = dim;
    model.centering_mode = mode;
    if (mode == CenteringMode::global_mean_vector) {
        model.global_mean.assign(static_cast<size_t>(dim), 0.0);
        for (const FeatureVector& f : features)
            for (int i = 0; i < dim; ++i)
                model.global_mean[i] += f.values[i];
        for (double& x : model.global_mean)
            x /= static_cast<double>(m);
    }

    // data matrix Q: centered vectors side by side (D x M)
    Matrix q(dim, m);
    for (int c = 0; c < m; ++c) {
        const auto centered = center(features[c].values, mode, model.global_mean);
        for (int r = 0; r < dim; ++r)
            q.at(r, c) = centered[r];
    }

    if (route == CovarianceRoute::auto_select)
        route = (dim <= m) ? CovarianceRoute::direct : CovarianceRoute::gram;

    std::vector<double> eigenvalues;
    Matrix vectors;
    if (route == CovarianceRoute::direct) {
        const SymmetricEigenResult eig = eig_symmetric(matmul(q, transpose(q)));
        const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues[0];
        if (lambda_max <= 0.0)
            throw NumericError("train_eigenspace: no positive eigenvalue (features identical?)");
        int keep = 0;
        while (keep < static_cast<int>(eig.eigenvalues.size()) &&
               eig.eigenvalues[keep] > eigen_threshold * lambda_max)
            ++keep;
        eigenvalues.assign(eig.eigenvalues.begin(), eig.eigenvalues.begin() + keep);
        vectors = Matrix(dim, keep);
        for (int c = 0; c < keep; ++c)
            for (int r = 0; r < dim; ++r)
                vectors.at(r, c) = eig.eigenvectors.at(r, c);
    } else {
        // small-sample route: QQ^T and Q^TQ share their nonzero spectrum and
        // u -> Qu / ||Qu|| maps Gram eigenvectors onto covariance ones
        const SymmetricEigenResult eig = eig_symmetric(matmul(transpose(q), q));
        const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues[0];
        if (lambda_max <= 0.0)
            throw NumericError("train_eigenspace: no positive eigenvalue (features identical?)");
        int keep = 0;
        while (keep < static_cast<int>(eig.eigenvalues.size()) &&
               eig.eigenvalues[keep] > eigen_threshold * lambda_max)
            ++keep;
        eigenvalues.assign(eig.eigenvalues.begin(), eig.eigenvalues.begin() + keep);
        vectors = Matrix(dim, keep);
        for (int c = 0; c < keep; ++c) {
            double norm_sq = 0.0;
            std::vector<double> mapped(static_cast<size_t>(dim), 0.0);
            for (int r = 0; r < dim; ++r) {
                double sum = 0.0;
                for (int i = 0; i < m; ++i)
                    sum += q.at(r, i) * eig.eigenvectors.at(i, c);
                mapped[r] = sum;
                norm_sq += sum * sum;
            }
            const double inv_norm = 1.0 / std::sqrt(norm_sq);
            for (int r = 0; r < dim; ++r)
                vectors.at(r, c) = mapped[r] * inv_norm;
        }
        normalize_column_signs(vectors);
    }

    model.eigenvalues = std::move(eigenvalues);
    model.eigenvectors = std::move(vectors);

    // gallery: every centered training vector projected into the eigenspace
    model.gallery.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        EigenModel::GalleryEntry entry;
        entry.label = features[i].label;
        entry.coords.resize(static_cast<size_t>(model.k()));
        for (int c = 0; c < model.k(); ++c) {
            double dot = 0.0;
            for (int r = 0; r < dim; ++r)
                dot += model.eigenvectors.at(r, c) * q.at(r, i);
            entry.coords[c] = dot;
        }
        model.gallery.push_back(std::move(entry));
    }
    return model;
}

std::vector<double> project(const EigenModel& model, const FeatureVector& v) {
    if (static_cast<int>(v.values.size()) != model.dim)
        throw DataError("project: feature length does not match model dimension");
    const auto centered = center(v.values, model.centering_mode, model.global_mean);
    std::vector<double> coords(static_cast<size_t>(model.k()), 0.0);
    for (int c = 0; c < model.k(); ++c) {
        double dot = 0.0;
        for (int r = 0; r < model.dim; ++r)
            dot += model.eigenvectors.at(r, c) * centered[r];
        coords[c] = dot;
    }
    return coords;
}

} // namespace sketchmatch
