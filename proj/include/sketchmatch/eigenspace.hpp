#pragma once

#include <span>
#include <string>
#include <vector>

#include "sketchmatch/matrix.hpp"
#include "sketchmatch/modality.hpp"

namespace sketchmatch {

// A flattened new-dimension image with its identity label.
struct FeatureVector {
    std::vector<double> values;
    std::string label;
};

// per_image_scalar subtracts the scalar mean of the vector's own entries;
// global_mean_vector subtracts the dataset mean vector component-wise.
enum class CenteringMode { per_image_scalar, global_mean_vector };

// Which covariance factorization to use: the D x D matrix directly, or the
// M x M Gram matrix with eigenvectors mapped back to D-space. auto_select
// picks direct when D <= M. Both routes must agree on the retained spectrum.
enum class CovarianceRoute { auto_select, direct, gram };

struct SymmetricEigenResult {
    std::vector<double> eigenvalues; // descending
    Matrix eigenvectors;             // columns, orthonormal, sign-normalized
};

struct EigenModel {
    struct GalleryEntry {
        std::string label;
        std::vector<double> coords; // length k()
    };

    int dim = 0; // feature length D
    CenteringMode centering_mode = CenteringMode::per_image_scalar;
    std::vector<double> global_mean; // length dim iff global_mean_vector mode
    std::vector<double> eigenvalues; // descending, all positive
    Matrix eigenvectors;             // dim x k, orthonormal columns
    std::vector<GalleryEntry> gallery;
    OffsetI offset; // sketch offset carried for query-time transforms

    int k() const { return static_cast<int>(eigenvalues.size()); }
};

// Centers a vector per the chosen mode. global_mean is required (and must
// match v's length) only in global_mean_vector mode.
std::vector<double> center(std::span<const double> v, CenteringMode mode,
                           std::span<const double> global_mean = {});

// Full spectral decomposition of a symmetric matrix by cyclic Jacobi
// rotations. Converged when every off-diagonal magnitude drops below
// 1e-12 * ||A||_F; throws NumericError after 100 sweeps without that, or
// DataError when the input is not symmetric within 1e-10 relative.
// Eigenpairs are sorted by eigenvalue descending; each eigenvector's entry
// of largest magnitude is made non-negative.
SymmetricEigenResult eig_symmetric(const Matrix& a);

// PCA training: center the features, factor the covariance (directly or via
// the Gram matrix), retain eigenpairs with lambda > eigen_threshold *
// lambda_max, and project every centered training vector into the gallery.
EigenModel train_eigenspace(const std::vector<FeatureVector>& features,
                            CenteringMode mode, double eigen_threshold,
                            CovarianceRoute route = CovarianceRoute::auto_select);

// Centers v per the model's mode and returns V^T * centered(v).
std::vector<double> project(const EigenModel& model, const FeatureVector& v);

} // namespace sketchmatch
