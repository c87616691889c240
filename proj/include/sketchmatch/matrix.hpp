#pragma once

#include <vector>

namespace sketchmatch {

// Dense row-major matrix, just large enough for the eigenspace math
// (dimensions here are tens, not thousands).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data; // row-major, size rows*cols

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1.0;
        return m;
    }

    double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
double frobenius_norm(const Matrix& a);

} // namespace sketchmatch
