#include "sketchmatch/matrix.hpp"

#include <cmath>

#include "sketchmatch/error.hpp"

namespace sketchmatch {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
        throw DataError("matmul: inner dimensions disagree");
    Matrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0)
                continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            out.at(j, i) = a.at(i, j);
    return out;
}

double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (double v : a.data)
        sum += v * v;
    return std::sqrt(sum);
}

} // namespace sketchmatch
