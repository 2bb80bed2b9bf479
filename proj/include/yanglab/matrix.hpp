#pragma once

#include <utility>

#include "yanglab/module.hpp"

namespace yanglab {

/// Dense labeled matrix of an operator restricted to a weight space.
/// Entries are row-major; column j holds the image of col_labels[j]
/// expanded over row_labels.
struct Matrix {
    std::vector<BasisIndex> row_labels, col_labels;
    std::vector<QuadScalar> entries;

    size_t rows() const { return row_labels.size(); }
    size_t cols() const { return col_labels.size(); }
    const QuadScalar& at(size_t r, size_t c) const { return entries[r * cols() + c]; }
    QuadScalar& at(size_t r, size_t c) { return entries[r * cols() + c]; }
};

/// Matrix of gen on the source-weight space, windowed. Throws window_error
/// when an image escapes the window.
Matrix operator_matrix(const Module& m, const GeneratorSymbol& gen,
                       const Rational& source_weight, int window);

struct EigenPair {
    QuadScalar value;
    WeightVector vector;  // keyed by the matrix row labels
    bool operator==(const EigenPair&) const = default;
};

/// Exact eigenpairs of a 1x1 or 2x2 matrix over Q(sqrt(D)), via the
/// characteristic quadratic and sqrt_in_field on its discriminant.
/// Empty when the discriminant has no square root in the field.
/// Eigenvectors are scaled so their last nonzero labeled coordinate is 1;
/// pairs are sorted by eigenvalue in the deterministic scalar order.
std::vector<EigenPair> h1_eigenvectors(const Matrix& mat);

} // namespace yanglab
