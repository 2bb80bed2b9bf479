#include "yanglab/matrix.hpp"

#include <algorithm>

namespace yanglab {

Matrix operator_matrix(const Module& m, const GeneratorSymbol& gen,
                       const Rational& source_weight, int window) {
    if (window < 1) throw window_error("window must be >= 1");
    Matrix out;
    out.col_labels = weight_space_basis(m, source_weight, window);
    Rational target_weight = source_weight + Rational(gen.weight_shift());
    out.row_labels = weight_space_basis(m, target_weight, window);
    out.entries.assign(out.rows() * out.cols(), QuadScalar(0));

    for (size_t c = 0; c < out.cols(); ++c) {
        WeightVector image = apply_generator(m, gen, out.col_labels[c]);
        for (const auto& [idx, coeff] : image.terms()) {
            auto it = std::lower_bound(out.row_labels.begin(), out.row_labels.end(), idx);
            if (it == out.row_labels.end() || *it != idx)
                throw window_error("window too small: image of " + out.col_labels[c].str() +
                                   " under " + gen.str() + " leaves the window");
            out.at(static_cast<size_t>(it - out.row_labels.begin()), c) = coeff;
        }
    }
    return out;
}

namespace {

WeightVector normalized_vector(const std::vector<BasisIndex>& labels,
                               const QuadScalar& x, const QuadScalar& y) {
    // scale so the last nonzero labeled coordinate is 1
    QuadScalar scale = y.is_zero() ? x.inverse() : y.inverse();
    WeightVector v;
    v.add_term(labels[0], x * scale);
    v.add_term(labels[1], y * scale);
    return v;
}

void push_eigen(std::vector<EigenPair>& out, const Matrix& m, const QuadScalar& lambda) {
    const QuadScalar& a = m.at(0, 0);
    const QuadScalar& b = m.at(0, 1);
    const QuadScalar& c = m.at(1, 0);
    const QuadScalar& d = m.at(1, 1);
    // (b, lambda - a) kills the first row, (lambda - d, c) the second
    QuadScalar x = b, y = lambda - a;
    if (x.is_zero() && y.is_zero()) {
        x = lambda - d;
        y = c;
    }
    if (x.is_zero() && y.is_zero()) return;  // scalar matrix, handled by caller
    out.push_back({lambda, normalized_vector(m.row_labels, x, y)});
}

} // namespace

std::vector<EigenPair> h1_eigenvectors(const Matrix& mat) {
    if (mat.rows() != mat.cols() || mat.rows() < 1 || mat.rows() > 2)
        throw validation_error("eigen analysis supports 1x1 and 2x2 matrices only");

    std::vector<EigenPair> out;
    if (mat.rows() == 1) {
        out.push_back({mat.at(0, 0), WeightVector::unit(mat.row_labels[0])});
        return out;
    }

    QuadScalar tr = mat.at(0, 0) + mat.at(1, 1);
    QuadScalar det = mat.at(0, 0) * mat.at(1, 1) - mat.at(0, 1) * mat.at(1, 0);
    auto disc_root = sqrt_in_field(tr * tr - det * QuadScalar(4));
    if (!disc_root) return out;

    QuadScalar half(Rational(1, 2));
    QuadScalar l1 = (tr - *disc_root) * half;
    QuadScalar l2 = (tr + *disc_root) * half;

    if (l1 == l2) {
        if (mat.at(0, 1).is_zero() && mat.at(1, 0).is_zero()) {
            // scalar matrix: full eigenspace, report the unit vectors
            out.push_back({l1, WeightVector::unit(mat.row_labels[0])});
            out.push_back({l1, WeightVector::unit(mat.row_labels[1])});
        } else {
            push_eigen(out, mat, l1);
        }
        return out;
    }

    push_eigen(out, mat, l1);
    push_eigen(out, mat, l2);
    std::sort(out.begin(), out.end(),
              [](const EigenPair& p, const EigenPair& q) { return p.value < q.value; });
    return out;
}

} // namespace yanglab
