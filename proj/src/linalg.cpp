#include "inclab/linalg.hpp"

#include <algorithm>

namespace inclab {

std::vector<std::size_t> rref(FeMat& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
        }
        Fe scale = inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * scale;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Fe factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

std::size_t rank(FeMat m) { return rref(m).size(); }

std::vector<FeVec> nullspace(const FeMat& m) {
    FeMat r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<FeVec> basis;
    const Fe zero = m.field().zero();
    const Fe one = m.field().one();
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        FeVec v(m.cols(), zero);
        v[free_col] = one;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            // Pivot row i reads x[pivots[i]] + sum over free columns = 0.
            v[pivots[i]] = -r.at(i, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve(const FeMat& m, const FeVec& b) {
    if (b.size() != m.rows()) throw InternalCheckFailure("solve: rhs size mismatch");
    FeMat aug(m.rows(), m.cols() + 1, m.field());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.set(r, m.cols(), b[r]);
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return {LinearSolution::None, {}};
    if (pivots.size() < m.cols()) return {LinearSolution::Many, {}};
    FeVec x(m.cols(), m.field().zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return {LinearSolution::Unique, std::move(x)};
}

}  // namespace inclab
