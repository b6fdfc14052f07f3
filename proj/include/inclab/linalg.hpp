#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "inclab/ff.hpp"

namespace inclab {

using FeVec = std::vector<Fe>;

/// Dense row-major matrix over one prime field.
class FeMat {
public:
    FeMat(std::size_t rows, std::size_t cols, const PrimeField& field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Fe& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, Fe v) {
        if (v.modulus() != field_.modulus())
            throw FieldMismatch("matrix entry from a different field");
        data_[r * cols_ + c] = v;
    }

private:
    std::size_t rows_, cols_;
    PrimeField field_;
    std::vector<Fe> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each pivot
/// row in order. Pivoting is deterministic: columns are scanned left to right
/// and the first unused row with a nonzero entry becomes the pivot, so the
/// result (and everything derived from it) is reproducible across runs.
std::vector<std::size_t> rref(FeMat& m);

std::size_t rank(FeMat m);

/// Basis of the right nullspace {v : m v = 0}, one vector per free column in
/// column order, each with a 1 in its free coordinate. Empty when the kernel
/// is trivial.
std::vector<FeVec> nullspace(const FeMat& m);

struct LinearSolution {
    enum Kind { None, Unique, Many } kind;
    FeVec x;  // populated only for Unique
};

/// Exact solve of m x = b.
LinearSolution solve(const FeMat& m, const FeVec& b);

}  // namespace inclab
