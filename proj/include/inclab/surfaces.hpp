#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "inclab/geom.hpp"

namespace inclab {

/// A degree-two trivariate polynomial as its 10 coefficients, ordered
/// (x^2, y^2, z^2, xy, xz, yz, x, y, z, 1). Canonical form: the first nonzero
/// coefficient is scaled to 1. Degenerate shapes (a union of two planes, a
/// double plane, a polynomial of lower effective degree) are allowed.
class Quadric {
public:
    explicit Quadric(const std::array<Fe, 10>& coeffs);

    const std::array<Fe, 10>& coeffs() const { return c_; }
    Fe eval(const Point3& p) const;

    friend bool operator==(const Quadric&, const Quadric&) = default;
    friend auto operator<=>(const Quadric&, const Quadric&) = default;

private:
    std::array<Fe, 10> c_;
};

/// A trivariate polynomial surface of exact degree `degree` over the monomial
/// basis of total degree <= degree in graded-lexicographic order (blocks of
/// descending total degree; within a block, exponent tuples (i,j,k) with
/// x > y > z in descending lexicographic order). Canonical form: first
/// nonzero coefficient scaled to 1; the top-degree block is never all zero.
class Surface {
public:
    Surface(int degree, std::vector<Fe> coeffs);

    int degree() const { return degree_; }
    const std::vector<Fe>& coeffs() const { return c_; }
    Fe eval(const Point3& p) const;

    /// Exponent tuples of the basis for the given degree, in coefficient order.
    static std::vector<std::array<int, 3>> monomials(int degree);
    /// Basis size C(degree + 3, 3).
    static std::size_t basis_size(int degree);

private:
    int degree_;
    std::vector<Fe> c_;
};

/// True iff the surface vanishes at deg+1 distinct points of the line (hence
/// on all of it). Throws FieldTooSmallForDegree when p < deg+1.
bool line_in_surface(const Line3& l, const Quadric& s);
bool line_in_surface(const Line3& l, const Surface& s);

/// A quadric containing all three lines (they always exist: 9 interpolation
/// conditions against 10 coefficients). Deterministic: the canonical nullspace
/// basis vector of the 9x10 system.
Quadric quadric_through_lines(const Line3& l1, const Line3& l2, const Line3& l3);

/// The sub-sequence of lines contained in the quadric, input order preserved.
std::vector<Line3> lines_on_quadric(const Quadric& s, const std::vector<Line3>& lines);

/// For every quadric spanned by a triple of L u M whose interpolation system
/// has a one-dimensional kernel, and every plane spanned by a coplanar pair,
/// the pair (#L-lines contained, #M-lines contained). Sorted and deduplicated.
std::vector<std::pair<std::size_t, std::size_t>> quadric_richness(const std::vector<Line3>& L,
                                                                  const std::vector<Line3>& M);

/// The smallest-degree surface vanishing on every line of L, found by growing
/// the degree until the interpolation system has a nontrivial kernel. The
/// degree never exceeds ceil(sqrt(6|L|)) + 1 by dimension count.
Surface min_degree_surface(const std::vector<Line3>& L);

}  // namespace inclab
