#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "inclab/ff.hpp"

namespace inclab {

struct Vec3 {
    Fe x, y, z;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(Fe s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    friend Fe dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    friend Vec3 cross(const Vec3& a, const Vec3& b) {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }

    friend bool operator==(const Vec3&, const Vec3&) = default;
    friend auto operator<=>(const Vec3&, const Vec3&) = default;
};

struct Point3 {
    Fe x, y, z;

    Vec3 as_vec() const { return {x, y, z}; }
    friend Vec3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Point3 operator+(const Point3& a, const Vec3& v) { return {a.x + v.x, a.y + v.y, a.z + v.z}; }

    friend bool operator==(const Point3&, const Point3&) = default;
    friend auto operator<=>(const Point3&, const Point3&) = default;
};

/// The locus a*x + b*y + c*z + d = 0. Canonical form: the first nonzero
/// coefficient among (a, b, c) is scaled to 1, so equal loci compare equal.
class Plane3 {
public:
    Plane3(Fe a, Fe b, Fe c, Fe d);

    Fe a() const { return a_; }
    Fe b() const { return b_; }
    Fe c() const { return c_; }
    Fe d() const { return d_; }
    Vec3 normal() const { return {a_, b_, c_}; }

    friend bool operator==(const Plane3&, const Plane3&) = default;
    friend auto operator<=>(const Plane3&, const Plane3&) = default;

private:
    Fe a_, b_, c_, d_;
};

/// An affine line {base + t*dir : t in F_p}. Canonical form: the first nonzero
/// coordinate of dir is scaled to 1 and base is slid along dir until the
/// coordinate at that position is 0, so equal loci compare equal.
class Line3 {
public:
    Line3(Point3 base, Vec3 dir);

    const Point3& base() const { return base_; }
    const Vec3& dir() const { return dir_; }
    Point3 at(Fe t) const { return base_ + t * dir_; }

    /// All p points of the line; intended for small fields (tests, oracles).
    std::vector<Point3> points() const;

    friend bool operator==(const Line3&, const Line3&) = default;
    friend auto operator<=>(const Line3&, const Line3&) = default;

private:
    Point3 base_;
    Vec3 dir_;
};

/// x -> linear*x + shift with invertible linear part.
class AffineMap {
public:
    AffineMap(const std::array<Fe, 9>& linear, const Vec3& shift);

    static AffineMap identity(const PrimeField& field);

    Point3 apply(const Point3& p) const;
    Vec3 apply_linear(const Vec3& v) const;
    Line3 apply(const Line3& l) const;
    /// Planes transform by the inverse-transpose rule, preserving incidence.
    Plane3 apply(const Plane3& q) const;

    const std::array<Fe, 9>& linear() const { return m_; }
    const Vec3& shift() const { return shift_; }

private:
    std::array<Fe, 9> m_;  // row-major
    Vec3 shift_;
};

bool point_on_plane(const Point3& p, const Plane3& q);
bool point_on_line(const Point3& p, const Line3& l);
bool line_in_plane(const Line3& l, const Plane3& q);

/// The unique common point of two distinct lines, or nothing when they are
/// parallel or skew. Equal lines are rejected with EqualLines.
std::optional<Point3> line_line_intersection(const Line3& l1, const Line3& l2);

Line3 line_through(const Point3& p1, const Point3& p2);

/// The common line of two distinct planes, or nothing when they are parallel.
std::optional<Line3> plane_plane_intersection(const Plane3& q1, const Plane3& q2);

/// The plane spanned by two distinct coplanar (intersecting or parallel)
/// lines; nothing for skew lines. Equal lines are rejected with EqualLines.
std::optional<Plane3> plane_through_lines(const Line3& l1, const Line3& l2);

/// Uniform invertible affine map; resamples singular draws (deterministic for
/// a fixed rng state).
AffineMap random_invertible_affine(const PrimeField& field, SplitMix64& rng);

}  // namespace inclab
