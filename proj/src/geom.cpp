#include "inclab/geom.hpp"

#include <vector>

#include "inclab/linalg.hpp"

namespace inclab {

Plane3::Plane3(Fe a, Fe b, Fe c, Fe d) : a_(a), b_(b), c_(c), d_(d) {
    if (a_.is_zero() && b_.is_zero() && c_.is_zero())
        throw PreconditionError("plane normal is zero");
    Fe lead = !a_.is_zero() ? a_ : (!b_.is_zero() ? b_ : c_);
    Fe s = inv(lead);
    a_ = a_ * s;
    b_ = b_ * s;
    c_ = c_ * s;
    d_ = d_ * s;
}

Line3::Line3(Point3 base, Vec3 dir) : base_(base), dir_(dir) {
    if (dir_.is_zero()) throw PreconditionError("line direction is zero");
    Fe lead = !dir_.x.is_zero() ? dir_.x : (!dir_.y.is_zero() ? dir_.y : dir_.z);
    Fe s = inv(lead);
    dir_ = s * dir_;
    Fe t = !dir_.x.is_zero() ? base_.x : (!dir_.y.is_zero() ? base_.y : base_.z);
    base_ = base_ + (-t) * dir_;
}

std::vector<Point3> Line3::points() const {
    PrimeField field = base_.x.field();
    std::vector<Point3> pts;
    pts.reserve(field.modulus());
    for (std::uint32_t t = 0; t < field.modulus(); ++t) pts.push_back(at(field.element(t)));
    return pts;
}

namespace {

Fe det3(const std::array<Fe, 9>& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

// Inverse by adjugate over the field.
std::array<Fe, 9> inv3(const std::array<Fe, 9>& m) {
    Fe d = det3(m);
    Fe s = inv(d);
    std::array<Fe, 9> r = {
        m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8], m[1] * m[5] - m[2] * m[4],
        m[5] * m[6] - m[3] * m[8], m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
        m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7], m[0] * m[4] - m[1] * m[3]};
    for (Fe& v : r) v = v * s;
    return r;
}

Vec3 mat_vec(const std::array<Fe, 9>& m, const Vec3& v) {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Vec3 mat_transpose_vec(const std::array<Fe, 9>& m, const Vec3& v) {
    return {m[0] * v.x + m[3] * v.y + m[6] * v.z, m[1] * v.x + m[4] * v.y + m[7] * v.z,
            m[2] * v.x + m[5] * v.y + m[8] * v.z};
}

}  // namespace

AffineMap::AffineMap(const std::array<Fe, 9>& linear, const Vec3& shift)
    : m_(linear), shift_(shift) {
    if (det3(m_).is_zero()) throw PreconditionError("affine map is singular");
}

AffineMap AffineMap::identity(const PrimeField& field) {
    Fe z = field.zero(), o = field.one();
    return AffineMap({o, z, z, z, o, z, z, z, o}, {z, z, z});
}

Point3 AffineMap::apply(const Point3& p) const {
    Vec3 image = mat_vec(m_, p.as_vec()) + shift_;
    return {image.x, image.y, image.z};
}

Vec3 AffineMap::apply_linear(const Vec3& v) const { return mat_vec(m_, v); }

Line3 AffineMap::apply(const Line3& l) const {
    return Line3(apply(l.base()), apply_linear(l.dir()));
}

Plane3 AffineMap::apply(const Plane3& q) const {
    Vec3 n = mat_transpose_vec(inv3(m_), q.normal());
    Fe d = q.d() - dot(n, shift_);
    return Plane3(n.x, n.y, n.z, d);
}

bool point_on_plane(const Point3& p, const Plane3& q) {
    return (q.a() * p.x + q.b() * p.y + q.c() * p.z + q.d()).is_zero();
}

bool point_on_line(const Point3& p, const Line3& l) {
    return cross(p - l.base(), l.dir()).is_zero();
}

bool line_in_plane(const Line3& l, const Plane3& q) {
    return point_on_plane(l.base(), q) && dot(q.normal(), l.dir()).is_zero();
}

std::optional<Point3> line_line_intersection(const Line3& l1, const Line3& l2) {
    if (l1 == l2) throw EqualLines("lines are equal");
    PrimeField field = l1.base().x.field();
    // base1 + t*dir1 = base2 + u*dir2, three equations in (t, u)
    FeMat m(3, 2, field);
    Vec3 d1 = l1.dir(), d2 = l2.dir();
    Vec3 rhs = l2.base() - l1.base();
    m.set(0, 0, d1.x);
    m.set(1, 0, d1.y);
    m.set(2, 0, d1.z);
    m.set(0, 1, -d2.x);
    m.set(1, 1, -d2.y);
    m.set(2, 1, -d2.z);
    LinearSolution sol = solve(m, {rhs.x, rhs.y, rhs.z});
    if (sol.kind == LinearSolution::None) return std::nullopt;
    if (sol.kind == LinearSolution::Many)
        throw InternalCheckFailure("distinct canonical lines gave an underdetermined system");
    return l1.at(sol.x[0]);
}

Line3 line_through(const Point3& p1, const Point3& p2) {
    if (p1 == p2) throw EqualPoints("points are equal");
    return Line3(p1, p2 - p1);
}

std::optional<Line3> plane_plane_intersection(const Plane3& q1, const Plane3& q2) {
    if (q1 == q2) throw EqualPlanes("planes are equal");
    Vec3 dir = cross(q1.normal(), q2.normal());
    if (dir.is_zero()) return std::nullopt;  // parallel distinct planes

    // The line crosses the coordinate plane {x_j = 0} for any j with dir_j != 0;
    // fixing that coordinate leaves a 2x2 system whose determinant is +-dir_j.
    std::array<Fe, 3> n1 = {q1.a(), q1.b(), q1.c()};
    std::array<Fe, 3> n2 = {q2.a(), q2.b(), q2.c()};
    std::array<Fe, 3> dirc = {dir.x, dir.y, dir.z};
    int j = !dirc[0].is_zero() ? 0 : (!dirc[1].is_zero() ? 1 : 2);
    int k = j == 0 ? 1 : 0;
    int l = j == 2 ? 1 : 2;

    Fe det = n1[k] * n2[l] - n1[l] * n2[k];
    Fe e = -q1.d(), f = -q2.d();
    Fe vk = (e * n2[l] - n1[l] * f) / det;
    Fe vl = (n1[k] * f - e * n2[k]) / det;

    std::array<Fe, 3> coords = {q1.a().field().zero(), q1.a().field().zero(),
                                q1.a().field().zero()};
    coords[k] = vk;
    coords[l] = vl;
    return Line3({coords[0], coords[1], coords[2]}, dir);
}

std::optional<Plane3> plane_through_lines(const Line3& l1, const Line3& l2) {
    if (l1 == l2) throw EqualLines("lines are equal");
    Vec3 normal = cross(l1.dir(), l2.dir());
    if (normal.is_zero()) {
        // parallel distinct lines: span the direction and the connecting vector
        normal = cross(l1.dir(), l2.base() - l1.base());
    } else if (!line_line_intersection(l1, l2).has_value()) {
        return std::nullopt;  // skew
    }
    Fe d = -dot(normal, l1.base().as_vec());
    return Plane3(normal.x, normal.y, normal.z, d);
}

AffineMap random_invertible_affine(const PrimeField& field, SplitMix64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<Fe, 9> m = {field.sample(rng), field.sample(rng), field.sample(rng),
                               field.sample(rng), field.sample(rng), field.sample(rng),
                               field.sample(rng), field.sample(rng), field.sample(rng)};
        Vec3 shift = {field.sample(rng), field.sample(rng), field.sample(rng)};
        if (det3(m).is_zero()) continue;
        return AffineMap(m, shift);
    }
    throw InternalCheckFailure("could not sample an invertible matrix in 1000 attempts");
}

}  // namespace inclab
