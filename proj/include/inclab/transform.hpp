#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "inclab/geom.hpp"

namespace inclab {

/// The fixed axis lambda (the z-axis) and the fixed plane pi (x = 1). Every
/// line that meets both is encoded by the star coordinates below; moving the
/// data into position is genericize's job, the frame itself never changes.
Line3 lambda_axis(const PrimeField& field);
Plane3 pi_plane(const PrimeField& field);

/// Star coordinates (a, b, c) of a line meeting lambda at (0,0,a) and pi at
/// (1,b,c). Every (a,b,c) encodes exactly one such line.
struct StarCoords {
    Fe a, b, c;

    friend bool operator==(const StarCoords&, const StarCoords&) = default;
    friend auto operator<=>(const StarCoords&, const StarCoords&) = default;
};

/// Star coordinates of a line; the line must meet lambda and pi in single
/// affine points. Throws NoPiIntersection / NoLambdaIntersection otherwise.
StarCoords star(const Line3& l);

/// The line through (0,0,a) and (1,b,c); inverse of star.
Line3 unstar(const StarCoords& s);

/// Image of a point p off the yz-plane: the line {(t, y0, u*t + v)} in star
/// space with y0 = p_y/p_x, u = (p_x - 1)/p_x, v = p_z/p_x, which encodes the
/// pencil of lines through p that meet lambda. Throws PointOnYZPlane.
Line3 phi(const Point3& p);

/// Image of a plane q with nonzero z-coefficient: the line {(x0, t, u*t + v)}
/// in star space with x0 = -d/c, u = -b/c, v = -(a + d)/c, which encodes the
/// pencil of lines inside q through q's meeting point with lambda. Throws
/// PlaneDegenerateForPsi when c = 0 (q contains lambda or misses it).
Line3 psi(const Plane3& q);

/// Brute-force star coordinates of every line through p that meets lambda and
/// pi. O(p) in the generic case and O(p^2) for p on lambda; independent test
/// oracle for phi, not a production path.
std::set<StarCoords> pencil_oracle_point(const Point3& p);

/// An instance moved into generic position: no point on the yz-plane, every
/// plane with nonzero z-coefficient, phi images pairwise disjoint, psi images
/// pairwise disjoint.
struct GenericInstance {
    std::vector<Point3> points;
    std::vector<Plane3> planes;
    AffineMap map_used;
};

/// Resample random invertible affine maps until the four generic-position
/// invariants hold; incidences are preserved exactly. Throws
/// GenericPositionFailure when max_retries draws were not enough -- the field
/// is too small relative to the instance.
GenericInstance genericize(const std::vector<Point3>& points, const std::vector<Plane3>& planes,
                           SplitMix64& rng, int max_retries = 100);

/// True when the mapped instance satisfies all four invariants; exposed for
/// tests and diagnostics.
bool is_generic(const std::vector<Point3>& points, const std::vector<Plane3>& planes);

}  // namespace inclab
