#include "inclab/transform.hpp"

namespace inclab {

Line3 lambda_axis(const PrimeField& field) {
    Fe z = field.zero(), o = field.one();
    return Line3({z, z, z}, {z, z, o});
}

Plane3 pi_plane(const PrimeField& field) {
    Fe z = field.zero(), o = field.one();
    return Plane3(o, z, z, -o);
}

StarCoords star(const Line3& l) {
    PrimeField field = l.base().x.field();
    Fe one = field.one();
    // pi first: a line with constant x never has a single pi point, and the
    // z-axis itself falls in this bucket.
    if (l.dir().x.is_zero())
        throw NoPiIntersection("line has constant x-coordinate, no single intersection with pi");
    Fe t_pi = (one - l.base().x) / l.dir().x;
    Point3 on_pi = l.at(t_pi);
    // lambda: with dir.x != 0 the x = 0 parameter is unique; the y-coordinate
    // must vanish there too.
    Fe t_lambda = -l.base().x / l.dir().x;
    Point3 on_lambda = l.at(t_lambda);
    if (!on_lambda.y.is_zero()) throw NoLambdaIntersection("line misses the z-axis");
    return {on_lambda.z, on_pi.y, on_pi.z};
}

Line3 unstar(const StarCoords& s) {
    PrimeField field = s.a.field();
    Fe zero = field.zero(), one = field.one();
    Point3 on_lambda = {zero, zero, s.a};
    Point3 on_pi = {one, s.b, s.c};
    return line_through(on_lambda, on_pi);
}

Line3 phi(const Point3& p) {
    if (p.x.is_zero()) throw PointOnYZPlane("phi requires a point off the yz-plane");
    Fe px_inv = inv(p.x);
    Fe y0 = p.y * px_inv;
    Fe u = (p.x - p.x.field().one()) * px_inv;
    Fe v = p.z * px_inv;
    PrimeField field = p.x.field();
    return Line3({field.zero(), y0, v}, {field.one(), field.zero(), u});
}

Line3 psi(const Plane3& q) {
    if (q.c().is_zero())
        throw PlaneDegenerateForPsi("plane has zero z-coefficient (contains or misses lambda)");
    Fe c_inv = inv(q.c());
    Fe x0 = -q.d() * c_inv;
    Fe u = -q.b() * c_inv;
    Fe v = -(q.a() + q.d()) * c_inv;
    PrimeField field = q.a().field();
    return Line3({x0, field.zero(), v}, {field.zero(), field.one(), u});
}

std::set<StarCoords> pencil_oracle_point(const Point3& p) {
    PrimeField field = p.x.field();
    Fe zero = field.zero(), one = field.one();
    std::set<StarCoords> out;
    for (std::uint32_t av = 0; av < field.modulus(); ++av) {
        Fe a = field.element(av);
        Point3 vertex = {zero, zero, a};
        if (vertex == p) {
            // p sits on lambda at this vertex: the pencil degenerates to every
            // line through p, so walk the pi points directly.
            for (std::uint32_t bv = 0; bv < field.modulus(); ++bv) {
                for (std::uint32_t cv = 0; cv < field.modulus(); ++cv) {
                    Point3 on_pi = {one, field.element(bv), field.element(cv)};
                    try {
                        out.insert(star(line_through(p, on_pi)));
                    } catch (const PreconditionError&) {
                    }
                }
            }
            continue;
        }
        try {
            out.insert(star(line_through(p, vertex)));
        } catch (const PreconditionError&) {
            // line misses pi (or lambda); not part of the pencil image
        }
    }
    return out;
}

bool is_generic(const std::vector<Point3>& points, const std::vector<Plane3>& planes) {
    if (points.empty() || planes.empty()) return false;
    Line3 lambda = lambda_axis(points.front().x.field());

    for (const Point3& p : points)
        if (p.x.is_zero()) return false;
    for (const Plane3& q : planes)
        if (q.c().is_zero()) return false;

    // phi images pairwise disjoint <=> no connecting line meets lambda
    // (given that no point has x = 0, such a line cannot be lambda itself).
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Line3 l = line_through(points[i], points[j]);
            if (l == lambda || line_line_intersection(l, lambda).has_value()) return false;
        }
    }

    std::vector<Line3> psis;
    psis.reserve(planes.size());
    for (const Plane3& q : planes) psis.push_back(psi(q));
    for (std::size_t i = 0; i < psis.size(); ++i) {
        for (std::size_t j = i + 1; j < psis.size(); ++j) {
            if (psis[i] == psis[j]) return false;
            if (line_line_intersection(psis[i], psis[j]).has_value()) return false;
        }
    }
    return true;
}

GenericInstance genericize(const std::vector<Point3>& points, const std::vector<Plane3>& planes,
                           SplitMix64& rng, int max_retries) {
    if (points.empty() || planes.empty())
        throw PreconditionError("genericize requires nonempty point and plane sets");
    if (std::set<Point3>(points.begin(), points.end()).size() != points.size() ||
        std::set<Plane3>(planes.begin(), planes.end()).size() != planes.size())
        throw PreconditionError("genericize requires deduplicated points and planes");
    PrimeField field = points.front().x.field();
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        AffineMap map = random_invertible_affine(field, rng);
        std::vector<Point3> mapped_points;
        mapped_points.reserve(points.size());
        for (const Point3& p : points) mapped_points.push_back(map.apply(p));
        std::vector<Plane3> mapped_planes;
        mapped_planes.reserve(planes.size());
        for (const Plane3& q : planes) mapped_planes.push_back(map.apply(q));
        if (is_generic(mapped_points, mapped_planes))
            return {std::move(mapped_points), std::move(mapped_planes), map};
    }
    throw GenericPositionFailure("no generic position found in " + std::to_string(max_retries) +
                                 " retries; the field is too small for this instance");
}

}  // namespace inclab
