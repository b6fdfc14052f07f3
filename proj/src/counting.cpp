#include "inclab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "inclab/kernels.hpp"
#include "inclab/transform.hpp"

namespace inclab {

namespace {

// Structure-of-arrays coordinates feeding the counting kernels.
struct PointsSoA {
    std::vector<std::uint32_t> x, y, z;

    explicit PointsSoA(const std::vector<Point3>& pts) {
        x.reserve(pts.size());
        y.reserve(pts.size());
        z.reserve(pts.size());
        for (const Point3& p : pts) {
            x.push_back(p.x.value());
            y.push_back(p.y.value());
            z.push_back(p.z.value());
        }
    }

    kernels::PointsView view() const { return {x.data(), y.data(), z.data(), x.size()}; }
};

kernels::LineEq line_eq(const Line3& l) {
    return {l.base().x.value(), l.base().y.value(), l.base().z.value(),
            l.dir().x.value(),  l.dir().y.value(),  l.dir().z.value()};
}

void require_distinct(const std::vector<Line3>& lines, const char* family) {
    std::set<Line3> seen(lines.begin(), lines.end());
    if (seen.size() != lines.size())
        throw PreconditionError(std::string("duplicate lines within family ") + family);
}

}  // namespace

Instance::Instance(const PrimeField& field, std::vector<Point3> points,
                   std::vector<Plane3> planes)
    : field_(field) {
    std::set<Point3> seen_points;
    for (const Point3& p : points) {
        if (p.x.modulus() != field.modulus() || p.y.modulus() != field.modulus() ||
            p.z.modulus() != field.modulus())
            throw FieldMismatch("point from a different field");
        if (seen_points.insert(p).second) points_.push_back(p);
    }
    std::set<Plane3> seen_planes;
    for (const Plane3& q : planes) {
        if (q.a().modulus() != field.modulus())
            throw FieldMismatch("plane from a different field");
        if (seen_planes.insert(q).second) planes_.push_back(q);
    }
}

std::uint64_t count_incidences(const Instance& inst) {
    PointsSoA soa(inst.points());
    kernels::PointsView view = soa.view();
    std::uint64_t total = 0;
    for (const Plane3& q : inst.planes()) {
        kernels::PlaneEq eq = {q.a().value(), q.b().value(), q.c().value(), q.d().value()};
        total += kernels::plane_zero_count(view, eq, inst.field().modulus());
    }
    return total;
}

std::uint64_t count_line_intersections(const std::vector<Line3>& L, const std::vector<Line3>& M) {
    if (L.empty() || M.empty()) return 0;
    require_distinct(L, "L");
    require_distinct(M, "M");

    std::set<Line3> m_set(M.begin(), M.end());
    std::vector<Line3> shared;  // lines in both families: all their points count
    for (const Line3& l : L)
        if (m_set.count(l)) shared.push_back(l);

    std::set<Point3> crossing_points;
    for (const Line3& l : L) {
        for (const Line3& m : M) {
            if (l == m) continue;
            std::optional<Point3> pt = line_line_intersection(l, m);
            if (pt) crossing_points.insert(*pt);
        }
    }
    if (shared.empty()) return crossing_points.size();

    // |union of shared lines| = p per line, minus the overcount at points
    // where k >= 2 shared lines meet (counted k times, belongs once).
    std::uint64_t p = L.front().base().x.modulus();
    std::uint64_t total = p * shared.size();
    std::set<Point3> meets;
    for (std::size_t i = 0; i < shared.size(); ++i)
        for (std::size_t j = i + 1; j < shared.size(); ++j)
            if (std::optional<Point3> pt = line_line_intersection(shared[i], shared[j]))
                meets.insert(*pt);
    for (const Point3& pt : meets) {
        std::uint64_t k = 0;
        for (const Line3& l : shared) k += point_on_line(pt, l);
        total -= k - 1;
    }
    for (const Point3& pt : crossing_points) {
        bool on_shared = false;
        for (const Line3& l : shared) on_shared = on_shared || point_on_line(pt, l);
        if (!on_shared) ++total;
    }
    return total;
}

std::vector<RichLineStat> rich_line_stats(const Instance& inst) {
    std::set<Line3> candidates;
    const std::vector<Point3>& pts = inst.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            candidates.insert(line_through(pts[i], pts[j]));
    const std::vector<Plane3>& pls = inst.planes();
    for (std::size_t i = 0; i < pls.size(); ++i)
        for (std::size_t j = i + 1; j < pls.size(); ++j)
            if (std::optional<Line3> l = plane_plane_intersection(pls[i], pls[j]))
                candidates.insert(*l);

    PointsSoA soa(pts);
    kernels::PointsView view = soa.view();
    std::vector<RichLineStat> stats;
    stats.reserve(candidates.size());
    for (const Line3& l : candidates) {
        std::uint64_t s = kernels::line_zero_count(view, line_eq(l), inst.field().modulus());
        std::uint64_t t = 0;
        for (const Plane3& q : pls) t += line_in_plane(l, q);
        stats.push_back({l, s, t});
    }
    return stats;
}

std::uint64_t max_collinear(const Instance& inst) {
    if (inst.points().size() <= 1) return inst.points().size();
    std::set<Line3> candidates;
    const std::vector<Point3>& pts = inst.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            candidates.insert(line_through(pts[i], pts[j]));
    PointsSoA soa(pts);
    kernels::PointsView view = soa.view();
    std::uint64_t best = 0;
    for (const Line3& l : candidates)
        best = std::max(best, std::uint64_t(kernels::line_zero_count(view, line_eq(l),
                                                                     inst.field().modulus())));
    return best;
}

Thresholds best_thresholds_pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& stats,
                                 std::uint64_t num_points, std::uint64_t num_planes) {
    if (num_points > num_planes)
        throw SizeOrderViolation("the first family (" + std::to_string(num_points) +
                                 ") exceeds the second (" + std::to_string(num_planes) +
                                 "); the bound assumes the smaller family comes first");
    std::uint64_t s_hi = 2;
    for (const auto& [sc, tc] : stats) s_hi = std::max(s_hi, sc + 1);

    bool have = false;
    std::uint64_t best_s = 2, best_t = 2, best_cost = 0;
    for (std::uint64_t s = 2; s <= s_hi; ++s) {
        // Valid (s, t) needs t above every t_count whose stat has s_count >= s.
        std::uint64_t t = 2;
        for (const auto& [sc, tc] : stats)
            if (sc >= s) t = std::max(t, tc + 1);
        std::uint64_t cost = t * num_points + s * num_planes;
        if (!have || cost < best_cost) {
            have = true;
            best_cost = cost;
            best_s = s;
            best_t = t;
        }
    }
    double rhs = std::sqrt(double(num_points)) * double(num_planes) +
                 double(best_t) * double(num_points) + double(best_s) * double(num_planes);
    return {best_s, best_t, rhs};
}

Thresholds best_thresholds(const std::vector<RichLineStat>& stats, std::uint64_t num_points,
                           std::uint64_t num_planes) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(stats.size());
    for (const RichLineStat& st : stats) pairs.push_back({st.s_count, st.t_count});
    return best_thresholds_pairs(pairs, num_points, num_planes);
}

IncidenceReport bound_report(const Instance& inst) {
    std::uint64_t num_points = inst.points().size();
    std::uint64_t num_planes = inst.planes().size();
    if (num_points > num_planes)
        throw SizeOrderViolation("|P| = " + std::to_string(num_points) + " exceeds |Q| = " +
                                 std::to_string(num_planes));

    IncidenceReport rep;
    std::uint64_t p = inst.field().modulus();
    if (num_points > p * p)
        rep.warnings.push_back("|P| exceeds p^2; the positive-characteristic size hypothesis "
                               "does not hold for this instance");

    rep.incidences = count_incidences(inst);
    rep.intersections = std::nullopt;
    rep.max_collinear = max_collinear(inst);
    Thresholds th = best_thresholds(rich_line_stats(inst), num_points, num_planes);
    rep.best_s = th.s;
    rep.best_t = th.t;
    rep.rhs = th.rhs;
    rep.ratio = th.rhs > 0.0 ? double(rep.incidences) / th.rhs : 0.0;
    return rep;
}

IncidenceReport report(const Instance& inst, SplitMix64& rng, int max_retries) {
    IncidenceReport rep = bound_report(inst);

    if (inst.points().empty() || inst.planes().empty()) {
        rep.intersections = 0;
    } else {
        GenericInstance generic = genericize(inst.points(), inst.planes(), rng, max_retries);
        std::vector<Line3> L, M;
        L.reserve(generic.points.size());
        M.reserve(generic.planes.size());
        for (const Point3& pt : generic.points) L.push_back(phi(pt));
        for (const Plane3& q : generic.planes) M.push_back(psi(q));
        rep.intersections = count_line_intersections(L, M);
    }
    if (*rep.intersections != rep.incidences)
        throw InternalCheckFailure("transfer identity violated: " +
                                   std::to_string(rep.incidences) + " incidences vs " +
                                   std::to_string(*rep.intersections) + " intersections");
    return rep;
}

}  // namespace inclab
