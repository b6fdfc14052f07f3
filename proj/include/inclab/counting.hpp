#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inclab/geom.hpp"
#include "inclab/rng.hpp"

namespace inclab {

/// A deduplicated point set P and plane set Q over one field.
class Instance {
public:
    Instance(const PrimeField& field, std::vector<Point3> points, std::vector<Plane3> planes);

    const PrimeField& field() const { return field_; }
    const std::vector<Point3>& points() const { return points_; }
    const std::vector<Plane3>& planes() const { return planes_; }

private:
    PrimeField field_;
    std::vector<Point3> points_;
    std::vector<Plane3> planes_;
};

/// A line together with the number of points of P on it and planes of Q
/// containing it.
struct RichLineStat {
    Line3 line;
    std::uint64_t s_count;
    std::uint64_t t_count;
};

struct Thresholds {
    std::uint64_t s;
    std::uint64_t t;
    double rhs;  // |P|^(1/2)|Q| + t|P| + s|Q|, O-constant 1
};

struct IncidenceReport {
    std::uint64_t incidences;
    std::optional<std::uint64_t> intersections;
    std::uint64_t max_collinear;
    std::uint64_t best_s;
    std::uint64_t best_t;
    double rhs;
    double ratio;
    std::vector<std::string> warnings;
};

/// Exact |{(p,q) : p on q}| by brute force over all pairs.
std::uint64_t count_incidences(const Instance& inst);

/// Number of distinct points lying on at least one line of L and at least one
/// line of M. Rich points count once. Lines within each family must be
/// distinct; a line present in both families contributes all its p points.
std::uint64_t count_line_intersections(const std::vector<Line3>& L, const std::vector<Line3>& M);

/// Statistics of every line spanned by two points of P or arising as the
/// intersection of two planes of Q, deduplicated, in canonical line order.
std::vector<RichLineStat> rich_line_stats(const Instance& inst);

/// Largest number of points of P on one line (|P| itself when |P| <= 1).
std::uint64_t max_collinear(const Instance& inst);

/// The valid pair (s, t), s,t >= 2, minimizing t|P| + s|Q|, where valid means
/// no stat has s_count >= s and t_count >= t. Ties resolved toward smaller s,
/// then smaller t. Throws SizeOrderViolation when |P| > |Q|.
Thresholds best_thresholds(const std::vector<RichLineStat>& stats, std::uint64_t num_points,
                           std::uint64_t num_planes);
/// Same sweep over bare (s_count, t_count) pairs.
Thresholds best_thresholds_pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& stats,
                                 std::uint64_t num_points, std::uint64_t num_planes);

/// Bound-side report: incidences, rich-line statistics, thresholds and ratio,
/// with no transform run (intersections absent).
IncidenceReport bound_report(const Instance& inst);

/// End-to-end report: counts incidences, genericizes, maps P and Q through
/// phi and psi, counts line-line intersections, checks the transfer identity
/// exactly, and evaluates the bound expression.
IncidenceReport report(const Instance& inst, SplitMix64& rng, int max_retries = 100);

}  // namespace inclab
