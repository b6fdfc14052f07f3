#include "inclab/constructions.hpp"

#include <set>

#include "inclab/linalg.hpp"

namespace inclab {

namespace {

constexpr int kDedupAttemptCap = 1000000;

// n distinct values in [0, bound) by rejection, deterministic per rng state.
std::vector<std::uint64_t> distinct_draws(std::uint64_t n, std::uint64_t bound, SplitMix64& rng) {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    int attempts = 0;
    while (out.size() < n) {
        if (++attempts > kDedupAttemptCap)
            throw ParameterExceedsField("could not draw enough distinct values");
        std::uint64_t v = rng.bounded(bound);
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

Point3 random_point(const PrimeField& field, SplitMix64& rng) {
    return {field.sample(rng), field.sample(rng), field.sample(rng)};
}

}  // namespace

Instance rich_line_instance(std::uint64_t k, std::uint64_t n, const PrimeField& field,
                            std::uint64_t seed) {
    std::uint64_t p = field.modulus();
    // A line has p points and the k-collinearity hypothesis is vacuous past
    // k = p, so k-1 may not exceed p-1.
    if (k < 2 || k > p)
        throw ParameterExceedsField("k must satisfy 2 <= k <= p, got " + std::to_string(k));
    if (n < 1 || n > p)
        throw ParameterExceedsField("n must satisfy 1 <= n <= p, got " + std::to_string(n));

    SplitMix64 rng(seed);
    Point3 b1 = random_point(field, rng);
    Point3 b2 = random_point(field, rng);
    while (b2 == b1) b2 = random_point(field, rng);
    Line3 axis = line_through(b1, b2);

    std::vector<Point3> points;
    for (std::uint64_t t : distinct_draws(k - 1, p, rng)) points.push_back(axis.at(field.element(t)));

    // Normals of planes through the line: the projective line over dir's
    // orthogonal complement, basis from the nullspace of [dir].
    FeMat dir_row(1, 3, field);
    dir_row.set(0, 0, axis.dir().x);
    dir_row.set(0, 1, axis.dir().y);
    dir_row.set(0, 2, axis.dir().z);
    std::vector<FeVec> perp = nullspace(dir_row);
    if (perp.size() != 2) throw InternalCheckFailure("direction complement is not 2-dimensional");

    std::vector<Plane3> planes;
    for (std::uint64_t idx : distinct_draws(n, p + 1, rng)) {
        FeVec normal(3, field.zero());
        if (idx < p) {
            Fe t = field.element(std::int64_t(idx));
            for (int i = 0; i < 3; ++i) normal[i] = perp[0][i] + t * perp[1][i];
        } else {
            for (int i = 0; i < 3; ++i) normal[i] = perp[1][i];
        }
        Fe d = -(normal[0] * axis.base().x + normal[1] * axis.base().y + normal[2] * axis.base().z);
        planes.push_back(Plane3(normal[0], normal[1], normal[2], d));
    }
    return Instance(field, std::move(points), std::move(planes));
}

std::pair<std::vector<Line3>, std::vector<Line3>> regulus_instance(std::uint64_t a_count,
                                                                   std::uint64_t b_count,
                                                                   const PrimeField& field,
                                                                   std::uint64_t seed) {
    std::uint64_t p = field.modulus();
    if (a_count > p || b_count > p)
        throw ParameterExceedsField("ruling sizes cannot exceed p = " + std::to_string(p));
    SplitMix64 rng(seed);
    Fe zero = field.zero(), one = field.one();
    std::vector<Line3> L, M;
    for (std::uint64_t av : distinct_draws(a_count, p, rng)) {
        Fe a = field.element(std::int64_t(av));
        L.push_back(Line3({a, zero, zero}, {zero, one, a}));
    }
    for (std::uint64_t bv : distinct_draws(b_count, p, rng)) {
        Fe b = field.element(std::int64_t(bv));
        M.push_back(Line3({zero, b, zero}, {one, zero, b}));
    }
    return {std::move(L), std::move(M)};
}

Instance random_instance(std::uint64_t m, std::uint64_t n, const PrimeField& field,
                         std::uint64_t seed) {
    std::uint64_t p = field.modulus();
    unsigned __int128 capacity = (unsigned __int128)(p)*p * p;
    if (m > capacity || n > capacity)
        throw ParameterExceedsField("requested size exceeds the field capacity p^3");

    SplitMix64 rng(seed);
    std::set<Point3> point_set;
    std::vector<Point3> points;
    int attempts = 0;
    while (points.size() < m) {
        if (++attempts > kDedupAttemptCap)
            throw ParameterExceedsField("could not draw enough distinct points");
        Point3 pt = random_point(field, rng);
        if (point_set.insert(pt).second) points.push_back(pt);
    }

    std::set<Plane3> plane_set;
    std::vector<Plane3> planes;
    attempts = 0;
    while (planes.size() < n) {
        if (++attempts > kDedupAttemptCap)
            throw ParameterExceedsField("could not draw enough distinct planes");
        Fe a = field.sample(rng), b = field.sample(rng), c = field.sample(rng);
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        Plane3 q(a, b, c, field.sample(rng));
        if (plane_set.insert(q).second) planes.push_back(q);
    }
    return Instance(field, std::move(points), std::move(planes));
}

Instance random_no_rich_lines_instance(std::uint64_t m, std::uint64_t n, const PrimeField& field,
                                       std::uint64_t seed, int max_tries) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Instance inst = random_instance(m, n, field, rng.next());
        bool rich = false;
        for (const RichLineStat& st : rich_line_stats(inst))
            rich = rich || st.s_count >= 3 || st.t_count >= 3;
        if (!rich) return inst;
    }
    throw ConstructionRetryExceeded("no rich-line-free instance found in " +
                                    std::to_string(max_tries) + " attempts");
}

}  // namespace inclab
