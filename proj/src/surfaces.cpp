#include "inclab/surfaces.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "inclab/linalg.hpp"

namespace inclab {

namespace {

template <typename Coeffs>
void canonicalize(Coeffs& c) {
    for (Fe& v : c) {
        if (!v.is_zero()) {
            Fe s = inv(v);
            for (Fe& w : c) w = w * s;
            return;
        }
    }
    throw PreconditionError("all polynomial coefficients are zero");
}

// Row of the quadric interpolation system: monomial values at p in the
// coefficient order (x^2, y^2, z^2, xy, xz, yz, x, y, z, 1).
std::array<Fe, 10> quadric_row(const Point3& p) {
    Fe one = p.x.field().one();
    return {p.x * p.x, p.y * p.y, p.z * p.z, p.x * p.y, p.x * p.z,
            p.y * p.z, p.x,       p.y,       p.z,       one};
}

bool vanishes_on_line(const Line3& l, int degree, const std::function<Fe(const Point3&)>& eval) {
    PrimeField field = l.base().x.field();
    if (std::uint32_t(degree) + 1 > field.modulus())
        throw FieldTooSmallForDegree("need " + std::to_string(degree + 1) +
                                     " sample points but the field has only " +
                                     std::to_string(field.modulus()));
    // A univariate restriction of degree <= degree with degree+1 roots is zero.
    for (int t = 0; t <= degree; ++t) {
        if (!eval(l.at(field.element(t))).is_zero()) return false;
    }
    return true;
}

}  // namespace

Quadric::Quadric(const std::array<Fe, 10>& coeffs) : c_(coeffs) { canonicalize(c_); }

Fe Quadric::eval(const Point3& p) const {
    std::array<Fe, 10> row = quadric_row(p);
    Fe acc = c_[0] * row[0];
    for (std::size_t i = 1; i < 10; ++i) acc = acc + c_[i] * row[i];
    return acc;
}

std::vector<std::array<int, 3>> Surface::monomials(int degree) {
    std::vector<std::array<int, 3>> out;
    for (int total = degree; total >= 0; --total) {
        for (int i = total; i >= 0; --i) {
            for (int j = total - i; j >= 0; --j) {
                out.push_back({i, j, total - i - j});
            }
        }
    }
    return out;
}

std::size_t Surface::basis_size(int degree) {
    return std::size_t(degree + 3) * (degree + 2) * (degree + 1) / 6;
}

Surface::Surface(int degree, std::vector<Fe> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree_ < 1) throw PreconditionError("surface degree must be at least 1");
    if (c_.size() != basis_size(degree_))
        throw PreconditionError("coefficient vector does not match the basis size");
    canonicalize(c_);
    // Top-degree block first in the basis order; all zero would mean the
    // polynomial has a lower degree than declared.
    std::size_t top = basis_size(degree_) - basis_size(degree_ - 1);
    bool top_nonzero = false;
    for (std::size_t i = 0; i < top; ++i) top_nonzero = top_nonzero || !c_[i].is_zero();
    if (!top_nonzero) throw PreconditionError("top-degree coefficient block is zero");
}

Fe Surface::eval(const Point3& p) const {
    std::vector<std::array<int, 3>> basis = monomials(degree_);
    Fe acc = p.x.field().zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Fe term = c_[i] * pow(p.x, basis[i][0]) * pow(p.y, basis[i][1]) * pow(p.z, basis[i][2]);
        acc = acc + term;
    }
    return acc;
}

bool line_in_surface(const Line3& l, const Quadric& s) {
    return vanishes_on_line(l, 2, [&](const Point3& p) { return s.eval(p); });
}

bool line_in_surface(const Line3& l, const Surface& s) {
    return vanishes_on_line(l, s.degree(), [&](const Point3& p) { return s.eval(p); });
}

namespace {

// Kernel of the "vanish at 3 points of each line" system; a basis vector is a
// quadric containing every line of the triple.
std::vector<FeVec> quadric_kernel(const std::vector<Line3>& lines) {
    PrimeField field = lines.front().base().x.field();
    FeMat m(3 * lines.size(), 10, field);
    std::size_t r = 0;
    for (const Line3& l : lines) {
        for (int t = 0; t < 3; ++t) {
            std::array<Fe, 10> row = quadric_row(l.at(field.element(t)));
            for (std::size_t c = 0; c < 10; ++c) m.set(r, c, row[c]);
            ++r;
        }
    }
    return nullspace(m);
}

Quadric quadric_from_vec(const FeVec& v) {
    std::array<Fe, 10> c = {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
    return Quadric(c);
}

}  // namespace

Quadric quadric_through_lines(const Line3& l1, const Line3& l2, const Line3& l3) {
    std::vector<FeVec> kernel = quadric_kernel({l1, l2, l3});
    if (kernel.empty())
        throw InternalCheckFailure("9 conditions on 10 coefficients left no quadric");
    Quadric q = quadric_from_vec(kernel.front());
    for (const Line3* l : {&l1, &l2, &l3}) {
        if (!line_in_surface(*l, q))
            throw InternalCheckFailure("interpolated quadric misses an input line");
    }
    return q;
}

std::vector<Line3> lines_on_quadric(const Quadric& s, const std::vector<Line3>& lines) {
    std::vector<Line3> out;
    for (const Line3& l : lines)
        if (line_in_surface(l, s)) out.push_back(l);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> quadric_richness(const std::vector<Line3>& L,
                                                                  const std::vector<Line3>& M) {
    std::set<Line3> dedup(L.begin(), L.end());
    dedup.insert(M.begin(), M.end());
    std::vector<Line3> all(dedup.begin(), dedup.end());

    std::set<std::pair<std::size_t, std::size_t>> profile;
    auto record = [&](auto&& contains) {
        std::size_t s = 0, t = 0;
        for (const Line3& l : L) s += contains(l);
        for (const Line3& m : M) t += contains(m);
        profile.insert({s, t});
    };

    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            for (std::size_t k = j + 1; k < all.size(); ++k) {
                std::vector<FeVec> kernel = quadric_kernel({all[i], all[j], all[k]});
                if (kernel.size() != 1) continue;  // degenerate triples: planes below
                Quadric q = quadric_from_vec(kernel.front());
                record([&](const Line3& l) { return line_in_surface(l, q); });
            }
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            std::optional<Plane3> plane = plane_through_lines(all[i], all[j]);
            if (!plane) continue;
            record([&](const Line3& l) { return line_in_plane(l, *plane); });
        }
    }
    return {profile.begin(), profile.end()};
}

Surface min_degree_surface(const std::vector<Line3>& L) {
    if (L.empty()) throw PreconditionError("min_degree_surface requires at least one line");
    std::set<Line3> dedup(L.begin(), L.end());
    if (dedup.size() != L.size()) throw PreconditionError("lines must be distinct");

    PrimeField field = L.front().base().x.field();
    int max_degree = int(std::ceil(std::sqrt(6.0 * double(L.size())))) + 1;
    if (field.modulus() <= std::uint32_t(max_degree))
        throw FieldTooSmallForDegree("field of size " + std::to_string(field.modulus()) +
                                     " cannot supply distinct sample points up to degree " +
                                     std::to_string(max_degree));

    for (int d = 1; d <= max_degree; ++d) {
        std::vector<std::array<int, 3>> basis = Surface::monomials(d);
        FeMat m(L.size() * (d + 1), basis.size(), field);
        std::size_t r = 0;
        for (const Line3& l : L) {
            for (int t = 0; t <= d; ++t) {
                Point3 p = l.at(field.element(t));
                for (std::size_t c = 0; c < basis.size(); ++c) {
                    Fe val = pow(p.x, basis[c][0]) * pow(p.y, basis[c][1]) * pow(p.z, basis[c][2]);
                    m.set(r, c, val);
                }
                ++r;
            }
        }
        std::vector<FeVec> kernel = nullspace(m);
        if (!kernel.empty()) return Surface(d, kernel.front());
    }
    throw InternalCheckFailure("dimension count guarantees a surface by degree " +
                               std::to_string(max_degree));
}

}  // namespace inclab
