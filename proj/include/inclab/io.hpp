#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "inclab/counting.hpp"
#include "inclab/geom.hpp"

namespace inclab {

/// Contents of an instance text file. Format, one record per line with '#'
/// comments: header "F <p>", points "P x y z", planes "Q a b c d" for the
/// locus ax+by+cz+d = 0, lines "L bx by bz dx dy dz". Integers are arbitrary
/// and reduced mod p on load.
struct ParsedFile {
    PrimeField field;
    std::vector<Point3> points;
    std::vector<Plane3> planes;
    std::vector<Line3> lines;
};

ParsedFile load_instance_text(std::istream& in);
ParsedFile load_instance_file(const std::string& path);

/// The deduplicated point/plane instance of a file (line records are allowed
/// and ignored).
Instance parse_instance_file(const std::string& path);

std::string format_point(const Point3& p);
std::string format_plane(const Plane3& q);
std::string format_line(const Line3& l);

}  // namespace inclab
