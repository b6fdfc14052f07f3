#include "inclab/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace inclab {

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

std::int64_t parse_int(const std::string& tok, int line_no) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line_no, "trailing characters in '" + tok + "'");
    return v;
}

}  // namespace

ParsedFile load_instance_text(std::istream& in) {
    std::optional<PrimeField> field;
    std::vector<Point3> points;
    std::vector<Plane3> planes;
    std::vector<Line3> lines;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::vector<std::string> tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& tag = tok[0];

        if (tag == "F") {
            if (tok.size() != 2) throw ParseError(line_no, "header must be 'F <p>'");
            if (field) throw ParseError(line_no, "duplicate field header");
            std::int64_t p = parse_int(tok[1], line_no);
            if (p < 0 || p > INT32_MAX)
                throw NonPrimeField("field characteristic " + tok[1] + " out of range");
            field.emplace(std::uint32_t(p));
            continue;
        }
        if (!field) throw ParseError(line_no, "record before the 'F <p>' header");

        if (tag == "P") {
            if (tok.size() != 4) throw ParseError(line_no, "point must be 'P x y z'");
            points.push_back({field->element(parse_int(tok[1], line_no)),
                              field->element(parse_int(tok[2], line_no)),
                              field->element(parse_int(tok[3], line_no))});
        } else if (tag == "Q") {
            if (tok.size() != 5) throw ParseError(line_no, "plane must be 'Q a b c d'");
            Fe a = field->element(parse_int(tok[1], line_no));
            Fe b = field->element(parse_int(tok[2], line_no));
            Fe c = field->element(parse_int(tok[3], line_no));
            Fe d = field->element(parse_int(tok[4], line_no));
            if (a.is_zero() && b.is_zero() && c.is_zero())
                throw ParseError(line_no, "plane has zero normal");
            planes.push_back(Plane3(a, b, c, d));
        } else if (tag == "L") {
            if (tok.size() != 7)
                throw ParseError(line_no, "line must be 'L bx by bz dx dy dz'");
            Point3 base = {field->element(parse_int(tok[1], line_no)),
                           field->element(parse_int(tok[2], line_no)),
                           field->element(parse_int(tok[3], line_no))};
            Vec3 dir = {field->element(parse_int(tok[4], line_no)),
                        field->element(parse_int(tok[5], line_no)),
                        field->element(parse_int(tok[6], line_no))};
            if (dir.is_zero()) throw ParseError(line_no, "line has zero direction");
            lines.push_back(Line3(base, dir));
        } else {
            throw ParseError(line_no, "unknown record tag '" + tag + "'");
        }
    }
    if (!field) throw ParseError(line_no, "missing 'F <p>' header");
    return {*field, std::move(points), std::move(planes), std::move(lines)};
}

ParsedFile load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_instance_text(in);
}

Instance parse_instance_file(const std::string& path) {
    ParsedFile file = load_instance_file(path);
    return Instance(file.field, std::move(file.points), std::move(file.planes));
}

std::string format_point(const Point3& p) {
    std::ostringstream out;
    out << "P " << p.x.value() << ' ' << p.y.value() << ' ' << p.z.value();
    return out.str();
}

std::string format_plane(const Plane3& q) {
    std::ostringstream out;
    out << "Q " << q.a().value() << ' ' << q.b().value() << ' ' << q.c().value() << ' '
        << q.d().value();
    return out.str();
}

std::string format_line(const Line3& l) {
    std::ostringstream out;
    out << "L " << l.base().x.value() << ' ' << l.base().y.value() << ' ' << l.base().z.value()
        << ' ' << l.dir().x.value() << ' ' << l.dir().y.value() << ' ' << l.dir().z.value();
    return out.str();
}

}  // namespace inclab
