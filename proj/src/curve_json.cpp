#include "insp/curve_json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace insp {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail_at(const std::string& text, std::size_t byte, const std::string& what) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    throw CurveParseError("curve file, line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + what);
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail_at(text, e.byte ? e.byte - 1 : 0, e.what());
    }
}

void check_structure(const json& doc, std::size_t dim) {
    if (!doc.is_object()) throw CurveParseError("curve file: top level must be an object");
    if (!doc.contains("closed") || !doc["closed"].is_boolean())
        throw CurveParseError("curve file: missing boolean field \"closed\"");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw CurveParseError("curve file: missing array field \"points\"");
    for (const auto& [key, value] : doc.items())
        if (key != "closed" && key != "points")
            throw CurveParseError("curve file: unknown field \"" + key + "\"");
    std::size_t idx = 0;
    for (const auto& pt : doc["points"]) {
        if (!pt.is_array() || pt.size() != dim)
            throw CurveParseError("curve file: point " + std::to_string(idx) + " is not a " +
                                  std::to_string(dim) + "-element array");
        for (const auto& coord : pt) {
            if (!coord.is_number())
                throw CurveParseError("curve file: point " + std::to_string(idx) +
                                      " has a non-numeric coordinate");
            if (!std::isfinite(coord.get<double>()))
                throw CurveParseError("curve file: point " + std::to_string(idx) +
                                      " has a non-finite coordinate");
        }
        idx++;
    }
}

}  // namespace

int curve_json_dimension(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array() ||
        doc["points"].empty() || !doc["points"][0].is_array())
        throw CurveParseError("curve file: cannot determine point dimension");
    return int(doc["points"][0].size());
}

Curve3 parse_curve3_json(const std::string& text) {
    json doc = parse_document(text);
    check_structure(doc, 3);
    std::vector<Vec3> pts;
    pts.reserve(doc["points"].size());
    for (const auto& pt : doc["points"])
        pts.emplace_back(pt[0].get<double>(), pt[1].get<double>(), pt[2].get<double>());
    try {
        return Curve3(std::move(pts), doc["closed"].get<bool>());
    } catch (const std::invalid_argument& e) {
        throw CurveParseError(std::string("curve file: ") + e.what());
    }
}

Curve2 parse_curve2_json(const std::string& text) {
    json doc = parse_document(text);
    check_structure(doc, 2);
    std::vector<Vec2> pts;
    pts.reserve(doc["points"].size());
    for (const auto& pt : doc["points"]) pts.emplace_back(pt[0].get<double>(), pt[1].get<double>());
    try {
        return Curve2(std::move(pts), doc["closed"].get<bool>());
    } catch (const std::invalid_argument& e) {
        throw CurveParseError(std::string("curve file: ") + e.what());
    }
}

std::string format_double_17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s = buf;
    // Keep a decimal point so JSON parsers read the value back as a double
    // (an integer-looking "-0" would otherwise lose its sign bit).
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

namespace {

template <class V>
std::string points_to_json(const std::vector<V>& pts, bool closed,
                           std::string (*fmt)(const V&)) {
    std::ostringstream out;
    out << "{\n  \"closed\": " << (closed ? "true" : "false") << ",\n  \"points\": [\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        out << "    " << fmt(pts[i]) << (i + 1 < pts.size() ? "," : "") << "\n";
    out << "  ]\n}\n";
    return out.str();
}

std::string fmt3(const Vec3& p) {
    return "[" + format_double_17(p.x) + ", " + format_double_17(p.y) + ", " +
           format_double_17(p.z) + "]";
}
std::string fmt2(const Vec2& p) {
    return "[" + format_double_17(p.x) + ", " + format_double_17(p.y) + "]";
}

}  // namespace

std::string curve_to_json(const Curve3& c) { return points_to_json(c.points(), c.closed(), fmt3); }
std::string curve_to_json(const Curve2& c) { return points_to_json(c.points(), c.closed(), fmt2); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

Curve3 load_curve3(const std::string& path) { return parse_curve3_json(read_file(path)); }
Curve2 load_curve2(const std::string& path) { return parse_curve2_json(read_file(path)); }

}  // namespace insp
