#pragma once

#include <stdexcept>
#include <string>

#include "insp/curve.hpp"

namespace insp {

// Raised on malformed curve files; message carries line:column when the JSON
// itself is broken, or the offending point index for semantic errors.
struct CurveParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Curve files: {"closed": bool, "points": [[x,y,z], ...]}, 2-element arrays
// for planar curves. Missing fields, unknown fields, non-finite numbers and
// repeated consecutive points are rejected.
Curve3 parse_curve3_json(const std::string& text);
Curve2 parse_curve2_json(const std::string& text);
// Point arity of a curve file (2 or 3) without full validation.
int curve_json_dimension(const std::string& text);

// Doubles are written with 17 significant digits, so re-parsing reproduces
// the exact bit pattern.
std::string curve_to_json(const Curve3& c);
std::string curve_to_json(const Curve2& c);

std::string format_double_17(double x);

Curve3 load_curve3(const std::string& path);
Curve2 load_curve2(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace insp
