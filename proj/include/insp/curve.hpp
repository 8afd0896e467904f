#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "insp/vec.hpp"

namespace insp {

// Polygonal curve with an implicit constant-speed (arclength) parameterization.
// Closed curves do not repeat the first point; the closing edge is implicit.
// Immutable after construction; all transforms return new values.
template <class V>
class PolyCurve {
  public:
    PolyCurve(std::vector<V> points, bool closed) : pts_(std::move(points)), closed_(closed) {
        validate();
        build_cumlen();
    }

    const std::vector<V>& points() const { return pts_; }
    bool closed() const { return closed_; }
    std::size_t size() const { return pts_.size(); }

    std::size_t edge_count() const { return closed_ ? pts_.size() : pts_.size() - 1; }
    std::pair<V, V> edge(std::size_t i) const {
        return {pts_[i], pts_[(i + 1) % pts_.size()]};
    }
    double edge_length(std::size_t i) const { return cum_[i + 1] - cum_[i]; }

    double length() const { return cum_.back(); }
    // Arclength parameter of vertex i, in [0, length].
    double vertex_param(std::size_t i) const { return cum_[i]; }

    // Edge containing arclength t and the local offset into it. t at a vertex
    // resolves to the forward edge; t = length wraps to edge 0 for closed curves.
    std::pair<std::size_t, double> locate(double t) const {
        if (t < 0 || t > length()) throw std::invalid_argument("curve parameter out of range");
        if (t >= length()) return closed_ ? std::make_pair(std::size_t{0}, 0.0)
                                          : std::make_pair(edge_count() - 1, edge_length(edge_count() - 1));
        std::size_t lo = 0, hi = edge_count();
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            (cum_[mid] <= t ? lo : hi) = mid;
        }
        return {lo, t - cum_[lo]};
    }

    V point_at(double t) const {
        auto [i, s] = locate(t);
        auto [a, b] = edge(i);
        double li = edge_length(i);
        return a + (b - a) * (s / li);
    }

  private:
    void validate() const {
        std::size_t n = pts_.size();
        if (closed_ ? n < 3 : n < 2)
            throw std::invalid_argument("curve: need at least " + std::string(closed_ ? "3" : "2") +
                                        " points");
        for (const V& p : pts_)
            if (!finite(p)) throw std::invalid_argument("curve: non-finite coordinate");
        std::size_t m = closed_ ? n : n - 1;
        for (std::size_t i = 0; i < m; ++i)
            if (norm2(pts_[(i + 1) % n] - pts_[i]) == 0)
                throw std::invalid_argument("curve: repeated consecutive point at index " +
                                            std::to_string(i));
    }

    void build_cumlen() {
        cum_.resize(edge_count() + 1);
        cum_[0] = 0;
        for (std::size_t i = 0; i < edge_count(); ++i) {
            auto [a, b] = edge(i);
            cum_[i + 1] = cum_[i] + norm(b - a);
        }
        if (!(cum_.back() > 0)) throw std::invalid_argument("curve: zero total length");
    }

    std::vector<V> pts_;
    bool closed_;
    std::vector<double> cum_;
};

using Curve3 = PolyCurve<Vec3>;
using Curve2 = PolyCurve<Vec2>;

// State of a curve at arclength t: position, height |position| and the angle
// alpha between position and the forward tangent.
struct SampledState {
    double t = 0;
    Vec3 position;
    double height = 0;
    double alpha = 0;       // radians in [0, pi]
    bool at_vertex = false; // alpha taken from the forward edge
};

struct AlphaValue {
    double value = 0;
    bool at_vertex = false;
};

struct TangentFeasibilityReport {
    bool feasible = false;
    double worst_line_distance = 0;  // min over edges of distance from origin to the edge line
    std::size_t worst_edge = 0;
};

// Resample onto n points equally spaced in arclength along the original polyline.
template <class V>
PolyCurve<V> resample_constant_speed(const PolyCurve<V>& c, std::size_t n) {
    if (c.closed() ? n < 3 : n < 2)
        throw std::invalid_argument("resample: too few points requested");
    double L = c.length();
    std::vector<V> out;
    out.reserve(n);
    std::size_t steps = c.closed() ? n : n - 1;
    for (std::size_t i = 0; i < n; ++i) out.push_back(c.point_at(L * double(i) / double(steps)));
    return PolyCurve<V>(std::move(out), c.closed());
}

// Vertex-parameter height profile. Height along an edge is the norm of the
// linear interpolant, not the interpolant of vertex norms.
template <class V>
std::vector<std::pair<double, double>> height_profile(const PolyCurve<V>& c) {
    std::vector<std::pair<double, double>> out;
    out.reserve(c.size() + (c.closed() ? 1 : 0));
    for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c.vertex_param(i), norm(c.points()[i]));
    if (c.closed()) out.emplace_back(c.length(), norm(c.points()[0]));
    return out;
}

// Angle between gamma(t) and the forward tangent. The tangent is constant per
// edge; the position varies, so alpha varies along an edge. At vertices the
// forward-edge value is returned and flagged.
template <class V>
AlphaValue alpha_at(const PolyCurve<V>& c, double t) {
    auto [i, s] = c.locate(t);
    auto [a, b] = c.edge(i);
    V pos = a + (b - a) * (s / c.edge_length(i));
    if (norm2(pos) == 0) throw std::domain_error("alpha_at: zero height");
    return {angle_between(pos, b - a), s == 0};
}

inline SampledState sample_state(const Curve3& c, double t) {
    auto a = alpha_at(c, t);
    Vec3 pos = c.point_at(t);
    return {t, pos, norm(pos), a.value, a.at_vertex};
}

// Distance from the origin to the infinite line through two points.
template <class V>
double line_distance_to_origin(const V& a, const V& b) {
    V d = b - a;
    double dd = norm2(d);
    if (dd == 0) throw std::invalid_argument("line_distance_to_origin: degenerate edge");
    // Component of a orthogonal to the direction d.
    V perp = a - d * (dot(a, d) / dd);
    return norm(perp);
}

// Checks that every edge line stays at distance >= 1 - tol from the origin,
// i.e. tangent lines of the polyline avoid the interior of the unit ball.
template <class V>
TangentFeasibilityReport validate_tangent_feasibility(const PolyCurve<V>& c, double tol) {
    TangentFeasibilityReport r;
    r.worst_line_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.edge_count(); ++i) {
        auto [a, b] = c.edge(i);
        double d = line_distance_to_origin(a, b);
        if (d < r.worst_line_distance) {
            r.worst_line_distance = d;
            r.worst_edge = i;
        }
    }
    r.feasible = r.worst_line_distance >= 1.0 - tol;
    return r;
}

template <class V>
double min_vertex_height(const PolyCurve<V>& c) {
    double m = std::numeric_limits<double>::infinity();
    for (const V& p : c.points()) m = std::fmin(m, norm(p));
    return m;
}

inline Curve3 embed_xy(const Curve2& c) {
    std::vector<Vec3> pts;
    pts.reserve(c.size());
    for (const Vec2& p : c.points()) pts.emplace_back(p.x, p.y, 0.0);
    return Curve3(std::move(pts), c.closed());
}

template <class V>
PolyCurve<V> scaled(const PolyCurve<V>& c, double s) {
    std::vector<V> pts;
    pts.reserve(c.size());
    for (const V& p : c.points()) pts.push_back(p * s);
    return PolyCurve<V>(std::move(pts), c.closed());
}

}  // namespace insp
