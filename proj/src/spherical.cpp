#include "insp/spherical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace insp {

double clamp_unit(double x, double tol) {
    if (x > 1.0) {
        if (x > 1.0 + tol) throw std::domain_error("inverse-trig argument exceeds 1 beyond tolerance");
        return 1.0;
    }
    if (x < -1.0) {
        if (x < -1.0 - tol) throw std::domain_error("inverse-trig argument below -1 beyond tolerance");
        return -1.0;
    }
    return x;
}

Cap::Cap(const Vec3& c, double r) : center(c), angular_radius(r) {
    if (std::fabs(norm(c) - 1.0) > 1e-12) throw std::invalid_argument("Cap: center must be unit");
    if (!(r >= 0 && r <= std::numbers::pi / 2 + 1e-12))
        throw std::invalid_argument("Cap: angular radius must lie in [0, pi/2]");
    cos_radius_ = std::cos(r);
}

Cap cap_from_viewpoint(const Vec3& p) {
    double h = norm(p);
    if (h < 1.0 - 1e-9) throw std::domain_error("cap_from_viewpoint: point inside the unit sphere");
    double hh = std::fmax(h, 1.0);
    return Cap(p / h, std::acos(1.0 / hh));
}

double cap_area(const Cap& c) {
    double s = std::sin(0.5 * c.angular_radius);
    return 4.0 * std::numbers::pi * s * s;
}

double cap_intersection_area(const Cap& c0, const Cap& c1) {
    const double r0 = c0.angular_radius, r1 = c1.angular_radius;
    const double d = std::acos(clamp_unit(dot(c0.center, c1.center)));
    const double small_area = cap_area(r0 <= r1 ? c0 : c1);

    // Tangency windows: the lens formula is ill-conditioned there, and the
    // branch value differs from it by under 1e-9 in area.
    if (d >= r0 + r1 - 1e-7) return 0.0;
    if (d <= std::fabs(r0 - r1) + 1e-7) return small_area;

    // Proper lens via Gauss-Bonnet: two small-circle arcs meeting at two
    // vertices. psi_i is the half-aperture of arc i about its own axis, vq the
    // angle of the lens triangle at a vertex.
    double sd = std::sin(d);
    double psi0 = std::acos(clamp_unit((std::cos(r1) - std::cos(d) * std::cos(r0)) / (sd * std::sin(r0))));
    double psi1 = std::acos(clamp_unit((std::cos(r0) - std::cos(d) * std::cos(r1)) / (sd * std::sin(r1))));
    double vq = std::acos(clamp_unit((std::cos(d) - std::cos(r0) * std::cos(r1)) / (std::sin(r0) * std::sin(r1))));
    double area = 2.0 * std::numbers::pi - 2.0 * psi0 * std::cos(r0) - 2.0 * psi1 * std::cos(r1) - 2.0 * vq;
    return std::fmax(0.0, area);
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// xoshiro-free minimal generator: splitmix64 stream keyed by (seed, chunk).
// Output sequence is fully specified by this file, independent of the standard
// library's distribution implementations.
struct ChunkRng {
    std::uint64_t state;
    explicit ChunkRng(std::uint64_t seed, std::uint64_t chunk)
        : state(splitmix64(seed ^ (0x51c64b9febff8977ULL * (chunk + 1)))) {}
    std::uint64_t next() { return state = splitmix64(state); }
    double u01() { return double(next() >> 11) * 0x1.0p-53; }  // [0, 1)
};

Vec3 fibonacci_direction(std::uint64_t i, std::uint64_t n) {
    constexpr double golden_angle = 2.39996322972865332;  // pi (3 - sqrt 5)
    double z = 1.0 - (2.0 * double(i) + 1.0) / double(n);
    double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    double phi = golden_angle * double(i);
    return {r * std::cos(phi), r * std::sin(phi), z};
}

Vec3 uniform_direction(ChunkRng& rng) {
    double z = 2.0 * rng.u01() - 1.0;
    double phi = 2.0 * std::numbers::pi * rng.u01();
    double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace

std::uint64_t direction_chunk_count(const DirectionSampler& s) {
    return (s.count + kDirectionChunk - 1) / kDirectionChunk;
}

std::uint64_t direction_chunk(const DirectionSampler& s, std::uint64_t chunk,
                              std::vector<Vec3>& buf) {
    std::uint64_t begin = chunk * kDirectionChunk;
    if (begin >= s.count) return 0;
    std::uint64_t n = std::min<std::uint64_t>(kDirectionChunk, s.count - begin);
    buf.resize(n);
    if (s.scheme == DirectionSampler::Scheme::fibonacci) {
        for (std::uint64_t i = 0; i < n; ++i) buf[i] = fibonacci_direction(begin + i, s.count);
    } else {
        ChunkRng rng(s.seed, chunk);
        for (std::uint64_t i = 0; i < n; ++i) buf[i] = uniform_direction(rng);
    }
    return n;
}

std::vector<Vec3> sample_directions(const DirectionSampler& s) {
    if (s.count < 1) throw std::invalid_argument("sample_directions: count must be >= 1");
    std::vector<Vec3> out;
    out.reserve(s.count);
    std::vector<Vec3> buf;
    for (std::uint64_t c = 0; c < direction_chunk_count(s); ++c) {
        std::uint64_t n = direction_chunk(s, c, buf);
        out.insert(out.end(), buf.begin(), buf.begin() + n);
    }
    return out;
}

}  // namespace insp
