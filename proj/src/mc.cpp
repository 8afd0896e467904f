#include "insp/mc.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace insp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4 * std::numbers::pi;
constexpr double kTieEps = 1e-12;

std::atomic<unsigned> g_threads{0};

// Runs fn(direction, accum) over every sampled direction. Chunks are claimed
// dynamically; accumulators must merge by integer addition so the reduction
// is independent of thread count and scheduling.
template <class Accum, class Fn>
Accum mc_reduce(const DirectionSampler& s, const Fn& fn) {
    if (s.count < 1) throw std::invalid_argument("sampler: count must be >= 1");
    const std::uint64_t n_chunks = direction_chunk_count(s);
    unsigned nt = effective_thread_count();
    if (std::uint64_t(nt) > n_chunks) nt = unsigned(n_chunks);
    std::vector<Accum> partial(nt);
    std::atomic<std::uint64_t> next{0};
    auto work = [&](unsigned ti) {
        std::vector<Vec3> buf;
        for (;;) {
            std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) break;
            std::uint64_t n = direction_chunk(s, c, buf);
            for (std::uint64_t i = 0; i < n; ++i) fn(buf[i], partial[ti]);
        }
    };
    if (nt <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    Accum total;
    for (const Accum& p : partial) total.merge(p);
    return total;
}

struct CountAccum {
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    void add(std::int64_t c) {
        sum += c;
        sum_sq += c * c;
    }
    void merge(const CountAccum& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
};

struct PairAccum {
    std::int64_t n0 = 0, n1 = 0, nboth = 0;
    void merge(const PairAccum& o) {
        n0 += o.n0;
        n1 += o.n1;
        nboth += o.nboth;
    }
};

// Mean and standard error of an integer-count statistic.
void finalize_counts(const CountAccum& a, std::uint64_t n, double scale, double& value, double& se,
                     double& mean, double& mean_se) {
    mean = double(a.sum) / double(n);
    double var = 0;
    if (n > 1) var = std::fmax(0.0, (double(a.sum_sq) - double(n) * mean * mean) / double(n - 1));
    mean_se = std::sqrt(var / double(n));
    value = scale * mean;
    se = scale * mean_se;
}

double bernoulli_se(std::int64_t hits, std::uint64_t n) {
    double p = double(hits) / double(n);
    return std::sqrt(std::fmax(0.0, p * (1 - p)) / double(n));
}

// Signed vertex offsets from the tangent plane <x, p> = 1, with exact-zero
// values nudged to +kTieEps so crossings at vertices count once.
inline double nudged(double s) { return std::fabs(s) < kTieEps ? kTieEps : s; }

}  // namespace

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned effective_thread_count() {
    unsigned n = g_threads.load();
    if (n == 0) n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

HorizonEstimate mc_horizon(const Curve3& curve, const DirectionSampler& sampler) {
    if (min_vertex_height(curve) < 1.0 - 1e-9)
        throw std::domain_error("mc_horizon: curve enters the unit ball");
    const auto& pts = curve.points();
    const std::size_t n = pts.size();
    const bool closed = curve.closed();

    auto fn = [&](const Vec3& p, CountAccum& acc) {
        int count = 0;
        double first = nudged(dot(pts[0], p) - 1.0);
        double prev = first;
        for (std::size_t i = 1; i < n; ++i) {
            double cur = nudged(dot(pts[i], p) - 1.0);
            count += (prev > 0) != (cur > 0);
            prev = cur;
        }
        if (closed) count += (prev > 0) != (first > 0);
        acc.add(count);
    };
    CountAccum total = mc_reduce<CountAccum>(sampler, fn);

    HorizonEstimate e;
    e.samples = sampler.count;
    e.seed = sampler.seed;
    e.scheme = sampler.scheme;
    e.total_crossings = total.sum;
    finalize_counts(total, sampler.count, kFourPi, e.value, e.standard_error, e.mean_crossings,
                    e.mean_crossings_se);
    return e;
}

HorizonEstimate mc_horizon(const Curve3& curve, std::span<const Vec3> directions) {
    if (directions.empty()) throw std::invalid_argument("mc_horizon: no directions");
    if (min_vertex_height(curve) < 1.0 - 1e-9)
        throw std::domain_error("mc_horizon: curve enters the unit ball");
    const auto& pts = curve.points();
    CountAccum total;
    for (const Vec3& p : directions) {
        int count = 0;
        double first = nudged(dot(pts[0], p) - 1.0);
        double prev = first;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double cur = nudged(dot(pts[i], p) - 1.0);
            count += (prev > 0) != (cur > 0);
            prev = cur;
        }
        if (curve.closed()) count += (prev > 0) != (first > 0);
        total.add(count);
    }
    HorizonEstimate e;
    e.samples = directions.size();
    e.total_crossings = total.sum;
    finalize_counts(total, directions.size(), kFourPi, e.value, e.standard_error, e.mean_crossings,
                    e.mean_crossings_se);
    return e;
}

AreaEstimate mc_union_caps_area(const std::vector<Cap>& caps, const DirectionSampler& sampler) {
    if (caps.empty()) throw std::invalid_argument("mc_union_caps_area: empty cap list");
    struct HitAccum {
        std::int64_t hits = 0;
        void merge(const HitAccum& o) { hits += o.hits; }
    };
    auto fn = [&](const Vec3& p, HitAccum& acc) {
        for (const Cap& c : caps)
            if (c.contains(p)) {
                acc.hits++;
                return;
            }
    };
    HitAccum total = mc_reduce<HitAccum>(sampler, fn);
    AreaEstimate e;
    e.samples = sampler.count;
    e.hits = total.hits;
    e.value = kFourPi * double(total.hits) / double(sampler.count);
    e.standard_error = kFourPi * bernoulli_se(total.hits, sampler.count);
    return e;
}

CapPairEstimate mc_cap_pair(const Cap& c0, const Cap& c1, const DirectionSampler& sampler) {
    auto fn = [&](const Vec3& p, PairAccum& acc) {
        bool a = c0.contains(p), b = c1.contains(p);
        acc.n0 += a;
        acc.n1 += b;
        acc.nboth += a && b;
    };
    PairAccum total = mc_reduce<PairAccum>(sampler, fn);
    CapPairEstimate e;
    const double n = double(sampler.count);
    e.samples = sampler.count;
    e.in0 = total.n0;
    e.in1 = total.n1;
    e.in_both = total.nboth;
    e.in_exactly_one = total.n0 + total.n1 - 2 * total.nboth;
    e.area0 = kFourPi * double(total.n0) / n;
    e.area1 = kFourPi * double(total.n1) / n;
    e.intersection = kFourPi * double(total.nboth) / n;
    e.union_area = kFourPi * double(total.n0 + total.n1 - total.nboth) / n;
    e.horizon = kFourPi * double(e.in_exactly_one) / n;
    e.horizon_se = kFourPi * bernoulli_se(e.in_exactly_one, sampler.count);
    e.union_se = kFourPi * bernoulli_se(total.n0 + total.n1 - total.nboth, sampler.count);
    e.intersection_se = kFourPi * bernoulli_se(total.nboth, sampler.count);
    return e;
}

namespace {

// Precomputed great-circle arc between consecutive normalized vertices:
// x(tau) = u cos(tau) + m sin(tau), tau in [0, arc_angle].
struct Arc {
    Vec3 u, m;
    double arc_angle;
};

// Crossings of the arc with the circle <x, p> = cos(rho). The dot product
// along the arc is C cos(tau - phi), so the crossing structure is read off
// sign changes at the endpoints plus the single interior extremum; Delta < pi
// bounds the count by 2. Interior tangencies count zero.
int arc_circle_crossings(const Arc& a, double u_dot, double w_dot, const Vec3& p, double cos_rho) {
    double f0 = nudged(u_dot - cos_rho);
    double f1 = nudged(w_dot - cos_rho);
    double A = u_dot;
    double B = dot(a.m, p);
    double C = std::hypot(A, B);
    if (C < 1e-14) return 0;  // arc equidistant from the circle plane
    double phi = std::atan2(B, A);
    double tau_star = phi < 0 ? phi + 2 * kPi : phi;  // extremum of the cosine
    bool is_max = true;
    if (!(tau_star > 0 && tau_star < a.arc_angle)) {
        tau_star = phi + (phi < 0 ? kPi : -kPi);
        if (tau_star < 0) tau_star += 2 * kPi;
        is_max = false;
    }
    if (!(tau_star > 0 && tau_star < a.arc_angle))
        return (f0 > 0) != (f1 > 0) ? 1 : 0;  // monotone across the arc
    double fs = (is_max ? C : -C) - cos_rho;
    if (std::fabs(fs) < kTieEps) fs = is_max ? -kTieEps : kTieEps;  // tangency: no crossing
    int c = 0;
    c += (f0 > 0) != (fs > 0);
    c += (fs > 0) != (f1 > 0);
    return c;
}

}  // namespace

CroftonEstimate crofton_length(const Curve3& curve, double rho, const DirectionSampler& sampler) {
    if (!(rho > 0 && rho <= kPi / 2 + 1e-12))
        throw std::invalid_argument("crofton_length: rho must lie in (0, pi/2]");
    std::vector<Vec3> unit;
    unit.reserve(curve.size());
    for (const Vec3& v : curve.points()) {
        double h = norm(v);
        if (std::fabs(h - 1.0) > 1e-6)
            throw std::domain_error("crofton_length: curve is not on the unit sphere");
        unit.push_back(v / h);
    }
    const std::size_t n_edges = curve.edge_count();
    std::vector<Arc> arcs(n_edges);
    for (std::size_t i = 0; i < n_edges; ++i) {
        const Vec3& u = unit[i];
        const Vec3& w = unit[(i + 1) % unit.size()];
        double ca = clamp_unit(dot(u, w), 1e-12);
        Vec3 m = w - u * ca;
        arcs[i] = {u, normalized(m), std::acos(ca)};
    }
    const double cos_rho = std::cos(rho);

    auto fn = [&](const Vec3& p, CountAccum& acc) {
        int count = 0;
        double first = dot(unit[0], p);
        double prev = first;
        for (std::size_t i = 0; i < n_edges; ++i) {
            double cur = (i + 1 < unit.size()) ? dot(unit[i + 1], p) : first;
            count += arc_circle_crossings(arcs[i], prev, cur, p, cos_rho);
            prev = cur;
        }
        acc.add(count);
    };
    CountAccum total = mc_reduce<CountAccum>(sampler, fn);

    CroftonEstimate e;
    e.samples = sampler.count;
    e.total_crossings = total.sum;
    double scale = kPi / std::sin(rho);  // (4 pi) / (4 sin rho)
    finalize_counts(total, sampler.count, scale, e.length, e.standard_error, e.mean_crossings,
                    e.mean_crossings_se);
    return e;
}

}  // namespace insp
