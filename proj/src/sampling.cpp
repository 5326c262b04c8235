#include "surfcurve/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "surfcurve/geodesics.hpp"

namespace surfcurve {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Circumcircle {
    double cx, cy, r2;
    bool valid;
};

Circumcircle circumcircle(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (std::abs(d) < 1e-14) return {0, 0, 0, false};
    const double a2 = a.x * a.x + a.y * a.y;
    const double b2 = b.x * b.x + b.y * b.y;
    const double c2 = c.x * c.x + c.y * c.y;
    const double ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    const double uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    const double r2 = (a.x - ux) * (a.x - ux) + (a.y - uy) * (a.y - uy);
    return {ux, uy, r2, true};
}

double cyclic_segment(const DiscreteCurve& dense, std::size_t i) {
    const std::size_t n = dense.points.size();
    return distance(dense.points[i], dense.points[(i + 1) % n]);
}

}  // namespace

MedialAxisApprox approximate_medial_axis_planar(const DiscreteCurve& dense) {
    const std::size_t n = dense.points.size();
    if (n < 4) throw std::invalid_argument("medial axis: too few dense points");
    const auto& pts = dense.points;

    // Per-point local spacing: the longer of the two incident segments.
    std::vector<double> spacing(n, 0.0);
    std::vector<double> segments(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s0 = cyclic_segment(dense, (i + n - 1) % n);
        double s1 = cyclic_segment(dense, i);
        spacing[i] = std::max(s0, s1);
        segments[i] = s1;
    }
    // Density gauge: the median segment, so a few large gaps (point lists
    // holding more than one loop) don't masquerade as sparsity.
    std::nth_element(segments.begin(), segments.begin() + static_cast<std::ptrdiff_t>(n / 2),
                     segments.end());
    const double typical_segment = segments[n / 2];

    MedialAxisApprox axis;
    axis.method = "planar-delaunay-poles";

    // Brute-force Delaunay: a triple survives when its circumcircle is empty.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto cc = circumcircle(pts[i], pts[j], pts[k]);
                if (!cc.valid) continue;
                bool empty = true;
                for (std::size_t m = 0; m < n && empty; ++m) {
                    if (m == i || m == j || m == k) continue;
                    double dx = pts[m].x - cc.cx;
                    double dy = pts[m].y - cc.cy;
                    if (dx * dx + dy * dy < cc.r2 * (1.0 - 1e-12)) empty = false;
                }
                if (!empty) continue;
                double local = std::max({spacing[i], spacing[j], spacing[k]});
                if (std::sqrt(cc.r2) > 2.0 * local)
                    axis.points.push_back({cc.cx, cc.cy, 0.0});
            }
        }
    }

    if (axis.points.empty()) {
        axis.empty_axis = true;
        return axis;
    }

    double lfs_min = kInf;
    for (const auto& p : pts) {
        double best = kInf;
        for (const auto& q : axis.points) best = std::min(best, distance(p, q));
        lfs_min = std::min(lfs_min, best);
    }
    if (typical_segment > lfs_min / 10.0)
        throw std::invalid_argument("medial axis: dense curve too sparse for its feature size");
    return axis;
}

MedialAxisApprox approximate_medial_axis_mesh(const TriMesh& mesh, const DiscreteCurve& dense) {
    if (dense.mesh_vertices.size() != dense.points.size() || dense.mesh_vertices.empty())
        throw std::invalid_argument("medial axis: curve has no mesh vertices");

    const auto part = multi_source_propagate(mesh, dense.mesh_vertices);
    const std::size_t nc = dense.mesh_vertices.size();
    const std::size_t quarter = std::max<std::size_t>(1, nc / 4);

    auto cyclic_gap = [nc](int a, int b) {
        std::size_t d = static_cast<std::size_t>(std::abs(a - b));
        return std::min(d, nc - d);
    };

    MedialAxisApprox axis;
    axis.method = "mesh-distance-ridge";
    std::set<int> ridge;
    for (const auto& e : mesh.edges()) {
        int la = part.labels[static_cast<std::size_t>(e.a)];
        int lb = part.labels[static_cast<std::size_t>(e.b)];
        if (la < 0 || lb < 0) continue;
        if (cyclic_gap(la, lb) >= quarter) {
            ridge.insert(e.a);
            ridge.insert(e.b);
        }
    }
    for (int v : ridge) {
        axis.mesh_vertices.push_back(v);
        axis.points.push_back(mesh.vertices()[static_cast<std::size_t>(v)]);
    }
    axis.empty_axis = axis.points.empty();
    return axis;
}

double local_feature_size(const Vec3& p, const MedialAxisApprox& axis,
                          std::optional<double> injectivity_bound) {
    if (axis.empty_axis || axis.points.empty()) {
        if (injectivity_bound) return *injectivity_bound;
        throw std::runtime_error("local feature size undefined: empty medial axis and no bound");
    }
    double best = kInf;
    for (const auto& q : axis.points) best = std::min(best, distance(p, q));
    if (injectivity_bound) best = std::min(best, *injectivity_bound);
    return best;
}

std::vector<double> mesh_local_feature_size(const TriMesh& mesh, const MedialAxisApprox& axis,
                                            std::optional<double> injectivity_bound) {
    const std::size_t nv = static_cast<std::size_t>(mesh.vertex_count());
    if (axis.empty_axis || axis.mesh_vertices.empty()) {
        if (injectivity_bound) return std::vector<double>(nv, *injectivity_bound);
        throw std::runtime_error("local feature size undefined: empty medial axis and no bound");
    }
    auto part = multi_source_propagate(mesh, axis.mesh_vertices);
    std::vector<double> lfs = std::move(part.distances);
    if (injectivity_bound)
        for (auto& v : lfs) v = std::min(v, *injectivity_bound);
    return lfs;
}

RhoCheckResult check_rho_sampling(std::size_t dense_count, bool closed,
                                  const std::vector<std::size_t>& sample_positions, double rho,
                                  const std::vector<double>& lfs,
                                  const DenseSampleDistance& dist) {
    if (lfs.size() != dense_count)
        throw std::invalid_argument("check_rho_sampling: lfs size mismatch");
    if (sample_positions.size() < 2)
        throw std::invalid_argument("check_rho_sampling: need at least 2 samples");
    for (std::size_t i = 0; i + 1 < sample_positions.size(); ++i)
        if (sample_positions[i] >= sample_positions[i + 1])
            throw std::invalid_argument("check_rho_sampling: samples not in cyclic order");
    if (sample_positions.back() >= dense_count)
        throw std::invalid_argument("check_rho_sampling: sample position out of range");
    if (!closed &&
        (sample_positions.front() != 0 || sample_positions.back() != dense_count - 1))
        throw std::invalid_argument("check_rho_sampling: open curve must be sampled at both ends");

    const std::size_t k = sample_positions.size();
    const std::size_t interval_count = closed ? k : k - 1;

    RhoCheckResult result;
    result.ok = true;
    result.interval_rho.assign(interval_count, 0.0);
    result.interval_reach.assign(interval_count, kInf);

    for (std::size_t s = 0; s < interval_count; ++s) {
        const std::size_t a = sample_positions[s];
        const std::size_t b_raw = sample_positions[(s + 1) % k];
        const std::size_t b = (s + 1 == k) ? b_raw + dense_count : b_raw;  // wrap

        double reach = kInf;
        for (std::size_t p = a; p <= b; ++p) reach = std::min(reach, lfs[p % dense_count]);
        result.interval_reach[s] = reach;

        double worst = 0.0;
        for (std::size_t p = a + 1; p < b; ++p) {
            const std::size_t pi = p % dense_count;
            double d = std::min(dist(pi, s), dist(pi, (s + 1) % k));
            worst = std::max(worst, d / reach);
        }
        result.interval_rho[s] = worst;
        result.rho_worst = std::max(result.rho_worst, worst);
        if (!(worst < rho)) result.ok = false;
    }
    return result;
}

UniformCheckResult check_uniform_sampling(const std::vector<double>& consecutive_distances,
                                          double theta) {
    if (consecutive_distances.empty())
        throw std::invalid_argument("check_uniform_sampling: no distances");
    UniformCheckResult r;
    r.theta_max = *std::max_element(consecutive_distances.begin(), consecutive_distances.end());
    r.ok = r.theta_max < theta;
    return r;
}

std::vector<double> nonuniformity_ratios(const std::vector<double>& consecutive_distances) {
    const std::size_t k = consecutive_distances.size();
    if (k < 3) throw std::invalid_argument("nonuniformity_ratios: need at least 3 samples");
    std::vector<double> u(k);
    for (std::size_t i = 0; i < k; ++i) {
        double prev = consecutive_distances[(i + k - 1) % k];
        double next = consecutive_distances[i];
        if (prev <= 0.0 || next <= 0.0)
            throw std::invalid_argument("nonuniformity_ratios: zero consecutive distance");
        u[i] = std::max(prev, next) / std::min(prev, next);
    }
    return u;
}

namespace {

// Backtracking state for subsample_curve. Offsets are relative to the start
// position; an offset of n closes the loop.
struct Subsampler {
    std::size_t n;
    double rho, u;
    const std::vector<double>& lfs;
    const std::function<double(std::size_t, std::size_t)>& dist;
    std::size_t start;
    std::size_t expansions = 0;
    static constexpr std::size_t kMaxExpansions = 500000;

    std::size_t abs(std::size_t offset) const { return (start + offset) % n; }

    bool interval_ok(std::size_t a, std::size_t b) const {
        double reach = kInf;
        for (std::size_t p = a; p <= b; ++p) reach = std::min(reach, lfs[abs(p % n)]);
        for (std::size_t p = a + 1; p < b; ++p) {
            double d = std::min(dist(abs(p % n), abs(a)), dist(abs(p % n), abs(b % n)));
            if (!(d < rho * reach)) return false;
        }
        return true;
    }

    bool ratio_ok(double d0, double d1) const {
        return std::max(d0, d1) / std::min(d0, d1) < u;
    }

    bool search(std::vector<std::size_t>& chosen) {
        if (++expansions > kMaxExpansions)
            throw std::runtime_error("subsample_curve: search budget exhausted");
        const std::size_t cur = chosen.back();

        for (std::size_t next = n; next > cur; --next) {
            if (next == n && chosen.size() < 3) continue;  // closed needs >= 3 samples
            if (!interval_ok(cur, next)) continue;
            double seg = dist(abs(cur), abs(next % n));
            if (!(seg > 0.0)) continue;
            if (chosen.size() >= 2) {
                double prev = dist(abs(chosen[chosen.size() - 2]), abs(cur));
                if (!ratio_ok(prev, seg)) continue;
            }
            if (next == n) {
                // Closing: the wrap segment must also satisfy u at the start.
                double first = dist(abs(chosen[0]), abs(chosen[1]));
                if (!ratio_ok(seg, first)) continue;
                return true;
            }
            chosen.push_back(next);
            if (search(chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::vector<std::size_t> subsample_curve(std::size_t dense_count, double rho_target,
                                         double u_target, const std::vector<double>& lfs,
                                         const std::function<double(std::size_t, std::size_t)>&
                                             dense_distance,
                                         std::size_t start) {
    if (dense_count < 3) throw std::invalid_argument("subsample_curve: too few dense points");
    if (lfs.size() != dense_count)
        throw std::invalid_argument("subsample_curve: lfs size mismatch");
    if (!(rho_target > 0.0)) throw std::invalid_argument("subsample_curve: rho must be positive");
    if (!(u_target > 1.0)) throw std::invalid_argument("subsample_curve: u must exceed 1");

    Subsampler s{dense_count, rho_target, u_target, lfs, dense_distance, start % dense_count};
    std::vector<std::size_t> chosen{0};
    if (!s.search(chosen))
        throw std::runtime_error("subsample_curve: targets unsatisfiable on this dense curve");

    std::vector<std::size_t> positions;
    positions.reserve(chosen.size());
    for (std::size_t off : chosen) positions.push_back(s.abs(off));
    std::sort(positions.begin(), positions.end());

    // Self-verifying postcondition: the output must pass both checkers.
    auto dist = [&](std::size_t dense_i, std::size_t slot) {
        return dense_distance(dense_i, positions[slot]);
    };
    auto check = check_rho_sampling(dense_count, true, positions, rho_target, lfs, dist);
    std::vector<double> seg(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        seg[i] = dense_distance(positions[i], positions[(i + 1) % positions.size()]);
    auto ratios = nonuniformity_ratios(seg);
    bool u_ok = std::all_of(ratios.begin(), ratios.end(), [&](double v) { return v < u_target; });
    if (!check.ok || !u_ok)
        throw std::runtime_error("subsample_curve: postcondition verification failed");
    return positions;
}

}  // namespace surfcurve
