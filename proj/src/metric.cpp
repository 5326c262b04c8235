#include "surfcurve/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace surfcurve {

namespace {
constexpr double kUnitNormTolerance = 1e-6;

void require_unit(const Quaternion& q, const char* where) {
    if (std::abs(q.norm() - 1.0) > kUnitNormTolerance)
        throw std::invalid_argument(std::string(where) + ": quaternion is not unit-norm");
}
}  // namespace

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::normalized() const {
    double n = norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero quaternion");
    return {w / n, x / n, y / n, z / n};
}

std::array<std::array<double, 3>, 3> Quaternion::to_matrix() const {
    const double ww = w * w, xx = x * x, yy = y * y, zz = z * z;
    return {{{ww + xx - yy - zz, 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), ww - xx + yy - zz, 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), ww - xx - yy + zz}}};
}

Quaternion Quaternion::from_axis_angle(const Vec3& axis, double angle) {
    Vec3 u = axis.normalized();
    double s = std::sin(angle / 2.0);
    return {std::cos(angle / 2.0), u.x * s, u.y * s, u.z * s};
}

Quaternion canonicalize(const Quaternion& q) {
    Quaternion u = q.normalized();
    bool flip = false;
    if (u.w < 0.0) {
        flip = true;
    } else if (u.w == 0.0) {
        if (u.x != 0.0)
            flip = u.x < 0.0;
        else if (u.y != 0.0)
            flip = u.y < 0.0;
        else
            flip = u.z < 0.0;
    }
    return flip ? Quaternion{-u.w, -u.x, -u.y, -u.z} : u;
}

double so3_distance(const Quaternion& p, const Quaternion& q) {
    require_unit(p, "so3_distance");
    require_unit(q, "so3_distance");
    return 2.0 * std::acos(std::clamp(p.dot(q), -1.0, 1.0));
}

Quaternion slerp(const Quaternion& a, const Quaternion& b, double t) {
    double d = std::clamp(a.dot(b), -1.0, 1.0);
    double omega = std::acos(d);
    if (omega < 1e-12) {
        // Nearly identical; linear blend then renormalize.
        Quaternion q{a.w + t * (b.w - a.w), a.x + t * (b.x - a.x), a.y + t * (b.y - a.y),
                     a.z + t * (b.z - a.z)};
        return q.normalized();
    }
    double sa = std::sin((1.0 - t) * omega) / std::sin(omega);
    double sb = std::sin(t * omega) / std::sin(omega);
    return Quaternion{sa * a.w + sb * b.w, sa * a.x + sb * b.x, sa * a.y + sb * b.y,
                      sa * a.z + sb * b.z}
        .normalized();
}

RigidMotion canonicalize(const RigidMotion& s) {
    return {canonicalize(s.rotation), s.translation};
}

double se3_distance(const RigidMotion& a, const RigidMotion& b, double w_rot, double w_tr) {
    if (w_rot < 0.0 || w_tr < 0.0 || (w_rot == 0.0 && w_tr == 0.0))
        throw std::invalid_argument("se3_distance: weights must be non-negative, one positive");
    double theta = so3_distance(a.rotation, b.rotation);
    double dt = distance(a.translation, b.translation);
    return std::sqrt(w_rot * theta * theta + w_tr * dt * dt);
}

std::array<double, 7> embed_se3_r7(const RigidMotion& s, double w_rot, double w_tr) {
    double beta = std::sqrt(w_tr / w_rot);
    return {s.rotation.w,           s.rotation.x,           s.rotation.y,
            s.rotation.z,           beta * s.translation.x, beta * s.translation.y,
            beta * s.translation.z};
}

DistanceMatrix se3_distance_matrix(const std::vector<RigidMotion>& poses, double w_rot,
                                   double w_tr) {
    DistanceMatrix D(poses.size());
    for (std::size_t i = 0; i < poses.size(); ++i)
        for (std::size_t j = i + 1; j < poses.size(); ++j)
            D.set(i, j, se3_distance(poses[i], poses[j], w_rot, w_tr));
    return D;
}

double EuclideanPointSet::distance(std::size_t i, std::size_t j) const {
    const auto& p = points_[i];
    const auto& q = points_[j];
    double s = 0.0;
    for (std::size_t d = 0; d < p.size(); ++d) s += (p[d] - q[d]) * (p[d] - q[d]);
    return std::sqrt(s);
}

DistanceMatrix euclidean_distance_matrix(const std::vector<std::vector<double>>& points) {
    EuclideanPointSet set(points);
    DistanceMatrix D(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) D.set(i, j, set.distance(i, j));
    return D;
}

RigidMotionSet::RigidMotionSet(std::vector<RigidMotion> poses, double w_rot, double w_tr)
    : poses_(std::move(poses)), w_rot_(w_rot), w_tr_(w_tr) {
    for (auto& p : poses_) p = canonicalize(p);
}

ProximityGraph witness_dual_voronoi(
    std::size_t sample_count, std::size_t witness_count,
    const std::function<double(std::size_t, std::size_t)>& witness_sample_distance,
    const DistanceMatrix& D, double bisector_tol) {
    if (witness_count == 0) throw std::invalid_argument("witness_dual_voronoi: no witnesses");
    if (sample_count < 2)
        throw std::invalid_argument("witness_dual_voronoi: need at least 2 samples");

    ProximityGraph g(static_cast<int>(sample_count));
    if (sample_count == 2) {
        // Two cells in a connected space are always adjacent.
        g.add_edge(0, 1, D(0, 1), EdgeTag::DualVoronoi);
        return g;
    }
    for (std::size_t w = 0; w < witness_count; ++w) {
        std::size_t first = 0, second = 1;
        double d_first = witness_sample_distance(w, 0);
        double d_second = witness_sample_distance(w, 1);
        if (d_second < d_first) {
            std::swap(first, second);
            std::swap(d_first, d_second);
        }
        for (std::size_t s = 2; s < sample_count; ++s) {
            double d = witness_sample_distance(w, s);
            if (d < d_first) {
                second = first;
                d_second = d_first;
                first = s;
                d_first = d;
            } else if (d < d_second) {
                second = s;
                d_second = d;
            }
        }
        // Near-bisector witnesses vote for the pair of cells they sit between.
        if (d_second - d_first <= bisector_tol * d_second &&
            !g.has_edge(static_cast<int>(first), static_cast<int>(second))) {
            g.add_edge(static_cast<int>(first), static_cast<int>(second),
                       D(first, second), EdgeTag::DualVoronoi);
        }
    }
    return g;
}

ProximityGraph witness_dual_voronoi(const EuclideanPointSet& samples,
                                    const std::vector<std::vector<double>>& witnesses,
                                    double bisector_tol) {
    DistanceMatrix D(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j) D.set(i, j, samples.distance(i, j));
    auto cross = [&](std::size_t w, std::size_t s) {
        const auto& p = witnesses[w];
        const auto& q = samples.points()[s];
        double acc = 0.0;
        for (std::size_t d = 0; d < p.size(); ++d) acc += (p[d] - q[d]) * (p[d] - q[d]);
        return std::sqrt(acc);
    };
    return witness_dual_voronoi(samples.size(), witnesses.size(), cross, D, bisector_tol);
}

ProximityGraph witness_dual_voronoi(const RigidMotionSet& samples,
                                    const std::vector<RigidMotion>& witnesses,
                                    double bisector_tol) {
    DistanceMatrix D = se3_distance_matrix(samples.poses(), samples.w_rot(), samples.w_tr());
    auto cross = [&](std::size_t w, std::size_t s) {
        return se3_distance(witnesses[w], samples.poses()[s], samples.w_rot(), samples.w_tr());
    };
    return witness_dual_voronoi(samples.size(), witnesses.size(), cross, D, bisector_tol);
}

}  // namespace surfcurve
