#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "surfcurve/distance_matrix.hpp"
#include "surfcurve/proximity_graph.hpp"
#include "surfcurve/vec3.hpp"

namespace surfcurve {

struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    double norm() const;
    Quaternion normalized() const;
    double dot(const Quaternion& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }
    std::array<std::array<double, 3>, 3> to_matrix() const;

    static Quaternion from_axis_angle(const Vec3& axis, double angle);
};

// Maps q to the w > 0 hemisphere (tie-break: first nonzero of x, y, z
// positive). Idempotent; preserves the represented rotation.
Quaternion canonicalize(const Quaternion& q);

// Rotation angle between two unit quaternions: 2*acos(<p, q>), clamped.
double so3_distance(const Quaternion& p, const Quaternion& q);

// Geodesic interpolation on the quaternion sphere.
Quaternion slerp(const Quaternion& a, const Quaternion& b, double t);

struct RigidMotion {
    Quaternion rotation;   // unit, canonicalized
    Vec3 translation;
};

RigidMotion canonicalize(const RigidMotion& s);

// Weighted product metric sqrt(w_rot*theta^2 + w_tr*|dt|^2).
double se3_distance(const RigidMotion& a, const RigidMotion& b, double w_rot = 1.0,
                    double w_tr = 1.0);

// (qw, qx, qy, qz, beta*tx, beta*ty, beta*tz) with beta = sqrt(w_tr/w_rot).
std::array<double, 7> embed_se3_r7(const RigidMotion& s, double w_rot = 1.0, double w_tr = 1.0);

DistanceMatrix se3_distance_matrix(const std::vector<RigidMotion>& poses, double w_rot = 1.0,
                                   double w_tr = 1.0);
DistanceMatrix euclidean_distance_matrix(const std::vector<std::vector<double>>& points);

// Abstract distance-only point set; backends must be true metrics.
class MetricPointSet {
public:
    virtual ~MetricPointSet() = default;
    virtual std::size_t size() const = 0;
    virtual double distance(std::size_t i, std::size_t j) const = 0;
};

class EuclideanPointSet final : public MetricPointSet {
public:
    explicit EuclideanPointSet(std::vector<std::vector<double>> points)
        : points_(std::move(points)) {}
    std::size_t size() const override { return points_.size(); }
    double distance(std::size_t i, std::size_t j) const override;
    const std::vector<std::vector<double>>& points() const { return points_; }

private:
    std::vector<std::vector<double>> points_;
};

class RigidMotionSet final : public MetricPointSet {
public:
    RigidMotionSet(std::vector<RigidMotion> poses, double w_rot, double w_tr);
    std::size_t size() const override { return poses_.size(); }
    double distance(std::size_t i, std::size_t j) const override {
        return se3_distance(poses_[i], poses_[j], w_rot_, w_tr_);
    }
    const std::vector<RigidMotion>& poses() const { return poses_; }
    double w_rot() const { return w_rot_; }
    double w_tr() const { return w_tr_; }

private:
    std::vector<RigidMotion> poses_;
    double w_rot_, w_tr_;
};

// Voronoi cell adjacency approximated by dense witness points: samples a and
// b become adjacent when some witness sees them as its two nearest samples
// with a relative distance gap below bisector_tol. Edge weights come from D.
ProximityGraph witness_dual_voronoi(
    std::size_t sample_count, std::size_t witness_count,
    const std::function<double(std::size_t witness, std::size_t sample)>& witness_sample_distance,
    const DistanceMatrix& D, double bisector_tol = 0.25);

ProximityGraph witness_dual_voronoi(const EuclideanPointSet& samples,
                                    const std::vector<std::vector<double>>& witnesses,
                                    double bisector_tol = 0.25);

ProximityGraph witness_dual_voronoi(const RigidMotionSet& samples,
                                    const std::vector<RigidMotion>& witnesses,
                                    double bisector_tol = 0.25);

}  // namespace surfcurve
