#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "surfcurve/trimesh.hpp"
#include "surfcurve/vec3.hpp"

namespace surfcurve {

// Densely sampled curve, either free in space (planar fixtures use z = 0)
// or running along mesh vertices.
struct DiscreteCurve {
    std::vector<Vec3> points;
    std::vector<int> mesh_vertices;  // empty for free-space curves
    bool closed = true;
};

struct MedialAxisApprox {
    std::vector<Vec3> points;
    std::vector<int> mesh_vertices;  // set for mesh-borne approximations
    bool empty_axis = false;
    std::string method;
};

// Planar approximation: circumcenters of the brute-force Delaunay
// triangulation of the dense points whose circumradius exceeds twice the
// local sample spacing (the Voronoi-vertex poles of the curve).
MedialAxisApprox approximate_medial_axis_planar(const DiscreteCurve& dense);

// Mesh approximation: ridge vertices of the geodesic distance-to-curve
// field, detected where a mesh edge joins vertices whose nearest curve
// points are at least a quarter of the curve apart.
MedialAxisApprox approximate_medial_axis_mesh(const TriMesh& mesh, const DiscreteCurve& dense);

// min distance from a point to the axis, clamped by the injectivity bound
// when given (the injective local feature size). Throws when neither is
// available.
double local_feature_size(const Vec3& p, const MedialAxisApprox& axis,
                          std::optional<double> injectivity_bound = std::nullopt);

// Per-mesh-vertex injective lfs under the graph geodesic metric.
std::vector<double> mesh_local_feature_size(const TriMesh& mesh, const MedialAxisApprox& axis,
                                            std::optional<double> injectivity_bound = std::nullopt);

// Distance from dense point (by cyclic index) to a chosen sample (by slot in
// the sample-position list). Lets one checker serve the planar, mesh, and
// motion backends.
using DenseSampleDistance = std::function<double(std::size_t dense_index, std::size_t sample_slot)>;

struct RhoCheckResult {
    bool ok = false;
    double rho_worst = 0.0;                 // max over dense points of dist/reach
    std::vector<double> interval_rho;       // worst ratio per interval
    std::vector<double> interval_reach;     // injective reach per interval
};

// sample_positions: strictly increasing indices into the dense cyclic order.
// lfs: injective local feature size per dense point.
RhoCheckResult check_rho_sampling(std::size_t dense_count, bool closed,
                                  const std::vector<std::size_t>& sample_positions, double rho,
                                  const std::vector<double>& lfs,
                                  const DenseSampleDistance& dist);

struct UniformCheckResult {
    bool ok = false;
    double theta_max = 0.0;
};

// Strict: passes iff every consecutive distance < theta.
UniformCheckResult check_uniform_sampling(const std::vector<double>& consecutive_distances,
                                          double theta);

// u per sample from the cyclic list of consecutive distances:
// u_i = max(d_{i-1}, d_i) / min(d_{i-1}, d_i).
std::vector<double> nonuniformity_ratios(const std::vector<double>& consecutive_distances);

struct SamplingReport {
    std::vector<double> lfs;
    std::optional<double> injectivity_bound;
    std::vector<double> interval_rho;
    std::vector<double> u_values;
    double rho_worst = 0.0;
    double u_max = 0.0;
    double theta_max = 0.0;
    double lfs_min = 0.0;
    bool rho_ok = false;
    bool u_ok = false;
    bool uniform_ok = false;
    double rho_threshold = 0.0;
    double u_threshold = 0.0;
    double theta_threshold = 0.0;
    std::vector<std::string> warnings;
};

// Greedy farthest-advance subsampling with backtracking; the output is
// re-verified by the checkers before it is returned. No minimality claim.
std::vector<std::size_t> subsample_curve(std::size_t dense_count, double rho_target,
                                         double u_target, const std::vector<double>& lfs,
                                         const std::function<double(std::size_t, std::size_t)>&
                                             dense_distance,
                                         std::size_t start = 0);

}  // namespace surfcurve
