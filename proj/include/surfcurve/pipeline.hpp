#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcurve/distance_matrix.hpp"
#include "surfcurve/metric.hpp"
#include "surfcurve/proximity_graph.hpp"
#include "surfcurve/trimesh.hpp"
#include "surfcurve/tsp.hpp"

namespace surfcurve {

struct ReconstructOptions {
    bool single_curve = false;       // bridge SIGDV components into one tour
    bool allow_nonmanifold = false;  // skip the manifoldness gate
    bool export_polylines = false;   // per-tour shortest vertex paths (meshes only)
    double w_rot = 1.0;              // SE(3) rotation weight
    double w_tr = 1.0;               // SE(3) translation weight
    double bisector_tol = 0.25;      // witness adjacency tolerance
    int witness_neighbors = 3;       // interpolation targets per pose
    int witness_steps = 16;          // interpolated witnesses per target
    std::uint64_t seed = 0;          // reserved for randomized witness sources
    int threads = 1;
};

// Open chain emitted for SIGDV components with fewer than 3 samples.
struct DegenerateChain {
    std::vector<int> samples;
};

struct ReconstructionResult {
    std::vector<Tour> tours;                  // indices into `samples`
    std::vector<DegenerateChain> chains;
    ProximityGraph graph;                     // final graph incl. bridges
    std::vector<GraphEdge> bridged_edges;
    DistanceMatrix distances;
    std::vector<int> samples;                 // input sample ids (mesh vertices or pose indices)
    std::vector<std::vector<int>> polylines;  // one vertex path per tour, when requested
    std::vector<std::string> warnings;
};

ReconstructionResult reconstruct(const TriMesh& mesh, const std::vector<int>& samples,
                                 const ReconstructOptions& opts = {});

ReconstructionResult reconstruct_multi(const TriMesh& mesh, const std::vector<int>& samples,
                                       const ReconstructOptions& opts = {});

// Witnesses default to geodesic interpolations between each pose and its
// nearest neighbors when the caller supplies none.
ReconstructionResult reconstruct_motion(const std::vector<RigidMotion>& poses,
                                        const std::vector<RigidMotion>& witnesses,
                                        const ReconstructOptions& opts = {});

// Vertices whose field value lies within tol of the isovalue.
std::vector<int> extract_isoline_samples(const TriMesh& mesh, const std::vector<double>& field,
                                         double value, double tol);

struct BaselineResult {
    bool is_chain = false;
    Tour tour;                       // path closed into a cycle, when is_chain
    std::vector<int> branching;      // vertices of MST degree > 2 otherwise
};

// Prior-art baseline: MST of the complete graph must form a simple path.
BaselineResult mst_chain_baseline(const DistanceMatrix& D);

}  // namespace surfcurve
