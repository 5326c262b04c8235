#pragma once

#include <vector>

#include "surfcurve/distance_matrix.hpp"
#include "surfcurve/proximity_graph.hpp"
#include "surfcurve/trimesh.hpp"

namespace surfcurve {

// Discrete geodesic Voronoi partition of the mesh vertices: per-vertex
// nearest source label and graph-shortest-path distance to it.
struct VoronoiPartition {
    std::vector<int> labels;       // index into sources
    std::vector<double> distances;
    std::vector<int> sources;      // source vertex ids
};

// Multi-source shortest-path front propagation over the vertex-edge graph.
// Equidistant ties are resolved toward the lower sample index.
VoronoiPartition multi_source_propagate(const TriMesh& mesh, const std::vector<int>& sources);

// Samples become adjacent when their Voronoi cells touch: a mesh edge with
// two distinct endpoint labels, or a triangle carrying three distinct labels
// (which connects all three pairs). Edge weights come from D.
ProximityGraph dual_voronoi_graph(const VoronoiPartition& partition, const TriMesh& mesh,
                                  const DistanceMatrix& D);

// One single-source propagation per sample; propagations for distinct
// samples may run on separate threads (the mesh is shared read-only and
// each worker writes disjoint matrix rows). Disconnected sample pairs are
// an error unless allow_infinite is set.
DistanceMatrix pairwise_distances(const TriMesh& mesh, const std::vector<int>& samples,
                                  bool allow_infinite = false, int threads = 1);

// Shortest edge path between two vertices, endpoints included.
std::vector<int> shortest_vertex_path(const TriMesh& mesh, int a, int b);

// Distance field of a single-source propagation (helper shared by the
// sampling checks).
std::vector<double> distance_field(const TriMesh& mesh, int source);

}  // namespace surfcurve
