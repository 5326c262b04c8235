#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfcurve/distance_matrix.hpp"

namespace surfcurve {

enum class EdgeTag { DualVoronoi, Sig, Sigdv, Bridge };

std::string to_string(EdgeTag tag);

struct GraphEdge {
    int a = -1;  // a < b
    int b = -1;
    double weight = 0.0;
    EdgeTag tag = EdgeTag::DualVoronoi;
};

// Weighted undirected graph over sample indices; no self-loops, no
// duplicate edges.
class ProximityGraph {
public:
    ProximityGraph() = default;
    explicit ProximityGraph(int node_count) : n_(node_count) {}

    int node_count() const { return n_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    void add_edge(int a, int b, double weight, EdgeTag tag);
    bool has_edge(int a, int b) const;

    // Per-node component id in [0, component_count); ids assigned by lowest
    // contained node index.
    std::vector<int> components() const;
    int component_count() const;

    std::vector<std::vector<int>> adjacency() const;

private:
    int n_ = 0;
    std::vector<GraphEdge> edges_;
};

// Per-sample nearest neighbor distance under D (Definition of the
// Spheres-of-Influence graph).
std::vector<double> nearest_neighbor_distances(const DistanceMatrix& D);

// Edge (i, j) iff D_ij <= delta_NN(i) + delta_NN(j). Non-strict.
ProximityGraph sig_graph(const DistanceMatrix& D);

// Edge intersection of the dual Voronoi graph and the SIG; weights kept
// from the dual side.
ProximityGraph sigdv_graph(const ProximityGraph& dual, const ProximityGraph& sig);

struct BridgeResult {
    ProximityGraph graph;
    std::vector<GraphEdge> added;
};

// Connects the components of g by the MST of the complete component graph,
// realizing each MST edge with the closest inter-component sample pair.
BridgeResult bridge_components(const ProximityGraph& g, const DistanceMatrix& D);

}  // namespace surfcurve
