#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surfcurve/vec3.hpp"

namespace surfcurve {

struct MeshError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MeshEdge {
    int a = -1;  // a < b
    int b = -1;
    double length = 0.0;
};

// Indexed triangle mesh with a derived unique edge list. Immutable after
// construction; all geodesic computation runs on the vertex-edge graph.
class TriMesh {
public:
    TriMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles);

    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<MeshEdge>& edges() const { return edges_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Vertex adjacency over mesh edges: neighbors(v) -> (neighbor, edge length).
    const std::vector<std::pair<int, double>>& neighbors(int v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int edge_index(int a, int b) const;  // -1 if absent
    const std::vector<int>& edge_triangles(int edge) const {
        return edge_triangles_[static_cast<std::size_t>(edge)];
    }

    int connected_component_count() const;

private:
    std::vector<Vec3> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<MeshEdge> edges_;
    std::vector<std::vector<std::pair<int, double>>> adjacency_;
    std::vector<std::vector<int>> edge_triangles_;
};

enum class DefectKind {
    NonManifoldEdge,    // element = edge index
    NonManifoldVertex,  // element = vertex index
    IsolatedVertex,     // element = vertex index
};

struct Defect {
    DefectKind kind;
    int element;
};

struct ValidationReport {
    bool is_manifold = false;
    std::vector<Defect> defects;
    int component_count = 0;
};

ValidationReport validate_manifold(const TriMesh& mesh);

// Weighted undirected graph over vertex indices: one node per vertex, one
// edge per mesh edge, weight = Euclidean edge length.
struct VertexGraph {
    int node_count = 0;
    std::vector<std::vector<std::pair<int, double>>> adjacency;
};

VertexGraph edge_graph(const TriMesh& mesh);

}  // namespace surfcurve
