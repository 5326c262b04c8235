#include "surfcurve/trimesh.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace surfcurve {

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
    if (triangles_.empty()) throw MeshError("mesh has no triangles");
    const int nv = vertex_count();
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
        const auto& tri = triangles_[t];
        for (int c = 0; c < 3; ++c) {
            if (tri[c] < 0 || tri[c] >= nv)
                throw MeshError("triangle " + std::to_string(t) +
                                " references out-of-range vertex " + std::to_string(tri[c]));
        }
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
            throw MeshError("triangle " + std::to_string(t) + " has repeated vertices");
    }

    std::map<std::pair<int, int>, int> edge_ids;
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
        const auto& tri = triangles_[t];
        for (int c = 0; c < 3; ++c) {
            int a = tri[c];
            int b = tri[(c + 1) % 3];
            if (a > b) std::swap(a, b);
            auto key = std::make_pair(a, b);
            auto it = edge_ids.find(key);
            if (it == edge_ids.end()) {
                double len = distance(vertices_[a], vertices_[b]);
                if (!(len > 0.0))
                    throw MeshError("degenerate zero-length edge (" + std::to_string(a) +
                                    ", " + std::to_string(b) + ")");
                it = edge_ids.emplace(key, static_cast<int>(edges_.size())).first;
                edges_.push_back({a, b, len});
                edge_triangles_.emplace_back();
            }
            edge_triangles_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(t));
        }
    }

    adjacency_.resize(static_cast<std::size_t>(nv));
    for (const auto& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.a)].emplace_back(e.b, e.length);
        adjacency_[static_cast<std::size_t>(e.b)].emplace_back(e.a, e.length);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int TriMesh::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    // Linear scan over the smaller endpoint's neighborhood via binary search
    // on the sorted edge list would need an index; edges are few per vertex.
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].a == a && edges_[i].b == b) return static_cast<int>(i);
    return -1;
}

int TriMesh::connected_component_count() const {
    const int nv = vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(nv), -1);
    int count = 0;
    std::vector<int> stack;
    for (int start = 0; start < nv; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        comp[static_cast<std::size_t>(start)] = count;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [u, w] : adjacency_[static_cast<std::size_t>(v)]) {
                (void)w;
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    return count;
}

namespace {

// A vertex is manifold when its incident triangles form a single fan
// (closed) or half-fan (boundary). Checked by counting connected components
// of the triangle-around-vertex graph where triangles are linked when they
// share an edge through the vertex, plus the closed/boundary edge balance.
bool vertex_is_fan(const TriMesh& mesh, int v, const std::vector<int>& incident) {
    if (incident.empty()) return false;
    // Map opposite edges of v in each incident triangle.
    std::map<std::pair<int, int>, std::vector<int>> wing;  // (v,u) edge -> local tri ids
    for (std::size_t li = 0; li < incident.size(); ++li) {
        const auto& tri = mesh.triangles()[static_cast<std::size_t>(incident[li])];
        for (int c = 0; c < 3; ++c) {
            if (tri[c] != v) continue;
            int u1 = tri[(c + 1) % 3];
            int u2 = tri[(c + 2) % 3];
            wing[{std::min(v, u1), std::max(v, u1)}].push_back(static_cast<int>(li));
            wing[{std::min(v, u2), std::max(v, u2)}].push_back(static_cast<int>(li));
        }
    }
    int boundary_edges = 0;
    for (const auto& [e, tris] : wing) {
        (void)e;
        if (tris.size() > 2) return false;  // non-manifold edge through v
        if (tris.size() == 1) ++boundary_edges;
    }
    if (boundary_edges != 0 && boundary_edges != 2) return false;

    // Single connected fan component.
    std::vector<int> comp(incident.size(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (const auto& [e, tris] : wing) {
            (void)e;
            if (tris.size() != 2) continue;
            if (tris[0] == t && comp[static_cast<std::size_t>(tris[1])] < 0) {
                comp[static_cast<std::size_t>(tris[1])] = 0;
                stack.push_back(tris[1]);
            } else if (tris[1] == t && comp[static_cast<std::size_t>(tris[0])] < 0) {
                comp[static_cast<std::size_t>(tris[0])] = 0;
                stack.push_back(tris[0]);
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace

ValidationReport validate_manifold(const TriMesh& mesh) {
    ValidationReport report;
    for (int e = 0; e < mesh.edge_count(); ++e) {
        if (mesh.edge_triangles(e).size() > 2)
            report.defects.push_back({DefectKind::NonManifoldEdge, e});
    }

    std::vector<std::vector<int>> incident(static_cast<std::size_t>(mesh.vertex_count()));
    for (int t = 0; t < mesh.triangle_count(); ++t)
        for (int c = 0; c < 3; ++c)
            incident[static_cast<std::size_t>(mesh.triangles()[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)])].push_back(t);

    for (int v = 0; v < mesh.vertex_count(); ++v) {
        const auto& inc = incident[static_cast<std::size_t>(v)];
        if (inc.empty()) {
            report.defects.push_back({DefectKind::IsolatedVertex, v});
        } else if (!vertex_is_fan(mesh, v, inc)) {
            report.defects.push_back({DefectKind::NonManifoldVertex, v});
        }
    }

    report.is_manifold = report.defects.empty();
    report.component_count = mesh.connected_component_count();
    return report;
}

VertexGraph edge_graph(const TriMesh& mesh) {
    VertexGraph g;
    g.node_count = mesh.vertex_count();
    g.adjacency.resize(static_cast<std::size_t>(g.node_count));
    for (int v = 0; v < g.node_count; ++v) g.adjacency[static_cast<std::size_t>(v)] = mesh.neighbors(v);
    return g;
}

}  // namespace surfcurve
