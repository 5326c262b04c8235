#include "surfcurve/proximity_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace surfcurve {

std::string to_string(EdgeTag tag) {
    switch (tag) {
        case EdgeTag::DualVoronoi: return "dual-voronoi";
        case EdgeTag::Sig: return "sig";
        case EdgeTag::Sigdv: return "sigdv";
        case EdgeTag::Bridge: return "bridge";
    }
    return "?";
}

void ProximityGraph::add_edge(int a, int b, double weight, EdgeTag tag) {
    if (a == b) throw std::invalid_argument("proximity graph: self-loop");
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw std::invalid_argument("proximity graph: node index out of range");
    if (a > b) std::swap(a, b);
    if (has_edge(a, b)) throw std::invalid_argument("proximity graph: duplicate edge");
    edges_.push_back({a, b, weight, tag});
}

bool ProximityGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const GraphEdge& e) { return e.a == a && e.b == b; });
}

std::vector<int> ProximityGraph::components() const {
    std::vector<std::vector<int>> adj = adjacency();
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    int count = 0;
    std::vector<int> stack;
    for (int start = 0; start < n_; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        comp[static_cast<std::size_t>(start)] = count;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    return comp;
}

int ProximityGraph::component_count() const {
    const auto comp = components();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<std::vector<int>> ProximityGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<double> nearest_neighbor_distances(const DistanceMatrix& D) {
    const std::size_t n = D.size();
    if (n < 2) throw std::invalid_argument("nearest_neighbor_distances: need at least 2 samples");
    std::vector<double> nn(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) nn[i] = std::min(nn[i], D(i, j));
    return nn;
}

ProximityGraph sig_graph(const DistanceMatrix& D) {
    const auto nn = nearest_neighbor_distances(D);
    const std::size_t n = D.size();
    ProximityGraph g(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (D(i, j) <= nn[i] + nn[j])
                g.add_edge(static_cast<int>(i), static_cast<int>(j), D(i, j), EdgeTag::Sig);
    return g;
}

ProximityGraph sigdv_graph(const ProximityGraph& dual, const ProximityGraph& sig) {
    if (dual.node_count() != sig.node_count())
        throw std::invalid_argument("sigdv_graph: node count mismatch");
    ProximityGraph g(dual.node_count());
    for (const auto& e : dual.edges())
        if (sig.has_edge(e.a, e.b)) g.add_edge(e.a, e.b, e.weight, EdgeTag::Sigdv);
    return g;
}

BridgeResult bridge_components(const ProximityGraph& g, const DistanceMatrix& D) {
    BridgeResult result;
    result.graph = g;

    const auto comp = g.components();
    const int nc = g.component_count();
    if (nc <= 1) return result;

    const int n = g.node_count();
    // Closest sample pair per component pair; ties broken by the
    // lexicographically smallest (a, b).
    struct Pair {
        double d = std::numeric_limits<double>::infinity();
        int a = -1, b = -1;
    };
    std::vector<Pair> best(static_cast<std::size_t>(nc * nc));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int ca = comp[static_cast<std::size_t>(a)];
            int cb = comp[static_cast<std::size_t>(b)];
            if (ca == cb) continue;
            if (ca > cb) std::swap(ca, cb);
            Pair& p = best[static_cast<std::size_t>(ca * nc + cb)];
            double d = D(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            if (d < p.d || (d == p.d && (a < p.a || (a == p.a && b < p.b)))) p = {d, a, b};
        }
    }

    // Kruskal MST over the complete component graph.
    struct CompEdge {
        double d;
        int ca, cb;
    };
    std::vector<CompEdge> comp_edges;
    for (int ca = 0; ca < nc; ++ca)
        for (int cb = ca + 1; cb < nc; ++cb)
            comp_edges.push_back({best[static_cast<std::size_t>(ca * nc + cb)].d, ca, cb});
    std::sort(comp_edges.begin(), comp_edges.end(), [](const CompEdge& x, const CompEdge& y) {
        if (x.d != y.d) return x.d < y.d;
        if (x.ca != y.ca) return x.ca < y.ca;
        return x.cb < y.cb;
    });

    std::vector<int> parent(static_cast<std::size_t>(nc));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };

    for (const auto& ce : comp_edges) {
        int ra = find(ce.ca);
        int rb = find(ce.cb);
        if (ra == rb) continue;
        parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
        const Pair& p = best[static_cast<std::size_t>(ce.ca * nc + ce.cb)];
        result.graph.add_edge(p.a, p.b, p.d, EdgeTag::Bridge);
        result.added.push_back({p.a, p.b, p.d, EdgeTag::Bridge});
    }
    return result;
}

}  // namespace surfcurve
