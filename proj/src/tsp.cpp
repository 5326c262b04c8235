#include "surfcurve/tsp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace surfcurve {

double tour_length(const std::vector<int>& order, const DistanceMatrix& D) {
    double len = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t a = static_cast<std::size_t>(order[i]);
        std::size_t b = static_cast<std::size_t>(order[(i + 1) % order.size()]);
        len += D(a, b);
    }
    return len;
}

std::vector<GraphEdge> minimum_spanning_tree(const ProximityGraph& g, const DistanceMatrix& D) {
    const int n = g.node_count();
    if (n < 1) throw std::invalid_argument("minimum_spanning_tree: empty graph");
    if (g.component_count() != 1)
        throw std::invalid_argument("minimum_spanning_tree: graph is not connected");

    // Candidate edges per node.
    std::vector<std::vector<GraphEdge>> incident(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        incident[static_cast<std::size_t>(e.a)].push_back(e);
        incident[static_cast<std::size_t>(e.b)].push_back(e);
    }

    std::vector<bool> in_tree(static_cast<std::size_t>(n), false);
    std::vector<GraphEdge> frontier;
    std::vector<GraphEdge> tree;

    auto absorb = [&](int v) {
        in_tree[static_cast<std::size_t>(v)] = true;
        for (const auto& e : incident[static_cast<std::size_t>(v)]) frontier.push_back(e);
    };
    absorb(0);

    while (static_cast<int>(tree.size()) < n - 1) {
        const GraphEdge* best = nullptr;
        for (const auto& e : frontier) {
            bool ina = in_tree[static_cast<std::size_t>(e.a)];
            bool inb = in_tree[static_cast<std::size_t>(e.b)];
            if (ina == inb) continue;  // both inside or both outside
            double w = D(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b));
            if (!best) {
                best = &e;
                continue;
            }
            double bw = D(static_cast<std::size_t>(best->a), static_cast<std::size_t>(best->b));
            if (w < bw || (w == bw && (e.a < best->a || (e.a == best->a && e.b < best->b))))
                best = &e;
        }
        if (!best) throw std::runtime_error("minimum_spanning_tree: frontier exhausted");
        GraphEdge chosen = *best;
        chosen.weight = D(static_cast<std::size_t>(chosen.a), static_cast<std::size_t>(chosen.b));
        tree.push_back(chosen);
        absorb(in_tree[static_cast<std::size_t>(chosen.a)] ? chosen.b : chosen.a);
    }
    return tree;
}

Tour preorder_tour(const std::vector<GraphEdge>& tree, int root, const DistanceMatrix& D) {
    const int n = static_cast<int>(tree.size()) + 1;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : tree) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    Tour t;
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (visited[static_cast<std::size_t>(v)]) continue;
        visited[static_cast<std::size_t>(v)] = true;
        t.order.push_back(v);
        // Push in descending order so the smallest child is visited first.
        const auto& nbrs = adj[static_cast<std::size_t>(v)];
        for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
            if (!visited[static_cast<std::size_t>(*it)]) stack.push_back(*it);
    }
    if (t.order.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("preorder_tour: edges do not form a spanning tree");
    t.length = tour_length(t.order, D);
    return t;
}

Tour two_opt_refine(Tour t, const DistanceMatrix& D) {
    const std::size_t n = t.order.size();
    if (n < 4) {
        t.length = tour_length(t.order, D);
        return t;
    }
    auto& p = t.order;
    bool improved = true;
    while (improved) {
        improved = false;
        const double tol = 1e-12 * tour_length(p, D);
        for (std::size_t i = 0; i + 1 < n && !improved; ++i) {
            for (std::size_t l = i + 2; l < n && !improved; ++l) {
                if (i == 0 && l == n - 1) continue;  // same pair of tour edges
                std::size_t a = static_cast<std::size_t>(p[i]);
                std::size_t b = static_cast<std::size_t>(p[i + 1]);
                std::size_t c = static_cast<std::size_t>(p[l]);
                std::size_t d = static_cast<std::size_t>(p[(l + 1) % n]);
                double delta = (D(a, c) + D(b, d)) - (D(a, b) + D(c, d));
                if (delta < -tol) {
                    std::reverse(p.begin() + static_cast<long>(i) + 1,
                                 p.begin() + static_cast<long>(l) + 1);
                    improved = true;
                }
            }
        }
    }
    t.length = tour_length(p, D);
    return t;
}

Tour solve_tsp(const ProximityGraph& g, const DistanceMatrix& D) {
    if (g.node_count() < 3) throw std::invalid_argument("solve_tsp: need at least 3 samples");
    auto tree = minimum_spanning_tree(g, D);
    Tour t = preorder_tour(tree, 0, D);
    return two_opt_refine(std::move(t), D);
}

}  // namespace surfcurve
