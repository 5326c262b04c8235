#pragma once

#include <vector>

#include "surfcurve/distance_matrix.hpp"
#include "surfcurve/proximity_graph.hpp"

namespace surfcurve {

// Cyclic ordering of sample indices.
struct Tour {
    std::vector<int> order;
    double length = 0.0;
};

double tour_length(const std::vector<int>& order, const DistanceMatrix& D);

// Prim MST grown from node 0, restricted to g's edges, weighted by D.
// Equal-weight candidates resolved by the lexicographically smallest edge.
std::vector<GraphEdge> minimum_spanning_tree(const ProximityGraph& g, const DistanceMatrix& D);

// First-visit DFS order from root, children in ascending index order. Under
// a metric D the resulting cycle is at most twice the tree weight.
Tour preorder_tour(const std::vector<GraphEdge>& tree, int root, const DistanceMatrix& D);

// 2-opt local search: first improving swap in lexicographic scan order,
// restart after each application, until no swap shortens the tour by more
// than 1e-12 of its length.
Tour two_opt_refine(Tour t, const DistanceMatrix& D);

// Algorithm: MST of g -> preorder DFS tour (root 0) -> 2-opt over full D.
Tour solve_tsp(const ProximityGraph& g, const DistanceMatrix& D);

}  // namespace surfcurve
