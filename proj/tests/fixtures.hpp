#pragma once

// Shared synthetic geometry and independent oracles for the test suites.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "surfcurve/distance_matrix.hpp"
#include "surfcurve/trimesh.hpp"
#include "surfcurve/vec3.hpp"

namespace fixtures {

using surfcurve::DistanceMatrix;
using surfcurve::TriMesh;
using surfcurve::Vec3;

// Unit icosphere with the poles on the z axis (vertex 0 = north pole). Each
// subdivision splits every triangle 4-to-1 and reprojects to the sphere; the
// equator stays an exact vertex cycle at every level >= 1.
TriMesh make_icosphere(int subdivisions);

// Equatorial vertex ring (z == 0), ordered by angle; consecutive entries
// share a mesh edge.
std::vector<int> equator_ring(const TriMesh& icosphere);

// Torus of major radius R and tube radius r, nu x nv vertex grid. Vertex
// (iu, iv) has index iu * nv + iv.
TriMesh make_torus(int nu, int nv, double R, double r);

// Outer equator (tube angle 0) as an ordered vertex ring of length nu.
std::vector<int> torus_outer_ring(int nu, int nv);

// Flat triangulated grid in the z = 0 plane over [0, w] x [0, h] with
// nx x ny vertices, alternating diagonals, interior vertices jittered by up
// to `jitter` in x and y. Vertex (ix, iy) has index iy * nx + ix.
TriMesh make_grid_mesh(int nx, int ny, double w, double h, double jitter, std::uint32_t seed);

// Regular tetrahedron with unit edge length.
TriMesh make_tetrahedron();

// Planar closed curve r(t) = base + amp * cos(lobes * t), n points, z = 0.
std::vector<Vec3> wavy_loop(int n, double base, double amp, int lobes);

std::vector<Vec3> circle_points(int n, double radius);

DistanceMatrix euclidean_matrix(const std::vector<Vec3>& pts);

// Brute-force Delaunay edges of a planar point set in general position:
// (i, j) is Delaunay iff some circumcircle through i, j and a third point is
// empty. O(n^4).
std::set<std::pair<int, int>> delaunay_edges(const std::vector<Vec3>& pts);

// Exact TSP optimum (closed tour) by Held-Karp dynamic programming, n <= 20.
double held_karp(const DistanceMatrix& D);

// Minimum spanning tree weight of the complete graph over D by exhaustive
// enumeration of edge subsets (n small).
double exhaustive_mst_weight(const DistanceMatrix& D);

// True iff `tour` equals `truth` as a cyclic sequence up to rotation and
// reflection.
bool same_cycle(const std::vector<int>& tour, const std::vector<int>& truth);

}  // namespace fixtures
