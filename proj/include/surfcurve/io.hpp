#pragma once

#include <string>
#include <vector>

#include "surfcurve/metric.hpp"
#include "surfcurve/trimesh.hpp"

namespace surfcurve {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One integer per line, '#' comments.
std::vector<int> read_index_file(const std::string& path);
void write_index_file(const std::vector<int>& indices, const std::string& path);

// One float per vertex line, '#' comments.
std::vector<double> read_scalar_field(const std::string& path);

// "qw qx qy qz tx ty tz" per line, '#' comments.
std::vector<RigidMotion> read_pose_file(const std::string& path);
void write_pose_file(const std::vector<RigidMotion>& poses, const std::string& path);

// One sample index per line in cyclic order, one block per tour separated
// by blank lines.
void write_tour_file(const std::vector<std::vector<int>>& tours, const std::string& path);
std::vector<std::vector<int>> read_tour_file(const std::string& path);

// Tour polylines as OBJ line elements over the mesh vertex positions.
void write_obj_polylines(const TriMesh& mesh, const std::vector<std::vector<int>>& polylines,
                         const std::string& path);

}  // namespace surfcurve
