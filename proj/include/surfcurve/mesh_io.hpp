#pragma once

#include <iosfwd>
#include <string>

#include "surfcurve/trimesh.hpp"

namespace surfcurve {

enum class MeshFormat { OFF, OBJ };

// Format deduced from the file extension (.off / .obj) unless forced.
TriMesh load_mesh(const std::string& path);
TriMesh load_mesh(const std::string& path, MeshFormat format);

TriMesh read_off(std::istream& in);
TriMesh read_obj(std::istream& in);

void save_off(const TriMesh& mesh, const std::string& path);
void write_off(const TriMesh& mesh, std::ostream& out);

}  // namespace surfcurve
