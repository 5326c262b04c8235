#include "surfcurve/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace surfcurve {

namespace {

std::string lowercase_extension(const std::string& path) {
    auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

// Next non-empty line with comments stripped ('#' for both formats).
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TriMesh read_off(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw MeshError("OFF: empty file");
    std::istringstream header(line);
    std::string magic;
    header >> magic;
    if (magic != "OFF") throw MeshError("OFF: missing OFF header");

    long nv = -1, nf = -1, ne = -1;
    // Counts may share the header line or follow on the next one.
    if (!(header >> nv >> nf >> ne)) {
        if (!next_content_line(in, line)) throw MeshError("OFF: missing counts");
        std::istringstream counts(line);
        if (!(counts >> nv >> nf >> ne)) throw MeshError("OFF: malformed counts");
    }
    if (nv <= 0 || nf <= 0) throw MeshError("OFF: empty mesh");

    std::vector<Vec3> vertices;
    vertices.reserve(static_cast<std::size_t>(nv));
    for (long i = 0; i < nv; ++i) {
        if (!next_content_line(in, line)) throw MeshError("OFF: truncated vertex list");
        std::istringstream ls(line);
        Vec3 v;
        if (!(ls >> v.x >> v.y >> v.z)) throw MeshError("OFF: malformed vertex line");
        vertices.push_back(v);
    }

    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(static_cast<std::size_t>(nf));
    for (long i = 0; i < nf; ++i) {
        if (!next_content_line(in, line)) throw MeshError("OFF: truncated face list");
        std::istringstream ls(line);
        int sides = 0;
        if (!(ls >> sides)) throw MeshError("OFF: malformed face line");
        if (sides != 3) throw MeshError("OFF: only triangle faces are supported");
        std::array<int, 3> tri{};
        if (!(ls >> tri[0] >> tri[1] >> tri[2])) throw MeshError("OFF: malformed face line");
        triangles.push_back(tri);
    }

    return TriMesh(std::move(vertices), std::move(triangles));
}

TriMesh read_obj(std::istream& in) {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::string line;
    while (next_content_line(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z)) throw MeshError("OBJ: malformed vertex line");
            vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<int> face;
            std::string token;
            while (ls >> token) {
                // "i", "i/t", "i/t/n", "i//n" all start with the vertex index.
                std::size_t slash = token.find('/');
                int idx = std::stoi(slash == std::string::npos ? token : token.substr(0, slash));
                if (idx < 0)
                    idx = static_cast<int>(vertices.size()) + idx;  // relative indexing
                else
                    idx -= 1;  // OBJ is 1-based
                face.push_back(idx);
            }
            if (face.size() != 3) throw MeshError("OBJ: only triangle faces are supported");
            triangles.push_back({face[0], face[1], face[2]});
        }
        // All other tags (vn, vt, usemtl, o, g, s, ...) are ignored.
    }
    if (triangles.empty()) throw MeshError("OBJ: empty mesh");
    return TriMesh(std::move(vertices), std::move(triangles));
}

TriMesh load_mesh(const std::string& path, MeshFormat format) {
    std::ifstream in(path);
    if (!in) throw MeshError("cannot open mesh file: " + path);
    return format == MeshFormat::OFF ? read_off(in) : read_obj(in);
}

TriMesh load_mesh(const std::string& path) {
    std::string ext = lowercase_extension(path);
    if (ext == "off") return load_mesh(path, MeshFormat::OFF);
    if (ext == "obj") return load_mesh(path, MeshFormat::OBJ);
    throw MeshError("unknown mesh format (expected .off or .obj): " + path);
}

void write_off(const TriMesh& mesh, std::ostream& out) {
    out.precision(17);
    out << "OFF\n" << mesh.vertex_count() << ' ' << mesh.triangle_count() << " 0\n";
    for (const auto& v : mesh.vertices()) out << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (const auto& t : mesh.triangles()) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void save_off(const TriMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MeshError("cannot write mesh file: " + path);
    write_off(mesh, out);
}

}  // namespace surfcurve
