#include "surfcurve/io.hpp"

#include <fstream>
#include <sstream>

namespace surfcurve {

namespace {

std::vector<std::string> content_lines(const std::string& path, bool keep_blank = false) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
        if (blank && !keep_blank) continue;
        lines.push_back(blank ? std::string() : line);
    }
    return lines;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write file: " + path);
    out.precision(17);
    return out;
}

}  // namespace

std::vector<int> read_index_file(const std::string& path) {
    std::vector<int> out;
    for (const auto& line : content_lines(path)) {
        std::istringstream ls(line);
        int v;
        if (!(ls >> v)) throw IoError("malformed index line in " + path + ": '" + line + "'");
        out.push_back(v);
    }
    return out;
}

void write_index_file(const std::vector<int>& indices, const std::string& path) {
    auto out = open_out(path);
    for (int v : indices) out << v << '\n';
}

std::vector<double> read_scalar_field(const std::string& path) {
    std::vector<double> out;
    for (const auto& line : content_lines(path)) {
        std::istringstream ls(line);
        double v;
        if (!(ls >> v)) throw IoError("malformed scalar line in " + path + ": '" + line + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<RigidMotion> read_pose_file(const std::string& path) {
    std::vector<RigidMotion> out;
    for (const auto& line : content_lines(path)) {
        std::istringstream ls(line);
        RigidMotion p;
        if (!(ls >> p.rotation.w >> p.rotation.x >> p.rotation.y >> p.rotation.z >>
              p.translation.x >> p.translation.y >> p.translation.z))
            throw IoError("malformed pose line in " + path + ": '" + line + "'");
        out.push_back(p);
    }
    return out;
}

void write_pose_file(const std::vector<RigidMotion>& poses, const std::string& path) {
    auto out = open_out(path);
    for (const auto& p : poses)
        out << p.rotation.w << ' ' << p.rotation.x << ' ' << p.rotation.y << ' ' << p.rotation.z
            << ' ' << p.translation.x << ' ' << p.translation.y << ' ' << p.translation.z << '\n';
}

void write_tour_file(const std::vector<std::vector<int>>& tours, const std::string& path) {
    auto out = open_out(path);
    for (std::size_t t = 0; t < tours.size(); ++t) {
        if (t > 0) out << '\n';
        for (int s : tours[t]) out << s << '\n';
    }
}

std::vector<std::vector<int>> read_tour_file(const std::string& path) {
    std::vector<std::vector<int>> tours;
    std::vector<int> current;
    for (const auto& line : content_lines(path, /*keep_blank=*/true)) {
        if (line.empty()) {
            if (!current.empty()) tours.push_back(std::move(current));
            current.clear();
            continue;
        }
        std::istringstream ls(line);
        int v;
        if (!(ls >> v)) throw IoError("malformed tour line in " + path + ": '" + line + "'");
        current.push_back(v);
    }
    if (!current.empty()) tours.push_back(std::move(current));
    return tours;
}

void write_obj_polylines(const TriMesh& mesh, const std::vector<std::vector<int>>& polylines,
                         const std::string& path) {
    auto out = open_out(path);
    for (const auto& v : mesh.vertices()) out << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (const auto& poly : polylines) {
        out << 'l';
        for (int v : poly) out << ' ' << v + 1;
        if (!poly.empty()) out << ' ' << poly.front() + 1;  // close the loop
        out << '\n';
    }
}

}  // namespace surfcurve
