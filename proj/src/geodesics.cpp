#include "surfcurve/geodesics.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>

namespace surfcurve {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct QueueEntry {
    double dist;
    int label;
    int vertex;
    bool operator>(const QueueEntry& o) const {
        if (dist != o.dist) return dist > o.dist;
        if (label != o.label) return label > o.label;
        return vertex > o.vertex;
    }
};

void check_sources(const TriMesh& mesh, const std::vector<int>& sources) {
    if (sources.empty()) throw std::invalid_argument("propagate: empty source set");
    std::set<int> seen;
    for (int s : sources) {
        if (s < 0 || s >= mesh.vertex_count())
            throw std::invalid_argument("propagate: source vertex out of range");
        if (!seen.insert(s).second)
            throw std::invalid_argument("propagate: duplicate source vertex");
    }
}

}  // namespace

VoronoiPartition multi_source_propagate(const TriMesh& mesh, const std::vector<int>& sources) {
    check_sources(mesh, sources);
    const std::size_t nv = static_cast<std::size_t>(mesh.vertex_count());

    VoronoiPartition part;
    part.sources = sources;
    part.labels.assign(nv, -1);
    part.distances.assign(nv, kInf);

    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        part.labels[static_cast<std::size_t>(sources[i])] = static_cast<int>(i);
        part.distances[static_cast<std::size_t>(sources[i])] = 0.0;
        queue.push({0.0, static_cast<int>(i), sources[i]});
    }

    while (!queue.empty()) {
        const auto [d, label, v] = queue.top();
        queue.pop();
        const std::size_t vi = static_cast<std::size_t>(v);
        if (d != part.distances[vi] || label != part.labels[vi]) continue;  // stale
        for (const auto& [u, w] : mesh.neighbors(v)) {
            const std::size_t ui = static_cast<std::size_t>(u);
            const double nd = d + w;
            // Lower sample index wins equidistant ties.
            if (nd < part.distances[ui] ||
                (nd == part.distances[ui] && label < part.labels[ui])) {
                part.distances[ui] = nd;
                part.labels[ui] = label;
                queue.push({nd, label, u});
            }
        }
    }
    return part;
}

ProximityGraph dual_voronoi_graph(const VoronoiPartition& partition, const TriMesh& mesh,
                                  const DistanceMatrix& D) {
    if (partition.labels.size() != static_cast<std::size_t>(mesh.vertex_count()))
        throw std::invalid_argument("dual_voronoi_graph: partition/mesh mismatch");

    std::set<std::pair<int, int>> pairs;
    auto note = [&](int a, int b) {
        if (a < 0 || b < 0 || a == b) return;
        pairs.emplace(std::min(a, b), std::max(a, b));
    };

    for (const auto& e : mesh.edges())
        note(partition.labels[static_cast<std::size_t>(e.a)],
             partition.labels[static_cast<std::size_t>(e.b)]);

    for (const auto& tri : mesh.triangles()) {
        int la = partition.labels[static_cast<std::size_t>(tri[0])];
        int lb = partition.labels[static_cast<std::size_t>(tri[1])];
        int lc = partition.labels[static_cast<std::size_t>(tri[2])];
        if (la != lb && lb != lc && la != lc) {
            note(la, lb);
            note(lb, lc);
            note(la, lc);
        }
    }

    ProximityGraph g(static_cast<int>(partition.sources.size()));
    for (const auto& [a, b] : pairs)
        g.add_edge(a, b, D(static_cast<std::size_t>(a), static_cast<std::size_t>(b)),
                   EdgeTag::DualVoronoi);
    return g;
}

std::vector<double> distance_field(const TriMesh& mesh, int source) {
    return multi_source_propagate(mesh, {source}).distances;
}

DistanceMatrix pairwise_distances(const TriMesh& mesh, const std::vector<int>& samples,
                                  bool allow_infinite, int threads) {
    check_sources(mesh, samples);
    const std::size_t k = samples.size();
    std::vector<std::vector<double>> rows(k);

    auto worker = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < k; i += stride)
            rows[i] = distance_field(mesh, samples[i]);
    };

    const std::size_t nthreads =
        std::min<std::size_t>(std::max(threads, 1), k);
    if (nthreads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker, t, nthreads);
        for (auto& th : pool) th.join();
    }

    DistanceMatrix D(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double d = rows[i][static_cast<std::size_t>(samples[j])];
            if (!std::isfinite(d) && !allow_infinite)
                throw std::runtime_error("pairwise_distances: disconnected sample pair");
            D.set(i, j, d);
        }
    }
    return D;
}

std::vector<int> shortest_vertex_path(const TriMesh& mesh, int a, int b) {
    if (a < 0 || a >= mesh.vertex_count() || b < 0 || b >= mesh.vertex_count())
        throw std::invalid_argument("shortest_vertex_path: vertex out of range");
    if (a == b) return {a};

    const std::size_t nv = static_cast<std::size_t>(mesh.vertex_count());
    std::vector<double> dist(nv, kInf);
    std::vector<int> prev(nv, -1);
    dist[static_cast<std::size_t>(a)] = 0.0;

    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    queue.push({0.0, 0, a});
    while (!queue.empty()) {
        const auto [d, label, v] = queue.top();
        (void)label;
        queue.pop();
        if (d != dist[static_cast<std::size_t>(v)]) continue;
        if (v == b) break;
        for (const auto& [u, w] : mesh.neighbors(v)) {
            const std::size_t ui = static_cast<std::size_t>(u);
            if (d + w < dist[ui]) {
                dist[ui] = d + w;
                prev[ui] = v;
                queue.push({d + w, 0, u});
            }
        }
    }

    if (!std::isfinite(dist[static_cast<std::size_t>(b)]))
        throw std::runtime_error("shortest_vertex_path: vertices are disconnected");

    std::vector<int> path;
    for (int v = b; v != -1; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace surfcurve
