#include "surfcurve/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "surfcurve/geodesics.hpp"

namespace surfcurve {

namespace {

void check_samples(const TriMesh& mesh, const std::vector<int>& samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("reconstruct: need at least 3 samples");
    std::set<int> seen;
    for (int s : samples) {
        if (s < 0 || s >= mesh.vertex_count())
            throw std::invalid_argument("reconstruct: sample vertex out of range");
        if (!seen.insert(s).second)
            throw std::invalid_argument("reconstruct: duplicate sample vertex");
    }
}

void gate_manifold(const TriMesh& mesh, const ReconstructOptions& opts,
                   std::vector<std::string>& warnings) {
    auto report = validate_manifold(mesh);
    if (report.is_manifold) return;
    if (!opts.allow_nonmanifold)
        throw MeshError("reconstruct: mesh is not manifold (" +
                                 std::to_string(report.defects.size()) +
                                 " defects); pass the override to proceed");
    warnings.push_back("proceeding on non-manifold mesh (" +
                       std::to_string(report.defects.size()) + " defects)");
}

// Solves each requested component independently and maps tours back to
// global sample indices.
void solve_components(const ProximityGraph& g, const DistanceMatrix& D,
                      ReconstructionResult& result) {
    const auto comp = g.components();
    const int nc = g.component_count();
    for (int c = 0; c < nc; ++c) {
        std::vector<int> members;
        for (int v = 0; v < g.node_count(); ++v)
            if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);

        if (members.size() < 3) {
            result.chains.push_back({members});
            result.warnings.push_back("component of " + std::to_string(members.size()) +
                                      " sample(s) emitted as a degenerate chain");
            continue;
        }

        std::vector<int> local_of(static_cast<std::size_t>(g.node_count()), -1);
        for (std::size_t i = 0; i < members.size(); ++i)
            local_of[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

        ProximityGraph sub(static_cast<int>(members.size()));
        for (const auto& e : g.edges())
            if (comp[static_cast<std::size_t>(e.a)] == c)
                sub.add_edge(local_of[static_cast<std::size_t>(e.a)],
                             local_of[static_cast<std::size_t>(e.b)], e.weight, e.tag);

        DistanceMatrix subD(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                subD.set(i, j, D(static_cast<std::size_t>(members[i]),
                                 static_cast<std::size_t>(members[j])));

        Tour local = solve_tsp(sub, subD);
        Tour global;
        global.length = local.length;
        for (int v : local.order) global.order.push_back(members[static_cast<std::size_t>(v)]);
        result.tours.push_back(std::move(global));
    }
}

ReconstructionResult run_mesh_pipeline(const TriMesh& mesh, const std::vector<int>& samples,
                                       const ReconstructOptions& opts, bool single_curve) {
    ReconstructionResult result;
    result.samples = samples;
    gate_manifold(mesh, opts, result.warnings);
    check_samples(mesh, samples);

    const auto partition = multi_source_propagate(mesh, samples);
    result.distances = pairwise_distances(mesh, samples, /*allow_infinite=*/!single_curve,
                                          opts.threads);
    const auto dual = dual_voronoi_graph(partition, mesh, result.distances);
    const auto sig = sig_graph(result.distances);
    auto sigdv = sigdv_graph(dual, sig);

    if (single_curve) {
        auto bridged = bridge_components(sigdv, result.distances);
        result.bridged_edges = bridged.added;
        result.graph = std::move(bridged.graph);
    } else {
        result.graph = std::move(sigdv);
    }

    solve_components(result.graph, result.distances, result);

    if (opts.export_polylines) {
        for (const auto& tour : result.tours) {
            std::vector<int> polyline;
            for (std::size_t i = 0; i < tour.order.size(); ++i) {
                int a = samples[static_cast<std::size_t>(tour.order[i])];
                int b = samples[static_cast<std::size_t>(
                    tour.order[(i + 1) % tour.order.size()])];
                auto path = shortest_vertex_path(mesh, a, b);
                if (!polyline.empty()) polyline.pop_back();  // joint vertex
                polyline.insert(polyline.end(), path.begin(), path.end());
            }
            result.polylines.push_back(std::move(polyline));
        }
    }
    return result;
}

}  // namespace

ReconstructionResult reconstruct(const TriMesh& mesh, const std::vector<int>& samples,
                                 const ReconstructOptions& opts) {
    return run_mesh_pipeline(mesh, samples, opts, /*single_curve=*/true);
}

ReconstructionResult reconstruct_multi(const TriMesh& mesh, const std::vector<int>& samples,
                                       const ReconstructOptions& opts) {
    return run_mesh_pipeline(mesh, samples, opts, /*single_curve=*/false);
}

ReconstructionResult reconstruct_motion(const std::vector<RigidMotion>& input_poses,
                                        const std::vector<RigidMotion>& witnesses_in,
                                        const ReconstructOptions& opts) {
    if (input_poses.size() < 3)
        throw std::invalid_argument("reconstruct_motion: need at least 3 poses");

    std::vector<RigidMotion> poses;
    poses.reserve(input_poses.size());
    for (const auto& p : input_poses) poses.push_back(canonicalize(p));

    ReconstructionResult result;
    for (std::size_t i = 0; i < poses.size(); ++i)
        result.samples.push_back(static_cast<int>(i));

    result.distances = se3_distance_matrix(poses, opts.w_rot, opts.w_tr);
    bool any_distinct = false;
    for (std::size_t i = 1; i < poses.size() && !any_distinct; ++i)
        any_distinct = result.distances(0, i) > 0.0;
    if (!any_distinct)
        throw std::invalid_argument("reconstruct_motion: all poses are identical");

    std::vector<RigidMotion> witnesses = witnesses_in;
    for (auto& w : witnesses) w = canonicalize(w);
    if (witnesses.empty()) {
        // Interpolate toward each pose's nearest neighbors so witnesses
        // concentrate near the Voronoi bisectors that decide adjacency.
        const std::size_t k = poses.size();
        const std::size_t nbrs = std::min<std::size_t>(
            static_cast<std::size_t>(std::max(1, opts.witness_neighbors)), k - 1);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> order;
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) order.push_back(j);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                double da = result.distances(i, a);
                double db = result.distances(i, b);
                return da != db ? da < db : a < b;
            });
            for (std::size_t m = 0; m < nbrs; ++m) {
                const auto& a = poses[i];
                const auto& b = poses[order[m]];
                for (int s = 1; s <= opts.witness_steps; ++s) {
                    double t = static_cast<double>(s) / (opts.witness_steps + 1);
                    RigidMotion w;
                    w.rotation = slerp(a.rotation, b.rotation, t);
                    w.translation = a.translation + t * (b.translation - a.translation);
                    witnesses.push_back(canonicalize(w));
                }
            }
        }
    }

    RigidMotionSet sample_set(poses, opts.w_rot, opts.w_tr);
    const auto dual = witness_dual_voronoi(sample_set, witnesses, opts.bisector_tol);
    const auto sig = sig_graph(result.distances);
    auto sigdv = sigdv_graph(dual, sig);

    if (opts.single_curve) {
        auto bridged = bridge_components(sigdv, result.distances);
        result.bridged_edges = bridged.added;
        result.graph = std::move(bridged.graph);
    } else {
        result.graph = std::move(sigdv);
    }
    solve_components(result.graph, result.distances, result);
    return result;
}

std::vector<int> extract_isoline_samples(const TriMesh& mesh, const std::vector<double>& field,
                                         double value, double tol) {
    if (field.size() != static_cast<std::size_t>(mesh.vertex_count()))
        throw std::invalid_argument("extract_isoline_samples: field length mismatch");
    if (!(tol > 0.0)) throw std::invalid_argument("extract_isoline_samples: tol must be positive");
    std::vector<int> out;
    for (int v = 0; v < mesh.vertex_count(); ++v)
        if (std::abs(field[static_cast<std::size_t>(v)] - value) <= tol) out.push_back(v);
    return out;
}

BaselineResult mst_chain_baseline(const DistanceMatrix& D) {
    const std::size_t n = D.size();
    if (n < 3) throw std::invalid_argument("mst_chain_baseline: need at least 3 samples");

    ProximityGraph complete(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            complete.add_edge(static_cast<int>(i), static_cast<int>(j), D(i, j),
                              EdgeTag::DualVoronoi);
    const auto tree = minimum_spanning_tree(complete, D);

    std::vector<int> degree(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : tree) {
        ++degree[static_cast<std::size_t>(e.a)];
        ++degree[static_cast<std::size_t>(e.b)];
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }

    BaselineResult result;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] > 2) result.branching.push_back(static_cast<int>(v));
    if (!result.branching.empty()) return result;

    // The tree is a simple path: walk it from the lowest-index endpoint.
    int start = -1;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) {
            start = static_cast<int>(v);
            break;
        }
    result.is_chain = true;
    result.tour.order.push_back(start);
    int prev = -1, cur = start;
    while (result.tour.order.size() < n) {
        for (int next : adj[static_cast<std::size_t>(cur)]) {
            if (next != prev) {
                result.tour.order.push_back(next);
                prev = cur;
                cur = next;
                break;
            }
        }
    }
    result.tour.length = tour_length(result.tour.order, D);
    return result;
}

}  // namespace surfcurve
