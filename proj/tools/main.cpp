// Command-line front end: curve reconstruction on meshes and rigid-motion
// traces, sampling-condition checking, subsampling, isoline extraction, and
// the MST-chain baseline.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "surfcurve/geodesics.hpp"
#include "surfcurve/io.hpp"
#include "surfcurve/mesh_io.hpp"
#include "surfcurve/pipeline.hpp"
#include "surfcurve/sampling.hpp"

using nlohmann::json;
using namespace surfcurve;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json edge_counts(const ProximityGraph& g) {
    json counts = {{"dual-voronoi", 0}, {"sig", 0}, {"sigdv", 0}, {"bridge", 0}};
    for (const auto& e : g.edges()) counts[to_string(e.tag)] = counts[to_string(e.tag)].get<int>() + 1;
    return counts;
}

void write_report(const json& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write report: " + path);
    out << report.dump(2) << '\n';
}

void emit_result(const ReconstructionResult& result, const std::string& command,
                 const std::string& tour_path, const std::string& report_path,
                 const std::string& polyline_path, const TriMesh* mesh,
                 std::optional<double> ms) {
    std::vector<std::vector<int>> blocks;
    for (const auto& t : result.tours) blocks.push_back(t.order);
    write_tour_file(blocks, tour_path);

    if (!polyline_path.empty()) {
        if (!mesh) throw IoError("polyline export requires a mesh");
        write_obj_polylines(*mesh, result.polylines, polyline_path);
    }

    if (!report_path.empty()) {
        json report;
        report["schema"] = 1;
        report["command"] = command;
        report["edge_counts"] = edge_counts(result.graph);
        report["tour_lengths"] = json::array();
        for (const auto& t : result.tours) report["tour_lengths"].push_back(t.length);
        report["tour_count"] = result.tours.size();
        report["chain_count"] = result.chains.size();
        report["bridged_edges"] = json::array();
        for (const auto& e : result.bridged_edges)
            report["bridged_edges"].push_back({e.a, e.b});
        report["warnings"] = result.warnings;
        if (ms) report["timing_ms"] = *ms;
        write_report(report, report_path);
    }
}

// Graph-geodesic distances from every dense curve vertex to every sample,
// one propagation per sample.
std::vector<std::vector<double>> dense_to_sample_distances(const TriMesh& mesh,
                                                           const std::vector<int>& curve,
                                                           const std::vector<int>& samples) {
    std::vector<std::vector<double>> d(curve.size(), std::vector<double>(samples.size()));
    for (std::size_t s = 0; s < samples.size(); ++s) {
        auto field = distance_field(mesh, samples[s]);
        for (std::size_t i = 0; i < curve.size(); ++i)
            d[i][s] = field[static_cast<std::size_t>(curve[i])];
    }
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-curve reconstruction from unordered samples on discrete manifolds"};
    app.require_subcommand(1);

    std::string mesh_path, samples_path, curve_path, poses_path, witnesses_path, field_path;
    std::string tour_path = "tour.txt", report_path, polyline_path, output_path = "samples.txt";
    double rho = 0.9, u = 1.9, theta = 0.0, value = 0.0, tol = 0.0;
    double w_rot = 1.0, w_tr = 1.0, bisector_tol = 0.25;
    std::optional<double> injectivity_bound;
    int witness_steps = 16, witness_neighbors = 3, threads = 1;
    std::size_t start = 0;
    std::uint64_t seed = 0;
    bool single = false, allow_nonmanifold = false, timing = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--report", report_path, "JSON report output path");
        cmd->add_option("--seed", seed, "seed for randomized witness sources (default 0)");
        cmd->add_option("--threads", threads, "propagation worker threads");
        cmd->add_flag("--timing", timing, "include timing_ms in the JSON report");
    };

    auto* rec = app.add_subcommand("reconstruct", "reconstruct curve(s) on a mesh");
    rec->add_option("--mesh", mesh_path, "mesh file (.off/.obj)")->required();
    rec->add_option("--samples", samples_path, "sample vertex index file")->required();
    rec->add_option("--tour", tour_path, "tour output path");
    rec->add_option("--polylines", polyline_path, "OBJ polyline export path");
    rec->add_flag("--single", single, "bridge components into a single curve");
    rec->add_flag("--allow-nonmanifold", allow_nonmanifold, "proceed on non-manifold meshes");
    add_common(rec);

    auto* recm = app.add_subcommand("reconstruct-multi", "reconstruct one curve per component");
    recm->add_option("--mesh", mesh_path)->required();
    recm->add_option("--samples", samples_path)->required();
    recm->add_option("--tour", tour_path);
    recm->add_option("--polylines", polyline_path);
    recm->add_flag("--allow-nonmanifold", allow_nonmanifold);
    add_common(recm);

    auto* motion = app.add_subcommand("reconstruct-motion", "reconstruct a rigid-motion path");
    motion->add_option("--poses", poses_path, "pose sample file")->required();
    motion->add_option("--witnesses", witnesses_path, "dense witness pose file");
    motion->add_option("--tour", tour_path);
    motion->add_option("--w-rot", w_rot, "rotation weight")->check(CLI::NonNegativeNumber);
    motion->add_option("--w-tr", w_tr, "translation weight")->check(CLI::NonNegativeNumber);
    motion->add_option("--bisector-tol", bisector_tol)->check(CLI::PositiveNumber);
    motion->add_option("--witness-steps", witness_steps)->check(CLI::PositiveNumber);
    motion->add_option("--witness-neighbors", witness_neighbors)->check(CLI::PositiveNumber);
    motion->add_flag("--single", single);
    add_common(motion);

    auto* sample = app.add_subcommand("sample", "subsample a dense curve to the targets");
    sample->add_option("--mesh", mesh_path)->required();
    sample->add_option("--curve", curve_path, "dense curve vertex index file")->required();
    sample->add_option("--output", output_path, "sample index output path");
    sample->add_option("--rho", rho)->check(CLI::PositiveNumber);
    sample->add_option("--u", u)->check(CLI::Range(1.0, 1e9));
    sample->add_option("--injectivity-bound", injectivity_bound, "lower bound on i_M");
    sample->add_option("--start", start, "dense index of the first sample");
    add_common(sample);

    auto* check = app.add_subcommand("check-sampling", "verify sampling conditions");
    check->add_option("--mesh", mesh_path)->required();
    check->add_option("--curve", curve_path)->required();
    check->add_option("--samples", samples_path)->required();
    check->add_option("--rho", rho)->check(CLI::PositiveNumber);
    check->add_option("--u", u)->check(CLI::Range(1.0, 1e9));
    check->add_option("--theta", theta, "uniform sampling threshold (0 = skip)");
    check->add_option("--injectivity-bound", injectivity_bound);
    add_common(check);

    auto* iso = app.add_subcommand("isoline", "extract isoline band samples from a field");
    iso->add_option("--mesh", mesh_path)->required();
    iso->add_option("--field", field_path, "per-vertex scalar file")->required();
    iso->add_option("--value", value)->required();
    iso->add_option("--tol", tol)->required()->check(CLI::PositiveNumber);
    iso->add_option("--output", output_path);
    add_common(iso);

    auto* base = app.add_subcommand("baseline", "MST-chain baseline");
    base->add_option("--mesh", mesh_path)->required();
    base->add_option("--samples", samples_path)->required();
    base->add_option("--tour", tour_path);
    add_common(base);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        Timer timer;
        ReconstructOptions opts;
        opts.single_curve = single;
        opts.allow_nonmanifold = allow_nonmanifold;
        opts.export_polylines = !polyline_path.empty();
        opts.w_rot = w_rot;
        opts.w_tr = w_tr;
        opts.bisector_tol = bisector_tol;
        opts.witness_steps = witness_steps;
        opts.witness_neighbors = witness_neighbors;
        opts.seed = seed;
        opts.threads = threads;

        auto elapsed = [&]() -> std::optional<double> {
            if (timing) return timer.ms();
            return std::nullopt;
        };
        auto stamp = [&](json& report) {
            if (timing) report["timing_ms"] = timer.ms();
        };

        if (rec->parsed() || recm->parsed()) {
            TriMesh mesh = load_mesh(mesh_path);
            auto samples = read_index_file(samples_path);
            auto result = (rec->parsed() && single) ? reconstruct(mesh, samples, opts)
                                                    : reconstruct_multi(mesh, samples, opts);
            emit_result(result, rec->parsed() ? "reconstruct" : "reconstruct-multi", tour_path,
                        report_path, polyline_path, &mesh, elapsed());
        } else if (motion->parsed()) {
            auto poses = read_pose_file(poses_path);
            std::vector<RigidMotion> witnesses;
            if (!witnesses_path.empty()) witnesses = read_pose_file(witnesses_path);
            opts.single_curve = single;
            auto result = reconstruct_motion(poses, witnesses, opts);
            emit_result(result, "reconstruct-motion", tour_path, report_path, "", nullptr,
                        elapsed());
        } else if (sample->parsed()) {
            TriMesh mesh = load_mesh(mesh_path);
            auto curve_vertices = read_index_file(curve_path);
            DiscreteCurve dense;
            dense.mesh_vertices = curve_vertices;
            for (int v : curve_vertices)
                dense.points.push_back(mesh.vertices()[static_cast<std::size_t>(v)]);

            auto axis = approximate_medial_axis_mesh(mesh, dense);
            auto lfs_all = mesh_local_feature_size(mesh, axis, injectivity_bound);
            std::vector<double> lfs;
            for (int v : curve_vertices) lfs.push_back(lfs_all[static_cast<std::size_t>(v)]);

            // Dense-to-dense graph distances, one propagation per point.
            auto dd = dense_to_sample_distances(mesh, curve_vertices, curve_vertices);
            auto positions = subsample_curve(
                curve_vertices.size(), rho, u, lfs,
                [&](std::size_t a, std::size_t b) { return dd[a][b]; }, start);

            std::vector<int> out;
            for (std::size_t p : positions) out.push_back(curve_vertices[p]);
            write_index_file(out, output_path);
            if (!report_path.empty()) {
                json report = {{"schema", 1}, {"command", "sample"}, {"sample_count", out.size()}};
                stamp(report);
                write_report(report, report_path);
            }
        } else if (check->parsed()) {
            TriMesh mesh = load_mesh(mesh_path);
            auto curve_vertices = read_index_file(curve_path);
            auto sample_vertices = read_index_file(samples_path);

            DiscreteCurve dense;
            dense.mesh_vertices = curve_vertices;
            for (int v : curve_vertices)
                dense.points.push_back(mesh.vertices()[static_cast<std::size_t>(v)]);

            std::vector<std::size_t> positions;
            for (int sv : sample_vertices) {
                auto it = std::find(curve_vertices.begin(), curve_vertices.end(), sv);
                if (it == curve_vertices.end())
                    throw std::invalid_argument("sample vertex not on the dense curve: " +
                                                std::to_string(sv));
                positions.push_back(static_cast<std::size_t>(it - curve_vertices.begin()));
            }
            std::sort(positions.begin(), positions.end());

            auto axis = approximate_medial_axis_mesh(mesh, dense);
            std::vector<std::string> warnings;
            if (!injectivity_bound)
                warnings.push_back("no injectivity bound supplied; injective clamp skipped");
            auto lfs_all = mesh_local_feature_size(mesh, axis, injectivity_bound);
            std::vector<double> lfs;
            for (int v : curve_vertices) lfs.push_back(lfs_all[static_cast<std::size_t>(v)]);

            std::vector<int> ordered_samples;
            for (std::size_t p : positions) ordered_samples.push_back(curve_vertices[p]);
            auto ds = dense_to_sample_distances(mesh, curve_vertices, ordered_samples);
            auto rho_result = check_rho_sampling(
                curve_vertices.size(), true, positions, rho, lfs,
                [&](std::size_t i, std::size_t s) { return ds[i][s]; });

            std::vector<double> seg(positions.size());
            for (std::size_t i = 0; i < positions.size(); ++i)
                seg[i] = ds[positions[(i + 1) % positions.size()]][i];
            auto ratios = nonuniformity_ratios(seg);
            double u_max = *std::max_element(ratios.begin(), ratios.end());
            bool u_ok = u_max < u;

            double theta_max = *std::max_element(seg.begin(), seg.end());
            bool uniform_ok = theta > 0.0 ? check_uniform_sampling(seg, theta).ok : false;

            double lfs_min = *std::min_element(lfs.begin(), lfs.end());

            json report = {{"schema", 1},
                           {"command", "check-sampling"},
                           {"rho_worst", rho_result.rho_worst},
                           {"u_max", u_max},
                           {"theta_max", theta_max},
                           {"lfs_min", lfs_min},
                           {"verdicts",
                            {{"rho_ok", rho_result.ok},
                             {"u_ok", u_ok},
                             {"uniform_ok", uniform_ok}}},
                           {"thresholds", {{"rho", rho}, {"u", u}, {"theta", theta}}},
                           {"warnings", warnings}};
            stamp(report);
            if (report_path.empty()) report_path = "report.json";
            write_report(report, report_path);
        } else if (iso->parsed()) {
            TriMesh mesh = load_mesh(mesh_path);
            auto field = read_scalar_field(field_path);
            auto out = extract_isoline_samples(mesh, field, value, tol);
            write_index_file(out, output_path);
            if (!report_path.empty()) {
                json report = {{"schema", 1}, {"command", "isoline"}, {"sample_count", out.size()}};
                stamp(report);
                write_report(report, report_path);
            }
        } else if (base->parsed()) {
            TriMesh mesh = load_mesh(mesh_path);
            auto samples = read_index_file(samples_path);
            auto D = pairwise_distances(mesh, samples, false, threads);
            auto result = mst_chain_baseline(D);
            if (result.is_chain) write_tour_file({result.tour.order}, tour_path);
            json report = {{"schema", 1},
                           {"command", "baseline"},
                           {"mst_is_chain", result.is_chain},
                           {"branching_vertices", result.branching}};
            if (result.is_chain) report["tour_length"] = result.tour.length;
            stamp(report);
            if (report_path.empty()) report_path = "report.json";
            write_report(report, report_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const MeshError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
