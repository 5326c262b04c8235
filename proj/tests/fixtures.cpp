#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace fixtures {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TriMesh make_icosphere(int subdivisions) {
    const double z = 1.0 / std::sqrt(5.0);
    const double r = 2.0 / std::sqrt(5.0);

    std::vector<Vec3> verts;
    verts.push_back({0.0, 0.0, 1.0});
    for (int i = 0; i < 5; ++i) {
        double a = 2.0 * kPi * i / 5.0;
        verts.push_back({r * std::cos(a), r * std::sin(a), z});
    }
    for (int i = 0; i < 5; ++i) {
        double a = 2.0 * kPi * (i + 0.5) / 5.0;
        verts.push_back({r * std::cos(a), r * std::sin(a), -z});
    }
    verts.push_back({0.0, 0.0, -1.0});

    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < 5; ++i) {
        int u0 = 1 + i, u1 = 1 + (i + 1) % 5;
        int l0 = 6 + i, l1 = 6 + (i + 1) % 5;
        tris.push_back({0, u0, u1});
        tris.push_back({u0, l0, u1});
        tris.push_back({u1, l0, l1});
        tris.push_back({11, l1, l0});
    }

    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            Vec3 m = (verts[static_cast<std::size_t>(a)] + verts[static_cast<std::size_t>(b)]) *
                     0.5;
            m = m.normalized();
            int idx = static_cast<int>(verts.size());
            verts.push_back(m);
            midpoint.emplace(key, idx);
            return idx;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(tris.size() * 4);
        for (const auto& t : tris) {
            int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
            next.push_back({t[0], ab, ca});
            next.push_back({t[1], bc, ab});
            next.push_back({t[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        tris = std::move(next);
    }
    return TriMesh(std::move(verts), std::move(tris));
}

std::vector<int> equator_ring(const TriMesh& icosphere) {
    std::vector<int> ring;
    const auto& verts = icosphere.vertices();
    for (int v = 0; v < icosphere.vertex_count(); ++v)
        if (std::abs(verts[static_cast<std::size_t>(v)].z) < 1e-12) ring.push_back(v);
    std::sort(ring.begin(), ring.end(), [&](int a, int b) {
        const auto& pa = verts[static_cast<std::size_t>(a)];
        const auto& pb = verts[static_cast<std::size_t>(b)];
        return std::atan2(pa.y, pa.x) < std::atan2(pb.y, pb.x);
    });
    return ring;
}

TriMesh make_torus(int nu, int nv, double R, double r) {
    std::vector<Vec3> verts;
    verts.reserve(static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv));
    for (int iu = 0; iu < nu; ++iu) {
        double theta = 2.0 * kPi * iu / nu;
        for (int iv = 0; iv < nv; ++iv) {
            double phi = 2.0 * kPi * iv / nv;
            double w = R + r * std::cos(phi);
            verts.push_back({w * std::cos(theta), w * std::sin(theta), r * std::sin(phi)});
        }
    }
    auto id = [nv](int iu, int iv) { return iu * nv + iv; };
    std::vector<std::array<int, 3>> tris;
    for (int iu = 0; iu < nu; ++iu) {
        int ju = (iu + 1) % nu;
        for (int iv = 0; iv < nv; ++iv) {
            int jv = (iv + 1) % nv;
            tris.push_back({id(iu, iv), id(ju, iv), id(ju, jv)});
            tris.push_back({id(iu, iv), id(ju, jv), id(iu, jv)});
        }
    }
    return TriMesh(std::move(verts), std::move(tris));
}

std::vector<int> torus_outer_ring(int nu, int nv) {
    std::vector<int> ring;
    for (int iu = 0; iu < nu; ++iu) ring.push_back(iu * nv);
    return ring;
}

TriMesh make_grid_mesh(int nx, int ny, double w, double h, double jitter, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> off(-jitter, jitter);
    std::vector<Vec3> verts;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            double x = w * ix / (nx - 1);
            double y = h * iy / (ny - 1);
            if (ix > 0 && ix < nx - 1 && iy > 0 && iy < ny - 1) {
                x += off(rng);
                y += off(rng);
            }
            verts.push_back({x, y, 0.0});
        }
    }
    auto id = [nx](int ix, int iy) { return iy * nx + ix; };
    std::vector<std::array<int, 3>> tris;
    for (int iy = 0; iy + 1 < ny; ++iy) {
        for (int ix = 0; ix + 1 < nx; ++ix) {
            int a = id(ix, iy), b = id(ix + 1, iy), c = id(ix, iy + 1), d = id(ix + 1, iy + 1);
            if ((ix + iy) % 2 == 0) {
                tris.push_back({a, b, d});
                tris.push_back({a, d, c});
            } else {
                tris.push_back({a, b, c});
                tris.push_back({b, d, c});
            }
        }
    }
    return TriMesh(std::move(verts), std::move(tris));
}

TriMesh make_tetrahedron() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Vec3> verts = {{1, 0, -s}, {-1, 0, -s}, {0, 1, s}, {0, -1, s}};
    for (auto& v : verts) v = v * 0.5;
    std::vector<std::array<int, 3>> tris = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    return TriMesh(std::move(verts), std::move(tris));
}

std::vector<Vec3> wavy_loop(int n, double base, double amp, int lobes) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * kPi * i / n;
        double r = base + amp * std::cos(lobes * t);
        pts.push_back({r * std::cos(t), r * std::sin(t), 0.0});
    }
    return pts;
}

std::vector<Vec3> circle_points(int n, double radius) {
    return wavy_loop(n, radius, 0.0, 1);
}

DistanceMatrix euclidean_matrix(const std::vector<Vec3>& pts) {
    DistanceMatrix D(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            D.set(i, j, surfcurve::distance(pts[i], pts[j]));
    return D;
}

std::set<std::pair<int, int>> delaunay_edges(const std::vector<Vec3>& pts) {
    const int n = static_cast<int>(pts.size());
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool found = false;
            for (int k = 0; k < n && !found; ++k) {
                if (k == i || k == j) continue;
                const Vec3 &a = pts[static_cast<std::size_t>(i)],
                           &b = pts[static_cast<std::size_t>(j)],
                           &c = pts[static_cast<std::size_t>(k)];
                double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
                if (std::abs(d) < 1e-14) continue;
                double a2 = a.x * a.x + a.y * a.y;
                double b2 = b.x * b.x + b.y * b.y;
                double c2 = c.x * c.x + c.y * c.y;
                double ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
                double uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
                double r2 = (a.x - ux) * (a.x - ux) + (a.y - uy) * (a.y - uy);
                bool empty = true;
                for (int m = 0; m < n && empty; ++m) {
                    if (m == i || m == j || m == k) continue;
                    double dx = pts[static_cast<std::size_t>(m)].x - ux;
                    double dy = pts[static_cast<std::size_t>(m)].y - uy;
                    if (dx * dx + dy * dy < r2 * (1.0 - 1e-12)) empty = false;
                }
                found = empty;
            }
            if (found) edges.emplace(i, j);
        }
    }
    return edges;
}

double held_karp(const DistanceMatrix& D) {
    const int n = static_cast<int>(D.size());
    if (n < 3) throw std::invalid_argument("held_karp: need at least 3 points");
    if (n > 20) throw std::invalid_argument("held_karp: instance too large");
    const int m = n - 1;  // states over nodes 1..n-1, tour anchored at 0
    const std::size_t full = std::size_t{1} << m;
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(full * static_cast<std::size_t>(m), inf);
    for (int j = 0; j < m; ++j)
        dp[(std::size_t{1} << j) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
            D(0, static_cast<std::size_t>(j + 1));
    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int j = 0; j < m; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            double cur = dp[mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
            if (cur == inf) continue;
            for (int k = 0; k < m; ++k) {
                if (mask & (std::size_t{1} << k)) continue;
                std::size_t next = mask | (std::size_t{1} << k);
                double cand =
                    cur + D(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(k + 1));
                double& slot =
                    dp[next * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)];
                if (cand < slot) slot = cand;
            }
        }
    }
    double best = inf;
    for (int j = 0; j < m; ++j) {
        double cand = dp[(full - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] +
                      D(static_cast<std::size_t>(j + 1), 0);
        best = std::min(best, cand);
    }
    return best;
}

double exhaustive_mst_weight(const DistanceMatrix& D) {
    const int n = static_cast<int>(D.size());
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    const int e = static_cast<int>(all.size());
    if (e > 20) throw std::invalid_argument("exhaustive_mst_weight: too many edges");

    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        double weight = 0.0;
        bool acyclic = true;
        for (int b = 0; b < e && acyclic; ++b) {
            if (!(mask & (1u << b))) continue;
            auto [i, j] = all[static_cast<std::size_t>(b)];
            int ri = find(i), rj = find(j);
            if (ri == rj) {
                acyclic = false;
            } else {
                parent[static_cast<std::size_t>(ri)] = rj;
                weight += D(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
        }
        if (acyclic) best = std::min(best, weight);
    }
    return best;
}

bool same_cycle(const std::vector<int>& tour, const std::vector<int>& truth) {
    if (tour.size() != truth.size() || tour.empty()) return false;
    const std::size_t n = tour.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool fwd = true, rev = true;
        for (std::size_t i = 0; i < n && (fwd || rev); ++i) {
            if (tour[i] != truth[(shift + i) % n]) fwd = false;
            if (tour[i] != truth[(shift + n - i) % n]) rev = false;
        }
        if (fwd || rev) return true;
    }
    return false;
}

}  // namespace fixtures
