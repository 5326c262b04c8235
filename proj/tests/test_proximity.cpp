#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "surfcurve/proximity_graph.hpp"

using namespace surfcurve;

namespace {

DistanceMatrix line_points(const std::vector<double>& xs) {
    DistanceMatrix D(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) D.set(i, j, std::abs(xs[i] - xs[j]));
    return D;
}

}  // namespace

TEST_CASE("nearest neighbor distances") {
    auto D = line_points({0, 1, 3});
    auto nn = nearest_neighbor_distances(D);
    CHECK(nn == std::vector<double>{1, 1, 2});

    auto D2 = line_points({0, 5});
    CHECK(nearest_neighbor_distances(D2) == std::vector<double>{5, 5});

    CHECK_THROWS(nearest_neighbor_distances(DistanceMatrix(1)));

    SUBCASE("random points match an exhaustive scan") {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> u(0.0, 10.0);
        std::vector<fixtures::Vec3> pts;
        for (int i = 0; i < 20; ++i) pts.push_back({u(rng), u(rng), u(rng)});
        auto Dr = fixtures::euclidean_matrix(pts);
        auto got = nearest_neighbor_distances(Dr);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double best = 1e300;
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (j != i) best = std::min(best, Dr(i, j));
            CHECK(got[i] == best);
        }
    }
}

TEST_CASE("spheres-of-influence graph") {
    SUBCASE("equilateral triple is complete") {
        DistanceMatrix D(3);
        D.set(0, 1, 1.0);
        D.set(1, 2, 1.0);
        D.set(0, 2, 1.0);
        auto g = sig_graph(D);
        CHECK(g.edges().size() == 3);
    }
    SUBCASE("0, 1, 10 on a line: boundary ties are kept") {
        auto g = sig_graph(line_points({0, 1, 10}));
        CHECK(g.edges().size() == 3);  // non-strict inequality admits (0, 10)
        CHECK(g.has_edge(0, 2));
    }
    SUBCASE("nearest-neighbor graph is always contained") {
        std::mt19937 rng(23);
        std::uniform_real_distribution<double> u(0.0, 5.0);
        for (int round = 0; round < 20; ++round) {
            std::vector<fixtures::Vec3> pts;
            for (int i = 0; i < 15; ++i) pts.push_back({u(rng), u(rng), 0.0});
            auto D = fixtures::euclidean_matrix(pts);
            auto g = sig_graph(D);
            auto nn = nearest_neighbor_distances(D);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                std::size_t best = i == 0 ? 1 : 0;
                for (std::size_t j = 0; j < pts.size(); ++j)
                    if (j != i && D(i, j) < D(i, best)) best = j;
                CHECK(g.has_edge(static_cast<int>(i), static_cast<int>(best)));
                (void)nn;
            }
        }
    }
    SUBCASE("matches the definition exhaustively on random sets") {
        std::mt19937 rng(29);
        std::uniform_real_distribution<double> u(0.0, 3.0);
        for (int round = 0; round < 10; ++round) {
            std::vector<fixtures::Vec3> pts;
            for (int i = 0; i < 30; ++i) pts.push_back({u(rng), u(rng), u(rng)});
            auto D = fixtures::euclidean_matrix(pts);
            auto g = sig_graph(D);
            auto nn = nearest_neighbor_distances(D);
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j)
                    CHECK(g.has_edge(static_cast<int>(i), static_cast<int>(j)) ==
                          (D(i, j) <= nn[i] + nn[j]));
        }
    }
}

TEST_CASE("SIGDV is the edge intersection") {
    DistanceMatrix D(3);
    D.set(0, 1, 1.0);
    D.set(1, 2, 1.0);
    D.set(0, 2, 1.5);

    ProximityGraph dual(3);
    dual.add_edge(0, 1, 1.0, EdgeTag::DualVoronoi);
    dual.add_edge(1, 2, 1.0, EdgeTag::DualVoronoi);

    SUBCASE("dual equals sig") {
        auto sig = sig_graph(D);  // complete here
        auto sigdv = sigdv_graph(dual, sig);
        CHECK(sigdv.edges().size() == dual.edges().size());
        for (const auto& e : sigdv.edges()) {
            CHECK(e.tag == EdgeTag::Sigdv);
            CHECK(dual.has_edge(e.a, e.b));
        }
    }
    SUBCASE("disjoint edge sets give an empty graph") {
        ProximityGraph sig_only(3);
        sig_only.add_edge(0, 2, 1.5, EdgeTag::Sig);
        CHECK(sigdv_graph(dual, sig_only).edges().empty());
    }
    SUBCASE("node count mismatch throws") {
        CHECK_THROWS(sigdv_graph(dual, ProximityGraph(4)));
    }
    SUBCASE("always a subset of both parents") {
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> u(0.0, 2.0);
        std::vector<fixtures::Vec3> pts;
        for (int i = 0; i < 12; ++i) pts.push_back({u(rng), u(rng), 0.0});
        auto Dr = fixtures::euclidean_matrix(pts);
        auto sig = sig_graph(Dr);
        ProximityGraph fake_dual(12);
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                if ((i + j) % 3 == 0)
                    fake_dual.add_edge(i, j, Dr(static_cast<std::size_t>(i),
                                                static_cast<std::size_t>(j)),
                                       EdgeTag::DualVoronoi);
        auto sigdv = sigdv_graph(fake_dual, sig);
        for (const auto& e : sigdv.edges()) {
            CHECK(fake_dual.has_edge(e.a, e.b));
            CHECK(sig.has_edge(e.a, e.b));
        }
    }
}

TEST_CASE("proximity graph sanity rules") {
    ProximityGraph g(4);
    g.add_edge(0, 1, 1.0, EdgeTag::Sig);
    CHECK_THROWS(g.add_edge(1, 1, 1.0, EdgeTag::Sig));
    CHECK_THROWS(g.add_edge(1, 0, 2.0, EdgeTag::Sig));  // duplicate
    CHECK_THROWS(g.add_edge(0, 7, 1.0, EdgeTag::Sig));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));

    auto comp = g.components();
    CHECK(comp[0] == comp[1]);
    CHECK(comp[2] != comp[0]);
    CHECK(g.component_count() == 3);
}

TEST_CASE("bridging components") {
    SUBCASE("connected input adds nothing") {
        DistanceMatrix D(3);
        D.set(0, 1, 1.0);
        D.set(1, 2, 1.0);
        D.set(0, 2, 2.0);
        ProximityGraph g(3);
        g.add_edge(0, 1, 1.0, EdgeTag::Sigdv);
        g.add_edge(1, 2, 1.0, EdgeTag::Sigdv);
        auto result = bridge_components(g, D);
        CHECK(result.added.empty());
        CHECK(result.graph.component_count() == 1);
    }
    SUBCASE("two components joined at their closest pair") {
        auto D = line_points({0, 1, 5, 6});
        ProximityGraph g(4);
        g.add_edge(0, 1, 1.0, EdgeTag::Sigdv);
        g.add_edge(2, 3, 1.0, EdgeTag::Sigdv);
        auto result = bridge_components(g, D);
        REQUIRE(result.added.size() == 1);
        CHECK(result.added[0].a == 1);
        CHECK(result.added[0].b == 2);
        CHECK(result.added[0].tag == EdgeTag::Bridge);
        CHECK(result.added[0].weight == doctest::Approx(4.0));
        CHECK(result.graph.component_count() == 1);
    }
    SUBCASE("four singleton components on a line") {
        auto D = line_points({0, 1, 3, 6});
        ProximityGraph g(4);
        auto result = bridge_components(g, D);
        REQUIRE(result.added.size() == 3);
        double total = 0.0;
        for (const auto& e : result.added) total += e.weight;
        CHECK(total == doctest::Approx(fixtures::exhaustive_mst_weight(D)));
        CHECK(result.graph.component_count() == 1);
    }
    SUBCASE("equal-distance tie picks the lexicographically smallest pair") {
        // two unit segments, all cross pairs at distance 2
        DistanceMatrix D(4);
        D.set(0, 1, 1.0);
        D.set(2, 3, 1.0);
        D.set(0, 2, 2.0);
        D.set(0, 3, 2.0);
        D.set(1, 2, 2.0);
        D.set(1, 3, 2.0);
        ProximityGraph g(4);
        g.add_edge(0, 1, 1.0, EdgeTag::Sigdv);
        g.add_edge(2, 3, 1.0, EdgeTag::Sigdv);
        auto result = bridge_components(g, D);
        REQUIRE(result.added.size() == 1);
        CHECK(result.added[0].a == 0);
        CHECK(result.added[0].b == 2);
    }
}
