#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bfimpact/generate.hpp"
#include "bfimpact/oracle.hpp"
#include "support.hpp"

namespace bfimpact {
namespace {

using oracle::naive_all_impacts;
using oracle::naive_articulation_points;
using oracle::naive_impact;

TEST(NaiveImpact, Examples) {
    EXPECT_EQ(naive_impact(testing::path_graph(3), 1), 1u);
    for (vertex_id v = 0; v < 3; ++v) {
        EXPECT_EQ(naive_impact(testing::triangle(), v), 0u);
    }
    EXPECT_EQ(naive_impact(generate({.family = Family::star, .n = 7}), 0), 5u);
    EXPECT_EQ(naive_impact(Graph::from_edges(1, {}), 0), 0u);
}

TEST(NaiveArticulationPoints, Examples) {
    EXPECT_EQ(naive_articulation_points(testing::path_graph(4)), (std::vector<vertex_id>{1, 2}));
    EXPECT_TRUE(naive_articulation_points(testing::complete_graph(4)).empty());
    const auto g = testing::pendant_triangle();
    EXPECT_EQ(naive_articulation_points(g), (std::vector<vertex_id>{*g.find("a")}));
    // Deleting an isolated vertex removes a component rather than adding one.
    EXPECT_TRUE(naive_articulation_points(Graph::from_edges(3, {})).empty());
}

TEST(NaiveAllImpacts, Examples) {
    const auto path = naive_all_impacts(testing::path_graph(6));
    std::vector<std::uint32_t> impacts;
    for (const auto& r : path.vertices) {
        impacts.push_back(r.impact);
    }
    EXPECT_EQ(impacts, (std::vector<std::uint32_t>{0, 1, 2, 2, 1, 0}));

    const auto g = testing::bowtie();
    const auto bowtie = naive_all_impacts(g);
    for (const auto& r : bowtie.vertices) {
        EXPECT_EQ(r.impact, r.label == "c" ? 2u : 0u) << r.label;
    }

    const auto empty = naive_all_impacts(Graph{});
    EXPECT_TRUE(empty.vertices.empty());
    EXPECT_EQ(empty.summary.n, 0u);
}

TEST(OracleProperties, ArticulationPointsAgreeWithImpact) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const auto g = generate(random_gnm_spec(rng, 30));
        const auto report = naive_all_impacts(g);
        std::vector<vertex_id> positive;
        for (vertex_id v = 0; v < g.n(); ++v) {
            ASSERT_EQ(naive_impact(g, v), report.vertices[v].impact);
            if (report.vertices[v].impact >= 1) {
                positive.push_back(v);
            }
            ASSERT_EQ(report.vertices[v].is_articulation, report.vertices[v].impact >= 1);
        }
        ASSERT_EQ(naive_articulation_points(g), positive);
    }
}

TEST(OracleProperties, InvariantUnderRelabeling) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
        const auto g = generate(random_gnm_spec(rng, 30));
        std::vector<vertex_id> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<Edge> moved;
        for (const auto& e : g.edges()) {
            moved.push_back({perm[e.u], perm[e.v]});
        }
        const auto h = Graph::from_edges(g.n(), moved);

        const auto a = naive_all_impacts(g);
        const auto b = naive_all_impacts(h);
        const auto ap_h = naive_articulation_points(h);
        for (vertex_id v = 0; v < g.n(); ++v) {
            ASSERT_EQ(a.vertices[v].impact, b.vertices[perm[v]].impact);
            ASSERT_EQ(a.vertices[v].component_size, b.vertices[perm[v]].component_size);
            ASSERT_EQ(a.vertices[v].is_articulation,
                      std::binary_search(ap_h.begin(), ap_h.end(), perm[v]));
        }
    }
}

}  // namespace
}  // namespace bfimpact
