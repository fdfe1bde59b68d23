#include <catch2/catch.hpp>

#include "ochro/colouring.hpp"
#include "ochro/generators.hpp"
#include "oracles.hpp"

using namespace ochro;

TEST_CASE("is_oriented_colouring matches the forbidden-pattern definition")
{
    const auto path2 = OrientedGraph::build(3, {{0, 1}, {1, 2}});
    // arcs 0->1 and 1->2 with c(0) = c(2) realize the forbidden pattern
    CHECK_FALSE(is_oriented_colouring(path2, Colouring({0, 1, 0})));
    CHECK(is_oriented_colouring(path2, Colouring({0, 1, 2})));

    const auto triangle = OrientedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_oriented_colouring(triangle, Colouring({0, 1, 2})));
    CHECK_FALSE(is_oriented_colouring(triangle, Colouring({0, 1, 0}))); // properness

    CHECK_THROWS_AS(is_oriented_colouring(path2, Colouring({0, 1})), ColouringError);
}

TEST_CASE("is_oriented_colouring agrees with the definitional oracle")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto d = oracles::random_digraph(5, 500 + seed);
        oracles::for_each_partition(5, [&](const std::vector<int>& colour) {
            REQUIRE(is_oriented_colouring(d, Colouring(colour)) == oracles::valid_oriented(d, colour));
            return true;
        });
    }
}

TEST_CASE("is_harmonious")
{
    const auto p4 = gen_basic(GraphKind::Path, 4);
    CHECK(is_harmonious(p4, Colouring({0, 1, 2, 0}))); // pairs {0,1},{1,2},{2,0}
    CHECK_FALSE(is_harmonious(p4, Colouring({0, 1, 0, 1}))); // {0,1} twice

    CHECK(is_harmonious(gen_basic(GraphKind::Complete, 3), Colouring({0, 1, 2})));

    CHECK_THROWS_AS(is_harmonious(p4, Colouring({0, 1})), ColouringError);
}

TEST_CASE("is_harmonious agrees with the definitional oracle")
{
    const auto graphs = {gen_basic(GraphKind::Path, 5), gen_basic(GraphKind::Cycle, 5),
        gen_basic(GraphKind::Star, 5), gen_basic(GraphKind::Complete, 4)};
    for (const auto& g : graphs)
        oracles::for_each_partition(g.vertex_count(), [&](const std::vector<int>& colour) {
            REQUIRE(is_harmonious(g, Colouring(colour)) == oracles::valid_harmonious(g, colour));
            return true;
        });
}

TEST_CASE("colouring canonical form")
{
    CHECK(Colouring({0, 1, 2, 0}).colour_count() == 3);
    CHECK(Colouring({0, 1, 2, 0}).is_canonical());
    CHECK_FALSE(Colouring({0, 2, 2}).is_canonical()); // colour 1 unused
    CHECK_FALSE(Colouring({0, -1}).is_canonical());
    CHECK(Colouring(std::vector<int>{}).colour_count() == 0);
}
