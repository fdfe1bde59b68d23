#include <catch2/catch.hpp>

#include "ochro/generators.hpp"
#include "ochro/reporting.hpp"

using namespace ochro;

TEST_CASE("bounds json carries the fixed schema")
{
    const auto j = bounds_json(bounds_report(gen_hypercube(3)));

    REQUIRE(j.contains("graph"));
    for (const char* key : {"n", "m", "max_degree", "avg_degree"})
        REQUIRE(j["graph"].contains(key));
    REQUIRE(j.contains("lower"));
    for (const char* key : {"ksz", "lemma3", "lemma4", "lemma5", "degree_lb"})
        REQUIRE(j["lower"].contains(key));
    REQUIRE(j.contains("upper"));
    for (const char* key : {"mx", "degree_ub", "trivial"})
        REQUIRE(j["upper"].contains(key));
    REQUIRE(j.contains("bracket"));
    REQUIRE(j["bracket"].contains("lo"));
    REQUIRE(j["bracket"].contains("hi"));
    REQUIRE(j["flags"].is_array());

    CHECK(j["graph"]["n"] == 8);
    CHECK(j["graph"]["m"] == 12);
    CHECK(j["lower"]["ksz"] == 3);
    CHECK(j["lower"]["lemma4"].is_number()); // applicable on hypercubes
    CHECK(j["lower"]["lemma5"].is_null()); // degenerate at avg degree = log2 n
}

TEST_CASE("inapplicable bounds serialize as null")
{
    const auto p4 = bounds_json(bounds_report(gen_basic(GraphKind::Path, 4)));
    CHECK(p4["lower"]["lemma4"].is_null());
    CHECK(p4["lower"]["lemma5"].is_null());
    CHECK(p4["lower"]["lemma3"].is_number()); // reported even outside the regime
}

TEST_CASE("text and json bounds report identical numbers")
{
    const auto report = bounds_report(gen_hypercube(10));
    const auto j = bounds_json(report);
    const std::string text = bounds_text(report);
    CHECK(text.find("ksz=" + j["lower"]["ksz"].dump()) != std::string::npos);
    CHECK(text.find("lemma3=" + fmt6(j["lower"]["lemma3"].get<double>())) != std::string::npos);
    CHECK(text.find("lemma4=" + fmt6(j["lower"]["lemma4"].get<double>())) != std::string::npos);
    CHECK(text.find("mx=" + fmt6(j["upper"]["mx"].get<double>())) != std::string::npos);
    CHECK(text.find("[" + j["bracket"]["lo"].dump() + ", " + j["bracket"]["hi"].dump() + "]")
        != std::string::npos);
}

TEST_CASE("fmt6 keeps six significant digits")
{
    CHECK(fmt6(25.62370391596628) == "25.6237");
    CHECK(fmt6(0.8007407473739463) == "0.800741");
    CHECK(fmt6(639.687423668779) == "639.687");
    CHECK(round6(25.62370391596628) == Approx(25.6237));
}

TEST_CASE("search and oclique json shapes")
{
    const auto d = OrientedGraph::build(3, {{0, 1}, {1, 2}});
    const auto sj = search_json(ochi_exact(d));
    for (const char* key : {"value", "lower", "upper", "completed", "nodes", "orientation_mask"})
        REQUIRE(sj.contains(key));
    CHECK(sj["value"] == 3);
    CHECK(sj["orientation_mask"].is_null());

    const auto oj = oclique_json(pair_diameter(d), d.vertex_count());
    CHECK(oj["pair_diameter"] == 2);
    CHECK(oj["oclique"] == true);
    CHECK(oj["witness_pair"].is_array());

    const auto disconnected = OrientedGraph::build(2, {});
    const auto inf = oclique_json(pair_diameter(disconnected), 2);
    CHECK(inf["finite"] == false);
    CHECK(inf["pair_diameter"].is_null());
}

TEST_CASE("lemma2 json lists every check")
{
    const auto j = lemma2_json(verify_lemma2(4));
    CHECK(j["p"] == 4);
    CHECK(j["n"] == 6);
    CHECK(j["all_passed"] == true);
    REQUIRE(j["checks"].is_array());
    REQUIRE(j["checks"].size() == 6);
    for (const auto& check : j["checks"]) {
        REQUIRE(check.contains("name"));
        REQUIRE(check["passed"] == true);
    }
}
