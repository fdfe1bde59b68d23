#include <catch2/catch.hpp>

#include "ochro/bounds.hpp"
#include "ochro/colouring.hpp"
#include "ochro/experiment.hpp"
#include "ochro/generators.hpp"

using namespace ochro;

TEST_CASE("experiment runs are reproducible bit for bit")
{
    const auto first = run_experiment(3, 20, 1);
    const auto second = run_experiment(3, 20, 1);
    CHECK(experiment_csv(first) == experiment_csv(second));

    const auto other_seed = run_experiment(3, 20, 2);
    CHECK(experiment_csv(first) != experiment_csv(other_seed));
}

TEST_CASE("thread count does not change the record")
{
    const auto sequential = run_experiment(3, 30, 7, Budget{}, 1);
    const auto threaded = run_experiment(3, 30, 7, Budget{}, 4);
    CHECK(experiment_csv(sequential) == experiment_csv(threaded));
}

TEST_CASE("recorded mask digests decode back to the trial orientation")
{
    const auto q3 = gen_hypercube(3);
    const auto record = run_experiment(3, 10, 99);
    for (const auto& trial : record.records) {
        const auto d = random_orientation(q3, trial.seed);
        const auto mask = orientation_mask_of(q3, d);
        REQUIRE(orient(q3, mask) == d);
        // digest is a pure function of the mask
        const auto again = random_orientation(q3, trial.seed);
        REQUIRE(orientation_mask_of(q3, again) == mask);
    }
}

TEST_CASE("d=3 exact values stay in the certified bracket")
{
    const auto record = run_experiment(3, 50, 1);
    const int ksz = ksz_lower(8, 12);
    REQUIRE(ksz == 3);
    for (const auto& trial : record.records) {
        REQUIRE(trial.exact_chi.has_value()); // 2^3 <= exact limit
        REQUIRE(*trial.exact_chi >= 3);
        REQUIRE(*trial.exact_chi <= 8);
        REQUIRE(trial.heuristic_chi >= *trial.exact_chi);
        REQUIRE(trial.certified_lower >= *trial.exact_chi); // exact value certifies itself
        REQUIRE(trial.millis == 0); // timing off by default, output reproducible
    }
    CHECK(record.best_certified_lower >= 3);
    CHECK(record.target == Approx(sqrt_t_at_zero() * std::sqrt(8.0)));
}

TEST_CASE("d=4 heuristic witnesses revalidate")
{
    const auto q4 = gen_hypercube(4);
    const auto record = run_experiment(4, 10, 1);
    for (const auto& trial : record.records) {
        REQUIRE(trial.heuristic_chi <= 16);
        const auto d = random_orientation(q4, trial.seed);
        const auto heur = ochi_heuristic(d, trial.seed);
        REQUIRE(heur.value == trial.heuristic_chi);
        REQUIRE(is_oriented_colouring(d, heur.witness));
    }
}

TEST_CASE("csv layout is fixed")
{
    const auto record = run_experiment(2, 3, 5);
    const std::string csv = experiment_csv(record);
    CHECK(csv.rfind("trial,seed,mask_digest,heuristic_chi,exact_chi,is_oclique,nodes,millis\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4); // header + 3 trials
}

TEST_CASE("experiment input validation")
{
    CHECK_THROWS(run_experiment(0, 5, 1));
    CHECK_THROWS(run_experiment(13, 5, 1));
    CHECK_THROWS(run_experiment(3, 0, 1));
}
