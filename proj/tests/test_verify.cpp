#include <doctest.h>

#include "schurlab/verify.hpp"

using namespace schurlab;

namespace {

Json strip_wall(Json j) {
    j.erase("wall_ms");
    return j;
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("lr product suite") {
        const SuiteReport r = suite_lr_product(5, 2024);
        CHECK(r.green());
        CHECK(r.trials == 5);
        CHECK(r.passes == 5);
        CHECK(r.tolerances.at("exact") == 0.0);
    }

    TEST_CASE("fl expansion suite") {
        const SuiteReport r = suite_fl_expansion(2, 2024);
        CHECK(r.green());
        CHECK(r.passes == 2);
    }

    TEST_CASE("psi decomposition suite") {
        const SuiteReport r = suite_psi_decomposition(3, 2024);
        CHECK(r.green());
        // the optional k = 3 route
        const SuiteReport r3 = suite_psi_decomposition(1, 2024, 1, true);
        CHECK(r3.green());
    }

    TEST_CASE("nakano positivity suite") {
        const SuiteReport r = suite_nakano_positive_schur(4, 2024);
        CHECK(r.green());
        CHECK(r.metrics.count("min_gram_eigenvalue") == 1);
        CHECK(r.metrics.at("min_gram_eigenvalue") > 0);
    }

    TEST_CASE("type1 weak positivity suite") {
        SearchBudget budget;
        budget.restarts = 6;
        budget.sweeps = 40;
        budget.samples = 100;
        const SuiteReport r = suite_type1_weakly_positive(2, 2024, budget);
        CHECK(r.green());
        CHECK(r.metrics.count("min_weak_margin") == 1);
    }

    TEST_CASE("type2 positivity suite") {
        const SuiteReport r = suite_type2_positive_schur(3, 2024);
        CHECK(r.green());
    }

    TEST_CASE("criteria round-trip suite") {
        const SuiteReport r = suite_criteria_roundtrip(2, 2024);
        CHECK(r.green());
    }

    TEST_CASE("reports are deterministic modulo wall time") {
        const Json a = strip_wall(to_json(suite_lr_product(3, 7, 1)));
        const Json b = strip_wall(to_json(suite_lr_product(3, 7, 2)));
        CHECK(a.dump() == b.dump());
        const Json c = strip_wall(to_json(suite_nakano_positive_schur(2, 9, 1)));
        const Json d = strip_wall(to_json(suite_nakano_positive_schur(2, 9, 2)));
        CHECK(c.dump() == d.dump());
        SearchBudget budget;
        budget.restarts = 4;
        budget.sweeps = 20;
        budget.samples = 50;
        const Json e = strip_wall(to_json(suite_type1_weakly_positive(2, 11, budget, 1)));
        const Json f = strip_wall(to_json(suite_type1_weakly_positive(2, 11, budget, 2)));
        CHECK(e.dump() == f.dump());
    }

    TEST_CASE("report invariants and dispatcher") {
        for (const std::string& name : suite_names()) {
            SearchBudget budget;
            budget.restarts = 4;
            budget.sweeps = 20;
            budget.samples = 50;
            const SuiteReport r = run_suite(name, 1, 5, budget);
            CHECK(r.suite == name);
            CHECK(r.passes + static_cast<int>(r.failures.size()) == r.trials);
            const Json j = to_json(r);
            CHECK(j.at("suite") == name);
            CHECK(j.contains("wall_ms"));
        }
        CHECK_THROWS(run_suite("bogus", 1, 1));
    }
}
