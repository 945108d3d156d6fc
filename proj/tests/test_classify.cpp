#include <doctest.h>

#include "schurlab/classify.hpp"
#include "schurlab/generate.hpp"

using namespace schurlab;

namespace {

SearchBudget quick_budget(uint64_t seed) {
    SearchBudget b;
    b.restarts = 8;
    b.sweeps = 50;
    b.samples = 200;
    b.seed = seed;
    return b;
}

}  // namespace

TEST_SUITE("classify") {
    TEST_CASE("zero curvature fails every strict class") {
        const CurvatureTensor zero(2, 2);
        const ClassVerdict v = classify(zero, std::nullopt, quick_budget(1));
        CHECK(v.nakano.status == Status::Fails);
        CHECK(v.dual_nakano.status == Status::Fails);
        CHECK(v.griffiths.status == Status::Fails);
        CHECK(v.decomposable.status == Status::Fails);
        CHECK(v.strongly_type1.status == Status::Fails);
        CHECK(v.strongly_type2.status == Status::Fails);
        // strict-failure witnesses evaluate to exactly zero here
        REQUIRE(v.nakano.witness);
        CHECK(v.nakano.witness_value == Rational(0));
        REQUIRE(v.griffiths.witness_pair);
        CHECK(v.griffiths.witness_value == Rational(0));
    }

    TEST_CASE("generated instances are confirmed with margins") {
        for (uint64_t seed : {41ull, 42ull}) {
            const GenResult nak = generate(PositivityClass::Nakano, 2, 2, seed);
            const ClassVerdict vn = classify(nak.R, std::nullopt, quick_budget(seed));
            CHECK(vn.nakano.status == Status::Holds);
            CHECK(vn.nakano.margin > 0);
            CHECK(vn.griffiths.status == Status::Holds);  // implication
            CHECK(vn.decomposable.status == Status::Holds);
            // Nakano positive means type I holds with U = everything
            CHECK(vn.strongly_type1.status == Status::Holds);

            const GenResult dual = generate(PositivityClass::DualNakano, 2, 2, seed);
            const ClassVerdict vd = classify(dual.R, std::nullopt, quick_budget(seed));
            CHECK(vd.dual_nakano.status == Status::Holds);
            CHECK(vd.griffiths.status == Status::Holds);

            const GenResult t1 =
                generate(PositivityClass::TypeI, 3, 1, seed, SplitSpec{SplitSpec::Kind::TypeI, {0}});
            const ClassVerdict v1 = classify(t1.R, t1.split, quick_budget(seed));
            CHECK(v1.strongly_type1.status == Status::Holds);
            REQUIRE(v1.strongly_type1.split);
            CHECK(*v1.strongly_type1.split == t1.split);

            const GenResult t2 = generate(PositivityClass::TypeII, 2, 2, seed);
            // the hint split is verified first and reported back
            const ClassVerdict v2 = classify(t2.R, t2.split, quick_budget(seed));
            CHECK(v2.strongly_type2.status == Status::Holds);
            REQUIRE(v2.strongly_type2.split);
            CHECK(*v2.strongly_type2.split == t2.split);
            // without the hint the axis search still finds some valid split
            // (for rank-one blocks possibly a degenerate one)
            const ClassVerdict v2b = classify(t2.R, std::nullopt, quick_budget(seed));
            CHECK(v2b.strongly_type2.status == Status::Holds);
            REQUIRE(v2b.strongly_type2.split);
            const ClassVerdict v2c = classify(t2.R, *v2b.strongly_type2.split, quick_budget(seed));
            CHECK(v2c.strongly_type2.status == Status::Holds);
        }
    }

    TEST_CASE("indefinite curvature gets exact Griffiths counterexamples") {
        // R with a strictly negative Nakano direction that is rank-one
        CurvatureTensor neg(1, 1);
        neg.at(0, 0, 0, 0) = ExactComplex(-2);
        const ClassVerdict v = classify(neg, std::nullopt, quick_budget(5));
        CHECK(v.nakano.status == Status::Fails);
        CHECK(v.nakano.witness_value < 0);
        CHECK(v.griffiths.status == Status::Fails);
        REQUIRE(v.griffiths.witness_pair);
        CHECK(v.griffiths.witness_value < 0);
        CHECK(griffiths_value(neg, v.griffiths.witness_pair->first,
                              v.griffiths.witness_pair->second) == v.griffiths.witness_value);
        CHECK(v.strongly_type1.status == Status::Fails);
        CHECK(v.strongly_type2.status == Status::Fails);
    }

    TEST_CASE("cross-block violation breaks the generated type II split") {
        const GenResult t2 = generate(PositivityClass::TypeII, 2, 2, 77);
        CurvatureTensor corrupted = t2.R;
        corrupted.at(0, 1, 0, 0) = ExactComplex(1);
        corrupted.at(1, 0, 0, 0) = ExactComplex(1);
        REQUIRE(corrupted.is_hermitian());
        const ClassVerdict v = classify(corrupted, t2.split, quick_budget(7));
        // the generator's split is rejected: either no split remains valid or
        // only a different (degenerate) one survives
        const bool hint_rejected =
            v.strongly_type2.status != Status::Holds || !(*v.strongly_type2.split == t2.split);
        CHECK(hint_rejected);
    }

    TEST_CASE("decomposable generator instances are never refuted") {
        for (uint64_t seed : {8ull, 9ull}) {
            const GenResult dec = generate(PositivityClass::Decomposable, 2, 2, seed);
            CHECK(curvature_from_ab(dec.F) == dec.R);
            const ClassVerdict v = classify(dec.R, std::nullopt, quick_budget(seed));
            CHECK(v.decomposable.status != Status::Fails);
        }
    }

    TEST_CASE("griffiths sampled minimum matches the definite margin on Nakano instances") {
        const GenResult nak = generate(PositivityClass::Nakano, 2, 1, 55);
        const GriffithsSearch search = griffiths_minimize(nak.R, quick_budget(55));
        CHECK(search.min_value > 0);
        CHECK_FALSE(search.exact_value.has_value());
    }
}
