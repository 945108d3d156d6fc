#include <doctest.h>

#include "schurlab/generate.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/positivity.hpp"

using namespace schurlab;

TEST_SUITE("json") {
    TEST_CASE("rational strings round trip exactly") {
        RngStream rng(401);
        for (int i = 0; i < 100; ++i) {
            ExactComplex z = rng.gaussian_rational(1000000, 999983);
            CHECK(complex_from_json(to_json(z)) == z);
        }
    }

    TEST_CASE("form round trip and schema") {
        Form f(3, 1, 1);
        f.add_term({0}, {2}, ExactComplex(make_rational(2, 3), make_rational(-1, 7)));
        f.add_term({1}, {1}, ExactComplex(0, 1));
        const Json j = to_json(f);
        CHECK(j.at("n") == 3);
        CHECK(j.at("coeffs").size() == 2);
        CHECK(j.at("coeffs")[0].at("I")[0] == 1);  // 1-based on the wire
        CHECK(form_from_json(j) == f);
        // malformed: repeated axis
        Json bad = j;
        bad["coeffs"][0]["I"] = Json::array({2, 2});
        CHECK_THROWS(form_from_json(bad));
    }

    TEST_CASE("curvature upper-half round trip") {
        RngStream rng(409);
        for (int trial = 0; trial < 10; ++trial) {
            const CurvatureTensor R = random_hermitian_curvature(2, 2, rng);
            const Json j = to_json(R);
            // only the upper Hermitian half is stored
            for (const auto& e : j.at("entries")) {
                const auto key_left = std::make_pair(e.at("i").get<int>(), e.at("alpha").get<int>());
                const auto key_right = std::make_pair(e.at("j").get<int>(), e.at("beta").get<int>());
                CHECK(key_left <= key_right);
            }
            CHECK(curvature_from_json(j) == R);
        }
        // inconsistent Hermitian data is rejected
        Json bad{{"n", 1},
                 {"r", 1},
                 {"entries",
                  Json::array({Json{{"i", 1},
                                    {"j", 1},
                                    {"alpha", 1},
                                    {"beta", 1},
                                    {"c", Json{{"re", "1/1"}, {"im", "1/2"}}}}})}};
        CHECK_THROWS(curvature_from_json(bad));
    }

    TEST_CASE("factorization and split round trips") {
        RngStream rng(419);
        const GenResult gen = generate(PositivityClass::TypeI, 3, 2, 99,
                                       SplitSpec{SplitSpec::Kind::TypeI, {0, 2}});
        CHECK(curvature_from_json(to_json(gen.R)) == gen.R);
        const ABFactorization f2 = ab_from_json(to_json(gen.F));
        CHECK(f2.n == gen.F.n);
        CHECK(f2.A == gen.F.A);
        CHECK(f2.B == gen.F.B);
        const SplitSpec s2 = split_from_json(to_json(gen.split));
        CHECK(s2 == gen.split);
        CHECK(to_json(s2).at("kind") == "type1");
        CHECK(to_json(s2).at("indices")[1] == 3);
    }

    TEST_CASE("verdict serialization carries witnesses and stats") {
        Form v(2, 1, 1);
        v.add_term({0}, {0}, ExactComplex(0, 1));
        v.add_term({1}, {1}, ExactComplex(0, -1));
        const PositivityVerdict verdict = is_positive(v);
        const Json j = to_json(verdict);
        CHECK(j.at("level") == "not-nonnegative");
        CHECK(j.contains("witness"));
        CHECK(j.at("witness_value").get<std::string>().front() == '-');
        CHECK(j.at("stats").contains("seed"));
    }

    TEST_CASE("byte determinism of serialized objects") {
        RngStream rng(421);
        const CurvatureTensor R = random_hermitian_curvature(3, 2, rng);
        CHECK(to_json(R).dump(2) == to_json(R).dump(2));
        const GenResult gen = generate(PositivityClass::Nakano, 2, 2, 5);
        CHECK(to_json(gen.F).dump() == to_json(generate(PositivityClass::Nakano, 2, 2, 5).F).dump());
    }
}
