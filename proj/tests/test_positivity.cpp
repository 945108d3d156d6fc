#include <doctest.h>

#include "schurlab/json_io.hpp"
#include "schurlab/positivity.hpp"
#include "schurlab/rng.hpp"

using namespace schurlab;

namespace {

Form identity_kahler(int n) {  // i Σ e^j ∧ ē^j
    Form u(n, 1, 1);
    for (int j = 0; j < n; ++j) u.add_term({j}, {j}, ExactComplex(0, 1));
    return u;
}

Form signature_form(int n) {  // i(e^1∧ē^1 - e^2∧ē^2)
    Form u(n, 1, 1);
    u.add_term({0}, {0}, ExactComplex(0, 1));
    u.add_term({1}, {1}, ExactComplex(0, -1));
    return u;
}

Form random_covector(int n, RngStream& rng) {
    Form c(n, 1, 0);
    for (int a = 0; a < n; ++a) c.add_term({a}, {}, rng.gaussian_rational());
    return c;
}

// random Gram-positive (1,1)-form: i Σ_p ℓ_p ∧ ℓ̄_p over n independent covectors
Form random_gram_positive(int n, RngStream& rng) {
    while (true) {
        Form u = Form::zero(n, 1, 1);
        for (int p = 0; p < n + 1; ++p) {
            const Form c = random_covector(n, rng);
            u += wedge(c, conjugate(c)) * ExactComplex(Rational(0), Rational(1));
        }
        if (is_positive(u).level == PosLevel::Positive) return u;
    }
}

}  // namespace

TEST_SUITE("positivity") {
    TEST_CASE("is_positive: worked examples") {
        const PositivityVerdict pos = is_positive(identity_kahler(2));
        CHECK(pos.level == PosLevel::Positive);
        CHECK(pos.margin == doctest::Approx(1.0));

        const PositivityVerdict neg = is_positive(signature_form(2));
        CHECK(neg.level == PosLevel::NotNonNegative);
        REQUIRE(neg.witness);
        CHECK(neg.witness_value < 0);
        // the expected witness direction is e^1 (pairing -1)
        CHECK(neg.witness->coeff({0}, {}) != ExactComplex(0));
        CHECK(neg.witness->coeff({1}, {}).is_zero());

        Form degenerate(2, 1, 1);  // i e^1∧ē^1 in n=2
        degenerate.add_term({0}, {0}, ExactComplex(0, 1));
        CHECK(is_positive(degenerate).level == PosLevel::NonNegativeDegenerate);

        CHECK_THROWS(is_positive(Form::zero(2, 1, 0)));
    }

    TEST_CASE("is_nonnegative: decomposition and witnesses") {
        RngStream rng(301);
        // rank-one construction recovers a multiple of alpha
        const int n = 3, k = 2;
        Form alpha(n, k, 0);
        alpha.add_term({0, 1}, {}, ExactComplex(1, 1));
        alpha.add_term({0, 2}, {}, ExactComplex(make_rational(1, 2), Rational(0)));
        Form u = wedge(alpha, conjugate(alpha)) * i_pow(static_cast<long>(k) * k);
        auto [verdict, dec] = is_nonnegative(u);
        CHECK(verdict.level != PosLevel::NotNonNegative);
        REQUIRE(dec);
        REQUIRE(dec->terms.size() == 1);
        // the single factor spans the same line as alpha
        const Form& ell = dec->terms[0].alpha;
        const ExactComplex ratio = ell.coeff({0, 1}, {}) / alpha.coeff({0, 1}, {});
        Form scaled = alpha;
        scaled *= ratio;
        CHECK(scaled == ell);

        auto [zero_verdict, zero_dec] = is_nonnegative(Form::zero(2, 1, 1));
        CHECK(zero_verdict.level == PosLevel::NonNegativeDegenerate);
        REQUIRE(zero_dec);
        CHECK(zero_dec->terms.empty());

        // random real (2,2)-forms on n=4 with indefinite Gram
        int negatives = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Form w = Form::zero(4, 2, 2);
            const auto idx = multi_indices(4, 2);
            const ExactComplex ik2 = i_pow(4);
            for (int t = 0; t < 4; ++t) {
                const size_t a =
                    static_cast<size_t>(rng.uniform_int(0, static_cast<long>(idx.size()) - 1));
                const size_t b =
                    static_cast<size_t>(rng.uniform_int(0, static_cast<long>(idx.size()) - 1));
                ExactComplex cc = rng.gaussian_rational();
                if (a == b) cc.im = 0;
                w.add_term(idx[a], idx[b], ik2 * cc);
                if (a != b) w.add_term(idx[b], idx[a], ik2 * cc.conj());
            }
            if (w.is_zero()) continue;
            auto [v, d] = is_nonnegative(w);
            if (v.level == PosLevel::NotNonNegative) {
                ++negatives;
                REQUIRE(v.witness);
                CHECK(v.witness_value < 0);
                CHECK(pairing_value(w, *v.witness) == v.witness_value);
            } else {
                REQUIRE(d);
            }
        }
        CHECK(negatives > 0);  // random instances do produce indefinite Grams
    }

    TEST_CASE("is_weakly_positive: delegation degrees and volume signs") {
        // q = 0: top bidegree, exact volume sign
        Form top = identity_kahler(1);
        CHECK(is_weakly_positive(top).level == PosLevel::WeaklyPositiveSampled);
        Form negtop(1, 1, 1);
        negtop.add_term({0}, {0}, ExactComplex(0, -1));
        const PositivityVerdict neg = is_weakly_positive(negtop);
        CHECK(neg.level == PosLevel::WeakCounterexample);
        CHECK(neg.witness_value < 0);
        CHECK(is_weakly_positive(Form::zero(1, 1, 1)).level == PosLevel::NonNegativeDegenerate);

        // q = 1: automatic decomposability, counterexample β = e^1
        const PositivityVerdict w = is_weakly_positive(signature_form(2));
        CHECK(w.level == PosLevel::WeakCounterexample);
        REQUIRE(w.witness);
        CHECK(w.witness_value < 0);

        // zero budget is only an error in the genuine search regime (2 <= q <= n-2)
        const Form omega_sq = wedge(identity_kahler(4), identity_kahler(4));
        CHECK_THROWS(is_weakly_positive(omega_sq, SearchBudget{0, 0, 0, 0, 1e-12, 1e-9}));
    }

    TEST_CASE("is_weakly_positive: genuine search degrees (q = 2)") {
        RngStream rng(307);
        // strongly positive (2,2)-form on n=4: no counterexample, positive margin
        std::vector<std::pair<Rational, std::vector<Form>>> terms;
        for (int t = 0; t < 8; ++t)
            terms.push_back({Rational(1), {random_covector(4, rng), random_covector(4, rng)}});
        auto [sp, dec] = build_strongly_positive(4, terms);
        SearchBudget budget;
        budget.restarts = 12;
        budget.sweeps = 60;
        budget.samples = 200;
        budget.seed = 17;
        const PositivityVerdict v = is_weakly_positive(sp, budget);
        CHECK(v.level == PosLevel::WeaklyPositiveSampled);
        CHECK(v.margin > 0);

        // its negative has an exact weak counterexample
        const PositivityVerdict bad = is_weakly_positive(-sp, budget);
        CHECK(bad.level == PosLevel::WeakCounterexample);
        REQUIRE(bad.witness_covectors);
        CHECK(bad.witness_covectors->size() == 2);
        CHECK(bad.witness_value < 0);
        // witness pairing recomputes identically from the stored covectors
        Form beta = Form::one(4);
        for (const Form& c : *bad.witness_covectors) beta = wedge(beta, c);
        CHECK(pairing_value(-sp, beta) == bad.witness_value);
    }

    TEST_CASE("build_strongly_positive") {
        RngStream rng(311);
        // single decomposable term passes the non-negativity test with rank-1 Gram
        Form e1(4, 1, 0), e2(4, 1, 0);
        e1.add_term({0}, {}, ExactComplex(1));
        e2.add_term({1}, {}, ExactComplex(1));
        auto [single, dec1] = build_strongly_positive(4, {{Rational(1), {e1, e2}}});
        auto [v1, d1] = is_nonnegative(single);
        CHECK(v1.level == PosLevel::NonNegativeDegenerate);
        REQUIRE(d1);
        CHECK(d1->terms.size() == 1);

        auto [empty, dec0] = build_strongly_positive(3, {});
        CHECK(empty.is_zero());

        // C(n,k) independent decomposable terms give a positive form
        std::vector<std::pair<Rational, std::vector<Form>>> terms;
        for (const MultiIndex& pair : multi_indices(4, 2)) {
            Form a(4, 1, 0), b(4, 1, 0);
            a.add_term({pair[0]}, {}, ExactComplex(1));
            b.add_term({pair[1]}, {}, ExactComplex(1));
            terms.push_back({Rational(1), {a, b}});
        }
        auto [full, dec2] = build_strongly_positive(4, terms);
        CHECK(is_positive(full).level == PosLevel::Positive);

        // mixed degrees rejected
        CHECK_THROWS(build_strongly_positive(4, {{Rational(1), {e1, e2}}, {Rational(1), {e1}}}));
        // negative coefficients rejected
        CHECK_THROWS(build_strongly_positive(4, {{Rational(-1), {e1, e2}}}));
        // cone inclusion: the constructed form never fails non-negativity
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::pair<Rational, std::vector<Form>>> t;
            for (int s = 0; s < 3; ++s) {
                Rational c = rng.rational(3, 2);
                t.push_back({c * c + Rational(1),
                             {random_covector(3, rng), random_covector(3, rng)}});
            }
            auto [f, d] = build_strongly_positive(3, t);
            CHECK(is_nonnegative(f).first.level != PosLevel::NotNonNegative);
        }
    }

    TEST_CASE("wedge positivity closure") {
        const Form omega3 = identity_kahler(3);
        const WedgeCheckResult res = wedge_positivity_check(omega3, omega3);
        CHECK(res.verdict.level == PosLevel::Positive);

        // guard path: v = 0 is rejected with its own verdict
        const WedgeCheckResult guard =
            wedge_positivity_check(identity_kahler(2), Form::zero(2, 1, 1));
        CHECK(guard.verdict.level == PosLevel::NonNegativeDegenerate);
        CHECK(guard.product.is_zero());

        RngStream rng(313);
        for (int trial = 0; trial < 10; ++trial) {
            const Form u = random_gram_positive(4, rng);
            const Form v = random_gram_positive(4, rng);
            CHECK(wedge_positivity_check(u, v).verdict.level == PosLevel::Positive);
        }
    }

    TEST_CASE("scale invariance and equivalence on automatic degrees") {
        RngStream rng(317);
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 2 + static_cast<int>(rng.uniform_int(0, 1));
            // k = 1 or k = n-1 or k = n: weak and ordinary positivity agree
            const int choices[3] = {1, n - 1, n};
            const int k = choices[rng.uniform_int(0, 2)];
            Form u = Form::zero(n, k, k);
            const auto idx = multi_indices(n, k);
            const ExactComplex ik2 = i_pow(static_cast<long>(k) * k);
            for (int t = 0; t < 3; ++t) {
                const size_t a =
                    static_cast<size_t>(rng.uniform_int(0, static_cast<long>(idx.size()) - 1));
                const size_t b =
                    static_cast<size_t>(rng.uniform_int(0, static_cast<long>(idx.size()) - 1));
                ExactComplex cc = rng.gaussian_rational();
                if (a == b) cc.im = 0;
                u.add_term(idx[a], idx[b], ik2 * cc);
                if (a != b) u.add_term(idx[b], idx[a], ik2 * cc.conj());
            }
            if (u.is_zero()) continue;
            const PositivityVerdict direct = is_positive(u);
            const PositivityVerdict weak = is_weakly_positive(u);
            const bool direct_ok = direct.level != PosLevel::NotNonNegative;
            const bool weak_ok = weak.level != PosLevel::WeakCounterexample &&
                                 weak.level != PosLevel::NotNonNegative;
            CHECK(direct_ok == weak_ok);

            // positive rational rescaling never changes the verdict
            Form scaled = u;
            scaled *= ExactComplex(make_rational(7, 3));
            CHECK(is_positive(scaled).level == is_positive(u).level);
        }
    }

    TEST_CASE("degree extremes: scalars and top forms") {
        // k = 0: a (0,0)-form is positive iff the scalar is positive
        Form scalar = Form::one(2);
        scalar *= ExactComplex(make_rational(3, 7));
        CHECK(is_positive(scalar).level == PosLevel::Positive);
        Form negscalar = Form::one(2);
        negscalar *= ExactComplex(Rational(-1));
        CHECK(is_positive(negscalar).level == PosLevel::NotNonNegative);
        CHECK(is_weakly_positive(scalar).level == PosLevel::WeaklyPositiveSampled);

        // k = n: the complement Gram is the 1x1 volume coefficient
        Form top = wedge(identity_kahler(2), identity_kahler(2));
        CHECK(is_positive(top).level == PosLevel::Positive);
        CHECK(volume_coefficient(top).tau == Rational(2));
        auto [v, dec] = is_nonnegative(top);
        CHECK(v.level == PosLevel::Positive);
        REQUIRE(dec);
        Form back = Form::zero(2, 2, 2);
        for (const auto& t : dec->terms)
            back += wedge(t.alpha, conjugate(t.alpha)) * (i_pow(4) * ExactComplex(t.weight));
        CHECK(back == top);
    }

    TEST_CASE("determinism of sampled verdicts") {
        RngStream rng(331);
        std::vector<std::pair<Rational, std::vector<Form>>> terms;
        for (int t = 0; t < 5; ++t)
            terms.push_back({Rational(1), {random_covector(4, rng), random_covector(4, rng)}});
        auto [sp, dec] = build_strongly_positive(4, terms);
        SearchBudget budget;
        budget.restarts = 8;
        budget.sweeps = 40;
        budget.samples = 100;
        budget.seed = 99;
        const Json a = to_json(is_weakly_positive(sp, budget));
        const Json b = to_json(is_weakly_positive(sp, budget));
        CHECK(a.dump() == b.dump());
    }
}
