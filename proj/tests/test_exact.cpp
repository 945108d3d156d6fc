#include <doctest.h>

#include "schurlab/exact_linalg.hpp"
#include "schurlab/four_squares.hpp"
#include "schurlab/rng.hpp"

using namespace schurlab;

TEST_SUITE("exact") {
    TEST_CASE("rational canonical form and round trip") {
        CHECK(rational_to_string(make_rational(6, -8)) == "-3/4");
        CHECK(parse_rational("-3/4") == make_rational(-3, 4));
        CHECK(parse_rational("5") == Rational(5));
        CHECK(rational_to_string(Rational(0)) == "0/1");
        CHECK_THROWS(make_rational(1, 0));
        RngStream rng(11);
        for (int i = 0; i < 200; ++i) {
            Rational q = rng.rational(1000, 997);
            CHECK(parse_rational(rational_to_string(q)) == q);
        }
    }

    TEST_CASE("rationalize floats") {
        CHECK(rationalize(0.5) == make_rational(1, 2));
        CHECK(rationalize(-3.25) == make_rational(-13, 4));
        CHECK(rationalize(0.0) == Rational(0));
        // recovery of small-denominator rationals through double rounding
        for (long num = -7; num <= 7; ++num)
            for (long den = 1; den <= 9; ++den)
                CHECK(rationalize(static_cast<double>(num) / den) == make_rational(num, den));
    }

    TEST_CASE("exact complex arithmetic") {
        const ExactComplex a(1, 2), b(3, -1);
        CHECK(a * b == ExactComplex(5, 5));
        CHECK((a / b) * b == a);
        CHECK(a.conj().conj() == a);
        CHECK((a * a.conj()).im == 0);
        CHECK(a.norm_sq() == Rational(5));
        CHECK(i_pow(2) == ExactComplex(-1));
        CHECK(i_pow(-1) == ExactComplex(0, -1));
        ExactComplex acc(0);
        for (long m = 0; m < 4; ++m) acc += i_pow(m);
        CHECK(acc.is_zero());
    }

    TEST_CASE("four squares: small and structured") {
        for (long n : {0L, 1L, 2L, 3L, 7L, 28L, 112L, 4L * 4 * 7, 719L, 1000003L}) {
            auto s = four_square_int(Int(n));
            CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] == Int(n));
        }
    }

    TEST_CASE("four squares: random and large") {
        RngStream rng(7);
        for (int i = 0; i < 100; ++i) {
            Int n(rng.uniform_int(0, 1000000));
            auto s = four_square_int(n);
            CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] == n);
        }
        // beyond brute-force range, including 4^k multiples and 7 mod 8
        std::vector<Int> big{Int("1000000000000000003"), Int("123456789123456789"),
                             Int("999999999999999999999999999989"),
                             Int("340282366920938463463374607431768211455"),
                             Int(7) * Int(1) << 60};
        RngStream rng2(13);
        for (int i = 0; i < 20; ++i) {
            Int n(rng2.uniform_int(1, 1000000000));
            big.push_back(n * Int(rng2.uniform_int(1, 1000000000)));
        }
        for (const Int& n : big) {
            auto s = four_square_int(n);
            CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] == n);
        }
    }

    TEST_CASE("four squares: rational") {
        RngStream rng(3);
        for (int i = 0; i < 50; ++i) {
            Rational d = rng.rational(100000, 99991);
            if (d < 0) d = -d;
            auto s = four_square_rational(d);
            CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] == d);
        }
    }

    TEST_CASE("exact rank") {
        MatrixXec m(2, 2);
        m << ExactComplex(1), ExactComplex(2), ExactComplex(2), ExactComplex(4);
        CHECK(exact_rank(m) == 1);
        m << ExactComplex(1), ExactComplex(2), ExactComplex(2), ExactComplex(5);
        CHECK(exact_rank(m) == 2);
        CHECK(exact_rank(MatrixXec::Zero(3, 4)) == 0);

        // rank of a product is the inner dimension for generic factors
        RngStream rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            const int rows = 4, inner = 1 + static_cast<int>(rng.uniform_int(0, 2)), cols = 5;
            MatrixXec a(rows, inner), b(inner, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < inner; ++j) a(i, j) = rng.gaussian_rational();
            for (int i = 0; i < inner; ++i)
                for (int j = 0; j < cols; ++j) b(i, j) = rng.gaussian_rational();
            CHECK(exact_rank(a * b) == inner);
        }
    }

    TEST_CASE("exact PSD decomposition: definite, degenerate, indefinite") {
        MatrixXec id = MatrixXec::Identity(3, 3);
        ExactPsd psd = exact_psd_decompose(id);
        CHECK(psd.psd);
        CHECK(psd.positive_definite(3));

        MatrixXec deg(2, 2);
        deg << ExactComplex(1), ExactComplex(0), ExactComplex(0), ExactComplex(0);
        psd = exact_psd_decompose(deg);
        CHECK(psd.psd);
        CHECK_FALSE(psd.positive_definite(2));
        CHECK(psd.rank() == 1);

        MatrixXec off(2, 2);
        off << ExactComplex(0), ExactComplex(0, 1), ExactComplex(0, -1), ExactComplex(0);
        psd = exact_psd_decompose(off);
        CHECK_FALSE(psd.psd);
        REQUIRE(psd.negative_witness);
        CHECK(hermitian_value(off, *psd.negative_witness) < 0);
    }

    TEST_CASE("exact PSD decomposition: random Gram reassembly and witnesses") {
        RngStream rng(17);
        for (int trial = 0; trial < 25; ++trial) {
            const int dim = 2 + static_cast<int>(rng.uniform_int(0, 3));
            const int inner = 1 + static_cast<int>(rng.uniform_int(0, 3));
            MatrixXec a(dim, inner);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < inner; ++j) a(i, j) = rng.gaussian_rational();
            MatrixXec gram = a * adjoint_of(a);
            REQUIRE(is_hermitian_exact(gram));
            ExactPsd psd = exact_psd_decompose(gram);
            REQUIRE(psd.psd);
            MatrixXec sum = MatrixXec::Zero(dim, dim);
            for (const auto& t : psd.terms)
                sum += ExactComplex(t.d) * (t.ell * adjoint_of(t.ell));
            CHECK(sum == gram);
            CHECK(psd.rank() == exact_rank(gram));

            // shifted down it must fail with an exact witness
            MatrixXec shifted = gram;
            Rational shift = Rational(1) + gram(0, 0).re;
            for (int i = 0; i < dim; ++i) shifted(i, i) -= ExactComplex(shift);
            ExactPsd bad = exact_psd_decompose(shifted);
            REQUIRE_FALSE(bad.psd);
            CHECK(hermitian_value(shifted, *bad.negative_witness) < 0);
        }
    }

    TEST_CASE("unit-weight rank-one decomposition") {
        RngStream rng(23);
        for (int trial = 0; trial < 15; ++trial) {
            const int dim = 2 + static_cast<int>(rng.uniform_int(0, 2));
            const int inner = 1 + static_cast<int>(rng.uniform_int(0, 2));
            MatrixXec a(dim, inner);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < inner; ++j) a(i, j) = rng.gaussian_rational();
            MatrixXec gram = a * adjoint_of(a);
            auto cols = unit_weight_rank1(gram);
            MatrixXec sum = MatrixXec::Zero(dim, dim);
            for (const auto& w : cols) sum += w * adjoint_of(w);
            CHECK(sum == gram);
        }
        CHECK(unit_weight_rank1(MatrixXec::Zero(2, 2)).empty());
    }

    TEST_CASE("exact kernel") {
        MatrixXec m(2, 3);
        m << ExactComplex(1), ExactComplex(0), ExactComplex(1), ExactComplex(0), ExactComplex(1),
            ExactComplex(1);
        auto kernel = exact_kernel(m);
        REQUIRE(kernel.size() == 1);
        VectorXec prod = m * kernel.front();
        for (int i = 0; i < 2; ++i) CHECK(prod(i).is_zero());
    }

    TEST_CASE("exact unitary generator") {
        RngStream rng(29);
        for (int r = 1; r <= 4; ++r) {
            MatrixXec a = random_exact_unitary(r, rng);
            CHECK(is_unitary_exact(a));
        }
        MatrixXec not_unitary = MatrixXec::Identity(2, 2);
        not_unitary(0, 0) = ExactComplex(2);
        CHECK_FALSE(is_unitary_exact(not_unitary));
    }

    TEST_CASE("sup-norm witness normalization") {
        VectorXec v(2);
        v << ExactComplex(make_rational(1, 2), Rational(0)), ExactComplex(Rational(-2), Rational(1));
        VectorXec w = normalize_sup(v);
        Rational m(0);
        for (int i = 0; i < 2; ++i) m = std::max(m, w(i).sup_norm());
        CHECK(m == Rational(1));
    }
}
