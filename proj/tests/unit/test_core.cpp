#include "doctest.h"
#include "msplab/linalg.hpp"
#include "msplab/pfop.hpp"
#include "msplab/quotient.hpp"
#include "msplab/series.hpp"
#include "msplab/targets.hpp"

using namespace msplab;

TEST_CASE("rationals print as num/den") {
    CHECK(to_string(Rat(3)) == "3/1");
    CHECK(to_string(frac(4, -6)) == "-2/3");
    CHECK(parse_rat("-2/3") == frac(-2, 3));
    auto B = bernoulli_numbers(6);
    CHECK(B[1] == frac(-1, 2));
    CHECK(B[2] == frac(1, 6));
    CHECK(B[4] == frac(-1, 30));
    CHECK(B[6] == frac(1, 42));
}

TEST_CASE("series inverse, exp and reversion") {
    Series g = Series::geometric(Rat(2), 10);
    Series one_minus = Series::one(10) - Rat(2) * Series::q(10);
    CHECK(compare(inverse(g), one_minus).equal);
    Series e = exp_series(Series::q(8));
    Rat f = 1;
    for (int i = 0; i <= 8; ++i) {
        if (i) f *= i;
        CHECK(e[i] == 1 / f);
    }
    Series x = Series::q(8) + Series::q(8) * Series::q(8);
    CHECK(compare(compose(revert(x), x), Series::q(8)).equal);
}

TEST_CASE("quotient rings") {
    QuotientRing T = QuotientRing::tring(7);
    Vec t7 = T.gen_power(7);
    CHECK(t7 == T.constant(-1));
    QuotientRing P = QuotientRing::pring(7);
    CHECK(P.dim() == 11);
    CHECK_THROWS_AS(P.inverse(P.gen_power(1)), std::domain_error);
    Vec u = T.add(T.one(), T.gen_power(2));
    CHECK(T.mul(u, T.inverse(u)) == T.one());
}

TEST_CASE("linear solve with free variables at zero") {
    Matrix A = {{1, 1}, {2, 2}};
    int rank = 0;
    auto x = solve_linear(A, {3, 6}, &rank);
    REQUIRE(x);
    CHECK(rank == 1);
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 0);
    CHECK_FALSE(solve_linear(A, {3, 7}));
}

TEST_CASE("fraction-free solve agrees with rref") {
    // rank 3 of 4 columns, fractional entries, a skipped pivot column
    Matrix A = {{Rat(1, 2), 0, Rat(2, 3), 1},
                {1, 0, Rat(-5, 7), 3},
                {Rat(3, 2), 0, Rat(-1, 21), 4},
                {2, 0, Rat(1, 9), Rat(7, 5)}};
    std::vector<Rat> b = {1, Rat(-2, 3), Rat(1, 3), 5};
    int rank = 0;
    auto x = solve_linear(A, b, &rank);
    REQUIRE(x);
    CHECK(rank == 3);
    Matrix m = A;
    for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto piv = rref(m, 4);
    REQUIRE(piv.size() == 3);
    for (size_t i = 0; i < piv.size(); ++i) CHECK((*x)[piv[i]] == m[i][4]);
    CHECK((*x)[1] == 0);
    for (size_t i = 0; i < A.size(); ++i) {
        Rat v = 0;
        for (int j = 0; j < 4; ++j) v += A[i][j] * (*x)[j];
        CHECK(v == b[i]);
    }
}

TEST_CASE("operators in D with DX = X(1-X)") {
    PFOperator DX_op = compose(PFOperator::D(), PFOperator::mult(Poly::x()));
    // D X = X D + X - X^2
    CHECK(DX_op.coeff(1) == Poly::x());
    CHECK(DX_op.coeff(0) == Poly(std::vector<Rat>{0, 1, -1}));
    CHECK(DY(Poly::x()) == Poly(std::vector<Rat>{0, -1, 1}));
}

TEST_CASE("targets") {
    TargetConfig t6 = target_config(6), t8 = target_config(8), t10 = target_config(10);
    CHECK(t6.r == 11664);
    CHECK(t8.r == 65536);
    CHECK(t10.r == 800000);
    CHECK(t6.c_vec == std::array<long, 3>{360, 2772, 5400});
    CHECK(t8.c_vec == std::array<long, 3>{1680, 15808, 30560});
    CHECK(t10.c_vec == std::array<long, 3>{15120, 179520, 410720});
    CHECK(t6.ordinary == std::vector<int>{1, 2, 4, 5, 6});
    CHECK_THROWS_AS(target_config(7), UnknownTarget);
    CHECK_THROWS_AS(check_N(9), InvalidN);
    CHECK_NOTHROW(check_N(11));
}
