#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tconf/gridmath.hpp"
#include "tconf/mathfn.hpp"
#include "tconf/rational.hpp"
#include "tconf/rng.hpp"

using namespace tconf;

TEST_CASE("rng streams are deterministic and replicate-indexed") {
    Rng a = Rng::stream(42, 7);
    Rng b = Rng::stream(42, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng c = Rng::stream(42, 8);
    Rng d = Rng::stream(43, 7);
    bool differs_c = false, differs_d = false;
    Rng a2 = Rng::stream(42, 7);
    for (int i = 0; i < 10; ++i) {
        const auto v = a2.next_u64();
        differs_c |= v != c.next_u64();
        differs_d |= v != d.next_u64();
    }
    CHECK(differs_c);
    CHECK(differs_d);
}

TEST_CASE("rng uniform and normal have sane first moments") {
    Rng rng(123);
    double su = 0, sn = 0, sn2 = 0;
    const int reps = 200000;
    for (int i = 0; i < reps; ++i) {
        su += rng.uniform();
        const double z = rng.normal();
        sn += z;
        sn2 += z * z;
    }
    CHECK(su / reps == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sn / reps == doctest::Approx(0.0).epsilon(0.02));
    CHECK(sn2 / reps == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("uniform_below stays in range") {
    Rng rng(9);
    for (int i = 0; i < 1000; ++i) CHECK(rng.uniform_below(7) < 7);
}

TEST_CASE("grid indices snap floating grid values") {
    // 0.1 * 10 = 1.0000000000000002 in doubles; the snapped floor is 1.
    CHECK(grid_floor_index(0.1, 9) == 1);
    CHECK(grid_ceil_index(0.1, 9) == 1);
    CHECK(grid_floor_index(0.3, 9) == 3);
    CHECK(grid_floor_index(0.29, 9) == 2);
    CHECK(grid_ceil_index(0.29, 9) == 3);
    CHECK(grid_floor_index(0.0, 9) == 0);
    CHECK(grid_floor_index(1.0, 9) == 10);
    CHECK(floor_snapped(0.8 * 100000) == 80000);
    CHECK(ceil_snapped(0.8 * 100000) == 80000);
}

TEST_CASE("rational helpers") {
    CHECK(factorial_big(0) == 1);
    CHECK(factorial_big(6) == 720);
    CHECK(binomial_big(10, 3) == 120);
    CHECK(binomial_big(4, 5) == 0);
    CHECK(to_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("normal cdf against high-precision references") {
    CHECK(normal_cdf(1.96) == doctest::Approx(0.975002104851780).epsilon(1e-12));
    CHECK(normal_cdf(-1.0) == doctest::Approx(0.158655253931457).epsilon(1e-12));
    CHECK(normal_cdf(0.5) == doctest::Approx(0.691462461274013).epsilon(1e-12));
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("regularized incomplete beta against high-precision references") {
    CHECK(reg_inc_beta(3, 5, 0.3) == doctest::Approx(0.3529305).epsilon(1e-10));
    CHECK(reg_inc_beta(10, 41, 0.25) == doctest::Approx(0.836316099749908).epsilon(1e-10));
    CHECK(reg_inc_beta(1, 1, 0.37) == doctest::Approx(0.37).epsilon(1e-12));
    CHECK(reg_inc_beta(7, 2, 0.9) == doctest::Approx(0.81310473).epsilon(1e-10));
    CHECK(reg_inc_beta(25, 26, 0.5) == doctest::Approx(0.556137586329609).epsilon(1e-10));
    CHECK(reg_inc_beta(3, 5, 0.0) == 0.0);
    CHECK(reg_inc_beta(3, 5, 1.0) == 1.0);
}

TEST_CASE("beta quantile is the inverse of the cdf") {
    for (double a : {1.0, 2.0, 7.0, 30.0}) {
        for (double b : {1.0, 4.0, 11.0}) {
            for (double p : {0.01, 0.2, 0.5, 0.77, 0.99}) {
                const double q = beta_quantile(a, b, p);
                CHECK(reg_inc_beta(a, b, q) == doctest::Approx(p).epsilon(1e-9));
            }
        }
    }
}
