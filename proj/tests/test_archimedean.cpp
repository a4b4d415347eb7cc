#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qeuler/archimedean.hpp"

using namespace qeuler;

TEST_CASE("zeta series hits the closed form at negative integers") {
    for (double qr : {0.2, 0.3, 0.5}) {
        for (long long r : {1LL, 3LL, 4LL}) {
            ComplexSeriesSpec spec{Cplx(qr), Cplx(1.0), TwistSpec{r, 1}, 1e-10};
            for (long n = 0; n <= 5; ++n) {
                for (double x : {1.0, 0.5}) {
                    auto sv = twisted_zeta_series(spec, Cplx(-(double)n), x);
                    auto closed = euler_poly_complex(n, 1, Cplx(qr), TwistSpec{r, 1},
                                                     x == 1.0 ? BigRat(1) : BigRat(1, 2));
                    CHECK(std::abs(sv.value - closed) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("w = 1 specialization and s = 0 geometric check") {
    // q=0.3, h=1, w=1, s=0, x=1: [2]_q sum (-1)^k q^k = (1+q)/(1+q), cross-check E_0
    ComplexSeriesSpec spec{Cplx(0.3), Cplx(1.0), TwistSpec{1, 0}, 1e-12};
    auto sv = twisted_zeta_series(spec, Cplx(0.0), 1.0);
    auto e0 = euler_poly_complex(0, 1, Cplx(0.3), TwistSpec{1, 0}, BigRat(1));
    CHECK(std::abs(sv.value - e0) < 1e-9);
    CHECK(std::abs(sv.value - Cplx(1.0)) < 1e-9);  // (1+q)/(1+q) = 1
}

TEST_CASE("l series interpolates the generalized numbers") {
    auto quad3 = DirichletCharacter::enumerate(3)[1];
    for (double qr : {0.2, 0.3, 0.5}) {
        for (long long h : {1LL, 2LL}) {
            ComplexSeriesSpec spec{Cplx(qr), Cplx((double)h), TwistSpec{4, 1}, 1e-10};
            for (long n = 0; n <= 5; ++n) {
                auto sv = twisted_l_series(spec, Cplx(-(double)n), quad3);
                auto closed = generalized_number_complex(n, h, Cplx(qr), TwistSpec{4, 1}, quad3);
                CHECK(std::abs(sv.value - closed) < 1e-8);
            }
        }
    }
}

TEST_CASE("trivial character ties l to zeta via the index shift") {
    // reindexing k -> k+1 gives l(s, triv) = -w q^h zeta(s, 1)
    ComplexSeriesSpec spec{Cplx(0.4), Cplx(1.0), TwistSpec{3, 1}, 1e-11};
    auto triv = DirichletCharacter::trivial(1);
    Cplx s(2.5, 0.5);
    auto l = twisted_l_series(spec, s, triv);
    auto z = twisted_zeta_series(spec, s, 1.0);
    Cplx w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
    CHECK(std::abs(l.value + w * Cplx(0.4) * z.value) < 1e-8);
}

TEST_CASE("classical Euler zeta") {
    auto z2 = classical_euler_zeta(Cplx(2.0), 20000);
    double target = -3.14159265358979323846 * 3.14159265358979323846 / 6.0;
    CHECK(std::abs(z2.value - Cplx(target)) < z2.tail_bound);
    // s = 4 against brute-force partial sums as the oracle
    Cplx brute = 0.0;
    for (long long k = 1; k <= 400000; ++k) {
        Cplx t = 1.0 / Cplx((double)k * k * k * k);
        brute += (k % 2) ? -t : t;
    }
    brute *= 2.0;
    auto z4 = classical_euler_zeta(Cplx(4.0), 4000);
    CHECK(std::abs(z4.value - brute) < z4.tail_bound + 1e-12);
    // truncation difference equals the next term exactly
    auto a = classical_euler_zeta(Cplx(3.0), 100);
    auto b = classical_euler_zeta(Cplx(3.0), 101);
    CHECK(std::abs((b.value - a.value) - 2.0 * (-std::pow(101.0, -3.0))) < 1e-15);
    CHECK_THROWS_AS(classical_euler_zeta(Cplx(0.5), 100), std::invalid_argument);
}

TEST_CASE("truncation honesty: bound exceeds the observed change when K doubles") {
    for (double qr : {0.3, 0.5}) {
        ComplexSeriesSpec tight{Cplx(qr), Cplx(1.0), TwistSpec{3, 2}, 1e-8};
        ComplexSeriesSpec tighter{Cplx(qr), Cplx(1.0), TwistSpec{3, 2}, 1e-14};
        for (Cplx s : {Cplx(-2.0), Cplx(1.5, 0.3)}) {
            auto a = twisted_zeta_series(tight, s, 0.5);
            auto b = twisted_zeta_series(tighter, s, 0.5);
            CHECK(b.terms > a.terms);
            CHECK(std::abs(a.value - b.value) <= a.tail_bound);
        }
    }
}

TEST_CASE("domain errors") {
    ComplexSeriesSpec spec{Cplx(0.3), Cplx(1.0), TwistSpec{1, 0}, 1e-10};
    CHECK_THROWS_AS(twisted_zeta_series(spec, Cplx(1.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(twisted_zeta_series(spec, Cplx(1.0), -3.0), std::invalid_argument);
    ComplexSeriesSpec bad{Cplx(1.2), Cplx(1.0), TwistSpec{1, 0}, 1e-10};
    CHECK_THROWS_AS(twisted_zeta_series(bad, Cplx(1.0), 1.0), std::invalid_argument);
}
