#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qeuler/euler.hpp"

using namespace qeuler;

namespace {

struct Grid {
    long long p;
    long long prec;
    long long r;
};

// E_0, E_1, E_2 spelled out directly, as printed
PElem e0_direct(const PRing& R, long long h, const Padic& q, const TwistSpec& xi) {
    PadicWorld w{&R};
    return w.inv(w.one() + w.twist(xi) * w.embed(q.pow(h))) * w.embed(w.sone() + q);
}

PElem e1_direct(const PRing& R, long long h, const Padic& q, const TwistSpec& xi, const BigRat& x) {
    PadicWorld w{&R};
    auto t0 = w.inv(w.one() + w.twist(xi) * w.embed(q.pow(h)));
    auto t1 = w.inv(w.one() + w.twist(xi) * w.embed(q.pow(h + 1))) * w.embed(qpow(q, x));
    auto pref = (w.sone() + q) * w.sinv(w.sone() - q);
    return (t0 - t1) * w.embed(pref);
}

PElem e2_direct(const PRing& R, long long h, const Padic& q, const TwistSpec& xi, const BigRat& x) {
    PadicWorld w{&R};
    auto qx = qpow(q, x);
    auto t0 = w.inv(w.one() + w.twist(xi) * w.embed(q.pow(h)));
    auto t1 = w.inv(w.one() + w.twist(xi) * w.embed(q.pow(h + 1))) * w.embed(qx * Padic::from_long(2, q.prime(), q.precision()));
    auto t2 = w.inv(w.one() + w.twist(xi) * w.embed(q.pow(h + 2))) * w.embed(qx * qx);
    auto om = w.sone() - q;
    auto pref = (w.sone() + q) * w.sinv(om * om);
    return (t0 - t1 + t2) * w.embed(pref);
}

}  // namespace

TEST_CASE("explicit E_0, E_1, E_2 match the general closed form") {
    for (Grid g : {Grid{5, 30, 1}, Grid{5, 30, 7}, Grid{7, 30, 1}}) {
        PRing R(PadicDomain{g.p, g.prec}, g.r);
        TwistSpec xi{g.r, 1};
        for (long long h : {1LL, 2LL}) {
            for (const Padic& q :
                 {Padic::from_long(1 + g.p, g.p, g.prec),
                  Padic::from_long(1 + 2 * g.p * g.p, g.p, g.prec)}) {
                for (const BigRat& x : {BigRat(0), BigRat(1), BigRat(1, 3)}) {
                    auto gen0 = twisted_hq_euler_poly_padic(R, 0, h, q, xi, x);
                    CHECK(min_valuation(gen0 - e0_direct(R, h, q, xi)) >= 12);
                    auto gen1 = twisted_hq_euler_poly_padic(R, 1, h, q, xi, x);
                    CHECK(min_valuation(gen1 - e1_direct(R, h, q, xi, x)) >= 12);
                    auto gen2 = twisted_hq_euler_poly_padic(R, 2, h, q, xi, x);
                    CHECK(min_valuation(gen2 - e2_direct(R, h, q, xi, x)) >= 12);
                }
            }
        }
    }
}

TEST_CASE("degree zero is x-independent") {
    PRing R(PadicDomain{5, 25}, 7);
    auto q = Padic::from_long(6, 5, 25);
    auto a = twisted_hq_euler_poly_padic(R, 0, 1, q, TwistSpec{7, 2}, BigRat(0));
    auto b = twisted_hq_euler_poly_padic(R, 0, 1, q, TwistSpec{7, 2}, BigRat(3, 7));
    CHECK(min_valuation(a - b) >= 20);
}

TEST_CASE("poly_from_numbers identity") {
    PRing R(PadicDomain{5, 34}, 7);
    PadicWorld w{&R};
    auto q = Padic::from_long(6, 5, 34);
    TwistSpec xi{7, 1};
    // x = 0 leaves only the j = n term
    for (long n : {0L, 1L, 3L}) {
        auto lhs = euler_poly_from_numbers(w, n, 1, q, xi, BigRat(0));
        auto rhs = twisted_hq_euler_number_padic(R, n, 1, q, xi);
        CHECK(min_valuation(lhs - rhs) >= 12);
    }
    for (long n = 0; n <= 6; ++n) {
        for (const BigRat& x : {BigRat(1), BigRat(2), BigRat(2, 3)}) {
            auto lhs = euler_poly_from_numbers(w, n, 1, q, xi, x);
            auto rhs = twisted_hq_euler_poly_padic(R, n, 1, q, xi, x);
            CHECK(min_valuation(lhs - rhs) >= 12);
        }
    }
}

TEST_CASE("distribution identity") {
    PRing R(PadicDomain{5, 34}, 7);
    PadicWorld w{&R};
    auto q = Padic::from_long(6, 5, 34);
    TwistSpec xi{7, 1};
    // d' = 1 collapses to the plain closed form
    auto one_term = distribution_rhs(w, 3, 1, q, xi, 1, BigRat(0));
    CHECK(min_valuation(one_term - twisted_hq_euler_number_padic(R, 3, 1, q, xi)) >= 12);
    for (long n = 0; n <= 4; ++n)
        for (long long dp : {3LL, 7LL})
            for (const BigRat& x : {BigRat(0), BigRat(1)}) {
                auto rhs = distribution_rhs(w, n, 1, q, xi, dp, x);
                auto lhs = twisted_hq_euler_poly_padic(R, n, 1, q, xi, x);
                CHECK(min_valuation(lhs - rhs) >= 12);
            }
    CHECK_THROWS_AS(distribution_rhs(w, 1, 1, q, xi, 2, BigRat(0)), std::invalid_argument);
}

TEST_CASE("generalized numbers") {
    PRing R(PadicDomain{5, 34}, 14);  // room for quadratic character times twist of order 7
    auto q = Padic::from_long(6, 5, 34);
    TwistSpec xi{7, 1};
    auto triv1 = DirichletCharacter::trivial(1);

    // chi trivial mod 1, D = 1: the plain twisted number, all n including 0
    for (long n : {0L, 1L, 2L, 4L}) {
        auto gen = generalized_twisted_number_padic(R, n, 1, q, xi, triv1, 1);
        auto plain = twisted_hq_euler_number_padic(R, n, 1, q, xi);
        CHECK(min_valuation(gen - plain) >= 12);
    }
    // n = 0 closed form [2]_q/(1+w q^h)
    auto gen0 = generalized_twisted_number_padic(R, 0, 2, q, xi, triv1, 1);
    CHECK(min_valuation(gen0 - e0_direct(R, 2, q, xi)) >= 12);

    // D-independence for the quadratic character mod 3
    auto quad3 = DirichletCharacter::enumerate(3)[1];
    for (long n : {0L, 1L, 3L}) {
        auto at_d = generalized_twisted_number_padic(R, n, 1, q, xi, quad3, 3);
        auto at_3d = generalized_twisted_number_padic(R, n, 1, q, xi, quad3, 9);
        CHECK(min_valuation(at_d - at_3d) >= 12);
    }
    CHECK_THROWS_AS(generalized_twisted_number_padic(R, 1, 1, q, xi, quad3, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(generalized_twisted_number_padic(R, 1, 1, q, xi, quad3, 6),
                    std::invalid_argument);
}

TEST_CASE("classical recurrence values at w = 1") {
    QRing R(RationalDomain{}, 1);
    auto E = classical_twisted_numbers(R, R.one(), 3);
    CHECK(E[0].coeffs()[0] == BigRat(1));
    CHECK(E[1].coeffs()[0] == BigRat(-1, 2));
    CHECK(E[2].coeffs()[0] == BigRat(0));
    CHECK(E[3].coeffs()[0] == BigRat(1, 4));
}

TEST_CASE("classical generalized numbers") {
    QRing R(RationalDomain{}, 6);  // twist order 3, character order 2
    auto w = R.root_of_unity(2);   // primitive cube root
    auto triv1 = DirichletCharacter::trivial(1);
    // chi trivial mod 1 reduces to plain twisted numbers
    auto E = classical_twisted_numbers(R, w, 4);
    for (long n : {0L, 2L, 4L}) {
        auto gen = classical_generalized_number(
            R, n, w, [&](long long a) { return triv1.value_in(R, a); }, 1);
        CHECK((gen - E[n]).is_zero());
    }
    // n = 0 constant-term oracle: 2 sum_i (-1)^i chi(i) w^i / (w^d + 1)
    auto quad3 = DirichletCharacter::enumerate(3)[1];
    auto chi = [&](long long a) { return quad3.value_in(R, a); };
    auto gen0 = classical_generalized_number(R, 0, w, chi, 3);
    auto num = R.zero();
    for (long long i = 0; i < 3; ++i) {
        auto t = chi(i) * w.pow(i);
        num += (i % 2) ? -t : t;
    }
    auto oracle = num * invert(R.one() + w.pow(3)) * BigRat(2);
    CHECK((gen0 - oracle).is_zero());

    // w = -1 must be rejected
    QRing R2(RationalDomain{}, 2);
    CHECK_THROWS_AS(classical_twisted_numbers(R2, R2.root_of_unity(1), 2), std::domain_error);
}

TEST_CASE("q = 1 limit agrees with classical embedding, monotonically in a") {
    // E_{n,q,1}^{(h)} -> E_{n,1} as q = 1 + p^a -> 1
    for (long long p : {5LL, 7LL}) {
        PRing R(PadicDomain{p, 40}, 1);
        QRing Rq(RationalDomain{}, 1);
        auto cls = classical_twisted_numbers(Rq, Rq.one(), 3);
        for (long n : {1L, 2L, 3L}) {
            for (long long h : {1LL, 2LL}) {
                long long prev = -1;
                for (long long a = 1; a <= 3; ++a) {
                    auto q = Padic::from_integer(1 + pow_p(p, a), p, 40);
                    auto val = twisted_hq_euler_number_padic(R, n, h, q, TwistSpec{1, 0});
                    auto diff = val - embed_rational(cls[n], R);
                    long long v = min_valuation(diff);
                    CHECK(v >= prev);
                    CHECK(v >= a - 1);
                    prev = v;
                }
            }
        }
    }
}

TEST_CASE("q = 1 dispatch matches classical path exactly") {
    PRing R(PadicDomain{5, 20}, 7);
    auto q1 = Padic::one(5, 20);
    auto val = twisted_hq_euler_poly_padic(R, 2, 1, q1, TwistSpec{7, 1}, BigRat(1, 3));
    QRing Rq(RationalDomain{}, 7);
    auto w = Rq.root_of_unity(1);
    auto cls = classical_twisted_poly(Rq, classical_twisted_numbers(Rq, w, 2), 2, BigRat(1, 3));
    CHECK(min_valuation(val - embed_rational(cls, R)) >= 20);
}
