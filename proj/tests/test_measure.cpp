#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qeuler/measure.hpp"

using namespace qeuler;

namespace {

constexpr long long kPrec = 36;

MeasureParams params(long n, long long h, long long p, long long qnum, TwistSpec xi, long long d) {
    return MeasureParams{n, h, Padic::from_long(qnum, p, kPrec), xi, d};
}

std::vector<PElem> char_table(const PRing& R, const DirichletCharacter& chi, long long size) {
    std::vector<PElem> t;
    for (long long c = 0; c < size; ++c) t.push_back(chi.value_in(R, c));
    return t;
}

}  // namespace

TEST_CASE("fermionic measure basics") {
    auto q = Padic::from_long(6, 5, kPrec);
    // total mass over a level-N partition is 1
    for (int N : {1, 2}) {
        long long m = 3 * static_cast<long long>(pow_p(5, N));
        Padic total = Padic::zero(5);
        for (long long a = 0; a < m; ++a) total += mu_fermionic_ball(q, Ball{a, N, 3});
        CHECK(gauge(total - Padic::one(5, kPrec)) >= kPrec - 1);
    }
    // q=1: value is (-1)^a
    auto q1 = Padic::one(5, kPrec);
    CHECK(gauge(mu_fermionic_ball(q1, Ball{3, 1, 1}) + Padic::one(5, kPrec)) >= kPrec);
    // refinement sums to the parent value
    std::mt19937_64 rng(99);
    for (int it = 0; it < 20; ++it) {
        int N = 1 + (int)(rng() % 3);
        long long m = 3 * static_cast<long long>(pow_p(5, N));
        long long a = (long long)(rng() % m);
        Padic children = Padic::zero(5);
        for (long long i = 0; i < 5; ++i)
            children += mu_fermionic_ball(q, Ball{a + i * m, N + 1, 3});
        CHECK(gauge(children - mu_fermionic_ball(q, Ball{a, N, 3})) >= kPrec - 1);
    }
}

TEST_CASE("mu at n=0, xi=1, h=1 is the fermionic measure") {
    PRing R(PadicDomain{5, kPrec}, 1);
    MeasureEvaluator ev(R, params(0, 1, 5, 6, TwistSpec{1, 0}, 1));
    std::mt19937_64 rng(7);
    for (int it = 0; it < 25; ++it) {
        int N = (int)(rng() % 4);
        long long m = static_cast<long long>(pow_p(5, N));
        long long a = (long long)(rng() % m);
        auto lhs = ev.mu(Ball{a, N, 1});
        auto rhs = R.from_scalar(mu_fermionic_ball(ev.params().q, Ball{a, N, 1}));
        CHECK(min_valuation(lhs - rhs) >= kPrec - 1);
    }
}

TEST_CASE("expanded form agrees with the statement form") {
    PRing R(PadicDomain{5, kPrec}, 7);
    MeasureEvaluator ev(R, params(2, 1, 5, 6, TwistSpec{7, 1}, 1));
    CHECK(min_valuation(ev.mu(Ball{3, 2, 1}) - ev.mu_statement(Ball{3, 2, 1})) >= 12);
    MeasureEvaluator ev2(R, params(4, 2, 5, 1 + 2 * 25, TwistSpec{7, 3}, 3));
    std::mt19937_64 rng(123);
    for (int it = 0; it < 10; ++it) {
        int N = (int)(rng() % 3);
        long long m = 3 * static_cast<long long>(pow_p(5, N));
        long long a = (long long)(rng() % m);
        CHECK(min_valuation(ev2.mu(Ball{a, N, 3}) - ev2.mu_statement(Ball{a, N, 3})) >= 12);
    }
}

TEST_CASE("distribution property of mu") {
    PRing R(PadicDomain{5, kPrec}, 7);
    for (long n : {0L, 1L, 3L}) {
        for (long long h : {1LL, 2LL}) {
            MeasureEvaluator ev(R, params(n, h, 5, 6, TwistSpec{7, 1}, 3));
            std::mt19937_64 rng(n * 10 + h);
            for (int it = 0; it < 12; ++it) {
                int N = (int)(rng() % 4);
                long long m = 3 * static_cast<long long>(pow_p(5, N));
                CHECK(check_distribution(ev, Ball{(long long)(rng() % m), N, 3}) >= 12);
            }
        }
    }
}

TEST_CASE("boundedness probe") {
    PRing R(PadicDomain{5, kPrec}, 7);
    long long v1q = 1;  // v(1 - q) for q = 1+5
    for (long n : {0L, 2L, 5L}) {
        MeasureEvaluator ev(R, params(n, 1, 5, 6, TwistSpec{7, 2}, 1));
        std::mt19937_64 rng(n);
        for (int it = 0; it < 30; ++it) {
            int N = (int)(rng() % 4);
            long long m = static_cast<long long>(pow_p(5, N));
            CHECK(min_valuation(ev.mu(Ball{(long long)(rng() % m), N, 1})) >= -n * v1q);
        }
    }
}

TEST_CASE("integrate: level independence and linearity") {
    PRing R(PadicDomain{5, kPrec}, 14);
    auto quad3 = DirichletCharacter::enumerate(3)[1];
    MeasureEvaluator ev(R, params(2, 1, 5, 6, TwistSpec{7, 1}, 3));
    auto table = char_table(R, quad3, 3);  // level-0 table
    auto v1 = ev.integrate(table, 0, 1);
    for (int N : {2, 3}) CHECK(min_valuation(ev.integrate(table, 0, N) - v1) >= 12);
    CHECK_THROWS_AS(ev.integrate(table, 0, 0), std::invalid_argument);

    // integrate is the plain mu-weighted sum (fast path vs direct path)
    long long m = 3 * 5;
    std::vector<PElem> t1;
    for (long long c = 0; c < m; ++c) t1.push_back(quad3.value_in(R, c) * R.root_of_unity(c % 14));
    auto fast = ev.integrate(t1, 1, 2);
    PElem direct = R.zero();
    long long m2 = 3 * 25;
    for (long long c = 0; c < m2; ++c) direct += t1[c % m] * ev.mu(Ball{c, 2, 3});
    CHECK(min_valuation(fast - direct) >= 12);

    // f == 1, n=0, xi=1, h=1: total mass 1
    MeasureEvaluator ev0(R, params(0, 1, 5, 6, TwistSpec{1, 0}, 3));
    std::vector<PElem> ones(3, R.one());
    CHECK(min_valuation(ev0.integrate(ones, 0, 2) - R.one()) >= kPrec - 1);
}

TEST_CASE("integrate matches the generalized-number route (Lemma 1)") {
    PRing R(PadicDomain{5, kPrec}, 14);
    auto quad3 = DirichletCharacter::enumerate(3)[1];
    auto q = Padic::from_long(6, 5, kPrec);
    for (long n : {0L, 1L, 2L, 4L}) {
        MeasureEvaluator ev(R, params(n, 1, 5, 6, TwistSpec{7, 1}, 3));
        auto table = char_table(R, quad3, 3);
        auto via_measure = ev.integrate(table, 0, 2);
        auto via_euler = generalized_twisted_number_padic(R, n, 1, q, TwistSpec{7, 1}, quad3, 3);
        CHECK(min_valuation(via_measure - via_euler) >= 12);
    }
}

TEST_CASE("integrate over units = integral over X minus integral over pX") {
    PRing R(PadicDomain{5, kPrec}, 7);
    // f == 1, n=0, xi=1, h=1, d=1: 1 - mu_{-q}(pZ_p)
    MeasureEvaluator ev(R, params(0, 1, 5, 6, TwistSpec{1, 0}, 1));
    std::vector<PElem> ones(1, R.one());
    auto on_units = ev.integrate_units(ones, 0, 1);
    auto expect = R.one() - R.from_scalar(mu_fermionic_ball(ev.params().q, Ball{0, 1, 1}));
    CHECK(min_valuation(on_units - expect) >= kPrec - 1);

    // general f: direct complement identity at matching level
    MeasureEvaluator ev2(R, params(2, 2, 5, 6, TwistSpec{7, 1}, 1));
    std::vector<PElem> f;
    for (long long c = 0; c < 5; ++c) f.push_back(R.root_of_unity(c % 7));
    auto units = ev2.integrate_units(f, 1, 2);
    PElem px = R.zero();
    for (long long c = 0; c < 25; ++c)
        if (c % 5 == 0) px += f[c % 5] * ev2.mu(Ball{c, 2, 1});
    CHECK(min_valuation(units - (ev2.integrate(f, 1, 2) - px)) >= 12);

    // level independence for level-1 locally constant f
    CHECK(min_valuation(ev2.integrate_units(f, 1, 2) - ev2.integrate_units(f, 1, 3)) >= 12);
}

TEST_CASE("Lemma 2 scaling identity") {
    PRing R(PadicDomain{5, kPrec}, 7);
    for (long n : {0L, 1L, 4L}) {
        MeasureParams P = params(n, 1, 5, 6, TwistSpec{7, 1}, 1);
        MeasureEvaluator ev(R, P);
        MeasureEvaluator evp(R, scaled_params(P));
        // n=0, xi=1, h=1 reduces to a fermionic-mass identity
        std::mt19937_64 rng(n + 17);
        for (int it = 0; it < 12; ++it) {
            int N = (int)(rng() % 4);
            long long m = static_cast<long long>(pow_p(5, N));
            CHECK(check_scaling(ev, evp, Ball{(long long)(rng() % m), N, 1}) >= 12);
        }
        // iterated scaling: mu(p^2 U) via two applications equals direct evaluation
        MeasureEvaluator evpp(R, scaled_params(scaled_params(P)));
        Ball u{2, 1, 1};
        auto q = P.q;
        Padic one = Padic::one(5, kPrec);
        Padic f1 = qbracket(BigInt(5), q).pow(n) * (one + q) / (one + q.pow(5));
        Padic f2 = qbracket(BigInt(5), q.pow(5)).pow(n) * (one + q.pow(5)) / (one + q.pow(25));
        auto direct = ev.mu(Ball{2 * 25, u.N + 2, 1});
        auto twice = evpp.mu(u) * R.from_scalar(f1 * f2);
        CHECK(min_valuation(direct - twice) >= 12);
    }
}

TEST_CASE("Lemma 3 density gauges") {
    PRing R(PadicDomain{5, kPrec}, 7);
    // n=0, xi=1, h=1: exact at every level
    MeasureEvaluator triv(R, params(0, 1, 5, 6, TwistSpec{1, 0}, 1));
    for (long long v : check_density(triv, 2, 1, 4)) CHECK(v >= kPrec - 1);

    // xi=1 families converge
    MeasureEvaluator ev1(R, params(2, 1, 5, 6, TwistSpec{1, 0}, 1));
    auto vs = check_density(ev1, 1, 1, 4);
    for (size_t i = 1; i < vs.size(); ++i) CHECK(vs[i] >= vs[i - 1]);
    CHECK(vs.back() >= 3);

    // a = 0 with n >= 1: RHS vanishes, gauge tracks v(mu(0 + dp^N Z_p)) and grows
    MeasureEvaluator ev7(R, params(2, 1, 5, 6, TwistSpec{7, 1}, 1));
    auto vs0 = check_density(ev7, 0, 1, 4);
    for (size_t i = 1; i < vs0.size(); ++i) CHECK(vs0[i] > vs0[i - 1]);

    // the mu_0-relative density converges for the order-7 twist as well
    auto vs7 = check_density_mu0(ev7, 3, 1, 4);
    for (size_t i = 1; i < vs7.size(); ++i) CHECK(vs7[i] >= vs7[i - 1]);
    CHECK(vs7.back() >= 4);
}

TEST_CASE("fermionic shift identities at q = 1") {
    PRing R(PadicDomain{5, 20}, 7);
    // shift 0: trivial
    std::vector<PElem> f;
    for (long long c = 0; c < 5; ++c) f.push_back(R.root_of_unity(c % 7));
    CHECK(check_fermionic_shift(R, 1, f, 1, 0, 2) >= 20);
    // shift 1, f == 1: I(f) + I(f) = 2 f(0)
    std::vector<PElem> ones(1, R.one());
    CHECK(check_fermionic_shift(R, 1, ones, 0, 1, 1) >= 20);
    // shift 3, level-1 twist table
    CHECK(check_fermionic_shift(R, 1, f, 1, 3, 2) >= 20);
    CHECK(check_fermionic_shift(R, 1, f, 1, 3, 3) >= 20);
    CHECK_THROWS_AS(check_fermionic_shift(R, 1, f, 1, -1, 2), std::invalid_argument);
}

TEST_CASE("q = 1 measure goes through the classical route") {
    PRing R(PadicDomain{5, 20}, 7);
    MeasureParams P{2, 1, Padic::one(5, 20), TwistSpec{7, 1}, 1};
    MeasureEvaluator ev(R, P);
    // distribution still holds on the classical path
    CHECK(check_distribution(ev, Ball{3, 1, 1}) >= 18);
    // refinement consistency against an independently scaled evaluator
    MeasureEvaluator evp(R, scaled_params(P));
    CHECK(check_scaling(ev, evp, Ball{1, 1, 1}) >= 18);
}
