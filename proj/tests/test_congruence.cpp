#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qeuler/congruence.hpp"

using namespace qeuler;

namespace {

std::vector<PElem> int_seq(const PRing& R, const std::vector<long long>& v) {
    std::vector<PElem> out;
    for (long long x : v) out.push_back(R.from_scalar(Padic::from_long(x, R.domain().p, R.domain().prec)));
    return out;
}

}  // namespace

TEST_CASE("forward difference basics") {
    PRing R(PadicDomain{5, 20}, 1);
    std::vector<long long> lin, quad;
    for (long long m = 0; m < 12; ++m) {
        lin.push_back(m);
        quad.push_back(m * m);
    }
    auto L = int_seq(R, lin), Q = int_seq(R, quad);
    // k = 0: identity
    CHECK(min_valuation(forward_difference(L, 2, 0, 3) - L[3]) >= 20);
    // a_m = m, c=2, k=1, m=0 -> 2
    auto d = forward_difference(L, 2, 1, 0);
    CHECK(min_valuation(d - R.from_scalar(Padic::from_long(2, 5, 20))) >= 20);
    // third difference of a quadratic vanishes
    for (long long m = 0; m < 9; ++m) CHECK(min_valuation(forward_difference(Q, 1, 3, m)) >= 20);
    CHECK_THROWS_AS(forward_difference(L, 2, 3, 8), std::out_of_range);
}

TEST_CASE("recursive and binomial forms agree") {
    PRing R(PadicDomain{7, 16}, 6);
    std::mt19937_64 rng(5150);
    std::vector<PElem> seq;
    for (int i = 0; i < 24; ++i) {
        std::vector<Padic> c;
        for (long j = 0; j < R.degree(); ++j)
            c.push_back(Padic::from_long((long long)(rng() % 4000) - 2000, 7, 16));
        seq.push_back(R.from_coeffs(std::move(c)));
    }
    for (long long k = 0; k <= 5; ++k)
        for (long long c = 1; c <= 3; ++c)
            for (long long m = 0; m + k * c < 24; m += 3) {
                auto a = forward_difference(seq, c, k, m);
                auto b = forward_difference_recursive(seq, c, k, m);
                CHECK(min_valuation(a - b) >= 16);
            }
}

TEST_CASE("linearity of the difference operator") {
    PRing R(PadicDomain{5, 18}, 4);
    std::mt19937_64 rng(33);
    auto rnd_seq = [&] {
        std::vector<PElem> s;
        for (int i = 0; i < 15; ++i) {
            std::vector<Padic> c;
            for (long j = 0; j < R.degree(); ++j)
                c.push_back(Padic::from_long((long long)(rng() % 1000), 5, 18));
            s.push_back(R.from_coeffs(std::move(c)));
        }
        return s;
    };
    auto A = rnd_seq(), B = rnd_seq();
    auto alpha = Padic::from_long(7, 5, 18), beta = Padic::from_long(-3, 5, 18);
    for (long long k : {1LL, 2LL, 4LL}) {
        std::vector<PElem> comb;
        for (int i = 0; i < 15; ++i) comb.push_back(A[i] * alpha + B[i] * beta);
        auto lhs = forward_difference(comb, 2, k, 1);
        auto rhs = forward_difference(A, 2, k, 1) * alpha + forward_difference(B, 2, k, 1) * beta;
        CHECK(min_valuation(lhs - rhs) >= 17);
    }
}

TEST_CASE("Kummer congruences for epsilon, trivial character") {
    // p=5, d=1, chi trivial, r=7, h=1, q=1+5, c=4: gauge(Delta_4^k eps_n) >= k
    PRing R(PadicDomain{5, 12 + 16 + 10}, 7);
    auto q = Padic::from_long(6, 5, 12 + 16 + 10);
    LFunction lf(R, LSpec{DirichletCharacter::trivial(1), 1, q, TwistSpec{7, 1}});
    auto eps = lf.epsilon_sequence(16);
    // integrality first: mod p^k only means something for integral values
    for (const auto& e : eps) CHECK(min_valuation(e) >= 0);
    for (long long k : {1LL, 2LL}) {
        auto rep = kummer_check(eps, 5, 4, k, 0, 8);
        CHECK(rep.pass);
        for (const auto& row : rep.rows) CHECK(row.residual >= k);
    }
    // k = 0 trivially passes
    CHECK(kummer_check(eps, 5, 4, 0, 0, 8).pass);
    CHECK_THROWS_AS(kummer_check(eps, 5, 3, 1, 0, 8), std::invalid_argument);
}

TEST_CASE("Kummer congruences with quadratic character, p=7") {
    PRing R(PadicDomain{7, 12 + 14 + 10}, 2);
    auto q = Padic::from_long(8, 7, 12 + 14 + 10);
    auto quad3 = DirichletCharacter::enumerate(3)[1];
    LFunction lf(R, LSpec{quad3, 1, q, TwistSpec{1, 0}});
    auto eps = lf.epsilon_sequence(14);
    auto rep = kummer_check(eps, 7, 6, 1, 0, 8);
    CHECK(rep.pass);
}

TEST_CASE("pair congruences") {
    PRing R(PadicDomain{5, 30}, 7);
    auto q = Padic::from_long(6, 5, 30);
    LFunction lf(R, LSpec{DirichletCharacter::trivial(1), 1, q, TwistSpec{7, 1}});
    auto eps = lf.epsilon_sequence(8);
    auto row = pair_congruence_check(eps, 5, 6, 2);
    CHECK(row.pass);
    // n = n': residual is the full working absolute precision of eps_3
    CHECK(pair_congruence_check(eps, 5, 3, 3).residual >= 25);
    CHECK_THROWS_AS(pair_congruence_check(eps, 5, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(pair_congruence_check(eps, 5, 4, 0), std::invalid_argument);

    // p=7, d=3, quadratic character, (n, n') = (7, 1)
    PRing R7(PadicDomain{7, 30}, 2);
    auto q7 = Padic::from_long(8, 7, 30);
    auto quad3 = DirichletCharacter::enumerate(3)[1];
    LFunction lf7(R7, LSpec{quad3, 1, q7, TwistSpec{1, 0}});
    auto eps7 = lf7.epsilon_sequence(7);
    CHECK(pair_congruence_check(eps7, 7, 7, 1).pass);
}
