#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qeuler {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt big_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

// p^e for small prime p, e >= 0.
BigInt pow_p(long long p, long long e);

// Exponent of p in n; n must be nonzero.
long long vp_int(BigInt n, long long p);

// Nonnegative representative of n mod m (m > 0).
inline BigInt mod_pos(const BigInt& n, const BigInt& m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of a mod m via extended Euclid; throws if gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

BigInt mod_pow(BigInt base, BigInt exp, const BigInt& m);

BigInt binomial(long long n, long long k);

inline long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}
inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

inline bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long f = 3; f * f <= p; f += 2)
        if (p % f == 0) return false;
    return true;
}

// Prime factorization of n > 0 as (prime, exponent) pairs, ascending.
std::vector<std::pair<long long, long long>> factorize(long long n);

long long euler_phi(long long n);

}  // namespace qeuler
