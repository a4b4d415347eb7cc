#include "qeuler/bigint.hpp"

namespace qeuler {

BigInt pow_p(long long p, long long e) {
    if (e < 0) throw std::invalid_argument("pow_p: negative exponent");
    BigInt base = p, out = 1;
    while (e) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

long long vp_int(BigInt n, long long p) {
    if (n == 0) throw std::invalid_argument("vp_int: zero");
    if (n < 0) n = -n;
    long long v = 0;
    // peel large powers first, then single steps
    BigInt pk = pow_p(p, 16);
    while (n % pk == 0) { n /= pk; v += 16; }
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r0 = m, r1 = mod_pos(a, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        BigInt t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_pos(t0, m);
}

BigInt mod_pow(BigInt base, BigInt exp, const BigInt& m) {
    if (exp < 0) {
        base = mod_inverse(base, m);
        exp = -exp;
    }
    base = mod_pos(base, m);
    BigInt out = 1;
    while (exp != 0) {
        if ((exp & 1) != 0) out = out * base % m;
        exp >>= 1;
        if (exp != 0) base = base * base % m;
    }
    return out;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

std::vector<std::pair<long long, long long>> factorize(long long n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long long, long long>> out;
    for (long long f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f) continue;
        long long e = 0;
        while (n % f == 0) { n /= f; ++e; }
        out.emplace_back(f, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long long euler_phi(long long n) {
    long long out = 1;
    for (auto [q, e] : factorize(n)) {
        long long qe = 1;
        for (long long i = 1; i < e; ++i) qe *= q;
        out *= qe * (q - 1);
    }
    return n == 1 ? 1 : out;
}

}  // namespace qeuler
