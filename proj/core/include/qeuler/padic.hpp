#pragma once

#include <limits>
#include <string>

#include "qeuler/bigint.hpp"

namespace qeuler {

/*
 * Fixed-relative-precision scalar arithmetic in Q_p (p an odd prime).
 *
 * A nonzero value is stored as p^val * unit with the unit kept modulo
 * p^prec, so `prec` base-p digits of the unit are significant and the
 * value is known modulo p^(val+prec).  Addition of nearly opposite
 * values loses digits; the loss is reflected in the result's precision
 * rather than silently absorbed.  A result indistinguishable from zero
 * at the working precision becomes a flagged zero carrying the bound
 * "== 0 mod p^k" (k = kExactVal for an exact zero).
 */
class Padic {
public:
    static constexpr long long kExactVal = std::numeric_limits<long long>::max() / 4;

    Padic() = default;

    static Padic zero(long long p) { return Padic(p, kExactVal, 0, 0); }
    // Flagged zero: known only to be divisible by p^bound.
    static Padic zero_mod(long long p, long long bound) { return Padic(p, bound, 0, 0); }
    static Padic one(long long p, long long prec) { return from_integer(1, p, prec); }
    static Padic from_long(long long n, long long p, long long prec) {
        return from_integer(BigInt(n), p, prec);
    }
    // n with relative precision `prec`.
    static Padic from_integer(const BigInt& n, long long p, long long prec);
    // num/den (den nonzero) with relative precision `prec`.
    static Padic from_rational(const BigInt& num, const BigInt& den, long long p, long long prec);
    static Padic from_rational(const BigRat& r, long long p, long long prec) {
        return from_rational(big_num(r), big_den(r), p, prec);
    }
    // n known modulo p^abs_bound only.
    static Padic from_integer_abs(const BigInt& n, long long p, long long abs_bound);

    long long prime() const { return p_; }
    bool is_zero() const { return unit_ == 0; }
    bool is_exact_zero() const { return unit_ == 0 && val_ >= kExactVal; }
    // Equal to 1 at full stored precision; q-limit conventions key off this.
    bool is_one() const { return unit_ == 1 && val_ == 0; }
    // For zeros this is the divisibility bound, kExactVal when exact.
    long long valuation() const { return val_; }
    long long precision() const { return prec_; }
    long long abs_precision() const {
        if (is_zero()) return val_;
        return val_ >= kExactVal - prec_ ? kExactVal : val_ + prec_;
    }
    const BigInt& unit() const { return unit_; }

    Padic operator-() const;
    Padic operator+(const Padic& o) const;
    Padic operator-(const Padic& o) const { return *this + (-o); }
    Padic operator*(const Padic& o) const;
    Padic operator/(const Padic& o) const;
    Padic& operator+=(const Padic& o) { return *this = *this + o; }
    Padic& operator-=(const Padic& o) { return *this = *this - o; }
    Padic& operator*=(const Padic& o) { return *this = *this * o; }
    Padic& operator/=(const Padic& o) { return *this = *this / o; }

    Padic inverse() const;
    // Integer power; negative exponents invert (nonzero base required there).
    Padic pow(const BigInt& e) const;

    // Truncate so that abs_precision() <= bound.
    Padic cap_abs(long long bound) const;

    // Integer representative of the value modulo p^k (valuation must be >= 0
    // and k <= abs_precision()).
    BigInt lift(long long k) const;

    // Base-p digits of the unit, least significant first, `precision()` of them.
    std::vector<long long> unit_digits() const;

    std::string str() const;

private:
    Padic(long long p, long long val, BigInt unit, long long prec)
        : p_(p), val_(val), prec_(prec), unit_(std::move(unit)) {}
    static Padic make(long long p, long long val, const BigInt& unit_rep, long long prec);

    long long p_ = 0;
    long long val_ = 0;
    long long prec_ = 0;
    BigInt unit_ = 0;
};

// Valuation gauge: valuation for nonzero, divisibility bound for zeros.
inline long long gauge(const Padic& x) { return x.valuation(); }

// Teichmueller lift: the unique (p-1)-th root of unity congruent to t mod p,
// computed as the fixpoint of t -> t^p.  Requires p coprime to t.
Padic teichmuller(const BigInt& t, long long p, long long prec);

// log(x) = sum (-1)^(n+1) (x-1)^n / n for x == 1 (mod p).
Padic iwasawa_log(const Padic& x);

// exp(x) = sum x^n / n! for v(x) >= 1.
Padic padic_exp(const Padic& x);

// q^x = exp(x log q) for q == 1 (mod p); v(x log q) >= 1 must hold, which
// admits x with bounded negative valuation when q is close enough to 1.
Padic qpow(const Padic& q, const Padic& x);
Padic qpow(const Padic& q, const BigRat& x);

// [x]_q = (1 - q^x)/(1 - q), with [x]_1 = x.
Padic qbracket(const BigInt& x, const Padic& q);
Padic qbracket(const Padic& x, const Padic& q);
// [x]_{-q} = (1 - (-q)^x)/(1 + q) for integer x.
Padic qbracket_neg(const BigInt& x, const Padic& q);

// <t>_q = [t]_q / omega(t), a principal unit; requires p coprime to t.
Padic angle_bracket(const BigInt& t, const Padic& q);

// base^s = exp(s log base) for base == 1 (mod p), s in Z_p.
Padic power_s(const Padic& base, const Padic& s);

}  // namespace qeuler
