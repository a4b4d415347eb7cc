#include "qeuler/padic.hpp"

#include <sstream>

namespace qeuler {

namespace {

long long sat_add(long long a, long long b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > Padic::kExactVal) return Padic::kExactVal;
    if (s < -Padic::kExactVal) return -Padic::kExactVal;
    return static_cast<long long>(s);
}

long long ilog_p(long long p, long long k) {
    long long e = 0, pk = 1;
    while (pk <= k / p) { pk *= p; ++e; }
    return e;
}

}  // namespace

namespace {
constexpr long long kMaxPrec = 1 << 20;
}

Padic Padic::from_integer(const BigInt& n, long long p, long long prec) {
    if (prec < 1 || prec > kMaxPrec) throw std::invalid_argument("Padic: bad precision");
    if (n == 0) return zero(p);
    long long v = vp_int(n, p);
    BigInt u = mod_pos(n / pow_p(p, v), pow_p(p, prec));
    return Padic(p, v, u, prec);
}

Padic Padic::from_integer_abs(const BigInt& n, long long p, long long abs_bound) {
    if (abs_bound > kMaxPrec) throw std::invalid_argument("Padic: bad absolute bound");
    if (abs_bound < 1) return zero_mod(p, abs_bound);
    BigInt r = mod_pos(n, pow_p(p, abs_bound));
    if (r == 0) return zero_mod(p, abs_bound);
    long long v = vp_int(r, p);
    BigInt u = (r / pow_p(p, v)) % pow_p(p, abs_bound - v);
    return Padic(p, v, u, abs_bound - v);
}

Padic Padic::from_rational(const BigInt& num, const BigInt& den, long long p, long long prec) {
    if (den == 0) throw std::invalid_argument("Padic: zero denominator");
    if (num == 0) return zero(p);
    long long vn = vp_int(num, p), vd = vp_int(den, p);
    BigInt m = pow_p(p, prec);
    BigInt u = mod_pos(num / pow_p(p, vn), m) * mod_inverse(mod_pos(den / pow_p(p, vd), m), m) % m;
    return Padic(p, vn - vd, u, prec);
}

Padic Padic::cap_abs(long long bound) const {
    if (is_zero()) return val_ <= bound ? *this : zero_mod(p_, bound);
    if (abs_precision() <= bound) return *this;
    long long prec = bound - val_;
    if (prec <= 0) return zero_mod(p_, bound);
    return Padic(p_, val_, unit_ % pow_p(p_, prec), prec);
}

Padic Padic::operator-() const {
    if (is_zero()) return *this;
    return Padic(p_, val_, pow_p(p_, prec_) - unit_, prec_);
}

Padic Padic::operator+(const Padic& o) const {
    long long A = std::min(abs_precision(), o.abs_precision());
    if (is_zero() && o.is_zero()) {
        if (is_exact_zero() && o.is_exact_zero()) return zero(p_);
        return zero_mod(p_, A);
    }
    if (is_zero()) return o.cap_abs(A);
    if (o.is_zero()) return cap_abs(A);
    long long m = std::min(val_, o.val_);
    long long w = A - m;
    if (w <= 0) return zero_mod(p_, A);
    BigInt mod = pow_p(p_, w);
    auto shifted = [&](const Padic& s) -> BigInt {
        long long sh = s.val_ - m;
        if (sh >= w) return 0;
        return s.unit_ % pow_p(p_, w - sh) * pow_p(p_, sh);
    };
    BigInt x = mod_pos(shifted(*this) + shifted(o), mod);
    if (x == 0) return zero_mod(p_, A);
    long long v = vp_int(x, p_);
    BigInt u = (x / pow_p(p_, v)) % pow_p(p_, w - v);
    return Padic(p_, m + v, u, w - v);
}

Padic Padic::operator*(const Padic& o) const {
    if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
    if (is_zero() || o.is_zero()) return zero_mod(p_, sat_add(val_, o.val_));
    long long prec = std::min(prec_, o.prec_);
    BigInt m = pow_p(p_, prec);
    return Padic(p_, sat_add(val_, o.val_), unit_ % m * (o.unit_ % m) % m, prec);
}

Padic Padic::operator/(const Padic& o) const {
    if (o.is_zero()) throw std::domain_error("Padic: division by (effective) zero");
    if (is_exact_zero()) return zero(p_);
    if (is_zero()) return zero_mod(p_, sat_add(val_, -o.val_));
    long long prec = std::min(prec_, o.prec_);
    BigInt m = pow_p(p_, prec);
    BigInt u = unit_ % m * mod_inverse(o.unit_ % m, m) % m;
    return Padic(p_, sat_add(val_, -o.val_), u, prec);
}

Padic Padic::inverse() const {
    if (is_zero()) throw std::domain_error("Padic: inverse of (effective) zero");
    return Padic(p_, -val_, mod_inverse(unit_, pow_p(p_, prec_)), prec_);
}

Padic Padic::pow(const BigInt& e) const {
    if (e == 0) {
        if (is_zero()) throw std::domain_error("Padic: 0^0");
        return one(p_, prec_);
    }
    if (is_exact_zero()) {
        if (e < 0) throw std::domain_error("Padic: negative power of zero");
        return zero(p_);
    }
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Padic: negative power of (effective) zero");
        BigInt b = BigInt(val_) * e;
        return zero_mod(p_, b > kExactVal ? kExactVal : static_cast<long long>(b));
    }
    BigInt ve = BigInt(val_) * e;
    if (ve > kExactVal / 2 || ve < -(kExactVal / 2))
        throw std::overflow_error("Padic: pow valuation overflow");
    BigInt m = pow_p(p_, prec_);
    return Padic(p_, static_cast<long long>(ve), mod_pow(unit_, e, m), prec_);
}

BigInt Padic::lift(long long k) const {
    if (k <= 0) return 0;
    if (is_zero()) {
        if (val_ < k) throw std::domain_error("Padic: lift beyond known precision");
        return 0;
    }
    if (val_ < 0) throw std::domain_error("Padic: lift of negative valuation");
    if (abs_precision() < k) throw std::domain_error("Padic: lift beyond known precision");
    if (val_ >= k) return 0;
    return unit_ % pow_p(p_, k - val_) * pow_p(p_, val_);
}

std::vector<long long> Padic::unit_digits() const {
    std::vector<long long> out;
    BigInt u = unit_;
    for (long long i = 0; i < prec_; ++i) {
        out.push_back(static_cast<long long>(u % p_));
        u /= p_;
    }
    return out;
}

std::string Padic::str() const {
    std::ostringstream os;
    if (is_exact_zero()) {
        os << "0";
    } else if (is_zero()) {
        os << "O(" << p_ << "^" << val_ << ")";
    } else {
        os << unit_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << abs_precision() << ")";
    }
    return os.str();
}

Padic teichmuller(const BigInt& t, long long p, long long prec) {
    if (prec < 1) throw std::invalid_argument("teichmuller: precision must be >= 1");
    BigInt m = pow_p(p, prec);
    BigInt x = mod_pos(t, m);
    if (x % p == 0) throw std::domain_error("teichmuller: argument divisible by p");
    for (long long i = 0; i <= prec + 2; ++i) {
        BigInt y = mod_pow(x, p, m);
        if (y == x) return Padic::from_integer(x, p, prec);
        x = y;
    }
    throw std::logic_error("teichmuller: fixpoint iteration did not stabilize");
}

Padic iwasawa_log(const Padic& x) {
    if (x.is_zero()) throw std::domain_error("iwasawa_log: zero argument");
    long long p = x.prime();
    Padic z = x - Padic::one(p, x.precision());
    if (z.is_zero()) return Padic::zero_mod(p, z.valuation());
    if (z.valuation() < 1) throw std::domain_error("iwasawa_log: requires x == 1 (mod p)");
    long long A = z.abs_precision();
    long long vz = z.valuation();
    Padic acc = Padic::zero(p);
    Padic zp = z;
    for (long long k = 1;; ++k) {
        Padic term = zp / Padic::from_long(k, p, z.precision());
        acc += (k % 2 == 1) ? term : -term;
        if ((k + 1) * vz - ilog_p(p, k + 1) >= A) break;
        if (k > 4 * A + 64) throw std::logic_error("iwasawa_log: series did not terminate");
        zp *= z;
    }
    return acc;
}

Padic padic_exp(const Padic& x) {
    long long p = x.prime();
    if (x.is_exact_zero()) return Padic::one(p, 128);
    if (x.is_zero()) {
        if (x.valuation() < 1) throw std::domain_error("padic_exp: requires v(x) >= 1");
        return Padic::one(p, std::min<long long>(x.valuation(), 1 << 16));
    }
    if (x.valuation() < 1) throw std::domain_error("padic_exp: requires v(x) >= 1");
    long long A = x.abs_precision();
    long long vx = x.valuation();
    long long pm1 = p - 1;
    Padic acc = Padic::one(p, A);
    Padic term = acc;
    for (long long k = 1;; ++k) {
        term = term * x / Padic::from_long(k, p, A);
        acc += term;
        // v(x^j / j!) >= (j (v(x)(p-1) - 1) + 1)/(p-1), increasing in j
        if ((k + 1) * (vx * pm1 - 1) + 1 >= A * pm1) break;
        if (k > 4 * A + 64) throw std::logic_error("padic_exp: series did not terminate");
    }
    return acc;
}

namespace {

void require_near_one(const Padic& q) {
    if (q.is_one()) return;
    Padic d = q - Padic::one(q.prime(), q.precision());
    if (d.is_zero() || d.valuation() >= 1) return;
    throw std::domain_error("qpow: requires q == 1 (mod p)");
}

}  // namespace

Padic qpow(const Padic& q, const Padic& x) {
    long long p = q.prime();
    require_near_one(q);
    if (q.is_one() || x.is_exact_zero()) return Padic::one(p, q.precision());
    return padic_exp(x * iwasawa_log(q));
}

Padic qpow(const Padic& q, const BigRat& x) {
    require_near_one(q);
    if (big_den(x) == 1) {
        if (q.is_one()) return Padic::one(q.prime(), q.precision());
        return q.pow(big_num(x));
    }
    return qpow(q, Padic::from_rational(x, q.prime(), q.precision()));
}

Padic qbracket(const BigInt& x, const Padic& q) {
    long long p = q.prime();
    if (q.is_one()) return Padic::from_integer(x, p, q.precision());
    Padic one = Padic::one(p, q.precision());
    return (one - q.pow(x)) / (one - q);
}

Padic qbracket(const Padic& x, const Padic& q) {
    if (q.is_one()) return x;
    Padic one = Padic::one(q.prime(), q.precision());
    return (one - qpow(q, x)) / (one - q);
}

Padic qbracket_neg(const BigInt& x, const Padic& q) {
    long long p = q.prime();
    Padic one = Padic::one(p, q.precision());
    return (one - (-q).pow(x)) / (one + q);
}

Padic angle_bracket(const BigInt& t, const Padic& q) {
    long long p = q.prime();
    if (mod_pos(t, p) == 0) throw std::domain_error("angle_bracket: p divides t");
    return qbracket(t, q) / teichmuller(t, p, q.precision());
}

Padic power_s(const Padic& base, const Padic& s) {
    long long p = base.prime();
    if (!base.is_one()) {
        Padic d = base - Padic::one(p, base.precision());
        if (!d.is_zero() && d.valuation() < 1)
            throw std::domain_error("power_s: requires base == 1 (mod p)");
    }
    if (s.is_exact_zero() || base.is_one()) return Padic::one(p, base.precision());
    if (!s.is_zero() && s.valuation() < 0) throw std::domain_error("power_s: s must lie in Z_p");
    return padic_exp(s * iwasawa_log(base));
}

}  // namespace qeuler
