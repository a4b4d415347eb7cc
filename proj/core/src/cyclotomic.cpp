#include "qeuler/cyclotomic.hpp"

#include <map>
#include <sstream>

namespace qeuler {

namespace {

// exact division of monic-divisor polynomials over Z, ascending coefficients
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    long long dn = static_cast<long long>(num.size()) - 1;
    long long dd = static_cast<long long>(den.size()) - 1;
    std::vector<BigInt> quot(dn - dd + 1);
    for (long long k = dn - dd; k >= 0; --k) {
        BigInt c = num[k + dd];
        quot[k] = c;
        if (c == 0) continue;
        for (long long i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_poly(long long M) {
    if (M < 1) throw std::invalid_argument("cyclotomic_poly: M must be >= 1");
    std::map<long long, std::vector<BigInt>> phis;
    for (long long d = 1; d <= M; ++d) {
        if (M % d) continue;
        std::vector<BigInt> poly(d + 1);
        poly[0] = -1;
        poly[d] = 1;  // x^d - 1
        for (long long e = 1; e < d; ++e)
            if (d % e == 0) poly = poly_divide_exact(std::move(poly), phis[e]);
        phis[d] = std::move(poly);
    }
    return phis[M];
}

std::vector<BigInt> monomial_mod(long long k, const std::vector<BigInt>& phi) {
    long long deg = static_cast<long long>(phi.size()) - 1;
    if (k < deg) {
        std::vector<BigInt> out(deg);
        out[k] = 1;
        return out;
    }
    std::vector<BigInt> num(k + 1);
    num[k] = 1;
    for (long long j = k; j >= deg; --j) {
        BigInt c = num[j];
        if (c == 0) continue;
        num[j] = 0;
        for (long long i = 0; i < deg; ++i) num[j - deg + i] -= c * phi[i];
    }
    num.resize(deg);
    return num;
}

std::vector<BigInt> poly_mul_reduce(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                    const std::vector<BigInt>& phi, const BigInt& modulus) {
    long long deg = static_cast<long long>(phi.size()) - 1;
    std::vector<BigInt> conv(2 * deg - 1);
    for (long long i = 0; i < deg; ++i) {
        if (a[i] == 0) continue;
        for (long long j = 0; j < deg; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    for (long long j = 2 * deg - 2; j >= deg; --j) {
        BigInt c = conv[j];
        if (c == 0) continue;
        conv[j] = 0;
        for (long long i = 0; i < deg; ++i) conv[j - deg + i] -= c * phi[i];
    }
    conv.resize(deg);
    for (auto& c : conv) c = mod_pos(c, modulus);
    return conv;
}

namespace {

using FpPoly = std::vector<long long>;  // ascending, coefficients in [0, p)

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(out);
    return out;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, long long p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] % p + p) % p;
    fp_trim(a);
    return a;
}

long long fp_inv(long long a, long long p) {
    return static_cast<long long>(mod_inverse(BigInt(a), BigInt(p)));
}

// divides a by b, returns quotient, leaves remainder in a
FpPoly fp_divmod(FpPoly& a, const FpPoly& b, long long p) {
    FpPoly q;
    long long binv = fp_inv(b.back(), p);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        long long c = a.back() * binv % p;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] - c * b[i] % p + p) % p;
        fp_trim(a);
    }
    fp_trim(q);
    return q;
}

std::string fp_poly_str(const FpPoly& f) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << "]";
    return os.str();
}

}  // namespace

std::vector<BigInt> poly_invert_padic(const std::vector<BigInt>& a, const std::vector<BigInt>& phi,
                                      long long p, long long P) {
    long long deg = static_cast<long long>(phi.size()) - 1;
    FpPoly fa(deg), fphi(deg + 1);
    for (long long i = 0; i < deg; ++i) fa[i] = static_cast<long long>(mod_pos(a[i], p));
    for (long long i = 0; i <= deg; ++i) fphi[i] = static_cast<long long>(mod_pos(phi[i], p));
    fp_trim(fa);
    fp_trim(fphi);

    // extended Euclid: u*a == gcd (mod phi, p)
    FpPoly r0 = fphi, r1 = fa, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        FpPoly rem = r0;
        FpPoly q = fp_divmod(rem, r1, p);
        r0 = r1;
        r1 = rem;
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1)
        throw std::domain_error("cyclotomic invert: element not invertible, mod-p gcd with Phi_M is " +
                                fp_poly_str(r0));
    long long ginv = fp_inv(r0[0], p);
    std::vector<BigInt> y(deg);
    for (size_t i = 0; i < t0.size(); ++i) y[i] = t0[i] * ginv % p;

    std::vector<BigInt> ared(deg);
    // Newton iteration y <- y(2 - a y), doubling the exactness each step
    for (long long e = 1; e < P;) {
        long long e2 = std::min(2 * e, P);
        BigInt m2 = pow_p(p, e2);
        for (long long i = 0; i < deg; ++i) ared[i] = mod_pos(a[i], m2);
        auto t = poly_mul_reduce(ared, y, phi, m2);
        for (auto& c : t) c = -c;
        t[0] += 2;
        for (auto& c : t) c = mod_pos(c, m2);
        y = poly_mul_reduce(y, t, phi, m2);
        e = e2;
    }
    return y;
}

namespace {

using QPoly = std::vector<BigRat>;  // ascending

void q_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    q_trim(out);
    return out;
}

QPoly q_sub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), BigRat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    q_trim(a);
    return a;
}

QPoly q_divmod(QPoly& a, const QPoly& b) {
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, BigRat(0));
    while (a.size() >= b.size() && !a.empty()) {
        BigRat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        q_trim(a);
    }
    q_trim(q);
    return q;
}

}  // namespace

std::vector<BigRat> poly_invert_rational(const std::vector<BigRat>& a,
                                         const std::vector<BigInt>& phi) {
    long long deg = static_cast<long long>(phi.size()) - 1;
    QPoly fa = a, fphi(deg + 1);
    for (long long i = 0; i <= deg; ++i) fphi[i] = BigRat(phi[i]);
    q_trim(fa);
    if (fa.empty()) throw std::domain_error("cyclotomic invert: zero element");

    QPoly r0 = fphi, r1 = fa, t0 = {}, t1 = {BigRat(1)};
    while (!r1.empty()) {
        QPoly rem = r0;
        QPoly q = q_divmod(rem, r1);
        r0 = r1;
        r1 = rem;
        QPoly t2 = q_sub(t0, q_mul(q, t1));
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1) throw std::domain_error("cyclotomic invert: non-constant gcd");
    std::vector<BigRat> out(deg, BigRat(0));
    for (size_t i = 0; i < t0.size(); ++i) out[i] = t0[i] / r0[0];
    return out;
}

long long min_valuation(const PElem& a) {
    long long out = Padic::kExactVal;
    for (const auto& s : a.coeffs()) out = std::min(out, gauge(s));
    return out;
}

PElem invert(const PElem& a) {
    const PRing& R = *a.ring();
    long long deg = R.degree();
    long long P = R.domain().prec;
    long long A = P;
    for (const auto& s : a.coeffs()) {
        if (!s.is_zero() && s.valuation() < 0)
            throw std::domain_error("cyclotomic invert: element has negative valuation");
        A = std::min(A, s.abs_precision());
    }
    if (A < 1) throw std::domain_error("cyclotomic invert: no significant digits");
    std::vector<BigInt> rep(deg);
    for (long long i = 0; i < deg; ++i) rep[i] = a.coeffs()[i].lift(A);
    auto y = poly_invert_padic(rep, R.phi(), R.domain().p, A);
    std::vector<Padic> c(deg);
    for (long long i = 0; i < deg; ++i) c[i] = Padic::from_integer_abs(y[i], R.domain().p, A);
    return R.from_coeffs(std::move(c));
}

QElem invert(const QElem& a) {
    const QRing& R = *a.ring();
    auto y = poly_invert_rational(a.coeffs(), R.phi());
    return R.from_coeffs(std::move(y));
}

PElem embed_rational(const QElem& a, const PRing& ring) {
    if (a.ring()->modulus() != ring.modulus())
        throw std::invalid_argument("embed_rational: cyclotomic level mismatch");
    std::vector<Padic> c;
    c.reserve(ring.degree());
    for (const auto& s : a.coeffs()) c.push_back(ring.domain().from_rational(s));
    return ring.from_coeffs(std::move(c));
}

}  // namespace qeuler
