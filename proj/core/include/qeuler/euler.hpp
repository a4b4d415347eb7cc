#pragma once

#include <complex>
#include <functional>

#include "qeuler/characters.hpp"

namespace qeuler {

/*
 * Twisted (h,q)-Euler polynomials and numbers.
 *
 * The closed form
 *
 *   E_{n,q,w}^{(h)}(x) = [2]_q/(1-q)^n  sum_{j=0}^n  C(n,j) (-1)^j q^{xj} / (1 + w q^{h+j})
 *
 * and the sums built on it are evaluated generically over a "world": the
 * p-adic cyclotomic ring for the main pipeline and the complex numbers for
 * the archimedean cross-checks.  Twists are passed as (r, k), realizing
 * w = zeta_r^k in whichever ring the world provides.
 */

// Twist w = (r-th root of unity)^k.
struct TwistSpec {
    long long r = 1;
    long long k = 0;
    TwistSpec power(const BigInt& e) const {
        return TwistSpec{r, static_cast<long long>(mod_pos(BigInt(k) * e, r))};
    }
    bool is_one() const { return (k % r + r) % r == 0; }
};

inline bool ring_is_zero(const PElem& x) { return x.is_zero(); }
inline bool ring_is_zero(const QElem& x) { return x.is_zero(); }
inline bool ring_is_zero(const std::complex<double>& x) { return x == 0.0; }

struct PadicWorld {
    using Scalar = Padic;
    using Ring = PElem;
    const PRing* R;

    long long p() const { return R->domain().p; }
    long long prec() const { return R->domain().prec; }
    Ring embed(const Scalar& s) const { return R->from_scalar(s); }
    Ring one() const { return R->one(); }
    Ring zero() const { return R->zero(); }
    Ring inv(const Ring& x) const { return invert(x); }
    Ring twist(const TwistSpec& w) const {
        if (R->modulus() % w.r != 0)
            throw std::invalid_argument("twist order does not divide ring modulus");
        return R->root_of_unity(w.k * (R->modulus() / w.r));
    }
    Scalar sone() const { return R->domain().one(); }
    Scalar sfrom(const BigInt& n) const { return R->domain().from_bigint(n); }
    Scalar spow(const Scalar& q, const BigInt& e) const { return q.pow(e); }
    Scalar qpow_rat(const Scalar& q, const BigRat& x) const { return qpow(q, x); }
    Scalar sinv(const Scalar& s) const { return s.inverse(); }
    static bool is_one(const Scalar& q) { return q.is_one(); }
};

struct ComplexWorld {
    using Scalar = std::complex<double>;
    using Ring = std::complex<double>;

    Ring embed(const Scalar& s) const { return s; }
    Ring one() const { return 1.0; }
    Ring zero() const { return 0.0; }
    Ring inv(const Ring& x) const { return 1.0 / x; }
    Ring twist(const TwistSpec& w) const {
        return std::polar(1.0, 2.0 * 3.14159265358979323846264338327950288 * w.k / w.r);
    }
    Scalar sone() const { return 1.0; }
    Scalar sfrom(const BigInt& n) const { return static_cast<double>(n); }
    Scalar spow(const Scalar& q, const BigInt& e) const;
    Scalar qpow_rat(const Scalar& q, const BigRat& x) const {
        return std::exp(std::log(q) *
                        (static_cast<double>(big_num(x)) / static_cast<double>(big_den(x))));
    }
    Scalar sinv(const Scalar& s) const { return 1.0 / s; }
    static bool is_one(const Scalar& q) { return q == 1.0; }
};

// Shares the j-indexed inverse denominators across evaluation points; the
// dominant cost of every Euler-number sum is behind this cache.
template <class W>
class EulerPolyEvaluator {
public:
    using Scalar = typename W::Scalar;
    using Ring = typename W::Ring;

    EulerPolyEvaluator(const W& w, long n, long long h, const Scalar& q, const TwistSpec& xi)
        : w_(w), n_(n), q_(q) {
        if (W::is_one(q)) throw std::domain_error("EulerPolyEvaluator: q = 1 needs the classical path");
        Ring wt = w_.twist(xi);
        Scalar qh = w_.spow(q, h);
        inv_den_.reserve(n + 1);
        for (long j = 0; j <= n_; ++j) {
            inv_den_.push_back(w_.inv(w_.one() + wt * w_.embed(qh)));
            qh = qh * q;
        }
        Scalar one_minus_q = w_.sone() - q;
        pref_ = (w_.sone() + q) * w_.sinv(w_.spow(one_minus_q, n));
    }

    // E_{n,q,xi}^{(h)}(x)
    Ring eval(const BigRat& x) const {
        Scalar qx = w_.qpow_rat(q_, x);
        return eval_qx(qx);
    }
    // same, with q^x supplied directly
    Ring eval_qx(const Scalar& qx) const {
        Ring acc = w_.zero();
        Scalar qxj = w_.sone();
        for (long j = 0; j <= n_; ++j) {
            Scalar c = w_.sfrom(binomial(n_, j)) * qxj;
            if (j % 2) c = -c;
            acc += inv_den_[j] * w_.embed(c);
            if (j < n_) qxj = qxj * qx;
        }
        return acc * w_.embed(pref_);
    }

private:
    const W& w_;
    long n_;
    Scalar q_;
    std::vector<Ring> inv_den_;
    Scalar pref_;
};

// E_{n,q,xi}^{(h)}(x) by the closed form; q != 1.
template <class W>
typename W::Ring twisted_euler_poly(const W& w, long n, long long h, const typename W::Scalar& q,
                                    const TwistSpec& xi, const BigRat& x) {
    return EulerPolyEvaluator<W>(w, n, h, q, xi).eval(x);
}

// E_{j,q,xi}^{(h)} for j = 0..n (values at x = 0).
template <class W>
std::vector<typename W::Ring> twisted_euler_numbers_upto(const W& w, long n, long long h,
                                                         const typename W::Scalar& q,
                                                         const TwistSpec& xi) {
    std::vector<typename W::Ring> out;
    out.reserve(n + 1);
    for (long m = 0; m <= n; ++m) out.push_back(EulerPolyEvaluator<W>(w, m, h, q, xi).eval(BigRat(0)));
    return out;
}

// E_{n,q,xi}^{(h)}(x) = sum_j C(n,j) q^{xj} [x]_q^{n-j} E_{j,q,xi}^{(h)}  (identity path)
template <class W>
typename W::Ring euler_poly_from_numbers(const W& w, long n, long long h,
                                         const typename W::Scalar& q, const TwistSpec& xi,
                                         const BigRat& x) {
    auto numbers = twisted_euler_numbers_upto(w, n, h, q, xi);
    using Scalar = typename W::Scalar;
    Scalar qx = w.qpow_rat(q, x);
    Scalar bracket = (w.sone() - qx) * w.sinv(w.sone() - q);
    typename W::Ring acc = w.zero();
    Scalar qxj = w.sone();
    for (long j = 0; j <= n; ++j) {
        Scalar c = w.sfrom(binomial(n, j)) * qxj;
        if (j < n) c = c * w.spow(bracket, n - j);  // [x]^0 = 1 even at x = 0
        acc += numbers[j] * w.embed(c);
        if (j < n) qxj = qxj * qx;
    }
    return acc;
}

// Distribution identity right side:
//   ([2]_q/[2]_{q^d'}) [d']_q^n  sum_{a<d'} q^{ha} xi^a (-1)^a E_{n,q^d',xi^d'}^{(h)}((x+a)/d')
template <class W>
typename W::Ring distribution_rhs(const W& w, long n, long long h, const typename W::Scalar& q,
                                  const TwistSpec& xi, long long dprime, const BigRat& x) {
    if (dprime < 1 || dprime % 2 == 0)
        throw std::invalid_argument("distribution_rhs: d' must be odd");
    using Scalar = typename W::Scalar;
    Scalar Q = w.spow(q, dprime);
    EulerPolyEvaluator<W> ev(w, n, h, Q, xi.power(dprime));
    typename W::Ring acc = w.zero();
    typename W::Ring xi1 = w.twist(xi);
    typename W::Ring xia = w.one();
    Scalar qha = w.sone();
    Scalar qh = w.spow(q, h);
    for (long long a = 0; a < dprime; ++a) {
        auto term = ev.eval(BigRat(big_num(x) + a * big_den(x), big_den(x) * dprime));
        term = term * xia * w.embed(a % 2 ? -qha : qha);
        acc += term;
        xia *= xi1;
        qha = qha * qh;
    }
    Scalar bracket_d = (w.sone() - Q) * w.sinv(w.sone() - q);
    Scalar pref = (w.sone() + q) * w.sinv(w.sone() + Q) * w.spow(bracket_d, n);
    return acc * w.embed(pref);
}

// Generalized number attached to chi (modulus D, conductor | D, D odd):
//   ([2]_q/[2]_{q^D}) [D]_q^n sum_{a=0}^{D-1} q^{ha} xi^a chi(a) (-1)^a E_{n,q^D,xi^D}^{(h)}(a/D)
// The a = 0 term carries chi(0), nonzero only for D = 1 where the trivial
// character is identically 1; for D > 1 this matches the a = 1..D sum.
template <class W>
typename W::Ring generalized_twisted_number(
    const W& w, long n, long long h, const typename W::Scalar& q, const TwistSpec& xi,
    const std::function<typename W::Ring(long long)>& chi_value, long long D) {
    if (D < 1 || D % 2 == 0) throw std::invalid_argument("generalized number: D must be odd");
    using Scalar = typename W::Scalar;
    Scalar Q = w.spow(q, D);
    EulerPolyEvaluator<W> ev(w, n, h, Q, xi.power(D));
    typename W::Ring acc = w.zero();
    typename W::Ring xi1 = w.twist(xi);
    typename W::Ring xia = w.one();
    Scalar qha = w.sone();
    Scalar qh = w.spow(q, h);
    for (long long a = 0; a < D; ++a) {
        auto cv = chi_value(a);
        if (!ring_is_zero(cv)) {
            auto term = ev.eval(BigRat(a, D)) * xia * cv * w.embed(a % 2 ? -qha : qha);
            acc += term;
        }
        xia *= xi1;
        qha = qha * qh;
    }
    Scalar bracket_D = (w.sone() - Q) * w.sinv(w.sone() - q);
    Scalar pref = (w.sone() + q) * w.sinv(w.sone() + Q) * w.spow(bracket_D, n);
    return acc * w.embed(pref);
}

/*
 * Classical twisted numbers (q = 1), exact rational mode.  From
 * 2/(w e^z + 1) = sum E_{n,w} z^n/n!:  E_{0,w} = 2/(1+w) and for k >= 1
 * w sum_{j<=k} C(k,j) E_{j,w} + E_{k,w} = 0.
 */
std::vector<QElem> classical_twisted_numbers(const QRing& R, const QElem& w, long n_max);

// E_{n,w}(x) = sum_j C(n,j) x^{n-j} E_{j,w}
QElem classical_twisted_poly(const QRing& R, const std::vector<QElem>& numbers, long n,
                             const BigRat& x);

// E_{n,w,chi} = d^n sum_{i=0}^{d-1} (-1)^i chi(i) w^i E_{n,w^d}(i/d)
QElem classical_generalized_number(const QRing& R, long n, const QElem& w,
                                   const std::function<QElem(long long)>& chi_value, long long d);

/*
 * p-adic entry points with the q = 1 limit folded in: at q = 1 the closed
 * form degenerates (division by 1-q) and the classical recurrence values are
 * embedded instead.
 */
PElem twisted_hq_euler_poly_padic(const PRing& R, long n, long long h, const Padic& q,
                                  const TwistSpec& xi, const BigRat& x);
PElem twisted_hq_euler_number_padic(const PRing& R, long n, long long h, const Padic& q,
                                    const TwistSpec& xi);
// chi evaluated at modulus D (conductor(chi) | D, D odd, gcd(D, p) = 1)
PElem generalized_twisted_number_padic(const PRing& R, long n, long long h, const Padic& q,
                                       const TwistSpec& xi, const DirichletCharacter& chi,
                                       long long D);

}  // namespace qeuler
