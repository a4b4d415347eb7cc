#include "qeuler/euler.hpp"

namespace qeuler {

std::complex<double> ComplexWorld::spow(const Scalar& q, const BigInt& e) const {
    if (e > 1000000 || e < -1000000) throw std::overflow_error("ComplexWorld: exponent too large");
    long long ee = static_cast<long long>(e);
    bool neg = ee < 0;
    if (neg) ee = -ee;
    Scalar base = q, out = 1.0;
    while (ee) {
        if (ee & 1) out *= base;
        ee >>= 1;
        if (ee) base *= base;
    }
    return neg ? 1.0 / out : out;
}

std::vector<QElem> classical_twisted_numbers(const QRing& R, const QElem& w, long n_max) {
    QElem one_plus_w = R.one() + w;
    if (one_plus_w.is_zero())
        throw std::domain_error("classical_twisted_numbers: w = -1 (even twist order)");
    QElem inv1w = invert(one_plus_w);
    std::vector<QElem> E;
    E.reserve(n_max + 1);
    E.push_back(inv1w * BigRat(2));  // E_0 = 2/(1+w)
    for (long k = 1; k <= n_max; ++k) {
        // w sum_{j=0}^{k} C(k,j) E_j + E_k = 0  =>  E_k = -w/(1+w) sum_{j<k} C(k,j) E_j
        QElem s = R.zero();
        for (long j = 0; j < k; ++j) s += E[j] * BigRat(binomial(k, j));
        E.push_back(-(w * inv1w * s));
    }
    return E;
}

QElem classical_twisted_poly(const QRing& R, const std::vector<QElem>& numbers, long n,
                             const BigRat& x) {
    QElem acc = R.zero();
    BigRat xp = 1;  // x^{n-j} built from the top
    for (long j = n; j >= 0; --j) {
        acc += numbers[j] * (BigRat(binomial(n, j)) * xp);
        xp *= x;
    }
    return acc;
}

QElem classical_generalized_number(const QRing& R, long n, const QElem& w,
                                   const std::function<QElem(long long)>& chi_value, long long d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("classical_generalized_number: d must be odd");
    auto numbers = classical_twisted_numbers(R, w.pow(d), n);
    QElem acc = R.zero();
    QElem wi = R.one();
    for (long long i = 0; i < d; ++i) {
        auto cv = chi_value(i);
        if (!cv.is_zero()) {
            auto term = classical_twisted_poly(R, numbers, n, BigRat(i, d)) * wi * cv;
            acc += (i % 2) ? -term : term;
        }
        wi *= w;
    }
    BigRat dn = 1;
    for (long j = 0; j < n; ++j) dn *= d;
    return acc * dn;
}

namespace {

// rational twin of a p-adic ring, for the q = 1 limit paths
QRing make_rational_twin(const PRing& R) { return QRing(RationalDomain{}, R.modulus()); }

}  // namespace

PElem twisted_hq_euler_poly_padic(const PRing& R, long n, long long h, const Padic& q,
                                  const TwistSpec& xi, const BigRat& x) {
    if (R.modulus() % xi.r != 0)
        throw std::invalid_argument("twist order does not divide ring modulus");
    if (q.is_one()) {
        QRing Rq = make_rational_twin(R);
        auto w = Rq.root_of_unity(xi.k * (Rq.modulus() / xi.r));
        auto numbers = classical_twisted_numbers(Rq, w, n);
        return embed_rational(classical_twisted_poly(Rq, numbers, n, x), R);
    }
    PadicWorld w{&R};
    return twisted_euler_poly(w, n, h, q, xi, x);
}

PElem twisted_hq_euler_number_padic(const PRing& R, long n, long long h, const Padic& q,
                                    const TwistSpec& xi) {
    return twisted_hq_euler_poly_padic(R, n, h, q, xi, BigRat(0));
}

PElem generalized_twisted_number_padic(const PRing& R, long n, long long h, const Padic& q,
                                       const TwistSpec& xi, const DirichletCharacter& chi,
                                       long long D) {
    long long p = R.domain().p;
    if (D % 2 == 0 || D < 1) throw std::invalid_argument("generalized number: D must be odd");
    if (gcd_ll(D, p) != 1) throw std::invalid_argument("generalized number: D must be coprime to p");
    // the zero-extended character is constant on level-D classes only when
    // its modulus divides D (conductor-divisibility alone is not enough for
    // imprimitive characters)
    if (D % chi.modulus() != 0)
        throw std::invalid_argument("generalized number: character modulus does not divide D");
    if (q.is_one()) {
        QRing Rq = make_rational_twin(R);
        auto w = Rq.root_of_unity(xi.k * (Rq.modulus() / xi.r));
        auto val = classical_generalized_number(
            Rq, n, w, [&](long long a) { return chi.value_in(Rq, a); }, D);
        return embed_rational(val, R);
    }
    PadicWorld w{&R};
    return generalized_twisted_number<PadicWorld>(
        w, n, h, q, xi, [&](long long a) { return chi.value_in(R, a); }, D);
}

}  // namespace qeuler
