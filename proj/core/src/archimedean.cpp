#include "qeuler/archimedean.hpp"

#include <cmath>

namespace qeuler {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Cplx cpow(Cplx base, Cplx e) { return std::exp(e * std::log(base)); }

void check_spec(const ComplexSeriesSpec& spec) {
    if (std::abs(spec.q) >= 1.0) throw std::invalid_argument("complex series: |q| < 1 required");
    if (spec.h.real() <= 0.0)
        throw std::invalid_argument("complex series: Re h > 0 required for convergence");
}

// generic sum of [2]_q sum_{k >= k0} chi(k) (-1)^k w^k q^{hk} [k+x]_q^{-s}
SeriesValue weighted_series(const ComplexSeriesSpec& spec, Cplx s, double x, long k0,
                            const std::function<Cplx(long long)>& coeff) {
    check_spec(spec);
    Cplx q = spec.q;
    double rho = std::pow(std::abs(q), spec.h.real());
    Cplx w = std::polar(1.0, 2.0 * kPi * spec.w.k / spec.w.r);
    Cplx two_q = 1.0 + q;
    // limit magnitude of [k+x]_q^{-s} steers the truncation point
    double climit = std::abs(cpow((1.0 - q), s));
    double safety = 2.0;
    long K = 20;
    {
        double target = spec.tol * (1.0 - rho) / (std::abs(two_q) * std::max(climit, 1e-6) * safety);
        if (target < 1.0) K = static_cast<long>(std::ceil(std::log(target) / std::log(rho))) + 4;
        K = std::max<long>(K, 20);
        K = std::min<long>(K, 200000);
    }
    Cplx acc = 0.0;
    for (long long k = k0; k <= K; ++k) {
        Cplx c = coeff(k);
        if (c == 0.0) continue;
        Cplx term = c * cpow(w, Cplx(k)) * cpow(q, spec.h * Cplx(k)) *
                    cpow(cbracket(q, Cplx(k + x)), -s);
        if (k % 2) term = -term;
        acc += term;
    }
    // tail bound: |[2]_q| * C * rho^{K+1} / (1 - rho) with C sampled past K
    double C = 0.0;
    for (long long k = K + 1; k <= K + 20; ++k)
        C = std::max(C, std::abs(cpow(cbracket(q, Cplx(k + x)), -s)));
    double tail = std::abs(two_q) * safety * C * std::pow(rho, K + 1) / (1.0 - rho);
    return SeriesValue{two_q * acc, tail, K - k0 + 1};
}

}  // namespace

Cplx cbracket(Cplx q, Cplx x) { return (1.0 - cpow(q, x)) / (1.0 - q); }

SeriesValue twisted_zeta_series(const ComplexSeriesSpec& spec, Cplx s, double x) {
    if (x <= 0.0 && std::abs(x - std::round(x)) < 1e-12)
        throw std::invalid_argument("twisted_zeta_series: x must not be a nonpositive integer");
    return weighted_series(spec, s, x, 0, [](long long) { return Cplx(1.0); });
}

SeriesValue twisted_l_series(const ComplexSeriesSpec& spec, Cplx s,
                             const DirichletCharacter& chi) {
    return weighted_series(spec, s, 0.0, 1,
                           [&](long long k) { return chi.value_complex(k % chi.modulus()); });
}

SeriesValue classical_euler_zeta(Cplx s, long K) {
    if (s.real() <= 1.0)
        throw std::invalid_argument("classical_euler_zeta: series region requires Re s > 1");
    Cplx acc = 0.0;
    for (long long k = 1; k <= K; ++k) {
        Cplx term = cpow(Cplx(static_cast<double>(k)), -s);
        acc += (k % 2) ? -term : term;
    }
    // integral-test bound, sharpened to the first omitted term for real s
    double sigma = s.real();
    double tail = 2.0 * std::pow(static_cast<double>(K), 1.0 - sigma) / (sigma - 1.0);
    if (s.imag() == 0.0) tail = std::min(tail, 2.0 / std::pow(static_cast<double>(K + 1), sigma));
    return SeriesValue{2.0 * acc, tail, K};
}

Cplx euler_poly_complex(long n, long long h, Cplx q, const TwistSpec& w, const BigRat& x) {
    ComplexWorld cw;
    return twisted_euler_poly(cw, n, h, q, w, x);
}

Cplx generalized_number_complex(long n, long long h, Cplx q, const TwistSpec& w,
                                const DirichletCharacter& chi) {
    ComplexWorld cw;
    return generalized_twisted_number<ComplexWorld>(
        cw, n, h, q, w, [&](long long a) { return chi.value_complex(a); }, chi.modulus());
}

}  // namespace qeuler
