#pragma once

#include "qeuler/euler.hpp"

namespace qeuler {

using Cplx = std::complex<double>;

// [x]_q = (1 - q^x)/(1 - q), principal branch for q^x
Cplx cbracket(Cplx q, Cplx x);

struct ComplexSeriesSpec {
    Cplx q;             // |q| < 1
    Cplx h;             // Re h > 0 for convergence of the q^{hk} weights
    TwistSpec w;        // w = exp(2 pi i k / r); even r is fine here
    double tol = 1e-10;
};

struct SeriesValue {
    Cplx value;
    double tail_bound;
    long terms;
};

// zeta_{E,q,w}^{(h)}(s, x) = [2]_q sum_{k>=0} (-1)^k w^k q^{hk} / [k+x]_q^s;
// x must not be a nonpositive integer.
SeriesValue twisted_zeta_series(const ComplexSeriesSpec& spec, Cplx s, double x);

// l_{q,w}^{(h)}(s, chi) = [2]_q sum_{k>=1} chi(k) (-1)^k w^k q^{hk} / [k]_q^s
SeriesValue twisted_l_series(const ComplexSeriesSpec& spec, Cplx s,
                             const DirichletCharacter& chi);

// zeta_E(s) = 2 sum_{k>=1} (-1)^k / k^s for Re s > 1, truncated at K terms
SeriesValue classical_euler_zeta(Cplx s, long K);

// closed forms at integer parameters, through the shared Euler-number code
Cplx euler_poly_complex(long n, long long h, Cplx q, const TwistSpec& w, const BigRat& x);
Cplx generalized_number_complex(long n, long long h, Cplx q, const TwistSpec& w,
                                const DirichletCharacter& chi);

}  // namespace qeuler
