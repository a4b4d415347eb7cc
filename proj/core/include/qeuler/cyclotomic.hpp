#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "qeuler/padic.hpp"

namespace qeuler {

// Coefficients of Phi_M, ascending, monic of degree phi(M).
std::vector<BigInt> cyclotomic_poly(long long M);

// x^k reduced mod phi (phi monic, integer coefficients).
std::vector<BigInt> monomial_mod(long long k, const std::vector<BigInt>& phi);

// (a*b) mod (phi, modulus); integer-coefficient polynomials, ascending.
std::vector<BigInt> poly_mul_reduce(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                    const std::vector<BigInt>& phi, const BigInt& modulus);

// Inverse of a in (Z/p^P)[x]/phi: extended Euclid mod p, then Newton lifting.
// Throws std::domain_error naming the mod-p gcd obstruction when not invertible.
std::vector<BigInt> poly_invert_padic(const std::vector<BigInt>& a,
                                      const std::vector<BigInt>& phi, long long p, long long P);

// Inverse of a nonzero element of Q[x]/phi (phi with no rational roots shared
// with a; for cyclotomic phi any nonzero a of smaller degree is invertible).
std::vector<BigRat> poly_invert_rational(const std::vector<BigRat>& a,
                                         const std::vector<BigInt>& phi);

/*
 * Scalar domains for the cyclotomic coefficient ring: p-adic scalars for the
 * main pipeline, exact rationals for the classical (q=1) cross-checks.
 */
struct PadicDomain {
    using Scalar = Padic;
    long long p;
    long long prec;
    Scalar zero() const { return Padic::zero(p); }
    Scalar one() const { return Padic::one(p, prec); }
    Scalar from_bigint(const BigInt& n) const { return Padic::from_integer(n, p, prec); }
    Scalar from_rational(const BigRat& r) const { return Padic::from_rational(r, p, prec); }
    static bool scalar_is_zero(const Scalar& s) { return s.is_zero(); }
};

struct RationalDomain {
    using Scalar = BigRat;
    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }
    Scalar from_bigint(const BigInt& n) const { return BigRat(n); }
    Scalar from_rational(const BigRat& r) const { return r; }
    static bool scalar_is_zero(const Scalar& s) { return s == 0; }
};

template <class D>
class CycloElem;

// R_M = S[x]/Phi_M(x).  Elements keep a pointer to their ring; a ring object
// must outlive its elements and is therefore pinned (no copies).
template <class D>
class CycloRing {
public:
    using Domain = D;
    using Scalar = typename D::Scalar;
    using Elem = CycloElem<D>;

    CycloRing(D domain, long long M) : domain_(std::move(domain)), M_(M), phi_(cyclotomic_poly(M)) {
        if constexpr (std::is_same_v<D, PadicDomain>) {
            if (gcd_ll(M, domain_.p) != 1)
                throw std::invalid_argument("CycloRing: modulus must be coprime to p");
        }
        long long deg = degree();
        if (deg >= 2) {
            std::vector<BigInt> cur(phi_.begin(), phi_.end() - 1);
            for (auto& c : cur) c = -c;
            for (long long j = deg; j <= 2 * deg - 2; ++j) {
                rows_.push_back(cur);
                BigInt top = cur[deg - 1];
                std::vector<BigInt> nxt(deg);
                for (long long i = deg - 1; i >= 1; --i) nxt[i] = cur[i - 1];
                if (top != 0)
                    for (long long i = 0; i < deg; ++i) nxt[i] -= top * phi_[i];
                cur = std::move(nxt);
            }
        }
    }
    CycloRing(const CycloRing&) = delete;
    CycloRing& operator=(const CycloRing&) = delete;

    long long modulus() const { return M_; }
    long long degree() const { return static_cast<long long>(phi_.size()) - 1; }
    const D& domain() const { return domain_; }
    const std::vector<BigInt>& phi() const { return phi_; }
    // x^j mod Phi_M for degree() <= j <= 2*degree()-2
    const std::vector<BigInt>& reduction_row(long long j) const { return rows_.at(j - degree()); }

    Elem zero() const { return Elem(this, std::vector<Scalar>(degree(), domain_.zero())); }
    Elem one() const { return from_scalar(domain_.one()); }
    Elem from_scalar(const Scalar& s) const {
        std::vector<Scalar> c(degree(), domain_.zero());
        c[0] = s;
        return Elem(this, std::move(c));
    }
    Elem from_coeffs(std::vector<Scalar> c) const {
        if (static_cast<long long>(c.size()) != degree())
            throw std::invalid_argument("CycloRing: coefficient count mismatch");
        return Elem(this, std::move(c));
    }
    // Class of x^k; root_of_unity(k)^M = 1.
    Elem root_of_unity(long long k) const {
        k %= M_;
        if (k < 0) k += M_;
        auto mono = monomial_mod(k, phi_);
        std::vector<Scalar> c(degree(), domain_.zero());
        for (size_t i = 0; i < mono.size(); ++i)
            if (mono[i] != 0) c[i] = domain_.from_bigint(mono[i]);
        return Elem(this, std::move(c));
    }

private:
    D domain_;
    long long M_;
    std::vector<BigInt> phi_;
    std::vector<std::vector<BigInt>> rows_;
};

template <class D>
class CycloElem {
public:
    using Scalar = typename D::Scalar;

    CycloElem() = default;
    CycloElem(const CycloRing<D>* ring, std::vector<Scalar> c) : ring_(ring), c_(std::move(c)) {}

    const CycloRing<D>* ring() const { return ring_; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& s : c_)
            if (!D::scalar_is_zero(s)) return false;
        return true;
    }

    CycloElem operator-() const {
        auto out = c_;
        for (auto& s : out) s = -s;
        return CycloElem(ring_, std::move(out));
    }
    CycloElem& operator+=(const CycloElem& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycloElem& operator-=(const CycloElem& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }

    CycloElem operator*(const CycloElem& o) const {
        check(o);
        long long deg = ring_->degree();
        const auto& dom = ring_->domain();
        std::vector<Scalar> conv(2 * deg - 1, dom.zero());
        for (long long i = 0; i < deg; ++i) {
            if (D::scalar_is_zero(c_[i])) continue;
            for (long long j = 0; j < deg; ++j) {
                if (D::scalar_is_zero(o.c_[j])) continue;
                conv[i + j] += c_[i] * o.c_[j];
            }
        }
        std::vector<Scalar> out(conv.begin(), conv.begin() + deg);
        for (long long k = deg; k <= 2 * deg - 2; ++k) {
            if (D::scalar_is_zero(conv[k])) continue;
            const auto& row = ring_->reduction_row(k);
            for (long long i = 0; i < deg; ++i) {
                if (row[i] == 0) continue;
                if (row[i] == 1)
                    out[i] += conv[k];
                else if (row[i] == -1)
                    out[i] -= conv[k];
                else
                    out[i] += conv[k] * dom.from_bigint(row[i]);
            }
        }
        return CycloElem(ring_, std::move(out));
    }
    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

    CycloElem operator*(const Scalar& s) const {
        auto out = c_;
        for (auto& v : out) v = v * s;
        return CycloElem(ring_, std::move(out));
    }

    CycloElem pow(long long e) const {
        if (e < 0) throw std::invalid_argument("CycloElem: negative power");
        CycloElem base = *this, out = ring_->one();
        while (e) {
            if (e & 1) out *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return out;
    }

private:
    void check(const CycloElem& o) const {
        if (ring_ != o.ring_) throw std::invalid_argument("CycloElem: mixed rings");
    }
    const CycloRing<D>* ring_ = nullptr;
    std::vector<Scalar> c_;
};

using PRing = CycloRing<PadicDomain>;
using PElem = CycloElem<PadicDomain>;
using QRing = CycloRing<RationalDomain>;
using QElem = CycloElem<RationalDomain>;

// Congruence gauge in the power basis: min over coefficient valuations
// (divisibility bounds for flagged zeros, kExactVal for the zero element).
long long min_valuation(const PElem& a);
inline long long gauge(const PElem& a) { return min_valuation(a); }

// Inversion.  p-adic mode requires integral coefficients and an invertible
// mod-p reduction; any nonzero rational element is invertible.
PElem invert(const PElem& a);
QElem invert(const QElem& a);

// Coefficientwise embedding of an exact rational element (denominators with
// p-valuation are carried into the scalar valuations).
PElem embed_rational(const QElem& a, const PRing& ring);

}  // namespace qeuler
