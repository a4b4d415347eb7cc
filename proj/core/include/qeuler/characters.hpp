#pragma once

#include <complex>
#include <memory>
#include <optional>

#include "qeuler/cyclotomic.hpp"

namespace qeuler {

// Multiplicative structure of (Z/D)^x for odd D >= 1: one cyclic component
// per odd prime power, with discrete-log tables (moduli here are desk-scale).
class UnitGroup {
public:
    explicit UnitGroup(long long D);

    long long modulus() const { return D_; }
    size_t components() const { return comps_.size(); }
    long long component_order(size_t i) const { return comps_[i].order; }
    long long component_prime_power(size_t i) const { return comps_[i].pe; }
    // residue mod D that generates component i and is 1 in the others
    long long component_generator(size_t i) const { return comps_[i].gen_crt; }
    long long exponent() const { return exponent_; }
    long long phi() const { return phi_; }
    bool is_unit(long long a) const;
    long long dlog(size_t i, long long a) const;

private:
    struct Comp {
        long long pe;
        long long gen;      // primitive root mod pe
        long long gen_crt;  // same element embedded in (Z/D)^x
        long long order;
        std::vector<long long> logs;  // index by residue mod pe, -1 for non-units
    };
    long long D_;
    long long exponent_ = 1;
    long long phi_ = 1;
    std::vector<Comp> comps_;
};

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<long long> exps);

    static DirichletCharacter trivial(long long D);
    // All phi(D) characters mod D, in a fixed deterministic order with the
    // trivial character first.
    static std::vector<DirichletCharacter> enumerate(long long D);

    long long modulus() const { return group_->modulus(); }
    long long order() const { return order_; }
    long long conductor() const { return conductor_; }
    bool is_trivial() const { return order_ == 1; }
    int parity() const;  // chi(-1)

    // e with chi(a) = zeta_order^e, or nullopt when gcd(a, D) > 1
    std::optional<long long> exponent_at(long long a) const;

    // Evaluations; zero for non-units.  Ring evaluation requires
    // order() | ring modulus and throws otherwise, naming the character.
    PElem value_in(const PRing& ring, long long a) const;
    QElem value_in(const QRing& ring, long long a) const;
    std::complex<double> value_complex(long long a) const;

    // character mod conductor() agreeing with this one on units coprime to D
    DirichletCharacter primitivize() const;
    // zero-extension to an odd multiple of the modulus
    DirichletCharacter induced_to(long long DD) const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus() == o.modulus() && exps_ == o.exps_;
    }
    std::string describe() const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<long long> exps_;
    long long order_;
    long long conductor_;
};

/*
 * chi_n = chi * omega^{-n}.  The tame part takes root-of-unity values in the
 * cyclotomic power basis; the omega part is a Teichmueller scalar in Z_p, so
 * the product lives naturally in the p-adic cyclotomic ring.
 */
class TwistedCharacter {
public:
    TwistedCharacter(DirichletCharacter tame, long long p, long long n);

    const DirichletCharacter& tame() const { return tame_; }
    long long p() const { return p_; }
    long long n() const { return n_; }
    long long modulus() const { return tame_.modulus() * p_; }
    bool omega_trivial() const { return omega_exp_ == 0; }
    long long conductor() const {
        return tame_.conductor() * (omega_trivial() ? 1 : p_);
    }
    long long order() const;

    // value at t mod d*p; zero when gcd(t, d*p) > 1
    PElem value_in(const PRing& ring, long long t) const;
    // chi_n(p) through the primitive character (zero unless the omega part is
    // trivial, i.e. unless n == 0 mod p-1)
    PElem value_at_p(const PRing& ring) const;

private:
    DirichletCharacter tame_;
    long long p_;
    long long n_;
    long long omega_exp_;  // (-n) reduced mod p-1
};

inline TwistedCharacter chi_n(const DirichletCharacter& chi, long long n, long long p) {
    return TwistedCharacter(chi, p, n);
}

}  // namespace qeuler
