#pragma once

#include <optional>

#include "qeuler/measure.hpp"

namespace qeuler {

struct LSpec {
    DirichletCharacter chi;  // modulus d: odd, coprime to p
    long long h;
    Padic q;
    TwistSpec xi;
};

/*
 * The p-adic twisted l-function attached to (chi, h, q, xi):
 *
 *   l_p(s, chi) = integral over X* of chi(t) <t>_q^{-s} d mu_{0,xi,q}^{(h)},
 *
 * evaluated by level-N Riemann sums, together with its closed form at
 * negative integers,
 *
 *   l_p(-n, chi) = eps_n
 *     = E_{n,q,xi,chi_n}^{(h)} - chi_n(p) [p]_q^n ([2]_q/[2]_{q^p}) E_{n,q^p,xi^p,chi_n}^{(h)}.
 *
 * The numbers attached to chi_n = chi omega^{-n} are exact level-1 sums of
 * chi_n against the degree-n measures, with chi_n taken at modulus
 * lcm(d, cond(chi_n)): modulus d when (p-1) | n (the omega part is trivial
 * and the function extends across pX), modulus dp otherwise.  chi_n(p) goes
 * through the primitive character; exactly one of {restricting the modulus
 * to dp, subtracting the p-Euler factor} may be applied, and this pairing is
 * the one interpolated by the Riemann sums.
 */
class LFunction {
public:
    LFunction(const PRing& R, LSpec spec);

    const LSpec& spec() const { return spec_; }
    long long d() const { return spec_.chi.modulus(); }

    PElem epsilon(long n);
    // alias making the interpolation contract explicit
    PElem l_p_closed_negative(long n) { return epsilon(n); }
    // eps_0..eps_{n_max}
    std::vector<PElem> epsilon_sequence(long n_max);

    struct Riemann {
        PElem value;
        std::optional<long long> stabilization;  // gauge(S_N - S_{N-1}), N >= 2
    };
    Riemann l_p_riemann(const Padic& s, int N);

    struct InterpolationReport {
        long n;
        std::vector<long long> residuals;  // gauge(S_N - eps_n), N = 1..N_max
        bool monotone;
        long long final_residual;
        bool pass;
    };
    InterpolationReport interpolation_check(long n, int N_max, long long threshold);

private:
    PElem level_sum(const Padic& s, int N);
    const std::vector<Padic>& log_table(int N);

    const PRing* R_;
    LSpec spec_;
    MeasureEvaluator mu0_;
    std::vector<PElem> chi_table_;          // chi on residues mod d
    std::vector<Padic> teich_inv_;          // omega(a)^{-1} for a mod p
    std::map<int, std::vector<Padic>> logs_;  // log <a>_q per level
};

}  // namespace qeuler
