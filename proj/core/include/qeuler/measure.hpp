#pragma once

#include <map>

#include "qeuler/euler.hpp"

namespace qeuler {

// Compact-open a + d p^N Z_p inside X = X_d.
struct Ball {
    long long a;
    int N;
    long long d;
};

struct MeasureParams {
    long n;
    long long h;
    Padic q;
    TwistSpec xi;
    long long d;
};

// mu_{-q}(a + dp^N Z_p) = (-q)^a / [dp^N]_{-q}
Padic mu_fermionic_ball(const Padic& q, const Ball& b);

/*
 * The twisted measure on balls of X_d,
 *
 *   mu_{n,xi,q}^{(h)}(a + dp^N Z_p)
 *     = [2]_q/(1-q)^n (-1)^a xi^a q^{ha}
 *       sum_j C(n,j) (-1)^j q^{ja} / (1 + xi^{dp^N} q^{(h+j) dp^N}),
 *
 * evaluated through this expanded form (no q^{a/dp^N} exponentials); the
 * denominators depend only on (N, j) and are cached per level.  At q = 1 the
 * prefactor degenerates and the value is taken through the classical twisted
 * polynomials instead:  (dp^N)^n (-1)^a xi^a E_{n,xi^{dpN}}(a/dp^N).
 */
class MeasureEvaluator {
public:
    MeasureEvaluator(const PRing& R, MeasureParams P);

    const MeasureParams& params() const { return P_; }
    const PRing& ring() const { return *R_; }

    PElem mu(const Ball& b);
    // Theorem-1 statement form, kept as a cross-check path (q != 1):
    // [dp^N]_q^n ([2]_q/[2]_{q^{dpN}}) (-1)^a xi^a q^{ha} E_{n,q^{dpN},xi^{dpN}}^{(h)}(a/dp^N)
    PElem mu_statement(const Ball& b);

    // exact integral of a level-L locally constant f (table of size d p^L)
    // as the level-N sum; requires N >= L and N >= 1
    PElem integrate(const std::vector<PElem>& table, int L, int N);
    // sum restricted to residues coprime to p (over X* = X - pX)
    PElem integrate_units(const std::vector<PElem>& table, int L, int N);

private:
    struct Level {
        std::vector<PElem> inv_den;  // j = 0..n
    };
    const Level& level(int N);
    PElem mu_classical(const Ball& b);
    const std::vector<QElem>& classical_numbers(long long twist_power);
    void validate(const Ball& b) const;

    const PRing* R_;
    MeasureParams P_;
    Padic pref_;  // [2]_q/(1-q)^n, q != 1
    std::map<int, Level> levels_;
    // q = 1 support
    std::unique_ptr<QRing> rational_twin_;
    std::map<long long, std::vector<QElem>> classical_cache_;
};

// residual gauge of sum_{i<p} mu(a + i dp^N + dp^{N+1}Z_p) - mu(a + dp^N Z_p)
long long check_distribution(MeasureEvaluator& ev, const Ball& b);

// Lemma 2: mu(pU) = [p]_q^n ([2]_q/[2]_{q^p}) mu'(U) with mu' = mu_{n,xi^p,q^p};
// `scaled` must be the evaluator for the primed parameters.
MeasureParams scaled_params(const MeasureParams& P);
long long check_scaling(MeasureEvaluator& ev, MeasureEvaluator& scaled, const Ball& u);

// Lemma 3 gauge sequence: v_N of
//   mu(a + dp^N Z_p) - q^{(h-1)a} xi^a [a]_q^n mu_{-q}(a + dp^N Z_p)
std::vector<long long> check_density(MeasureEvaluator& ev, long long a, int N_min, int N_max);
// diagnostic variant against the n = 0 twisted measure: v_N of
//   mu_n(ball) - [a]_q^n mu_0(ball); converges for every admissible twist
std::vector<long long> check_density_mu0(MeasureEvaluator& ev, long long a, int N_min, int N_max);

// Fermionic shift identity at q = 1:
//   I(f_s) = (-1)^s I(f) + 2 sum_{j=0}^{s-1} (-1)^{s-1-j} f(j),
// f a level-L table; returns the residual gauge of LHS - RHS at level N.
long long check_fermionic_shift(const PRing& R, long long d, const std::vector<PElem>& table,
                                int L, long long shift, int N);

}  // namespace qeuler
