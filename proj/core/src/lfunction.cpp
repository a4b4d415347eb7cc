#include "qeuler/lfunction.hpp"

namespace qeuler {

LFunction::LFunction(const PRing& R, LSpec spec)
    : R_(&R),
      spec_(std::move(spec)),
      mu0_(R, MeasureParams{0, spec_.h, spec_.q, spec_.xi, spec_.chi.modulus()}) {
    long long p = R.domain().p;
    long long d = spec_.chi.modulus();
    if (gcd_ll(d, p) != 1) throw std::invalid_argument("LFunction: d must be coprime to p");
    if (gcd_ll(spec_.chi.order(), p) != 1)
        throw std::invalid_argument("LFunction: character order must be coprime to p");
    chi_table_.reserve(d);
    for (long long a = 0; a < d; ++a) chi_table_.push_back(spec_.chi.value_in(R, a));
    teich_inv_.resize(p);
    for (long long a = 1; a < p; ++a)
        teich_inv_[a] = teichmuller(a, p, R.domain().prec).inverse();
}

PElem LFunction::epsilon(long n) {
    if (n < 0) throw std::invalid_argument("epsilon: n must be >= 0");
    long long p = R_->domain().p;
    long long d = spec_.chi.modulus();
    long long dp = d * p;
    bool omega_trivial = (n % (p - 1)) == 0;

    std::vector<PElem> table;
    table.reserve(dp);
    if (omega_trivial) {
        for (long long c = 0; c < dp; ++c) table.push_back(chi_table_[c % d]);
    } else {
        TwistedCharacter cn = chi_n(spec_.chi, n, p);
        for (long long c = 0; c < dp; ++c) table.push_back(cn.value_in(*R_, c));
    }

    MeasureEvaluator ev(*R_, MeasureParams{n, spec_.h, spec_.q, spec_.xi, d});
    PElem E = ev.integrate(table, 1, 1);

    PElem cnp = chi_n(spec_.chi, n, p).value_at_p(*R_);
    if (cnp.is_zero()) return E;

    MeasureEvaluator evp(*R_, scaled_params(ev.params()));
    PElem Ep = evp.integrate(table, 1, 1);
    const Padic& q = spec_.q;
    Padic one = Padic::one(q.prime(), q.precision());
    Padic factor = qbracket(BigInt(p), q).pow(n) * (one + q) / (one + q.pow(p));
    return E - cnp * Ep * R_->from_scalar(factor);
}

std::vector<PElem> LFunction::epsilon_sequence(long n_max) {
    std::vector<PElem> out;
    out.reserve(n_max + 1);
    for (long n = 0; n <= n_max; ++n) out.push_back(epsilon(n));
    return out;
}

const std::vector<Padic>& LFunction::log_table(int N) {
    auto it = logs_.find(N);
    if (it != logs_.end()) return it->second;
    long long p = R_->domain().p;
    long long d = spec_.chi.modulus();
    long long m = static_cast<long long>(BigInt(d) * pow_p(p, N));
    const Padic& q = spec_.q;
    std::vector<Padic> tab(m);
    Padic qa = Padic::one(q.prime(), q.precision());
    Padic one = qa;
    bool q_one = q.is_one();
    Padic one_minus_q = q_one ? Padic::zero(q.prime()) : one - q;
    for (long long a = 0; a < m; ++a) {
        if (a % p != 0 && a > 0) {
            Padic bracket = q_one ? Padic::from_long(a, q.prime(), q.precision())
                                  : (one - qa) / one_minus_q;
            tab[a] = iwasawa_log(bracket * teich_inv_[a % p]);
        }
        if (!q_one) qa = qa * q;
    }
    return logs_.emplace(N, std::move(tab)).first->second;
}

PElem LFunction::level_sum(const Padic& s, int N) {
    long long p = R_->domain().p;
    long long d = spec_.chi.modulus();
    long long m = static_cast<long long>(BigInt(d) * pow_p(p, N));
    const auto& logs = log_table(N);
    Padic minus_s = -s;
    PElem acc = R_->zero();
    for (long long a = 1; a < m; ++a) {
        if (a % p == 0) continue;
        const PElem& cv = chi_table_[a % d];
        if (cv.is_zero()) continue;
        Padic pw = padic_exp(minus_s * logs[a]);
        acc += cv * mu0_.mu(Ball{a, N, d}) * R_->from_scalar(pw);
    }
    return acc;
}

LFunction::Riemann LFunction::l_p_riemann(const Padic& s, int N) {
    if (N < 1) throw std::invalid_argument("l_p_riemann: level must be >= 1");
    if (!s.is_zero() && s.valuation() < 0)
        throw std::invalid_argument("l_p_riemann: s must lie in Z_p");
    Riemann out{level_sum(s, N), std::nullopt};
    if (N >= 2) out.stabilization = min_valuation(out.value - level_sum(s, N - 1));
    return out;
}

LFunction::InterpolationReport LFunction::interpolation_check(long n, int N_max,
                                                              long long threshold) {
    InterpolationReport rep;
    rep.n = n;
    PElem eps = epsilon(n);
    Padic s = Padic::from_long(-n, spec_.q.prime(), spec_.q.precision());
    rep.monotone = true;
    for (int N = 1; N <= N_max; ++N) {
        long long r = min_valuation(level_sum(s, N) - eps);
        if (!rep.residuals.empty() && r < rep.residuals.back()) rep.monotone = false;
        rep.residuals.push_back(r);
    }
    rep.final_residual = rep.residuals.back();
    rep.pass = rep.monotone && rep.final_residual >= threshold;
    return rep;
}

}  // namespace qeuler
