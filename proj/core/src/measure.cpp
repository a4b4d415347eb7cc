#include "qeuler/measure.hpp"

namespace qeuler {

Padic mu_fermionic_ball(const Padic& q, const Ball& b) {
    BigInt m = BigInt(b.d) * pow_p(q.prime(), b.N);
    return (-q).pow(b.a) / qbracket_neg(m, q);
}

MeasureEvaluator::MeasureEvaluator(const PRing& R, MeasureParams P) : R_(&R), P_(std::move(P)) {
    if (P_.d < 1 || P_.d % 2 == 0)
        throw std::invalid_argument("MeasureEvaluator: d must be a positive odd integer");
    if (gcd_ll(P_.d, R.domain().p) != 1)
        throw std::invalid_argument("MeasureEvaluator: d must be coprime to p");
    if (P_.n < 0) throw std::invalid_argument("MeasureEvaluator: n must be >= 0");
    if (R.modulus() % P_.xi.r != 0)
        throw std::invalid_argument("MeasureEvaluator: twist order does not divide ring modulus");
    if (!P_.q.is_one()) {
        Padic one = Padic::one(P_.q.prime(), P_.q.precision());
        pref_ = (one + P_.q) / (one - P_.q).pow(P_.n);
    } else if (P_.n >= 1) {
        rational_twin_ = std::make_unique<QRing>(RationalDomain{}, R.modulus());
    } else {
        pref_ = Padic::from_long(2, P_.q.prime(), P_.q.precision());  // [2]_1 / (1-q)^0
    }
}

void MeasureEvaluator::validate(const Ball& b) const {
    if (b.d != P_.d) throw std::invalid_argument("MeasureEvaluator: ball modulus mismatch");
    if (b.N < 0) throw std::invalid_argument("MeasureEvaluator: negative level");
    BigInt m = BigInt(b.d) * pow_p(R_->domain().p, b.N);
    if (b.a < 0 || BigInt(b.a) >= m) throw std::invalid_argument("MeasureEvaluator: residue out of range");
}

const MeasureEvaluator::Level& MeasureEvaluator::level(int N) {
    auto it = levels_.find(N);
    if (it != levels_.end()) return it->second;
    long long p = R_->domain().p;
    BigInt m = BigInt(P_.d) * pow_p(p, N);
    PadicWorld w{R_};
    Level lv;
    PElem xim = w.twist(P_.xi.power(m));
    Padic qm = P_.q.pow(BigInt(P_.h) * m);
    Padic qstep = P_.q.pow(m);
    lv.inv_den.reserve(P_.n + 1);
    for (long j = 0; j <= P_.n; ++j) {
        lv.inv_den.push_back(invert(R_->one() + xim * R_->from_scalar(qm)));
        qm = qm * qstep;
    }
    return levels_.emplace(N, std::move(lv)).first->second;
}

const std::vector<QElem>& MeasureEvaluator::classical_numbers(long long twist_power) {
    auto it = classical_cache_.find(twist_power);
    if (it != classical_cache_.end()) return it->second;
    const QRing& Rq = *rational_twin_;
    auto w = Rq.root_of_unity(twist_power * (Rq.modulus() / P_.xi.r));
    auto nums = classical_twisted_numbers(Rq, w, P_.n);
    return classical_cache_.emplace(twist_power, std::move(nums)).first->second;
}

PElem MeasureEvaluator::mu_classical(const Ball& b) {
    long long p = R_->domain().p;
    BigInt m = BigInt(b.d) * pow_p(p, b.N);
    auto twist = P_.xi.power(m);
    const auto& nums = classical_numbers(twist.k);
    const QRing& Rq = *rational_twin_;
    auto poly = classical_twisted_poly(Rq, nums, P_.n, BigRat(b.a, m));
    BigRat mn = 1;
    for (long j = 0; j < P_.n; ++j) mn *= BigRat(m);
    auto val = poly * mn;
    auto xi_a = Rq.root_of_unity(P_.xi.power(b.a).k * (Rq.modulus() / P_.xi.r));
    val = val * xi_a;
    if (b.a % 2) val = -val;
    return embed_rational(val, *R_);
}

PElem MeasureEvaluator::mu(const Ball& b) {
    validate(b);
    if (P_.q.is_one() && P_.n >= 1) return mu_classical(b);
    const Level& lv = level(b.N);
    PadicWorld w{R_};
    PElem sum = R_->zero();
    Padic qja = Padic::one(P_.q.prime(), P_.q.precision());
    Padic qa = P_.q.pow(b.a);
    for (long j = 0; j <= P_.n; ++j) {
        Padic c = Padic::from_integer(binomial(P_.n, j), P_.q.prime(), P_.q.precision()) * qja;
        if (j % 2) c = -c;
        sum += lv.inv_den[j] * R_->from_scalar(c);
        if (j < P_.n) qja = qja * qa;
    }
    Padic scalar = pref_ * P_.q.pow(BigInt(P_.h) * b.a);
    if (b.a % 2) scalar = -scalar;
    return sum * w.twist(P_.xi.power(b.a)) * R_->from_scalar(scalar);
}

PElem MeasureEvaluator::mu_statement(const Ball& b) {
    validate(b);
    if (P_.q.is_one()) throw std::domain_error("mu_statement: q = 1 uses the classical path");
    long long p = R_->domain().p;
    BigInt m = BigInt(b.d) * pow_p(p, b.N);
    Padic Q = P_.q.pow(m);
    PadicWorld w{R_};
    EulerPolyEvaluator<PadicWorld> ev(w, P_.n, P_.h, Q, P_.xi.power(m));
    PElem poly = ev.eval(BigRat(b.a, m));
    Padic one = Padic::one(P_.q.prime(), P_.q.precision());
    Padic scalar = qbracket(m, P_.q).pow(P_.n) * (one + P_.q) / (one + Q) * P_.q.pow(BigInt(P_.h) * b.a);
    if (b.a % 2) scalar = -scalar;
    return poly * w.twist(P_.xi.power(b.a)) * R_->from_scalar(scalar);
}

PElem MeasureEvaluator::integrate(const std::vector<PElem>& table, int L, int N) {
    long long p = R_->domain().p;
    if (N < 1) throw std::invalid_argument("integrate: level must be >= 1");
    if (N < L) throw std::invalid_argument("integrate: level below the table's level");
    BigInt mL = BigInt(P_.d) * pow_p(p, L);
    if (BigInt(static_cast<long long>(table.size())) != mL)
        throw std::invalid_argument("integrate: table size != d p^L");
    long long m = static_cast<long long>(BigInt(P_.d) * pow_p(p, N));
    long long mLs = static_cast<long long>(mL);

    if (P_.q.is_one() && P_.n >= 1) {
        PElem acc = R_->zero();
        for (long long c = 0; c < m; ++c) {
            const PElem& f = table[c % mLs];
            if (f.is_zero()) continue;
            acc += f * mu(Ball{c, N, P_.d});
        }
        return acc;
    }

    const Level& lv = level(N);
    PadicWorld w{R_};
    long long prime = P_.q.prime();
    long long prec = P_.q.precision();
    // running q^{jc} for j = 0..n and q^{hc}, stepped once per residue
    std::vector<Padic> qjc(P_.n + 1, Padic::one(prime, prec));
    std::vector<Padic> qj(P_.n + 1);
    for (long j = 0; j <= P_.n; ++j) qj[j] = P_.q.pow(j);
    Padic qhc = Padic::one(prime, prec);
    Padic qh = P_.q.pow(P_.h);
    std::vector<Padic> binom(P_.n + 1);
    for (long j = 0; j <= P_.n; ++j) binom[j] = Padic::from_integer(binomial(P_.n, j), prime, prec);
    PElem xi1 = w.twist(P_.xi);
    PElem xic = R_->one();
    PElem acc = R_->zero();
    for (long long c = 0; c < m; ++c) {
        const PElem& f = table[c % mLs];
        if (!f.is_zero()) {
            PElem sum = R_->zero();
            for (long j = 0; j <= P_.n; ++j) {
                Padic coef = binom[j] * qjc[j];
                if (j % 2) coef = -coef;
                sum += lv.inv_den[j] * R_->from_scalar(coef);
            }
            Padic scalar = qhc;
            if (c % 2) scalar = -scalar;
            acc += sum * xic * f * R_->from_scalar(scalar);
        }
        if (c + 1 < m) {
            for (long j = 1; j <= P_.n; ++j) qjc[j] = qjc[j] * qj[j];
            qhc = qhc * qh;
            xic *= xi1;
        }
    }
    return acc * R_->from_scalar(pref_);
}

PElem MeasureEvaluator::integrate_units(const std::vector<PElem>& table, int L, int N) {
    long long p = R_->domain().p;
    if (N < 1) throw std::invalid_argument("integrate: level must be >= 1");
    if (N < L) throw std::invalid_argument("integrate: level below the table's level");
    BigInt mL = BigInt(P_.d) * pow_p(p, L);
    if (BigInt(static_cast<long long>(table.size())) != mL)
        throw std::invalid_argument("integrate: table size != d p^L");
    long long m = static_cast<long long>(BigInt(P_.d) * pow_p(p, N));
    long long mLs = static_cast<long long>(mL);
    PElem acc = R_->zero();
    for (long long c = 0; c < m; ++c) {
        if (c % p == 0) continue;
        const PElem& f = table[c % mLs];
        if (f.is_zero()) continue;
        acc += f * mu(Ball{c, N, P_.d});
    }
    return acc;
}

long long check_distribution(MeasureEvaluator& ev, const Ball& b) {
    long long p = ev.ring().domain().p;
    BigInt m = BigInt(b.d) * pow_p(p, b.N);
    PElem sum = ev.ring().zero();
    for (long long i = 0; i < p; ++i)
        sum += ev.mu(Ball{static_cast<long long>(b.a + i * m), b.N + 1, b.d});
    return min_valuation(sum - ev.mu(b));
}

MeasureParams scaled_params(const MeasureParams& P) {
    long long p = P.q.prime();
    return MeasureParams{P.n, P.h, P.q.pow(p), P.xi.power(p), P.d};
}

long long check_scaling(MeasureEvaluator& ev, MeasureEvaluator& scaled, const Ball& u) {
    const auto& P = ev.params();
    long long p = ev.ring().domain().p;
    BigInt m = BigInt(u.d) * pow_p(p, u.N);
    PElem lhs = ev.mu(Ball{static_cast<long long>(mod_pos(BigInt(u.a) * p, m * p)), u.N + 1, u.d});
    Padic one = Padic::one(P.q.prime(), P.q.precision());
    Padic factor = qbracket(BigInt(p), P.q).pow(P.n) * (one + P.q) / (one + P.q.pow(p));
    PElem rhs = scaled.mu(u) * ev.ring().from_scalar(factor);
    return min_valuation(lhs - rhs);
}

std::vector<long long> check_density(MeasureEvaluator& ev, long long a, int N_min, int N_max) {
    const auto& P = ev.params();
    PadicWorld w{&ev.ring()};
    std::vector<long long> out;
    Padic density_scalar = P.q.pow(BigInt(P.h - 1) * a);
    Padic bracket_n = P.n == 0 ? Padic::one(P.q.prime(), P.q.precision())
                               : qbracket(BigInt(a), P.q).pow(P.n);
    PElem density = w.twist(P.xi.power(a)) * ev.ring().from_scalar(density_scalar * bracket_n);
    for (int N = N_min; N <= N_max; ++N) {
        Ball b{a, N, P.d};
        PElem rhs = density * ev.ring().from_scalar(mu_fermionic_ball(P.q, b));
        out.push_back(min_valuation(ev.mu(b) - rhs));
    }
    return out;
}

std::vector<long long> check_density_mu0(MeasureEvaluator& ev, long long a, int N_min, int N_max) {
    const auto& P = ev.params();
    MeasureEvaluator ev0(ev.ring(), MeasureParams{0, P.h, P.q, P.xi, P.d});
    Padic bracket_n = P.n == 0 ? Padic::one(P.q.prime(), P.q.precision())
                               : qbracket(BigInt(a), P.q).pow(P.n);
    std::vector<long long> out;
    for (int N = N_min; N <= N_max; ++N) {
        Ball b{a, N, P.d};
        PElem rhs = ev0.mu(b) * ev.ring().from_scalar(bracket_n);
        out.push_back(min_valuation(ev.mu(b) - rhs));
    }
    return out;
}

long long check_fermionic_shift(const PRing& R, long long d, const std::vector<PElem>& table,
                                int L, long long shift, int N) {
    long long p = R.domain().p;
    if (shift < 0) throw std::invalid_argument("check_fermionic_shift: shift must be >= 0");
    if (N < std::max(L, 1)) throw std::invalid_argument("check_fermionic_shift: level too small");
    long long mL = static_cast<long long>(BigInt(d) * pow_p(p, L));
    if (static_cast<long long>(table.size()) != mL)
        throw std::invalid_argument("check_fermionic_shift: table size != d p^L");
    long long m = static_cast<long long>(BigInt(d) * pow_p(p, N));
    auto I = [&](long long off) {
        PElem acc = R.zero();
        for (long long c = 0; c < m; ++c) {
            const PElem& f = table[(c + off) % mL];
            if (f.is_zero()) continue;
            acc += (c % 2) ? -f : f;
        }
        return acc;
    };
    PElem lhs = I(shift);
    PElem rhs = (shift % 2) ? -I(0) : I(0);
    Padic two = Padic::from_long(2, p, R.domain().prec);
    for (long long j = 0; j < shift; ++j) {
        PElem t = table[j % mL] * two;
        rhs += ((shift - 1 - j) % 2) ? -t : t;
    }
    return min_valuation(lhs - rhs);
}

}  // namespace qeuler
