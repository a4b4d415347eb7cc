#include "qeuler/characters.hpp"

#include <algorithm>
#include <sstream>

namespace qeuler {

namespace {

long long crt_pair(long long r1, long long m1, long long r2, long long m2) {
    // x == r1 (mod m1), x == r2 (mod m2), gcd(m1,m2)=1
    BigInt inv = mod_inverse(BigInt(m1) % m2, BigInt(m2));
    BigInt t = mod_pos(BigInt(r2 - r1) * inv, BigInt(m2));
    return static_cast<long long>((BigInt(r1) + BigInt(m1) * t) % (BigInt(m1) * m2));
}

long long primitive_root(long long pr, long long e) {
    long long pe = 1;
    for (long long i = 0; i < e; ++i) pe *= pr;
    auto fac = factorize(pr - 1);
    for (long long g = 2; g < pr; ++g) {
        bool ok = true;
        for (auto [f, _] : fac)
            if (mod_pow(g, (pr - 1) / f, pr) == 1) {
                ok = false;
                break;
            }
        if (!ok) continue;
        long long lifted = g;
        if (e > 1 && mod_pow(g, pr - 1, pr * pr) == 1) lifted = g + pr;
        (void)pe;
        return lifted;
    }
    throw std::logic_error("primitive_root: none found");
}

}  // namespace

UnitGroup::UnitGroup(long long D) : D_(D) {
    if (D < 1 || D % 2 == 0)
        throw std::invalid_argument("UnitGroup: modulus must be a positive odd integer");
    for (auto [pr, e] : factorize(D)) {
        Comp c;
        c.pe = 1;
        for (long long i = 0; i < e; ++i) c.pe *= pr;
        c.order = c.pe / pr * (pr - 1);
        c.gen = primitive_root(pr, e);
        c.logs.assign(c.pe, -1);
        long long x = 1;
        for (long long i = 0; i < c.order; ++i) {
            c.logs[x] = i;
            x = static_cast<long long>(BigInt(x) * c.gen % c.pe);
        }
        c.gen_crt = crt_pair(c.gen, c.pe, 1, D / c.pe);
        exponent_ = lcm_ll(exponent_, c.order);
        phi_ *= c.order;
        comps_.push_back(std::move(c));
    }
}

bool UnitGroup::is_unit(long long a) const {
    for (const auto& c : comps_) {
        long long r = a % c.pe;
        if (r < 0) r += c.pe;
        if (c.logs[r] < 0) return false;
    }
    return true;
}

long long UnitGroup::dlog(size_t i, long long a) const {
    const auto& c = comps_[i];
    long long r = a % c.pe;
    if (r < 0) r += c.pe;
    long long l = c.logs[r];
    if (l < 0) throw std::domain_error("UnitGroup: dlog of a non-unit");
    return l;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<long long> exps)
    : group_(std::move(group)), exps_(std::move(exps)) {
    if (exps_.size() != group_->components())
        throw std::invalid_argument("DirichletCharacter: exponent count mismatch");
    order_ = 1;
    for (size_t i = 0; i < exps_.size(); ++i) {
        long long n = group_->component_order(i);
        exps_[i] = ((exps_[i] % n) + n) % n;
        order_ = lcm_ll(order_, n / gcd_ll(n, exps_[i]));
    }
    // conductor: smallest f | D with chi trivial on units == 1 mod f
    long long D = group_->modulus();
    conductor_ = D;
    for (long long f = 1; f <= D; ++f) {
        if (D % f) continue;
        bool factors = true;
        for (long long a = 1; a < D && factors; ++a) {
            if (a % f != 1 % f || !group_->is_unit(a)) continue;
            if (exponent_at(a) != 0) factors = false;
        }
        if (factors) {
            conductor_ = f;
            break;
        }
    }
}

DirichletCharacter DirichletCharacter::trivial(long long D) {
    auto G = std::make_shared<const UnitGroup>(D);
    return DirichletCharacter(G, std::vector<long long>(G->components(), 0));
}

std::vector<DirichletCharacter> DirichletCharacter::enumerate(long long D) {
    auto G = std::make_shared<const UnitGroup>(D);
    std::vector<DirichletCharacter> out;
    std::vector<long long> exps(G->components(), 0);
    for (;;) {
        out.emplace_back(G, exps);
        size_t i = exps.size();
        while (i > 0) {
            --i;
            if (++exps[i] < G->component_order(i)) break;
            exps[i] = 0;
            if (i == 0) return out;
        }
        if (exps.empty()) return out;
    }
}

std::optional<long long> DirichletCharacter::exponent_at(long long a) const {
    long long D = group_->modulus();
    long long r = a % D;
    if (r < 0) r += D;
    if (!group_->is_unit(r)) return std::nullopt;
    long long E = group_->exponent();
    BigInt e = 0;
    for (size_t i = 0; i < exps_.size(); ++i)
        e += BigInt(E / group_->component_order(i)) * exps_[i] * group_->dlog(i, r);
    e = mod_pos(e, E);
    long long step = E / order_;
    if (e % step != 0) throw std::logic_error("DirichletCharacter: exponent not in value group");
    return static_cast<long long>(e / step);
}

int DirichletCharacter::parity() const {
    auto e = exponent_at(group_->modulus() - 1);
    return (!e || *e == 0) ? 1 : -1;
}

namespace {

template <class Ring>
typename Ring::Elem char_value_in(const DirichletCharacter& chi, const Ring& ring,
                                  std::optional<long long> e) {
    if (!e) return ring.zero();
    if (ring.modulus() % chi.order() != 0)
        throw std::invalid_argument("character order " + std::to_string(chi.order()) +
                                    " does not divide ring modulus " +
                                    std::to_string(ring.modulus()) + " for " + chi.describe());
    return ring.root_of_unity(*e * (ring.modulus() / chi.order()));
}

}  // namespace

PElem DirichletCharacter::value_in(const PRing& ring, long long a) const {
    return char_value_in(*this, ring, exponent_at(a));
}

QElem DirichletCharacter::value_in(const QRing& ring, long long a) const {
    return char_value_in(*this, ring, exponent_at(a));
}

std::complex<double> DirichletCharacter::value_complex(long long a) const {
    auto e = exponent_at(a);
    if (!e) return 0.0;
    double ang = 2.0 * 3.14159265358979323846264338327950288 * static_cast<double>(*e) /
                 static_cast<double>(order_);
    return std::polar(1.0, ang);
}

DirichletCharacter DirichletCharacter::primitivize() const {
    long long f = conductor_;
    auto Gf = std::make_shared<const UnitGroup>(f);
    long long D = group_->modulus();
    std::vector<long long> exps(Gf->components());
    for (size_t i = 0; i < Gf->components(); ++i) {
        long long g = Gf->component_generator(i);
        long long a = g;
        while (!group_->is_unit(a % D)) a += f;  // lift to a unit mod D
        long long e = exponent_at(a).value();
        long long ni = Gf->component_order(i);
        // chi*(g) = zeta_order^e must be an ni-th root of unity
        if ((BigInt(e) * ni) % order_ != 0)
            throw std::logic_error("primitivize: inconsistent value order");
        exps[i] = static_cast<long long>(BigInt(e) * ni / order_ % ni);
    }
    return DirichletCharacter(Gf, std::move(exps));
}

DirichletCharacter DirichletCharacter::induced_to(long long DD) const {
    long long D = group_->modulus();
    if (DD % D != 0) throw std::invalid_argument("induced_to: target modulus not a multiple");
    auto G2 = std::make_shared<const UnitGroup>(DD);
    std::vector<long long> exps(G2->components());
    for (size_t i = 0; i < G2->components(); ++i) {
        long long g = G2->component_generator(i);
        long long e = exponent_at(g % D).value();
        long long ni = G2->component_order(i);
        if ((BigInt(e) * ni) % order_ != 0) throw std::logic_error("induced_to: value order");
        exps[i] = static_cast<long long>(BigInt(e) * ni / order_ % ni);
    }
    return DirichletCharacter(G2, std::move(exps));
}

std::string DirichletCharacter::describe() const {
    std::ostringstream os;
    os << "chi mod " << modulus() << " (order " << order_ << ", conductor " << conductor_
       << ", exps";
    for (auto e : exps_) os << " " << e;
    os << ")";
    return os.str();
}

TwistedCharacter::TwistedCharacter(DirichletCharacter tame, long long p, long long n)
    : tame_(std::move(tame)), p_(p), n_(n) {
    if (!is_odd_prime(p)) throw std::invalid_argument("TwistedCharacter: p must be an odd prime");
    if (gcd_ll(tame_.modulus(), p) != 1)
        throw std::invalid_argument("TwistedCharacter: p divides the tame modulus");
    omega_exp_ = ((-n) % (p - 1) + (p - 1)) % (p - 1);
}

long long TwistedCharacter::order() const {
    long long om_order = (p_ - 1) / gcd_ll(p_ - 1, omega_exp_);
    return lcm_ll(tame_.order(), om_order);
}

PElem TwistedCharacter::value_in(const PRing& ring, long long t) const {
    long long m = modulus();
    long long r = ((t % m) + m) % m;
    if (r % p_ == 0) return ring.zero();
    PElem tame_val = tame_.value_in(ring, r);  // zero when gcd(t, d) > 1
    if (omega_exp_ == 0) return tame_val;
    Padic w = teichmuller(r, p_, ring.domain().prec).pow(omega_exp_);
    return tame_val * w;
}

PElem TwistedCharacter::value_at_p(const PRing& ring) const {
    if (!omega_trivial()) return ring.zero();
    auto prim = tame_.primitivize();
    return prim.value_in(ring, p_ % std::max<long long>(prim.modulus(), 1));
}

}  // namespace qeuler
