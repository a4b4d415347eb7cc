#include "qeuler/congruence.hpp"

namespace qeuler {

namespace {

void check_indices(const std::vector<PElem>& seq, long long c, long long k, long long m) {
    if (c < 1) throw std::invalid_argument("forward_difference: c must be >= 1");
    if (k < 0) throw std::invalid_argument("forward_difference: k must be >= 0");
    if (m < 0 || m + k * c >= static_cast<long long>(seq.size()))
        throw std::out_of_range("forward_difference: index m + k*c not present in sequence");
}

}  // namespace

PElem forward_difference(const std::vector<PElem>& seq, long long c, long long k, long long m) {
    check_indices(seq, c, k, m);
    PElem acc = seq[m].ring()->zero();
    for (long long j = 0; j <= k; ++j) {
        Padic coef = Padic::from_integer(binomial(k, j), seq[m].ring()->domain().p,
                                         seq[m].ring()->domain().prec);
        if ((k - j) % 2) coef = -coef;
        acc += seq[m + j * c] * coef;
    }
    return acc;
}

PElem forward_difference_recursive(const std::vector<PElem>& seq, long long c, long long k,
                                   long long m) {
    check_indices(seq, c, k, m);
    std::vector<PElem> cur(seq.begin() + m, seq.begin() + m + k * c + 1);
    for (long long step = 0; step < k; ++step)
        for (size_t i = 0; i + c < cur.size(); ++i) cur[i] = cur[i + c] - cur[i];
    return cur[0];
}

CongruenceReport kummer_check(const std::vector<PElem>& eps, long long p, long long c, long long k,
                              long long n_min, long long n_max) {
    if (c % (p - 1) != 0)
        throw std::invalid_argument(
            "kummer_check: c must be divisible by p-1 (<t>^c == 1 mod p needs it)");
    CongruenceReport rep;
    rep.c = c;
    rep.k = k;
    for (long long n = n_min; n <= n_max; ++n) {
        long long r = min_valuation(forward_difference(eps, c, k, n));
        bool pass = r >= k;
        rep.rows.push_back({n, r, pass});
        rep.pass = rep.pass && pass;
    }
    return rep;
}

CongruenceRow pair_congruence_check(const std::vector<PElem>& eps, long long p, long long n,
                                    long long n_prime) {
    if (n < 1 || n_prime < 1)
        throw std::invalid_argument("pair_congruence_check: n and n' must be positive");
    if ((n - n_prime) % (p - 1) != 0)
        throw std::invalid_argument("pair_congruence_check: n == n' (mod p-1) required");
    if (std::max(n, n_prime) >= static_cast<long long>(eps.size()))
        throw std::out_of_range("pair_congruence_check: epsilon sequence too short");
    long long r = min_valuation(eps[n] - eps[n_prime]);
    return CongruenceRow{n, r, r >= 1};
}

}  // namespace qeuler
