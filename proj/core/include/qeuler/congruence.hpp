#pragma once

#include "qeuler/lfunction.hpp"

namespace qeuler {

// Delta_c^k a_m = sum_{j=0}^k C(k,j) (-1)^{k-j} a_{m+jc}  (closed binomial form)
PElem forward_difference(const std::vector<PElem>& seq, long long c, long long k, long long m);
// same by the recursive definition Delta_c^k = Delta_c o Delta_c^{k-1}
PElem forward_difference_recursive(const std::vector<PElem>& seq, long long c, long long k,
                                   long long m);

struct CongruenceRow {
    long long n;
    long long residual;
    bool pass;
};

struct CongruenceReport {
    long long c = 0;
    long long k = 0;
    std::vector<CongruenceRow> rows;
    bool pass = true;
};

// Theorem-3 style check: for c == 0 (mod p-1), k >= 0,
// gauge(Delta_c^k eps_n) >= k for every n in [n_min, n_max].
CongruenceReport kummer_check(const std::vector<PElem>& eps, long long p, long long c, long long k,
                              long long n_min, long long n_max);

// Theorem-4 style check: n == n' (mod p-1), n, n' >= 1:
// gauge(eps_n - eps_{n'}) >= 1.
CongruenceRow pair_congruence_check(const std::vector<PElem>& eps, long long p, long long n,
                                    long long n_prime);

}  // namespace qeuler
