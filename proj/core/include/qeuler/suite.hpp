#pragma once

#include <iostream>
#include <optional>

#include "qeuler/archimedean.hpp"
#include "qeuler/congruence.hpp"

#include <json.hpp>

namespace qeuler {

using Json = nlohmann::ordered_json;

Json to_json(const Padic& x);
Json to_json(const PElem& x);

/*
 * Batch-run configuration.  q is given as the expression "1 + u*p^e"
 * (u = 0 selects the q = 1 limit); the working precision applied to every
 * computation is p_target + n_eff * v(1-q) + 10, where n_eff is the largest
 * Euler-number degree the sweep touches.
 */
struct RunConfig {
    long long p = 5;
    long long p_target = 12;
    long long d = 1;
    std::string char_sel = "all";  // "all" or a 0-based index into char-list
    long long r = 1;
    long long xi_k = 1;  // twist xi = zeta_r^{xi_k}
    long long h = 1;
    std::string q_expr = "1+1*p^1";
    long long n_max = 8;
    std::vector<long long> c_list;  // empty: {p-1, 2(p-1)}
    long long k_max = 3;
    int N_min = 1;
    int N_max = 4;
    bool allow_even_r = false;
    unsigned long long seed = 20240901ULL;
    int threads = 0;  // 0: QEULER_THREADS env var, else 1
    // archimedean grid
    std::vector<double> arch_q = {0.2, 0.3, 0.5};
    std::vector<long long> arch_r = {1, 3, 4};
    long long arch_n_max = 5;
    double arch_tol = 1e-8;

    void validate() const;  // throws, citing the violated constraint
    long long v1q() const;  // v(1-q); 0 for q = 1
    long long p_work(long long n_eff) const { return p_target + n_eff * v1q() + 10; }
    Padic q_value(long long prec) const;
    TwistSpec xi() const { return TwistSpec{r, xi_k}; }
    std::vector<long long> effective_c_list() const;
    // (index, character) pairs selected by char_sel, orders coprime to p
    std::vector<std::pair<long long, DirichletCharacter>> selected_characters() const;
    long long ring_modulus() const;  // lcm(r, selected character orders)
    int effective_threads() const;
};

// (u, e) from "1+u*p^e" (or "1")
std::pair<long long, long long> parse_q_expr(const std::string& expr);

// Runs the named suite (euler|measure|lp|kummer|archimedean|all) as a
// JSON-lines stream; returns the process exit code (0 iff every check
// passed).  Deterministic for a fixed config; sweep points may be evaluated
// in parallel but are emitted in canonical order.
int run_suite(const RunConfig& cfg, const std::string& which, std::ostream& out);

// CLI single-shot helpers (JSON-lines).  Each returns 0 on success / all-pass.
int cli_char_list(const RunConfig& cfg, std::ostream& out);
int cli_euler_number(const RunConfig& cfg, long n, std::optional<long long> char_index,
                     std::ostream& out);
int cli_euler_poly(const RunConfig& cfg, long n, const BigRat& x, std::ostream& out);
int cli_integrate(const RunConfig& cfg, long n, std::ostream& out);
int cli_lp_value(const RunConfig& cfg, const BigRat& s, std::ostream& out);

}  // namespace qeuler
