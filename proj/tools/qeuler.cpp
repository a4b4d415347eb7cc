#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "qeuler/suite.hpp"

using namespace qeuler;

namespace {

BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::vector<long long> parse_csv(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic twisted (h,q)-Euler numbers, measures, and l-functions"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string c_csv;
    long n = 0;
    std::string x_str = "0";
    std::string s_str = "0";
    long long char_index = -1;
    std::string which = "all";

    app.set_help_flag("--help", "print usage");
    auto add_common = [&](CLI::App* sc) {
        sc->set_help_flag("--help", "print usage");
        sc->add_option("--p", cfg.p, "odd prime p");
        sc->add_option("--p-target", cfg.p_target, "target precision in base-p digits");
        sc->add_option("--d", cfg.d, "odd modulus d, coprime to p");
        sc->add_option("--char", cfg.char_sel, "character selector: 0-based index or \"all\"");
        sc->add_option("--r", cfg.r, "twist order r (odd, coprime to p and d)");
        sc->add_option("--xi-k", cfg.xi_k, "twist power k, xi = zeta_r^k");
        sc->add_option("--h", cfg.h, "weight h");
        sc->add_option("--q", cfg.q_expr, "q as \"1+u*p^e\" (u = 0 or \"1\" for the q = 1 limit)");
        sc->add_option("--n-max", cfg.n_max, "largest Euler-number degree in sweeps");
        sc->add_option("--c", c_csv, "comma-separated forward-difference steps c");
        sc->add_option("--k-max", cfg.k_max, "largest difference power k");
        sc->add_option("--N-min", cfg.N_min, "smallest ball level");
        sc->add_option("--N-max", cfg.N_max, "largest ball level");
        sc->add_flag("--allow-even-r", cfg.allow_even_r,
                     "allow even twist orders (outside the soundness guarantees)");
        sc->add_option("--seed", cfg.seed, "seed for randomized sweeps");
        sc->add_option("--threads", cfg.threads, "worker threads (default: QEULER_THREADS or 1)");
    };

    auto* sc_chars = app.add_subcommand("char-list", "list the characters mod d");
    add_common(sc_chars);

    auto* sc_num = app.add_subcommand("euler-number", "twisted (h,q)-Euler number E_n");
    add_common(sc_num);
    sc_num->add_option("--n", n, "degree")->required();
    sc_num->add_option("--char-index", char_index, "attach this character (generalized number)");

    auto* sc_poly = app.add_subcommand("euler-poly", "twisted (h,q)-Euler polynomial value E_n(x)");
    add_common(sc_poly);
    sc_poly->add_option("--n", n, "degree")->required();
    sc_poly->add_option("--x", x_str, "evaluation point, integer or num/den")->required();

    auto* sc_measure = app.add_subcommand(
        "measure-check", "distribution / scaling / density / shift checks for the twisted measure");
    add_common(sc_measure);

    auto* sc_int = app.add_subcommand("integrate",
                                      "integrate the selected characters against the measure");
    add_common(sc_int);
    sc_int->add_option("--n", n, "measure degree")->required();

    auto* sc_lp = app.add_subcommand("lp-value", "l_p(s, chi) by level-N Riemann sums");
    add_common(sc_lp);
    sc_lp->add_option("--s", s_str, "s in Z_p, integer or num/den (use --n for s = -n)");
    sc_lp->add_option("--n", n, "negative-integer shortcut: s = -n");

    auto* sc_interp = app.add_subcommand("interpolation-check",
                                         "Riemann sums vs the closed form at s = -n");
    add_common(sc_interp);

    auto* sc_kummer = app.add_subcommand("kummer-check",
                                         "forward-difference congruences for the eps sequence");
    add_common(sc_kummer);

    auto* sc_pair = app.add_subcommand("congruence-pair", "eps_n == eps_n' (mod p) pair checks");
    add_common(sc_pair);

    auto* sc_arch = app.add_subcommand("archimedean-check",
                                       "complex series vs closed forms at negative integers");
    add_common(sc_arch);

    auto* sc_suite = app.add_subcommand("suite", "run a named suite or all of them");
    add_common(sc_suite);
    sc_suite->add_option("--which", which, "euler|measure|lp|kummer|pairs|archimedean|all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!c_csv.empty()) cfg.c_list = parse_csv(c_csv);
        if (sc_chars->parsed()) return cli_char_list(cfg, std::cout);
        if (sc_num->parsed())
            return cli_euler_number(cfg, n,
                                    char_index >= 0 ? std::optional<long long>(char_index)
                                                    : std::nullopt,
                                    std::cout);
        if (sc_poly->parsed()) return cli_euler_poly(cfg, n, parse_rat(x_str), std::cout);
        if (sc_measure->parsed()) return run_suite(cfg, "measure", std::cout);
        if (sc_int->parsed()) return cli_integrate(cfg, n, std::cout);
        if (sc_lp->parsed()) {
            BigRat s = sc_lp->count("--n") ? BigRat(-n) : parse_rat(s_str);
            return cli_lp_value(cfg, s, std::cout);
        }
        if (sc_interp->parsed()) return run_suite(cfg, "lp", std::cout);
        if (sc_kummer->parsed()) return run_suite(cfg, "kummer", std::cout);
        if (sc_pair->parsed()) return run_suite(cfg, "pairs", std::cout);
        if (sc_arch->parsed()) return run_suite(cfg, "archimedean", std::cout);
        if (sc_suite->parsed()) return run_suite(cfg, which, std::cout);
    } catch (const std::exception& e) {
        Json j;
        j["record"] = "error";
        j["what"] = e.what();
        std::cout << j.dump() << "\n";
        return 2;
    }
    return 0;
}
