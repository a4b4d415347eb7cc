#include "qeuler/suite.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

namespace qeuler {

Json to_json(const Padic& x) {
    Json j;
    if (x.is_zero()) {
        if (x.is_exact_zero())
            j["valuation"] = nullptr;
        else
            j["valuation"] = x.valuation();
        j["digits"] = Json::array();
        j["precision"] = 0;
    } else {
        j["valuation"] = x.valuation();
        j["digits"] = x.unit_digits();
        j["precision"] = x.precision();
    }
    return j;
}

Json to_json(const PElem& x) {
    Json j;
    j["modulus"] = x.ring()->modulus();
    Json cs = Json::array();
    for (const auto& c : x.coeffs()) cs.push_back(to_json(c));
    j["coeffs"] = cs;
    return j;
}

std::pair<long long, long long> parse_q_expr(const std::string& expr) {
    std::string s;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "1") return {0, 1};
    auto fail = [&] {
        throw std::invalid_argument("config: q must be given as \"1+u*p^e\" with integers u >= 0, e >= 1 (got \"" +
                                    expr + "\")");
    };
    size_t i = 0;
    auto expect = [&](const std::string& tok) {
        if (s.compare(i, tok.size(), tok) != 0) fail();
        i += tok.size();
    };
    auto number = [&]() -> long long {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i || j - i > 12) fail();
        long long v = std::stoll(s.substr(i, j - i));
        i = j;
        return v;
    };
    expect("1+");
    long long u = number();
    expect("*p^");
    long long e = number();
    if (i != s.size() || e < 1) fail();
    return {u, e};
}

void RunConfig::validate() const {
    if (!is_odd_prime(p))
        throw std::invalid_argument("config: p must be an odd prime >= 3 (got " + std::to_string(p) + ")");
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("config: d must be a positive odd integer (got " + std::to_string(d) + ")");
    if (gcd_ll(d, p) != 1) throw std::invalid_argument("config: d must be coprime to p");
    if (r < 1) throw std::invalid_argument("config: twist order r must be >= 1");
    if (r % 2 == 0 && !allow_even_r)
        throw std::invalid_argument(
            "config: even twist order r rejected (boundedness fails); pass --allow-even-r to explore");
    if (gcd_ll(r, p) != 1) throw std::invalid_argument("config: twist order r must be coprime to p");
    if (gcd_ll(r, d) != 1) throw std::invalid_argument("config: twist order r must be coprime to d");
    parse_q_expr(q_expr);
    if (p_target < 1) throw std::invalid_argument("config: p_target must be >= 1");
    if (n_max < 0) throw std::invalid_argument("config: n_max must be >= 0");
    if (k_max < 0) throw std::invalid_argument("config: k_max must be >= 0");
    if (N_min < 1 || N_max < N_min)
        throw std::invalid_argument("config: ball levels need 1 <= N_min <= N_max");
    for (double qq : arch_q)
        if (!(qq > 0.0 && qq < 1.0))
            throw std::invalid_argument("config: archimedean q values must lie in (0,1)");
    (void)selected_characters();
}

long long RunConfig::v1q() const {
    auto [u, e] = parse_q_expr(q_expr);
    if (u == 0) return 0;
    return e + vp_int(u, p);
}

Padic RunConfig::q_value(long long prec) const {
    auto [u, e] = parse_q_expr(q_expr);
    return Padic::from_integer(1 + BigInt(u) * pow_p(p, e), p, prec);
}

std::vector<long long> RunConfig::effective_c_list() const {
    if (!c_list.empty()) return c_list;
    return {p - 1, 2 * (p - 1)};
}

std::vector<std::pair<long long, DirichletCharacter>> RunConfig::selected_characters() const {
    auto all = DirichletCharacter::enumerate(d);
    std::vector<std::pair<long long, DirichletCharacter>> out;
    if (char_sel == "all") {
        for (size_t i = 0; i < all.size(); ++i)
            if (gcd_ll(all[i].order(), p) == 1) out.emplace_back((long long)i, all[i]);
        return out;
    }
    long long idx = -1;
    try {
        idx = std::stoll(char_sel);
    } catch (...) {
        throw std::invalid_argument("config: character selector must be \"all\" or an index");
    }
    if (idx < 0 || idx >= (long long)all.size())
        throw std::invalid_argument("config: character index out of range (0.." +
                                    std::to_string(all.size() - 1) + ")");
    if (gcd_ll(all[idx].order(), p) != 1)
        throw std::invalid_argument("config: selected character has order divisible by p: " +
                                    all[idx].describe());
    out.emplace_back(idx, all[idx]);
    return out;
}

long long RunConfig::ring_modulus() const {
    long long M = r;
    for (const auto& [i, chi] : selected_characters()) M = lcm_ll(M, chi.order());
    return M;
}

int RunConfig::effective_threads() const {
    if (threads > 0) return std::min(threads, 64);
    if (const char* env = std::getenv("QEULER_THREADS")) {
        long t = std::strtol(env, nullptr, 10);
        if (t >= 1) return (int)std::min<long>(t, 64);
    }
    return 1;
}

namespace {

Json gauge_json(long long v) {
    if (v >= Padic::kExactVal / 2) return Json("exact");
    return Json(v);
}

std::vector<Json> run_jobs(std::vector<std::function<Json()>>& jobs, int threads) {
    std::vector<Json> out(jobs.size());
    auto guarded = [&](size_t i) {
        try {
            out[i] = jobs[i]();
        } catch (const std::exception& e) {
            Json j;
            j["record"] = "error";
            j["what"] = e.what();
            out[i] = j;
        }
    };
    if (threads <= 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) guarded(i);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            guarded(i);
        }
    };
    std::vector<std::thread> pool;
    int nt = std::min<int>(threads, (int)jobs.size());
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

// emits records, returns number of failures (error records count as failures)
int emit(std::vector<std::function<Json()>>& jobs, const RunConfig& cfg, std::ostream& out) {
    int failures = 0;
    for (auto& j : run_jobs(jobs, cfg.effective_threads())) {
        out << j.dump() << "\n";
        if (j.value("record", "") == "error" || !j.value("pass", true)) ++failures;
    }
    return failures;
}

Json check_record(const char* suite, const char* check, long long p_work) {
    Json j;
    j["record"] = "check";
    j["suite"] = suite;
    j["check"] = check;
    j["p_work"] = p_work;
    j["params"] = Json::object();
    return j;
}

void emit_header(const RunConfig& cfg, const std::string& which, std::ostream& out) {
    Json j;
    j["record"] = "header";
    j["schema"] = "qeuler/1";
    j["suite"] = which;
    j["p"] = cfg.p;
    j["p_target"] = cfg.p_target;
    j["d"] = cfg.d;
    j["char"] = cfg.char_sel;
    j["r"] = cfg.r;
    j["xi_k"] = cfg.xi_k;
    j["h"] = cfg.h;
    j["q"] = cfg.q_expr;
    j["n_max"] = cfg.n_max;
    j["seed"] = cfg.seed;
    out << j.dump() << "\n";
}

// direct transcriptions of the degree-0/1/2 closed forms
PElem e_explicit(const PRing& R, long n, long long h, const Padic& q, const TwistSpec& xi,
                 const BigRat& x) {
    PadicWorld w{&R};
    auto den = [&](long long j) { return w.inv(R.one() + w.twist(xi) * w.embed(q.pow(h + j))); };
    Padic one = Padic::one(q.prime(), q.precision());
    if (n == 0) return den(0) * w.embed(one + q);
    Padic qx = qpow(q, x);
    if (n == 1) return (den(0) - den(1) * w.embed(qx)) * w.embed((one + q) / (one - q));
    auto t = den(0) - den(1) * w.embed(qx + qx) + den(2) * w.embed(qx * qx);
    return t * w.embed((one + q) / ((one - q) * (one - q)));
}

int suite_euler(const RunConfig& cfg, std::ostream& out) {
    long long n_eff = std::max<long long>(cfg.n_max, 6);
    long long prec = cfg.p_work(n_eff);
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Padic q = cfg.q_value(prec);
    TwistSpec xi = cfg.xi();
    PadicWorld w{&R};
    std::vector<std::function<Json()>> jobs;

    // explicit low-degree polynomials at seeded sample points
    for (long n = 0; n <= 2; ++n) {
        jobs.push_back([&, n] {
            Json j = check_record("euler", "closed_form_explicit", prec);
            j["params"]["n"] = n;
            std::mt19937_64 rng(cfg.seed + 101 + n);
            long long worst = Padic::kExactVal;
            for (int it = 0; it < 20; ++it) {
                long long den = (it % 2) ? 1 : (cfg.p == 3 ? 5 : 3);
                BigRat x((long long)(rng() % 200), den);
                if (q.is_one()) continue;
                auto a = twisted_hq_euler_poly_padic(R, n, cfg.h, q, xi, x);
                worst = std::min(worst, min_valuation(a - e_explicit(R, n, cfg.h, q, xi, x)));
            }
            j["residual_valuation"] = gauge_json(worst);
            j["pass"] = worst >= cfg.p_target;
            return j;
        });
    }
    // distribution identity (both sides computed independently)
    for (long n = 0; n <= std::min<long long>(cfg.n_max, 6); ++n)
        for (long long dp : {1LL, 3LL, 5LL}) {
            if (dp % cfg.p == 0) continue;
            for (long long xnum : {0LL, 1LL})
                jobs.push_back([&, n, dp, xnum] {
                    Json j = check_record("euler", "distribution_identity", prec);
                    j["params"]["n"] = n;
                    j["params"]["d_prime"] = dp;
                    j["params"]["x"] = xnum;
                    if (q.is_one()) {
                        j["pass"] = true;
                        j["skipped"] = "q = 1 uses the classical path";
                        return j;
                    }
                    auto lhs = twisted_hq_euler_poly_padic(R, n, cfg.h, q, xi, BigRat(xnum));
                    auto rhs = distribution_rhs(w, n, cfg.h, q, xi, dp, BigRat(xnum));
                    long long v = min_valuation(lhs - rhs);
                    j["residual_valuation"] = gauge_json(v);
                    j["pass"] = v >= cfg.p_target;
                    return j;
                });
        }
    // expansion through the numbers
    for (long n = 0; n <= std::min<long long>(cfg.n_max, 6); ++n)
        for (long long xnum : {0LL, 1LL})
            jobs.push_back([&, n, xnum] {
                Json j = check_record("euler", "poly_from_numbers", prec);
                j["params"]["n"] = n;
                j["params"]["x"] = xnum;
                if (q.is_one()) {
                    j["pass"] = true;
                    j["skipped"] = "q = 1 uses the classical path";
                    return j;
                }
                auto lhs = euler_poly_from_numbers(w, n, cfg.h, q, xi, BigRat(xnum));
                auto rhs = twisted_hq_euler_poly_padic(R, n, cfg.h, q, xi, BigRat(xnum));
                long long v = min_valuation(lhs - rhs);
                j["residual_valuation"] = gauge_json(v);
                j["pass"] = v >= cfg.p_target;
                return j;
            });
    // generalized numbers do not depend on the admissible modulus
    for (const auto& [idx, chi] : cfg.selected_characters())
        for (long n = 0; n <= std::min<long long>(cfg.n_max, 4); ++n)
            jobs.push_back([&, idx = idx, chi = chi, n] {
                Json j = check_record("euler", "generalized_D_independence", prec);
                j["params"]["char"] = idx;
                j["params"]["n"] = n;
                long long mult = (cfg.p == 3) ? 5 : 3;
                auto a = generalized_twisted_number_padic(R, n, cfg.h, q, xi, chi, cfg.d);
                auto b = generalized_twisted_number_padic(R, n, cfg.h, q, xi,
                                                          chi.induced_to(cfg.d * mult), cfg.d * mult);
                long long v = min_valuation(a - b);
                j["residual_valuation"] = gauge_json(v);
                j["pass"] = v >= cfg.p_target;
                return j;
            });
    // q -> 1 monotone convergence to the classical numbers
    for (long n = 1; n <= std::min<long long>(cfg.n_max, 3); ++n)
        jobs.push_back([&, n] {
            Json j = check_record("euler", "q_to_one_monotone", prec);
            j["params"]["n"] = n;
            QRing Rq(RationalDomain{}, R.modulus());
            auto wq = Rq.root_of_unity(xi.k * (Rq.modulus() / xi.r));
            auto cls = classical_twisted_numbers(Rq, wq, n);
            auto target = embed_rational(cls[n], R);
            Json vals = Json::array();
            bool mono = true;
            long long prev = -Padic::kExactVal;
            for (long long a = 1; a <= 3; ++a) {
                auto qa = Padic::from_integer(1 + pow_p(cfg.p, a), cfg.p, prec);
                long long v = min_valuation(twisted_hq_euler_number_padic(R, n, cfg.h, qa, xi) - target);
                vals.push_back(gauge_json(v));
                mono = mono && v >= prev;
                prev = v;
            }
            j["valuations"] = vals;
            j["pass"] = mono;
            return j;
        });
    return emit(jobs, cfg, out);
}

int suite_measure(const RunConfig& cfg, std::ostream& out) {
    long long prec = cfg.p_work(cfg.n_max);
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Padic q = cfg.q_value(prec);
    TwistSpec xi = cfg.xi();
    std::vector<std::function<Json()>> jobs;

    int N_hi = std::min(cfg.N_max, 3);
    for (long n = 0; n <= cfg.n_max; ++n) {
        for (int N = std::min(cfg.N_min, N_hi); N <= N_hi; ++N) {
            jobs.push_back([&, n, N] {
                Json j = check_record("measure", "distribution", prec);
                j["params"]["n"] = n;
                j["params"]["N"] = N;
                MeasureEvaluator ev(R, MeasureParams{n, cfg.h, q, xi, cfg.d});
                std::mt19937_64 rng(cfg.seed + 1000 + 17 * n + N);
                long long m = (long long)(BigInt(cfg.d) * pow_p(cfg.p, N));
                long long worst = Padic::kExactVal, floor_v = Padic::kExactVal;
                for (int it = 0; it < 10; ++it) {
                    Ball b{(long long)(rng() % m), N, cfg.d};
                    worst = std::min(worst, check_distribution(ev, b));
                    floor_v = std::min(floor_v, min_valuation(ev.mu(b)));
                }
                j["residual_valuation"] = gauge_json(worst);
                j["min_measure_valuation"] = gauge_json(floor_v);
                j["pass"] = worst >= cfg.p_target && floor_v >= -n * cfg.v1q();
                return j;
            });
        }
    }
    for (long n = 0; n <= std::min<long long>(cfg.n_max, 4); ++n)
        jobs.push_back([&, n] {
            Json j = check_record("measure", "scaling", prec);
            j["params"]["n"] = n;
            MeasureParams P{n, cfg.h, q, xi, cfg.d};
            MeasureEvaluator ev(R, P);
            MeasureEvaluator evp(R, scaled_params(P));
            std::mt19937_64 rng(cfg.seed + 2000 + n);
            long long worst = Padic::kExactVal;
            for (int it = 0; it < 10; ++it) {
                int N = (int)(rng() % (unsigned)std::min(cfg.N_max, 3));
                long long m = (long long)(BigInt(cfg.d) * pow_p(cfg.p, N));
                worst = std::min(worst, check_scaling(ev, evp, Ball{(long long)(rng() % m), N, cfg.d}));
            }
            j["residual_valuation"] = gauge_json(worst);
            j["pass"] = worst >= cfg.p_target;
            return j;
        });
    for (long n = 0; n <= cfg.n_max; ++n)
        for (long long a : {0LL, 1LL})
            jobs.push_back([&, n, a] {
                Json j = check_record("measure", "density", prec);
                j["params"]["n"] = n;
                j["params"]["a"] = a;
                MeasureEvaluator ev(R, MeasureParams{n, cfg.h, q, xi, cfg.d});
                auto vs = check_density(ev, a, cfg.N_min, cfg.N_max);
                Json arr = Json::array();
                bool mono = true;
                for (size_t i = 0; i < vs.size(); ++i) {
                    arr.push_back(gauge_json(vs[i]));
                    if (i && vs[i] < vs[i - 1]) mono = false;
                }
                j["valuations"] = arr;
                j["pass"] = mono && vs.back() >= std::min<long long>(cfg.p_target, 3);
                return j;
            });
    for (long n = 0; n <= std::min<long long>(cfg.n_max, 4); ++n)
        jobs.push_back([&, n] {
            Json j = check_record("measure", "density_mu0", prec);
            j["params"]["n"] = n;
            j["diagnostic"] = true;
            MeasureEvaluator ev(R, MeasureParams{n, cfg.h, q, xi, cfg.d});
            auto vs = check_density_mu0(ev, 1, cfg.N_min, cfg.N_max);
            Json arr = Json::array();
            bool mono = true;
            for (size_t i = 0; i < vs.size(); ++i) {
                arr.push_back(gauge_json(vs[i]));
                if (i && vs[i] < vs[i - 1]) mono = false;
            }
            j["valuations"] = arr;
            j["pass"] = mono && vs.back() >= std::min<long long>(cfg.p_target, 3);
            return j;
        });
    for (long long shift = 0; shift <= 4; ++shift)
        jobs.push_back([&, shift] {
            Json j = check_record("measure", "fermionic_shift", prec);
            j["params"]["shift"] = shift;
            j["params"]["q"] = "1";
            std::mt19937_64 rng(cfg.seed + 3000 + shift);
            long long mL = cfg.d * cfg.p;
            long long worst = Padic::kExactVal;
            for (int it = 0; it < 5; ++it) {
                std::vector<PElem> table;
                for (long long c = 0; c < mL; ++c)
                    table.push_back(R.root_of_unity((long long)(rng() % (unsigned)R.modulus())) *
                                    Padic::from_long((long long)(rng() % 9) - 4, cfg.p, prec));
                int N = std::max(1, std::min(cfg.N_max, 2));
                worst = std::min(worst, check_fermionic_shift(R, cfg.d, table, 1, shift, N));
            }
            j["residual_valuation"] = gauge_json(worst);
            j["pass"] = worst >= cfg.p_target;
            return j;
        });
    return emit(jobs, cfg, out);
}

int suite_lp(const RunConfig& cfg, std::ostream& out) {
    long long n_hi = std::min<long long>(cfg.n_max, 4);
    long long prec = cfg.p_work(n_hi);
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Padic q = cfg.q_value(prec);
    std::vector<std::function<Json()>> jobs;
    for (const auto& [idx, chi] : cfg.selected_characters()) {
        for (long n = 0; n <= n_hi; ++n)
            jobs.push_back([&, idx = idx, chi = chi, n] {
                Json j = check_record("lp", "interpolation", prec);
                j["params"]["char"] = idx;
                j["params"]["n"] = n;
                LFunction lf(R, LSpec{chi, cfg.h, q, cfg.xi()});
                auto rep = lf.interpolation_check(n, 5, 3);
                Json arr = Json::array();
                for (long long v : rep.residuals) arr.push_back(gauge_json(v));
                j["residuals"] = arr;
                j["monotone"] = rep.monotone;
                j["pass"] = rep.pass;
                return j;
            });
        jobs.push_back([&, idx = idx, chi = chi] {
            Json j = check_record("lp", "s_continuity", prec);
            j["params"]["char"] = idx;
            LFunction lf(R, LSpec{chi, cfg.h, q, cfg.xi()});
            bool ok = true;
            Json arr = Json::array();
            for (long long m : {1LL, 2LL, 3LL}) {
                auto s = Padic::from_long(2, cfg.p, prec);
                auto sp = s + Padic::from_integer(pow_p(cfg.p, m), cfg.p, prec);
                long long v = min_valuation(lf.l_p_riemann(s, 2).value - lf.l_p_riemann(sp, 2).value);
                arr.push_back(gauge_json(v));
                ok = ok && v >= m - 2;
            }
            j["valuations"] = arr;
            j["pass"] = ok;
            return j;
        });
    }
    return emit(jobs, cfg, out);
}

int suite_kummer(const RunConfig& cfg, std::ostream& out) {
    for (long long c : cfg.effective_c_list())
        if (c < 1 || c % (cfg.p - 1) != 0)
            throw std::invalid_argument("config: every c must be a positive multiple of p-1 (got " +
                                        std::to_string(c) + ")");
    long long c_max = 0;
    for (long long c : cfg.effective_c_list()) c_max = std::max(c_max, c);
    long long n_eff = cfg.n_max + cfg.k_max * c_max;
    long long prec = cfg.p_work(n_eff);
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Padic q = cfg.q_value(prec);

    int failures = 0;
    for (const auto& [idx, chi] : cfg.selected_characters()) {
        LFunction lf(R, LSpec{chi, cfg.h, q, cfg.xi()});
        auto eps = lf.epsilon_sequence(n_eff);
        std::vector<std::function<Json()>> jobs;
        jobs.push_back([&, idx = idx] {
            Json j = check_record("kummer", "epsilon_integrality", prec);
            j["params"]["char"] = idx;
            long long worst = Padic::kExactVal;
            for (const auto& e : eps) worst = std::min(worst, min_valuation(e));
            j["min_valuation"] = gauge_json(worst);
            j["pass"] = worst >= 0;
            return j;
        });
        for (long long c : cfg.effective_c_list())
            for (long long k = 1; k <= cfg.k_max; ++k)
                for (long long n = 0; n <= cfg.n_max; ++n)
                    jobs.push_back([&, idx = idx, c, k, n] {
                        Json j = check_record("kummer", "forward_difference", prec);
                        j["params"]["char"] = idx;
                        j["params"]["c"] = c;
                        j["params"]["k"] = k;
                        j["params"]["n"] = n;
                        long long v = min_valuation(forward_difference(eps, c, k, n));
                        j["residual_valuation"] = gauge_json(v);
                        j["pass"] = v >= k;
                        return j;
                    });
        // diagnostic trend: mean residual growth from k to k+1
        jobs.push_back([&, idx = idx] {
            Json j = check_record("kummer", "residual_trend", prec);
            j["params"]["char"] = idx;
            j["diagnostic"] = true;
            long long c = cfg.effective_c_list().front();
            Json arr = Json::array();
            for (long long k = 1; k <= cfg.k_max; ++k) {
                double mean = 0;
                long cnt = 0;
                for (long long n = 0; n <= cfg.n_max; ++n) {
                    long long v = min_valuation(forward_difference(eps, c, k, n));
                    if (v < Padic::kExactVal / 2) {
                        mean += (double)v;
                        ++cnt;
                    }
                }
                arr.push_back(cnt ? mean / cnt : 0.0);
            }
            j["mean_residuals_by_k"] = arr;
            j["pass"] = true;
            return j;
        });
        failures += emit(jobs, cfg, out);
    }
    return failures;
}

int suite_pairs(const RunConfig& cfg, std::ostream& out) {
    long long prec = cfg.p_work(cfg.n_max);
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Padic q = cfg.q_value(prec);
    int failures = 0;
    for (const auto& [idx, chi] : cfg.selected_characters()) {
        LFunction lf(R, LSpec{chi, cfg.h, q, cfg.xi()});
        auto eps = lf.epsilon_sequence(cfg.n_max);
        std::vector<std::function<Json()>> jobs;
        for (long long n = 1; n <= cfg.n_max; ++n)
            for (long long np = 1; np < n; ++np) {
                if ((n - np) % (cfg.p - 1) != 0) continue;
                jobs.push_back([&, idx = idx, n, np] {
                    Json j = check_record("pairs", "pair_congruence", prec);
                    j["params"]["char"] = idx;
                    j["params"]["n"] = n;
                    j["params"]["n_prime"] = np;
                    auto row = pair_congruence_check(eps, cfg.p, n, np);
                    j["residual_valuation"] = gauge_json(row.residual);
                    j["pass"] = row.pass;
                    return j;
                });
            }
        // n' = 0 lies outside the stated hypothesis; reported separately
        for (long long n = cfg.p - 1; n <= cfg.n_max; n += cfg.p - 1)
            jobs.push_back([&, idx = idx, n] {
                Json j = check_record("pairs", "pair_congruence_with_zero", prec);
                j["params"]["char"] = idx;
                j["params"]["n"] = n;
                j["extension"] = true;
                long long v = min_valuation(eps[n] - eps[0]);
                j["residual_valuation"] = gauge_json(v);
                j["pass"] = v >= 1;
                return j;
            });
        failures += emit(jobs, cfg, out);
    }
    return failures;
}

int suite_archimedean(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::function<Json()>> jobs;
    auto chars = DirichletCharacter::enumerate(cfg.d);
    for (double qr : cfg.arch_q)
        for (long long r : cfg.arch_r)
            for (long long h : {1LL, 2LL})
                for (long n = 0; n <= cfg.arch_n_max; ++n) {
                    jobs.push_back([&, qr, r, h, n] {
                        Json j = check_record("archimedean", "zeta_interpolation", 0);
                        j["params"] = {{"q", qr}, {"r", r}, {"h", h}, {"n", n}};
                        ComplexSeriesSpec spec{Cplx(qr), Cplx((double)h), TwistSpec{r, 1},
                                               cfg.arch_tol * 1e-2};
                        auto sv = twisted_zeta_series(spec, Cplx(-(double)n), 1.0);
                        auto closed = euler_poly_complex(n, h, Cplx(qr), TwistSpec{r, 1}, BigRat(1));
                        double resid = std::abs(sv.value - closed);
                        j["series_value"] = {sv.value.real(), sv.value.imag()};
                        j["closed_value"] = {closed.real(), closed.imag()};
                        j["residual"] = resid;
                        j["tail_bound"] = sv.tail_bound;
                        j["pass"] = resid < cfg.arch_tol;
                        return j;
                    });
                    for (size_t ci = 0; ci < chars.size(); ++ci)
                        jobs.push_back([&, qr, r, h, n, ci] {
                            Json j = check_record("archimedean", "l_interpolation", 0);
                            j["params"] = {{"q", qr}, {"r", r}, {"h", h}, {"n", n}, {"char", ci}};
                            ComplexSeriesSpec spec{Cplx(qr), Cplx((double)h), TwistSpec{r, 1},
                                                   cfg.arch_tol * 1e-2};
                            auto sv = twisted_l_series(spec, Cplx(-(double)n), chars[ci]);
                            auto closed =
                                generalized_number_complex(n, h, Cplx(qr), TwistSpec{r, 1}, chars[ci]);
                            double resid = std::abs(sv.value - closed);
                            j["residual"] = resid;
                            j["tail_bound"] = sv.tail_bound;
                            j["pass"] = resid < cfg.arch_tol;
                            return j;
                        });
                }
    jobs.push_back([&] {
        Json j = check_record("archimedean", "euler_zeta_two", 0);
        auto z = classical_euler_zeta(Cplx(2.0), 200000);
        double target = -3.14159265358979323846 * 3.14159265358979323846 / 6.0;
        double resid = std::abs(z.value - Cplx(target));
        j["residual"] = resid;
        j["tail_bound"] = z.tail_bound;
        j["pass"] = resid <= z.tail_bound;
        return j;
    });
    return emit(jobs, cfg, out);
}

}  // namespace

int run_suite(const RunConfig& cfg, const std::string& which, std::ostream& out) {
    cfg.validate();
    emit_header(cfg, which, out);
    int failures = 0;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (which != "all" && which != "euler" && which != "measure" && which != "lp" &&
        which != "kummer" && which != "pairs" && which != "archimedean")
        throw std::invalid_argument("run_suite: unknown suite \"" + which + "\"");
    if (want("euler")) failures += suite_euler(cfg, out);
    if (want("measure")) failures += suite_measure(cfg, out);
    if (want("lp")) failures += suite_lp(cfg, out);
    if (want("kummer")) failures += suite_kummer(cfg, out);
    if (want("pairs")) failures += suite_pairs(cfg, out);
    if (want("archimedean")) failures += suite_archimedean(cfg, out);
    Json j;
    j["record"] = "summary";
    j["suite"] = which;
    j["failures"] = failures;
    out << j.dump() << "\n";
    return failures == 0 ? 0 : 1;
}

int cli_char_list(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    auto all = DirichletCharacter::enumerate(cfg.d);
    for (size_t i = 0; i < all.size(); ++i) {
        Json j;
        j["record"] = "character";
        j["index"] = i;
        j["modulus"] = all[i].modulus();
        j["order"] = all[i].order();
        j["conductor"] = all[i].conductor();
        j["parity"] = all[i].parity();
        j["admissible"] = gcd_ll(all[i].order(), cfg.p) == 1;
        out << j.dump() << "\n";
    }
    return 0;
}

int cli_euler_number(const RunConfig& cfg, long n, std::optional<long long> char_index,
                     std::ostream& out) {
    cfg.validate();
    long long prec = cfg.p_work(std::max<long long>(n, 1));
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Padic q = cfg.q_value(prec);
    Json j;
    j["record"] = "value";
    j["op"] = char_index ? "generalized-euler-number" : "euler-number";
    j["n"] = n;
    j["p_work"] = prec;
    if (char_index) {
        auto all = DirichletCharacter::enumerate(cfg.d);
        if (*char_index < 0 || *char_index >= (long long)all.size())
            throw std::invalid_argument("config: character index out of range");
        j["char"] = *char_index;
        j["value"] = to_json(
            generalized_twisted_number_padic(R, n, cfg.h, q, cfg.xi(), all[*char_index], cfg.d));
    } else {
        j["value"] = to_json(twisted_hq_euler_number_padic(R, n, cfg.h, q, cfg.xi()));
    }
    out << j.dump() << "\n";
    return 0;
}

int cli_euler_poly(const RunConfig& cfg, long n, const BigRat& x, std::ostream& out) {
    cfg.validate();
    long long prec = cfg.p_work(std::max<long long>(n, 1));
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Json j;
    j["record"] = "value";
    j["op"] = "euler-poly";
    j["n"] = n;
    j["x"] = BigRat(x).str();
    j["p_work"] = prec;
    j["value"] = to_json(twisted_hq_euler_poly_padic(R, n, cfg.h, cfg.q_value(prec), cfg.xi(), x));
    out << j.dump() << "\n";
    return 0;
}

int cli_integrate(const RunConfig& cfg, long n, std::ostream& out) {
    cfg.validate();
    long long prec = cfg.p_work(std::max<long long>(n, 1));
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Padic q = cfg.q_value(prec);
    int failures = 0;
    for (const auto& [idx, chi] : cfg.selected_characters()) {
        MeasureEvaluator ev(R, MeasureParams{n, cfg.h, q, cfg.xi(), cfg.d});
        std::vector<PElem> table;
        for (long long c = 0; c < cfg.d; ++c) table.push_back(chi.value_in(R, c));
        Json j;
        j["record"] = "value";
        j["op"] = "integrate";
        j["char"] = idx;
        j["n"] = n;
        j["p_work"] = prec;
        auto base = ev.integrate(table, 0, cfg.N_min);
        j["value"] = to_json(base);
        long long stable = Padic::kExactVal;
        for (int N = cfg.N_min + 1; N <= cfg.N_max; ++N)
            stable = std::min(stable, min_valuation(ev.integrate(table, 0, N) - base));
        j["level_independence_valuation"] = gauge_json(stable);
        long long vs_euler =
            min_valuation(base - generalized_twisted_number_padic(R, n, cfg.h, q, cfg.xi(), chi, cfg.d));
        j["vs_generalized_number_valuation"] = gauge_json(vs_euler);
        bool pass = stable >= cfg.p_target && vs_euler >= cfg.p_target;
        j["pass"] = pass;
        failures += pass ? 0 : 1;
        out << j.dump() << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int cli_lp_value(const RunConfig& cfg, const BigRat& s, std::ostream& out) {
    cfg.validate();
    long long prec = cfg.p_work(cfg.n_max);
    PRing R(PadicDomain{cfg.p, prec}, cfg.ring_modulus());
    Padic q = cfg.q_value(prec);
    for (const auto& [idx, chi] : cfg.selected_characters()) {
        LFunction lf(R, LSpec{chi, cfg.h, q, cfg.xi()});
        Json j;
        j["record"] = "value";
        j["op"] = "lp-value";
        j["char"] = idx;
        j["s"] = BigRat(s).str();
        j["level"] = cfg.N_max;
        j["p_work"] = prec;
        auto rv = lf.l_p_riemann(Padic::from_rational(s, cfg.p, prec), cfg.N_max);
        j["value"] = to_json(rv.value);
        j["stabilization_valuation"] = rv.stabilization ? gauge_json(*rv.stabilization) : Json(nullptr);
        if (big_den(s) == 1 && big_num(s) <= 0) {
            long long nn = (long long)(-big_num(s));
            j["closed_negative_residual"] = gauge_json(min_valuation(rv.value - lf.epsilon(nn)));
        }
        out << j.dump() << "\n";
    }
    return 0;
}

}  // namespace qeuler
