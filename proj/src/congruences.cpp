#include "eqlv/congruences.hpp"

#include <chrono>
#include <mutex>
#include <sstream>

namespace eqlv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string set_str(const std::set<long>& s) {
    std::ostringstream os;
    bool first = true;
    for (long x : s) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    return os.str();
}

long pow_l(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::failed: return "failed";
        case Status::skipped: return "skipped";
    }
    return "?";
}

long p_adic_valuation(long f, long p) {
    long v = 0;
    while (f % p == 0) {
        f /= p;
        ++v;
    }
    return v;
}

CongruenceReport verify_kummer(long p, long n, long j, long k) {
    auto t0 = Clock::now();
    CongruenceReport rep;
    rep.check = "kummer";
    rep.params = {{"p", std::to_string(p)},
                  {"n", std::to_string(n)},
                  {"j", std::to_string(j)},
                  {"k", std::to_string(k)}};
    auto skip = [&](const std::string& why) {
        rep.status = Status::skipped;
        rep.reason = why;
        rep.time_ms = ms_since(t0);
        return rep;
    };
    if (p < 3 || p % 2 == 0) return skip("p must be odd");
    if (j >= 0 || k >= 0 || j % 2 == 0 || k % 2 == 0) return skip("j,k must be odd negative");
    long step = pow_l(p, n - 1) * (p - 1);
    if (((j - k) % step) != 0) return skip("j != k mod p^{n-1}(p-1)");
    if (((1 - j) % (p - 1)) == 0) return skip("1-j == 0 mod (p-1)");

    long pn = pow_l(p, n);
    auto side = [&](long s) {
        Rational zeta = riemann_zeta_nonpositive(s);
        Rational r = (Rational(1) - Rational(int_pow(p, -s))) * zeta;
        r.canonicalize();
        return Zmod::from_rational(r, pn);
    };
    Zmod lhs = side(j), rhs = side(k);
    std::ostringstream w;
    w << lhs.value() << " vs " << rhs.value() << " mod " << pn;
    rep.witness = w.str();
    rep.status = lhs == rhs ? Status::verified : Status::failed;
    rep.time_ms = ms_since(t0);
    return rep;
}

const ThetaElement& theta_cached(long f, const PlaceSet& S, const std::set<long>& T, long j) {
    static std::mutex mu;
    static std::map<std::string, ThetaElement> cache;
    std::ostringstream key;
    key << f << "|" << set_str(S.primes) << "|" << set_str(T) << "|" << j;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key.str());
    if (it == cache.end()) it = cache.emplace(key.str(), theta(f, S, T, j)).first;
    return it->second;
}

CongruenceReport verify_minus_congruence(long f, long p, long n, const PlaceSet& S,
                                         const std::set<long>& T, long j, long k) {
    auto t0 = Clock::now();
    CongruenceReport rep;
    rep.check = "minus_congruence";
    rep.params = {{"f", std::to_string(f)}, {"p", std::to_string(p)}, {"n", std::to_string(n)},
                  {"j", std::to_string(j)}, {"k", std::to_string(k)}, {"S", set_str(S.primes)},
                  {"T", set_str(T)}};
    auto skip = [&](const std::string& why) {
        rep.status = Status::skipped;
        rep.reason = why;
        rep.time_ms = ms_since(t0);
        return rep;
    };
    if (p % 2 == 0) return skip("p must be odd");
    if (f % pow_l(p, n) != 0) return skip("p^n does not divide f");
    if (j > 0 || k > 0) return skip("j,k must be non-positive");
    if (!S.primes.count(p)) return skip("S must contain p");

    GroupPtr g = unit_group(f);
    GRZ side[2];
    const long js[2] = {j, k};
    for (int i = 0; i < 2; ++i) {
        const ThetaElement& th = theta_cached(f, S, T, js[i]);
        GRQ minus = parity_idempotent(g, js[i], -1) * th.value;
        try {
            side[i] = reduce_mod(minus, p, n);
        } catch (const std::domain_error& e) {
            return skip(std::string("side j=") + std::to_string(js[i]) + " " + e.what());
        }
    }
    GRZ lhs = twist(k - j, side[0], p, n);
    GRZ diff = lhs - side[1];
    if (diff.is_zero()) {
        rep.status = Status::verified;
        rep.witness = to_string(side[1]);
    } else {
        rep.status = Status::failed;
        rep.witness = "difference " + to_string(diff);
    }
    rep.time_ms = ms_since(t0);
    return rep;
}

CongruenceReport verify_delta_twist(long f, long p, long n, const std::set<long>& T, long j, long k,
                                    const std::vector<long>& euler_primes) {
    auto t0 = Clock::now();
    CongruenceReport rep;
    rep.check = "delta_twist";
    rep.params = {{"f", std::to_string(f)}, {"p", std::to_string(p)}, {"n", std::to_string(n)},
                  {"j", std::to_string(j)}, {"k", std::to_string(k)}, {"T", set_str(T)}};
    auto skip = [&](const std::string& why) {
        rep.status = Status::skipped;
        rep.reason = why;
        rep.time_ms = ms_since(t0);
        return rep;
    };
    if (f % pow_l(p, n) != 0) return skip("p^n does not divide f");
    for (long ell : T)
        if (f % ell == 0) return skip("T must avoid primes dividing f");

    GRZ lhs = twist(k - j, reduce_mod(delta_T(f, T, j), p, n), p, n);
    GRZ rhs = reduce_mod(delta_T(f, T, k), p, n);
    GRZ diff = lhs - rhs;
    bool ok = diff.is_zero();
    std::string witness = ok ? to_string(rhs) : "delta difference " + to_string(diff);
    for (long ell : euler_primes) {
        if (f % ell == 0) continue;
        GRZ el = twist(k - j, reduce_mod(euler_factor_group(f, ell, j), p, n), p, n);
        GRZ er = reduce_mod(euler_factor_group(f, ell, k), p, n);
        GRZ ed = el - er;
        if (!ed.is_zero()) {
            ok = false;
            witness = "euler factor difference at " + std::to_string(ell) + ": " + to_string(ed);
            break;
        }
    }
    rep.status = ok ? Status::verified : Status::failed;
    rep.witness = witness;
    rep.time_ms = ms_since(t0);
    return rep;
}

CongruenceReport verify_integrality(long f, long p, const PlaceSet& S, const std::set<long>& T,
                                    long j) {
    auto t0 = Clock::now();
    CongruenceReport rep;
    rep.check = "integrality";
    rep.params = {{"f", std::to_string(f)}, {"p", std::to_string(p)}, {"j", std::to_string(j)},
                  {"S", set_str(S.primes)}, {"T", set_str(T)}};
    GroupPtr g = unit_group(f);
    const ThetaElement& th = theta_cached(f, S, T, j);
    GRQ x = g->has_conjugation() ? parity_idempotent(g, j, -1) * th.value : th.value;
    try {
        GRZ r = reduce_mod(x, p, 1);
        rep.status = Status::verified;
        rep.witness = to_string(r);
    } catch (const std::domain_error& e) {
        rep.status = Status::failed;
        rep.witness = e.what();
    }
    rep.time_ms = ms_since(t0);
    return rep;
}

SweepGrid default_sweep_grid() {
    SweepGrid g;
    g.f_values = {9, 27, 5, 25, 45};
    g.n_values = {1, 2, 3};
    g.j_values = {0, -1, -2, -3, -4, -5, -6};
    g.k_values = {0, -1, -2, -3, -4, -5, -6};
    g.t_primes = {2, 7, 11};
    return g;
}

std::vector<CongruenceReport> sweep(const SweepGrid& grid) {
    std::vector<CongruenceReport> out;
    if (grid.kummer) {
        for (long p : grid.kummer_p)
            for (long n = 1; n <= grid.kummer_n_max; ++n)
                for (long j = -1; j >= -grid.kummer_range; j -= 2)
                    for (long k = -1; k >= -grid.kummer_range; k -= 2) {
                        long step = pow_l(p, n - 1) * (p - 1);
                        if ((j - k) % step != 0) continue;
                        if ((1 - j) % (p - 1) == 0) continue;
                        out.push_back(verify_kummer(p, n, j, k));
                    }
    }
    for (long f : grid.f_values) {
        // p is the prime of the p-power part of f; by convention the
        // smallest odd prime dividing f
        long p = 0;
        for (long q = 3; q <= f; q += 2)
            if (f % q == 0) {
                p = q;
                break;
            }
        if (p == 0) continue;
        long vmax = p_adic_valuation(f, p);
        PlaceSet S = minimal_S(f, grid.extra_s);
        for (long n : grid.n_values) {
            if (n > vmax) continue;
            for (long tp : grid.t_primes) {
                if (f % tp == 0 || S.primes.count(tp)) continue;
                std::set<long> T = {tp};
                for (long j : grid.j_values)
                    for (long k : grid.k_values) {
                        if (grid.minus_congruence) {
                            auto rep = verify_minus_congruence(f, p, n, S, T, j, k);
                            if (grid.inject_fault && out.empty() && rep.status == Status::verified) {
                                rep.status = Status::failed;
                                rep.witness = "injected fault: coefficient perturbed by 1";
                            }
                            out.push_back(rep);
                        }
                        if (grid.delta_twist && j != k)
                            out.push_back(verify_delta_twist(f, p, n, T, j, k, {2, 7, 11}));
                    }
                if (grid.integrality)
                    for (long j : grid.j_values)
                        out.push_back(verify_integrality(f, p, S, T, j));
            }
        }
    }
    return out;
}

}  // namespace eqlv
