#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eqlv/lfunctions.hpp"

namespace eqlv {

enum class Status { verified, failed, skipped };

std::string status_name(Status s);

struct CongruenceReport {
    std::string check;
    std::map<std::string, std::string> params;
    Status status = Status::skipped;
    std::string reason;   // for skipped
    std::string witness;  // nonzero difference for failed, residues for verified
    double time_ms = 0.0;
};

// Kummer: (1 - p^{-j}) zeta(j) == (1 - p^{-k}) zeta(k) mod p^n for odd
// negative j, k with j == k mod p^{n-1}(p-1) and 1 - j not == 0 mod (p-1).
CongruenceReport verify_kummer(long p, long n, long j, long k);

// Minus-part congruence: tw_{k-j}(e_j^- theta_{S,T}(j)) == e_k^- theta_{S,T}(k)
// in Z/p^n[G] for the field of level f with p^n | f.
CongruenceReport verify_minus_congruence(long f, long p, long n, const PlaceSet& S,
                                         const std::set<long>& T, long j, long k);

// tw_{k-j}(delta_T(j)) == delta_T(k) and the analogous identity for the
// Euler factors 1 - l^{-j} sigma_l^{-1}, l in euler_primes.
CongruenceReport verify_delta_twist(long f, long p, long n, const std::set<long>& T, long j, long k,
                                    const std::vector<long>& euler_primes = {});

// p-integrality of e_j^- theta_{S,T}(j).
CongruenceReport verify_integrality(long f, long p, const PlaceSet& S, const std::set<long>& T,
                                    long j);

struct SweepGrid {
    std::vector<long> f_values;
    std::vector<long> n_values;          // capped at v_p(f) per f
    std::vector<long> j_values;
    std::vector<long> k_values;
    std::vector<long> t_primes;          // each admissible one used as T = {l}
    std::set<long> extra_s;
    bool kummer = false;
    std::vector<long> kummer_p;
    long kummer_n_max = 2;
    long kummer_range = 50;
    bool minus_congruence = true;
    bool delta_twist = true;
    bool integrality = true;
    bool inject_fault = false;  // test hook: corrupts one theta coefficient
};

std::vector<CongruenceReport> sweep(const SweepGrid& grid);

// The stock verification grid: f in {9,27,5,25,45}, n up to v_p(f), j,k in
// {0,...,-6}, T singletons from {2,7,11}.
SweepGrid default_sweep_grid();

// Cached exact theta for repeated sweep evaluation.
const ThetaElement& theta_cached(long f, const PlaceSet& S, const std::set<long>& T, long j);

long p_adic_valuation(long f, long p);

}  // namespace eqlv
