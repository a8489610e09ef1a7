#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mumch/channel.hpp"

namespace mumch {

// lambda_alpha >= 0 and sum lambda <= (d kappa - 1)/(d - 1), both within eq_tol.
bool eb_sufficient(const GeneralizedPauliChannel& ch, const Tolerance& tol = {});

struct HolevoForm {
    OperatorTable states;   // P_k^(alpha)
    OperatorTable effects;  // E_{k,alpha} = ((1 - sum mu)/(d(d+1))) I + mu_alpha P_k^(alpha)
};

// Throws NotSufficientRegime unless eb_sufficient holds.
HolevoForm holevo_form(const GeneralizedPauliChannel& ch, const Tolerance& tol = {});

// sum_{alpha,k} state Tr(X effect)
Operator holevo_apply(const HolevoForm& h, const Operator& x);

struct HolevoValidity {
    double completeness_deviation = 0.0;  // max |sum E - I|
    double min_eigenvalue = 0.0;          // over all effects
    bool valid = false;
};

HolevoValidity holevo_validity(const HolevoForm& h, const Tolerance& tol = {});

struct PptResult {
    double min_eigenvalue = 0.0;
    bool pass = false;
};

// Partial transpose of the Choi matrix is PSD. Throws NotCP for a non-CP channel.
PptResult ppt_check(const GeneralizedPauliChannel& ch, const Tolerance& tol = {});

struct EbReport {
    double sum_lambda = 0.0;
    double sufficient_threshold = 0.0;  // (d kappa - 1)/(d - 1)
    bool necessary_pass = false;        // lambda >= 0, sum lambda <= 1
    bool sufficient_pass = false;
    std::optional<bool> holevo_povm_valid;
    bool cp = false;
    std::optional<double> ppt_min_eigenvalue;
    bool ppt_pass = false;
};

EbReport eb_report(const GeneralizedPauliChannel& ch, const Tolerance& tol = {});

// sqrt((1/d)[1 + (d kappa - 1) max lambda^2])
double nu2_formula(const GeneralizedPauliChannel& ch);

// max over rho in {P_k^(alpha)} of ||Lambda[rho]||_2
double nu2_restricted(const GeneralizedPauliChannel& ch);

// max of ||Lambda[psi]||_2 over `samples` Haar-random pure states. Sample i
// draws from CounterRng(seed, i), so the result does not depend on `threads`.
double nu2_pure_mc(const GeneralizedPauliChannel& ch, long long samples, std::uint64_t seed, int threads = 1);

// sum_k (Tr P_k^(a) P_l^(b))^2 against (1/d)[1 + ((d kappa - 1)^2/(d - 1)) delta_ab];
// returns the max deviation over all (a, l, b).
double nu2_proof_identity_deviation(const MumSet& m);

// nu2^2 == (1/d)[1 + (d - 1) max lambda^2] within eq_tol
bool multiplicativity_check(const GeneralizedPauliChannel& ch, const Tolerance& tol = {});

struct Nu2Report {
    double formula_value = 0.0;
    double restricted_max = 0.0;
    double mc_pure_max = 0.0;
    long long mc_samples = 0;
    std::uint64_t seed = 0;
    std::optional<double> qubit_pure_max;  // sqrt((1 + max lambda^2)/2), d = 2 only
    double mc_minus_formula = 0.0;
    bool mc_exceeds_formula = false;  // mc_pure_max > formula_value + 1e-9
    bool multiplicativity_pass = false;
};

Nu2Report nu2_report(const GeneralizedPauliChannel& ch, long long samples, std::uint64_t seed, int threads = 1,
                     const Tolerance& tol = {});

struct UIndex {
    int axis = 0;  // 1-based
    int k = 0;     // 1..d-1
};

struct UnitaryEntry {
    UIndex u;
    double scale = 0.0;
    std::optional<std::pair<int, int>> weyl;  // (k, l) with U proportional to W_{kl}
};

struct CensusReport {
    std::vector<UnitaryEntry> unitary_proportional;
    std::vector<std::pair<UIndex, UIndex>> commuting_pairs;
};

// Commutation test: ||[A,B]||_F <= 1e-10 ||A||_F ||B||_F, over all pairs of U's.
CensusReport eigenvector_census(const MumSet& m, const Tolerance& tol = {});

}  // namespace mumch
