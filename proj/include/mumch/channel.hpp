#pragma once

#include <cstdint>
#include <vector>

#include "mumch/mum.hpp"
#include "mumch/operator.hpp"

namespace mumch {

// Phi_0[X] = I Tr(X)/d
Operator depolarizing_apply(const Operator& x);

// Phi_alpha[X] = sum_k P_k^(alpha) Tr(X P_k^(alpha)), axis is 0-based.
Operator qc_apply(const MumSet& m, int axis, const Operator& x);

// U_{alpha,k} = sum_l w^{kl} P_l^(alpha) for k = 1..d-1, stored at [alpha][k-1].
OperatorTable u_operators(const MumSet& m);

// Same operators expanded in the Hermitian basis:
// U_{alpha,k} = sqrt(d) t sum_l F_{alpha,l} [1 - (sqrt d + 1) w^{kl}].
OperatorTable u_operators_from_basis(const AxisBasis& basis, double t);

// (d kappa - 1)/(d - 1); the common eigenvalue of Phi_alpha on its own U's.
double contraction(const MumSet& m);

class GeneralizedPauliChannel {
public:
    // probs = (p_0, ..., p_{d+1}); entries >= -eq_tol summing to 1, else
    // BadProbabilities.
    static GeneralizedPauliChannel from_probs(MumSet m, const RealVector& probs, const Tolerance& tol = {});

    // eigenvalues = (lambda_1, ..., lambda_{d+1}). Any real vector is accepted;
    // the resulting probabilities may be negative.
    static GeneralizedPauliChannel from_eigenvalues(MumSet m, const RealVector& eigenvalues);

    int dim() const { return mums_.dim; }
    const MumSet& mums() const { return mums_; }
    const RealVector& probs() const { return probs_; }
    const RealVector& eigenvalues() const { return eigenvalues_; }

private:
    GeneralizedPauliChannel(MumSet m, RealVector probs, RealVector eigenvalues);

    MumSet mums_;
    RealVector probs_;
    RealVector eigenvalues_;
};

RealVector eigenvalues_from_probs(const RealVector& probs, const MumSet& m);
RealVector probs_from_eigenvalues(const RealVector& eigenvalues, const MumSet& m);

// Lambda = ((d p_0 - 1)/(d-1)) id + (d/(d-1)) sum_alpha p_alpha Phi_alpha
Operator channel_apply(const GeneralizedPauliChannel& ch, const Operator& x);

// Lambda = (1 - sum mu) Phi_0 + sum mu_alpha Phi_alpha, mu = lambda / contraction
Operator channel_apply_alt(const GeneralizedPauliChannel& ch, const Operator& x);

// mu_alpha = ((d-1)/(d kappa - 1)) lambda_alpha
RealVector alt_weights(const GeneralizedPauliChannel& ch);

// Column-major vectorization: column i + j*d holds vec(map(|i><j|)).
template <typename Map>
Operator superoperator_matrix(int d, Map map) {
    Operator s(d * d, d * d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            const Operator out = map(ket_bra(d, i, j));
            s.col(i + j * d) = out.reshaped();
        }
    }
    return s;
}

Operator channel_superoperator(const GeneralizedPauliChannel& ch);

// (1/d) sum_ij Lambda(|i><j|) (x) |i><j|, trace one.
Operator choi_matrix(const GeneralizedPauliChannel& ch);

struct CpVerdict {
    double choi_min_eigenvalue = 0.0;
    bool pass = false;
};

CpVerdict is_completely_positive(const GeneralizedPauliChannel& ch, const Tolerance& tol = {});

struct SufficientCpReport {
    bool p_form = false;       // p_0 >= 1/d and p_alpha >= 0
    bool lambda_form = false;  // c <= sum lambda <= [d kappa - 1 + d(d - kappa) min lambda]/(d-1)
    double sum_lambda = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool agree = false;
    bool pass = false;  // p_form && lambda_form
};

SufficientCpReport sufficient_cp_check(const GeneralizedPauliChannel& ch, const Tolerance& tol = {});

struct FaReport {
    double sum_lambda = 0.0;
    double lower = 0.0;  // -1/(d-1)
    double upper = 0.0;  // 1 + d min lambda
    bool pass = false;
};

// -1/(d-1) <= sum lambda <= 1 + d min lambda; meaningful for kappa = 1.
FaReport fujiwara_algoet_check(const RealVector& eigenvalues, int d, const Tolerance& tol = {});

struct CompositionReport {
    double kappa = 0.0;
    bool kappa_is_one = false;
    double cross = 0.0;        // Phi_a Phi_b - Phi_0, a != b
    double diag_other = 0.0;   // Phi_a Phi_a [P_l^(b)] - Phi_0[P_l^(b)], a != b
    double diag_same = 0.0;    // Phi_a Phi_a [P_l^(a)] against the c / (1-c) split
    double sum_rule = 0.0;     // sum Phi_a - d(d-kappa)/(d-1) Phi_0 - c id
    double idempotence = 0.0;  // Phi_a Phi_a - Phi_a; expected zero only at kappa = 1
    bool pass = false;
};

CompositionReport composition_table(const MumSet& m, const Tolerance& tol = {});

struct CommutationReport {
    double lambda_phi = 0.0;  // max |Lambda Phi_a - Phi_a Lambda|
    double covariance = 0.0;  // max |Lambda[U X U^dagger] - U Lambda[X] U^dagger| over random X
    std::vector<std::vector<double>> covariance_per_u;  // [alpha][k-1]
    bool lambda_phi_pass = false;
};

CommutationReport commutation_check(const GeneralizedPauliChannel& ch, std::uint64_t seed = 0, int samples = 8,
                                    const Tolerance& tol = {});

}  // namespace mumch
