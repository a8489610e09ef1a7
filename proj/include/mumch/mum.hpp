#pragma once

#include <string>
#include <vector>

#include "mumch/bases.hpp"
#include "mumch/operator.hpp"

namespace mumch {

// Operator family indexed [axis][outcome]; axes are 0-based in code.
using OperatorTable = std::vector<std::vector<Operator>>;
using ProbabilityTable = std::vector<std::vector<double>>;

struct MumSet {
    int dim = 0;
    double t = 0.0;
    std::string label;
    OperatorTable f_ops;  // (d+1) x d, F_k^(alpha)
    OperatorTable povms;  // (d+1) x d, P_k^(alpha) = I/d + t F_k^(alpha)

    // Derived from t, never stored.
    double kappa() const;
};

// kappa = 1/d + (d-1) t^2 (1 + sqrt d)^2
double kappa_from_t(int d, double t);

// Positive root of kappa_from_t. Throws BadInput unless 1/d < kappa.
double t_from_kappa(int d, double kappa);

// F_0 = (1+sqrt d) sum_l F_l, F_k = sum_l F_l - sqrt d (1+sqrt d) F_k.
OperatorTable build_f_operators(const AxisBasis& basis);

struct TInterval {
    double t_min = 0.0;  // < 0
    double t_max = 0.0;  // > 0
};

// Closed interval of t on which every I/d + t F_k^(alpha) is PSD. Throws
// DegenerateBasis when some F has no eigenvalue of one sign.
TInterval feasible_t_interval(const AxisBasis& basis, const Tolerance& tol = {});

struct OptimalT {
    double t = 0.0;
    double kappa = 0.0;
};

// Endpoint of the feasible interval with the larger |t|, positive on ties.
OptimalT optimal_t(const AxisBasis& basis, const Tolerance& tol = {});

// Throws TZero for t == 0 and TOutOfRange when some P is not PSD.
MumSet build_mums(const AxisBasis& basis, double t, const Tolerance& tol = {});

struct MumReport {
    double trace_deviation = 0.0;         // max |Tr P - 1|
    double table_deviation = 0.0;         // max deviation from the MUM trace table
    double completeness_deviation = 0.0;  // max |sum_k P_k - I|
    double hermiticity_deviation = 0.0;   // max |P - P^dagger|
    double min_eigenvalue = 0.0;          // over all P
    bool pass = false;
};

MumReport verify_mum_conditions(const MumSet& m, const Tolerance& tol = {});

// Expected Tr(P_k^a P_l^b) for the given kappa.
double mum_table_value(int d, double kappa, int a, int k, int b, int l);

// prob[alpha][k] = Tr(rho P_k^(alpha))
ProbabilityTable measure(const MumSet& m, const Operator& rho);

// rho = I/d + ((d-1)/(d kappa - 1)) sum P (prob - 1/d). Throws BadProbabilities
// when the table has the wrong shape or some row does not sum to 1.
Operator reconstruct_state(const MumSet& m, const ProbabilityTable& probabilities, const Tolerance& tol = {});

// Builds P_k = (1/d)[I + sum_l w^{-kl} U_l] from u_ops[alpha][l-1], l = 1..d-1.
// Throws NotSelfConsistent naming the first failed precondition.
MumSet mums_from_u_operators(const OperatorTable& u_ops, double kappa, const Tolerance& tol = {});

// U_{alpha,k} = s g_alpha^k with s^2 = (d kappa - 1)/(d - 1), where g_alpha runs
// over the cyclic generators W_{10}, W_{01}, W_{11}, ..., W_{1,d-1} phased so
// that g^d = I. Prime d only (BadDimension otherwise).
OperatorTable weyl_mub_u_operators(int d, double kappa = 1.0);

}  // namespace mumch
