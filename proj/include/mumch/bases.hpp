#pragma once

#include <string>
#include <vector>

#include "mumch/operator.hpp"

namespace mumch {

// d+1 axes of d-1 traceless Hermitian operators F_{alpha,l}; together with
// I/sqrt(d) they form an orthonormal operator basis. Axes are stored 0-based:
// axes[a] holds the operators of axis alpha = a+1.
struct AxisBasis {
    int dim = 0;
    std::string label;  // pauli | gell-mann | heisenberg-weyl | custom
    std::vector<std::vector<Operator>> axes;
};

// Rescaled Pauli matrices, one per axis: sigma_x, sigma_y, sigma_z over sqrt(2).
AxisBasis pauli_axis_basis();

// Generalized Gell-Mann operator sigma_{kl} for 0 <= k, l < d:
//   k < l : (|k><l| + |l><k|)/sqrt2
//   k > l : -i(|l><k| - |k><l|)/sqrt2   (standard sigma_y-like sign)
//   k = l : diag(1,..,1,-k,0,..)/sqrt(k(k+1)), k >= 1
Operator gell_mann_operator(int d, int k, int l);

// Axis alpha = 1..d holds {sigma_{k,alpha-1} : k != alpha-1} in ascending k;
// axis d+1 holds the diagonal family sigma_{kk}, k = 1..d-1.
AxisBasis gell_mann_basis(int d);

// W_{kl} = sum_m w^{km} |m+l><m|, w = exp(2 pi i/d), indices mod d.
Operator weyl_operator(int d, int k, int l);

// All d^2 Weyl operators, W_{kl} at position k*d + l.
std::vector<Operator> weyl_operators(int d);

enum class HwPhase {
    // D_{kl} = tau^{kl} W_{kl}, tau = -exp(i pi/d), so that D_{kl}^dagger is
    // +-D_{-k,-l}; coefficient (1+i)/(2 sqrt d) for l = 0, (1-i)/(2 sqrt d)
    // otherwise. Orthonormal in every dimension checked (2..7).
    Symmetric,
    // The two-branch formula applied to the bare W_{kl} (k <= l uses
    // (1-i)/(2 sqrt d)). Not orthonormal for d >= 3.
    Literal,
};

Operator hw_observable(int d, int k, int l, HwPhase phase = HwPhase::Symmetric);

// Heisenberg-Weyl observables grouped like gell_mann_basis. Verifies the
// basis invariants and throws NonOrthonormal rather than return a broken set.
AxisBasis hw_observable_basis(int d, HwPhase phase = HwPhase::Symmetric);

// User-supplied operators grouped by `partition` (d+1 groups of d-1 indices
// into `operators`). Throws NonHermitian, NonTraceless, NonOrthonormal or
// BadPartition.
AxisBasis custom_axis_basis(const std::vector<Operator>& operators,
                            const std::vector<std::vector<int>>& partition,
                            const Tolerance& tol = {});

// Checks counts, Hermiticity, tracelessness and orthonormality of `basis`,
// throwing the matching error on the first violation.
void validate_axis_basis(const AxisBasis& basis, const Tolerance& tol = {});

// Maximum |Gram - I| over all d^2-1 operators of the basis.
double gram_deviation(const AxisBasis& basis);

}  // namespace mumch
