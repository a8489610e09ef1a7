#include "mumch/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mumch/rng.hpp"

namespace mumch {
namespace {

Complex omega_power(int d, long long power) {
    const long long r = ((power % d) + d) % d;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

void require_square(const Operator& x, int d) {
    if (x.rows() != d || x.cols() != d) {
        throw Error(ErrorCode::DimMismatch, "operator is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                                                ", channel acts on dimension " + std::to_string(d));
    }
}

double max_abs(const Operator& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace

Operator depolarizing_apply(const Operator& x) {
    const auto d = x.rows();
    return Operator::Identity(d, d) * (x.trace() / static_cast<double>(d));
}

Operator qc_apply(const MumSet& m, int axis, const Operator& x) {
    if (axis < 0 || axis >= static_cast<int>(m.povms.size())) {
        throw Error(ErrorCode::BadAxis, "axis " + std::to_string(axis + 1) + " outside 1.." + std::to_string(m.povms.size()));
    }
    require_square(x, m.dim);
    Operator out = Operator::Zero(m.dim, m.dim);
    for (const auto& p : m.povms[axis]) out += p * (x * p).trace();
    return out;
}

OperatorTable u_operators(const MumSet& m) {
    const int d = m.dim;
    OperatorTable out;
    for (const auto& axis : m.povms) {
        std::vector<Operator> row;
        for (int k = 1; k < d; ++k) {
            Operator u = Operator::Zero(d, d);
            for (int l = 0; l < d; ++l) u += omega_power(d, static_cast<long long>(k) * l) * axis[l];
            row.push_back(std::move(u));
        }
        out.push_back(std::move(row));
    }
    return out;
}

OperatorTable u_operators_from_basis(const AxisBasis& basis, double t) {
    validate_axis_basis(basis);
    const int d = basis.dim;
    const double sd = std::sqrt(static_cast<double>(d));
    OperatorTable out;
    for (const auto& axis : basis.axes) {
        std::vector<Operator> row;
        for (int k = 1; k < d; ++k) {
            Operator u = Operator::Zero(d, d);
            for (int l = 1; l < d; ++l) {
                u += axis[l - 1] * (1.0 - (sd + 1.0) * omega_power(d, static_cast<long long>(k) * l));
            }
            row.push_back(sd * t * u);
        }
        out.push_back(std::move(row));
    }
    return out;
}

double contraction(const MumSet& m) { return (m.dim * m.kappa() - 1.0) / (m.dim - 1); }

GeneralizedPauliChannel::GeneralizedPauliChannel(MumSet m, RealVector probs, RealVector eigenvalues)
    : mums_(std::move(m)), probs_(std::move(probs)), eigenvalues_(std::move(eigenvalues)) {}

GeneralizedPauliChannel GeneralizedPauliChannel::from_probs(MumSet m, const RealVector& probs, const Tolerance& tol) {
    const int d = m.dim;
    if (probs.size() != d + 2) {
        throw Error(ErrorCode::BadProbabilities, "expected d+2 = " + std::to_string(d + 2) + " probabilities, got " +
                                                     std::to_string(probs.size()));
    }
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        if (!std::isfinite(probs(i)) || probs(i) < -tol.eq_tol) {
            throw Error(ErrorCode::BadProbabilities, "p_" + std::to_string(i) + " = " + std::to_string(probs(i)));
        }
    }
    if (std::abs(probs.sum() - 1.0) > tol.eq_tol) {
        throw Error(ErrorCode::BadProbabilities, "probabilities sum to " + std::to_string(probs.sum()));
    }
    RealVector lambda = eigenvalues_from_probs(probs, m);
    return GeneralizedPauliChannel(std::move(m), probs, std::move(lambda));
}

GeneralizedPauliChannel GeneralizedPauliChannel::from_eigenvalues(MumSet m, const RealVector& eigenvalues) {
    if (eigenvalues.size() != m.dim + 1) {
        throw Error(ErrorCode::BadInput, "expected d+1 = " + std::to_string(m.dim + 1) + " eigenvalues, got " +
                                             std::to_string(eigenvalues.size()));
    }
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        if (!std::isfinite(eigenvalues(i))) throw Error(ErrorCode::BadInput, "eigenvalues must be finite");
    }
    RealVector p = probs_from_eigenvalues(eigenvalues, m);
    return GeneralizedPauliChannel(std::move(m), std::move(p), eigenvalues);
}

RealVector eigenvalues_from_probs(const RealVector& probs, const MumSet& m) {
    const int d = m.dim;
    if (probs.size() != d + 2) throw Error(ErrorCode::BadProbabilities, "expected d+2 probabilities");
    const double c = contraction(m);
    RealVector lambda(d + 1);
    for (int a = 0; a <= d; ++a) lambda(a) = (d * (probs(0) + c * probs(a + 1)) - 1.0) / (d - 1);
    return lambda;
}

RealVector probs_from_eigenvalues(const RealVector& eigenvalues, const MumSet& m) {
    const int d = m.dim;
    if (eigenvalues.size() != d + 1) throw Error(ErrorCode::BadInput, "expected d+1 eigenvalues");
    const double c = contraction(m);
    const double p0 = ((d - 1) * eigenvalues.sum() + d + 1 - d * c) / (d * (d + 1 - c));
    RealVector p(d + 2);
    p(0) = p0;
    for (int a = 0; a <= d; ++a) p(a + 1) = (((d - 1) * eigenvalues(a) + 1.0) / d - p0) / c;
    return p;
}

Operator channel_apply(const GeneralizedPauliChannel& ch, const Operator& x) {
    const int d = ch.dim();
    require_square(x, d);
    const RealVector& p = ch.probs();
    Operator out = ((d * p(0) - 1.0) / (d - 1)) * x;
    for (int a = 0; a <= d; ++a) {
        if (p(a + 1) != 0.0) out += (d * p(a + 1) / (d - 1)) * qc_apply(ch.mums(), a, x);
    }
    return out;
}

RealVector alt_weights(const GeneralizedPauliChannel& ch) { return ch.eigenvalues() / contraction(ch.mums()); }

Operator channel_apply_alt(const GeneralizedPauliChannel& ch, const Operator& x) {
    const int d = ch.dim();
    require_square(x, d);
    const RealVector mu = alt_weights(ch);
    Operator out = (1.0 - mu.sum()) * depolarizing_apply(x);
    for (int a = 0; a <= d; ++a) {
        if (mu(a) != 0.0) out += mu(a) * qc_apply(ch.mums(), a, x);
    }
    return out;
}

Operator channel_superoperator(const GeneralizedPauliChannel& ch) {
    return superoperator_matrix(ch.dim(), [&ch](const Operator& x) { return channel_apply(ch, x); });
}

Operator choi_matrix(const GeneralizedPauliChannel& ch) {
    const int d = ch.dim();
    Operator choi = Operator::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const Operator e = ket_bra(d, i, j);
            choi += kron(channel_apply(ch, e), e);
        }
    }
    return choi / static_cast<double>(d);
}

CpVerdict is_completely_positive(const GeneralizedPauliChannel& ch, const Tolerance& tol) {
    const Operator choi = hermitian_part(choi_matrix(ch));
    Eigen::SelfAdjointEigenSolver<Operator> es(choi, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0);
    return CpVerdict{lo, lo >= -tol.psd_tol};
}

SufficientCpReport sufficient_cp_check(const GeneralizedPauliChannel& ch, const Tolerance& tol) {
    const int d = ch.dim();
    const double kappa = ch.mums().kappa();
    const RealVector& p = ch.probs();
    const RealVector& lambda = ch.eigenvalues();
    SufficientCpReport r;
    r.p_form = p(0) >= 1.0 / d - tol.eq_tol;
    for (int a = 1; a <= d + 1; ++a) r.p_form = r.p_form && p(a) >= -tol.eq_tol;
    r.sum_lambda = lambda.sum();
    r.lower = (d * kappa - 1.0) / (d - 1);
    r.upper = (d * kappa - 1.0 + d * (d - kappa) * lambda.minCoeff()) / (d - 1);
    r.lambda_form = r.sum_lambda >= r.lower - tol.eq_tol && r.sum_lambda <= r.upper + tol.eq_tol;
    r.agree = r.p_form == r.lambda_form;
    r.pass = r.p_form && r.lambda_form;
    return r;
}

FaReport fujiwara_algoet_check(const RealVector& eigenvalues, int d, const Tolerance& tol) {
    if (d < 2) throw Error(ErrorCode::BadDimension, "fujiwara_algoet_check: dimension must be >= 2");
    if (eigenvalues.size() != d + 1) throw Error(ErrorCode::BadInput, "expected d+1 eigenvalues");
    FaReport r;
    r.sum_lambda = eigenvalues.sum();
    r.lower = -1.0 / (d - 1);
    r.upper = 1.0 + d * eigenvalues.minCoeff();
    r.pass = r.sum_lambda >= r.lower - tol.eq_tol && r.sum_lambda <= r.upper + tol.eq_tol;
    return r;
}

CompositionReport composition_table(const MumSet& m, const Tolerance& tol) {
    const int d = m.dim;
    const int axes = static_cast<int>(m.povms.size());
    CompositionReport r;
    r.kappa = m.kappa();
    r.kappa_is_one = std::abs(r.kappa - 1.0) <= 1e-12;
    const double c = contraction(m);

    std::vector<Operator> phi;
    for (int a = 0; a < axes; ++a) {
        phi.push_back(superoperator_matrix(d, [&m, a](const Operator& x) { return qc_apply(m, a, x); }));
    }
    const Operator phi0 = superoperator_matrix(d, [](const Operator& x) { return depolarizing_apply(x); });
    const Operator id = Operator::Identity(d * d, d * d);

    Operator sum = Operator::Zero(d * d, d * d);
    for (int a = 0; a < axes; ++a) {
        sum += phi[a];
        const Operator sq = phi[a] * phi[a];
        r.idempotence = std::max(r.idempotence, max_abs(sq - phi[a]));
        for (int b = 0; b < axes; ++b) {
            if (b != a) r.cross = std::max(r.cross, max_abs(phi[a] * phi[b] - phi0));
            for (int l = 0; l < d; ++l) {
                const Operator& p = m.povms[b][l];
                const Operator twice = qc_apply(m, a, qc_apply(m, a, p));
                if (b != a) {
                    r.diag_other = std::max(r.diag_other, max_abs(twice - depolarizing_apply(p)));
                } else {
                    const Operator expected = c * qc_apply(m, a, p) + (d * (1.0 - r.kappa) / (d - 1)) * depolarizing_apply(p);
                    r.diag_same = std::max(r.diag_same, max_abs(twice - expected));
                }
            }
        }
    }
    r.sum_rule = max_abs(sum - (d * (d - r.kappa) / (d - 1)) * phi0 - c * id);
    r.pass = r.cross <= tol.eq_tol && r.diag_other <= tol.eq_tol && r.diag_same <= tol.eq_tol &&
             r.sum_rule <= tol.eq_tol && (!r.kappa_is_one || r.idempotence <= tol.eq_tol);
    return r;
}

CommutationReport commutation_check(const GeneralizedPauliChannel& ch, std::uint64_t seed, int samples,
                                    const Tolerance& tol) {
    const int d = ch.dim();
    const MumSet& m = ch.mums();
    CommutationReport r;
    const Operator lam = channel_superoperator(ch);
    for (int a = 0; a <= d; ++a) {
        const Operator phi = superoperator_matrix(d, [&m, a](const Operator& x) { return qc_apply(m, a, x); });
        r.lambda_phi = std::max(r.lambda_phi, max_abs(lam * phi - phi * lam));
    }
    r.lambda_phi_pass = r.lambda_phi <= tol.eq_tol;

    const OperatorTable u = u_operators(m);
    for (int a = 0; a <= d; ++a) {
        std::vector<double> row;
        for (int k = 1; k < d; ++k) {
            const Operator& uk = u[a][k - 1];
            double worst = 0.0;
            for (int s = 0; s < samples; ++s) {
                CounterRng rng(seed, static_cast<std::uint64_t>((a * d + k) * samples + s));
                const Operator x = random_operator(d, rng);
                const Operator lhs = channel_apply(ch, uk * x * uk.adjoint());
                const Operator rhs = uk * channel_apply(ch, x) * uk.adjoint();
                worst = std::max(worst, max_abs(lhs - rhs));
            }
            row.push_back(worst);
            r.covariance = std::max(r.covariance, worst);
        }
        r.covariance_per_u.push_back(std::move(row));
    }
    return r;
}

}  // namespace mumch
