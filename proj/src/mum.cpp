#include "mumch/mum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mumch {
namespace {

Complex omega_power(int d, long long power) {
    const long long r = ((power % d) + d) % d;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

std::string axis_name(int a, int k) { return "(" + std::to_string(a + 1) + "," + std::to_string(k) + ")"; }

bool is_prime(int d) {
    if (d < 2) return false;
    for (int q = 2; q * q <= d; ++q) {
        if (d % q == 0) return false;
    }
    return true;
}

}  // namespace

double MumSet::kappa() const { return kappa_from_t(dim, t); }

double kappa_from_t(int d, double t) {
    const double s = 1.0 + std::sqrt(static_cast<double>(d));
    return 1.0 / d + (d - 1) * t * t * s * s;
}

double t_from_kappa(int d, double kappa) {
    if (d < 2) throw Error(ErrorCode::BadDimension, "t_from_kappa: dimension must be >= 2");
    if (!(kappa > 1.0 / d)) {
        throw Error(ErrorCode::BadInput, "kappa must exceed 1/d, got " + std::to_string(kappa));
    }
    const double s = 1.0 + std::sqrt(static_cast<double>(d));
    return std::sqrt((kappa - 1.0 / d) / (d - 1)) / s;
}

OperatorTable build_f_operators(const AxisBasis& basis) {
    validate_axis_basis(basis);
    const int d = basis.dim;
    const double sd = std::sqrt(static_cast<double>(d));
    OperatorTable out;
    out.reserve(basis.axes.size());
    for (const auto& axis : basis.axes) {
        Operator sum = Operator::Zero(d, d);
        for (const auto& f : axis) sum += f;
        std::vector<Operator> row;
        row.reserve(d);
        row.push_back((1.0 + sd) * sum);
        for (int k = 1; k < d; ++k) row.push_back(sum - sd * (1.0 + sd) * axis[k - 1]);
        out.push_back(std::move(row));
    }
    return out;
}

TInterval feasible_t_interval(const AxisBasis& basis, const Tolerance& tol) {
    const OperatorTable f = build_f_operators(basis);
    const int d = basis.dim;
    double t_max = std::numeric_limits<double>::infinity();
    double t_min = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t k = 0; k < f[a].size(); ++k) {
            const Eigensystem es = hermitian_eigensystem(f[a][k], tol);
            const double lo = es.values(0);
            const double hi = es.values(es.values.size() - 1);
            const double scale = std::max(1.0, f[a][k].norm());
            if (lo >= -1e-14 * scale || hi <= 1e-14 * scale) {
                throw Error(ErrorCode::DegenerateBasis, "F" + axis_name(static_cast<int>(a), static_cast<int>(k)) +
                                                            " has no eigenvalue of one sign; the t interval is unbounded");
            }
            t_max = std::min(t_max, -1.0 / (d * lo));
            t_min = std::max(t_min, -1.0 / (d * hi));
        }
    }
    return TInterval{t_min, t_max};
}

OptimalT optimal_t(const AxisBasis& basis, const Tolerance& tol) {
    const TInterval iv = feasible_t_interval(basis, tol);
    const double t = (-iv.t_min > iv.t_max) ? iv.t_min : iv.t_max;
    return OptimalT{t, kappa_from_t(basis.dim, t)};
}

MumSet build_mums(const AxisBasis& basis, double t, const Tolerance& tol) {
    if (t == 0.0) throw Error(ErrorCode::TZero, "t must be nonzero");
    MumSet m;
    m.dim = basis.dim;
    m.t = t;
    m.label = basis.label;
    m.f_ops = build_f_operators(basis);
    const int d = basis.dim;
    const Operator base = identity(d) / static_cast<double>(d);
    for (std::size_t a = 0; a < m.f_ops.size(); ++a) {
        std::vector<Operator> row;
        for (std::size_t k = 0; k < m.f_ops[a].size(); ++k) {
            Operator p = hermitian_part(base + t * m.f_ops[a][k]);
            const double lo = min_eigenvalue(p, tol);
            if (lo < -tol.psd_tol) {
                throw Error(ErrorCode::TOutOfRange, "P" + axis_name(static_cast<int>(a), static_cast<int>(k)) +
                                                        " has eigenvalue " + std::to_string(lo) + " at t = " +
                                                        std::to_string(t));
            }
            row.push_back(std::move(p));
        }
        m.povms.push_back(std::move(row));
    }
    return m;
}

double mum_table_value(int d, double kappa, int a, int k, int b, int l) {
    const double c = (d * kappa - 1.0) / (d - 1);
    double v = 1.0 / d;
    if (a == b) v += c * ((k == l ? 1.0 : 0.0) - 1.0 / d);
    return v;
}

MumReport verify_mum_conditions(const MumSet& m, const Tolerance& tol) {
    MumReport r;
    const int d = m.dim;
    const double kappa = m.kappa();
    r.min_eigenvalue = std::numeric_limits<double>::infinity();
    const int axes = static_cast<int>(m.povms.size());
    for (int a = 0; a < axes; ++a) {
        Operator sum = Operator::Zero(d, d);
        for (int k = 0; k < d; ++k) {
            const Operator& p = m.povms[a][k];
            sum += p;
            r.trace_deviation = std::max(r.trace_deviation, std::abs(p.trace() - 1.0));
            r.hermiticity_deviation = std::max(r.hermiticity_deviation, (p - p.adjoint()).cwiseAbs().maxCoeff());
            Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(p), Eigen::EigenvaluesOnly);
            r.min_eigenvalue = std::min(r.min_eigenvalue, es.eigenvalues()(0));
            for (int b = 0; b < axes; ++b) {
                for (int l = 0; l < d; ++l) {
                    const Complex v = (p * m.povms[b][l]).trace();
                    r.table_deviation =
                        std::max(r.table_deviation, std::abs(v - mum_table_value(d, kappa, a, k, b, l)));
                }
            }
        }
        r.completeness_deviation =
            std::max(r.completeness_deviation, (sum - identity(d)).cwiseAbs().maxCoeff());
    }
    r.pass = static_cast<int>(m.povms.size()) == d + 1 && r.trace_deviation <= tol.eq_tol &&
             r.table_deviation <= tol.eq_tol && r.completeness_deviation <= tol.eq_tol &&
             r.hermiticity_deviation <= tol.eq_tol && r.min_eigenvalue >= -tol.psd_tol;
    return r;
}

ProbabilityTable measure(const MumSet& m, const Operator& rho) {
    if (rho.rows() != m.dim || rho.cols() != m.dim) {
        throw Error(ErrorCode::DimMismatch, "measure: state dimension does not match the MumSet");
    }
    ProbabilityTable out;
    for (const auto& axis : m.povms) {
        std::vector<double> row;
        for (const auto& p : axis) row.push_back((rho * p).trace().real());
        out.push_back(std::move(row));
    }
    return out;
}

Operator reconstruct_state(const MumSet& m, const ProbabilityTable& probabilities, const Tolerance& tol) {
    const int d = m.dim;
    if (probabilities.size() != m.povms.size()) {
        throw Error(ErrorCode::BadProbabilities, "expected " + std::to_string(m.povms.size()) + " rows of probabilities");
    }
    Operator rho = identity(d) / static_cast<double>(d);
    const double scale = (d - 1) / (d * m.kappa() - 1.0);
    for (std::size_t a = 0; a < probabilities.size(); ++a) {
        const auto& row = probabilities[a];
        if (static_cast<int>(row.size()) != d) {
            throw Error(ErrorCode::BadProbabilities, "row " + std::to_string(a + 1) + " must have d entries");
        }
        double total = 0.0;
        for (double p : row) total += p;
        if (std::abs(total - 1.0) > tol.eq_tol) {
            throw Error(ErrorCode::BadProbabilities, "row " + std::to_string(a + 1) + " sums to " + std::to_string(total));
        }
        for (int k = 0; k < d; ++k) rho += scale * (row[k] - 1.0 / d) * m.povms[a][k];
    }
    return rho;
}

MumSet mums_from_u_operators(const OperatorTable& u_ops, double kappa, const Tolerance& tol) {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::NotSelfConsistent, what); };
    if (u_ops.empty() || u_ops.front().empty()) fail("shape: empty U family");
    const int d = static_cast<int>(u_ops.front().front().rows());
    if (d < 2) fail("shape: dimension must be >= 2");
    if (static_cast<int>(u_ops.size()) != d + 1) fail("shape: expected d+1 axes");
    for (const auto& axis : u_ops) {
        if (static_cast<int>(axis.size()) != d - 1) fail("shape: expected d-1 operators per axis");
        for (const auto& u : axis) {
            if (u.rows() != d || u.cols() != d) fail("shape: operator dimension mismatch");
        }
    }
    if (!(kappa > 1.0 / d) || kappa > 1.0 + tol.eq_tol) fail("kappa: must lie in (1/d, 1]");

    const double c = (d * kappa - 1.0) / (d - 1);
    const double norm = d * c;
    for (int a = 0; a <= d; ++a) {
        for (int k = 1; k < d; ++k) {
            const Operator& u = u_ops[a][k - 1];
            const double dev = (u.adjoint() - u_ops[a][d - k - 1]).cwiseAbs().maxCoeff();
            if (dev > tol.eq_tol * std::max(1.0, u.norm())) {
                fail("adjoint: U" + axis_name(a, k) + "^dagger != U" + axis_name(a, d - k));
            }
            if (std::abs(u.trace()) > tol.eq_tol) fail("trace: U" + axis_name(a, k) + " is not traceless");
            for (int b = 0; b <= d; ++b) {
                for (int l = 1; l < d; ++l) {
                    const Complex g = (u * u_ops[b][l - 1].adjoint()).trace();
                    const double expected = (a == b && k == l) ? norm : 0.0;
                    if (std::abs(g - expected) > tol.eq_tol) {
                        fail("norm: Tr(U" + axis_name(a, k) + " U" + axis_name(b, l) + "^dagger) = " +
                             std::to_string(g.real()) + ", expected " + std::to_string(expected));
                    }
                }
            }
        }
    }

    MumSet m;
    m.dim = d;
    m.t = t_from_kappa(d, std::min(kappa, 1.0));
    m.label = "u-operators";
    const Operator base = identity(d) / static_cast<double>(d);
    for (int a = 0; a <= d; ++a) {
        std::vector<Operator> prow, frow;
        for (int k = 0; k < d; ++k) {
            Operator p = identity(d);
            for (int l = 1; l < d; ++l) p += omega_power(d, -static_cast<long long>(k) * l) * u_ops[a][l - 1];
            p /= static_cast<double>(d);
            if (!is_hermitian(p, tol.eq_tol)) fail("hermiticity: P" + axis_name(a, k) + " is not Hermitian");
            p = hermitian_part(p);
            Eigen::SelfAdjointEigenSolver<Operator> es(p, Eigen::EigenvaluesOnly);
            if (es.eigenvalues()(0) < -tol.psd_tol) {
                fail("positivity: I + sum_l w^{-kl} U_l is not PSD for " + axis_name(a, k));
            }
            frow.push_back((p - base) / m.t);
            prow.push_back(std::move(p));
        }
        m.povms.push_back(std::move(prow));
        m.f_ops.push_back(std::move(frow));
    }
    return m;
}

OperatorTable weyl_mub_u_operators(int d, double kappa) {
    if (!is_prime(d)) {
        throw Error(ErrorCode::BadDimension, "Weyl cyclic subgroups give d+1 MUBs only for prime d, got " + std::to_string(d));
    }
    if (!(kappa > 1.0 / d) || kappa > 1.0) throw Error(ErrorCode::BadInput, "kappa must lie in (1/d, 1]");
    std::vector<Operator> gens;
    gens.push_back(weyl_operator(d, 1, 0));
    gens.push_back(weyl_operator(d, 0, 1));
    for (int j = 1; j < d; ++j) gens.push_back(weyl_operator(d, 1, j));

    const double s = std::sqrt((d * kappa - 1.0) / (d - 1));
    OperatorTable out;
    for (Operator g : gens) {
        Operator power = identity(d);
        for (int n = 0; n < d; ++n) power = power * g;
        const Complex c = power(0, 0);
        g *= std::polar(1.0, -std::arg(c) / d);
        std::vector<Operator> axis;
        Operator gk = identity(d);
        for (int k = 1; k < d; ++k) {
            gk = gk * g;
            axis.push_back(s * gk);
        }
        out.push_back(std::move(axis));
    }
    return out;
}

}  // namespace mumch
