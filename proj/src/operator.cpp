#include "mumch/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mumch {

Tolerance Tolerance::make(double eq_tol, double psd_tol) {
    if (!(eq_tol > 0.0) || !(psd_tol > 0.0)) {
        throw Error(ErrorCode::BadInput, "tolerances must be strictly positive");
    }
    return Tolerance{eq_tol, psd_tol};
}

Operator identity(int d) { return Operator::Identity(d, d); }

Operator ket_bra(int d, int i, int j) {
    Operator m = Operator::Zero(d, d);
    m(i, j) = 1.0;
    return m;
}

Operator adjoint(const Operator& a) { return a.adjoint(); }

double frobenius_norm(const Operator& a) { return a.norm(); }

Complex frobenius_inner(const Operator& a, const Operator& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimMismatch,
                    "frobenius_inner: " + std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
    }
    return (a.adjoint() * b).trace();
}

Operator kron(const Operator& a, const Operator& b) {
    const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    Operator out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i) {
        for (Eigen::Index j = 0; j < ca; ++j) {
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
        }
    }
    return out;
}

bool is_hermitian(const Operator& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).norm() <= tol * std::max(1.0, a.norm());
}

Operator hermitian_part(const Operator& a) { return 0.5 * (a + a.adjoint()); }

Eigensystem hermitian_eigensystem(const Operator& a, const Tolerance& tol) {
    if (!is_hermitian(a, tol.eq_tol)) {
        throw Error(ErrorCode::NonHermitianInput, "hermitian_eigensystem: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Operator> solver(hermitian_part(a));
    return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Operator& a, const Tolerance& tol) {
    if (!is_hermitian(a, tol.eq_tol)) {
        throw Error(ErrorCode::NonHermitianInput, "min_eigenvalue: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Operator> solver(hermitian_part(a), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

bool is_psd(const Operator& a, const Tolerance& tol) { return min_eigenvalue(a, tol) >= -tol.psd_tol; }

std::optional<double> proportional_to_unitary(const Operator& a, const Tolerance& tol) {
    const double norm = a.norm();
    if (norm == 0.0) {
        throw Error(ErrorCode::ZeroOperator, "proportional_to_unitary: zero operator");
    }
    const auto d = static_cast<double>(a.rows());
    const double scale = norm / std::sqrt(d);
    const Operator u = a / scale;
    const Operator gram = u.adjoint() * u;
    if ((gram - Operator::Identity(a.rows(), a.rows())).norm() <= tol.eq_tol) {
        return scale;
    }
    return std::nullopt;
}

bool commute(const Operator& a, const Operator& b, double rel_tol) {
    return (a * b - b * a).norm() <= rel_tol * a.norm() * b.norm();
}

Operator partial_transpose(const Operator& m, int da, int db) {
    Operator out(m.rows(), m.cols());
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < db; ++j) {
            for (int k = 0; k < da; ++k) {
                for (int l = 0; l < db; ++l) {
                    out(i * db + j, k * db + l) = m(i * db + l, k * db + j);
                }
            }
        }
    }
    return out;
}

}  // namespace mumch
