#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "mumch/error.hpp"

namespace mumch {

using Complex = std::complex<double>;

// Dense d x d complex matrix. States, POVM elements, basis operators and
// channel eigenvectors all share this representation.
using Operator = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

struct Tolerance {
    double eq_tol = 1e-10;   // entrywise / norm comparisons
    double psd_tol = 1e-10;  // eigenvalue floor for positivity

    // Throws BadInput unless both values are strictly positive.
    static Tolerance make(double eq_tol, double psd_tol);
};

Operator identity(int d);

// |i><j| in dimension d.
Operator ket_bra(int d, int i, int j);

Operator adjoint(const Operator& a);

double frobenius_norm(const Operator& a);

// Tr(A^dagger B).
Complex frobenius_inner(const Operator& a, const Operator& b);

Operator kron(const Operator& a, const Operator& b);

// ||A - A^dagger||_F <= tol * max(1, ||A||_F).
bool is_hermitian(const Operator& a, double tol);

// Returns (A + A^dagger)/2; callers use it to strip rounding noise after
// checking is_hermitian.
Operator hermitian_part(const Operator& a);

struct Eigensystem {
    RealVector values;  // ascending
    Operator vectors;   // orthonormal columns
};

// Throws NonHermitianInput when A is not Hermitian within tol.eq_tol.
Eigensystem hermitian_eigensystem(const Operator& a, const Tolerance& tol = {});

double min_eigenvalue(const Operator& a, const Tolerance& tol = {});

bool is_psd(const Operator& a, const Tolerance& tol = {});

// Returns c > 0 with (A/c)^dagger (A/c) = I within tol.eq_tol, if such c exists.
std::optional<double> proportional_to_unitary(const Operator& a, const Tolerance& tol = {});

// ||[A, B]||_F <= rel_tol * ||A||_F ||B||_F
bool commute(const Operator& a, const Operator& b, double rel_tol);

// Partial transpose on the second tensor factor of a (da*db) x (da*db) matrix
// whose row index is i*db + j.
Operator partial_transpose(const Operator& m, int da, int db);

}  // namespace mumch
