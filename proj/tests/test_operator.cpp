#include <gtest/gtest.h>

#include "mumch/bases.hpp"
#include "mumch/mum.hpp"
#include "mumch/operator.hpp"
#include "mumch/rng.hpp"
#include "oracles.hpp"

using namespace mumch;

TEST(Operator, AdjointExamples) {
    EXPECT_EQ(adjoint(identity(3)), identity(3));
    const Complex i(0.0, 1.0);
    Operator a = Operator::Zero(2, 2);
    a(0, 0) = i;
    a(1, 1) = -i;
    Operator expected = Operator::Zero(2, 2);
    expected(0, 0) = -i;
    expected(1, 1) = i;
    EXPECT_EQ(adjoint(a), expected);
}

TEST(Operator, AdjointOfW10IsW20) {
    // W_10 = diag(1, w, w^2), its adjoint diag(1, w^2, w) = W_20
    Operator w10 = Operator::Zero(3, 3);
    Operator w20 = Operator::Zero(3, 3);
    for (int m = 0; m < 3; ++m) {
        w10(m, m) = oracle::omega(3, m);
        w20(m, m) = oracle::omega(3, 2 * m);
    }
    EXPECT_LE(oracle::max_abs(adjoint(w10) - w20), 1e-15);
    EXPECT_LE(oracle::max_abs(adjoint(weyl_operator(3, 1, 0)) - weyl_operator(3, 2, 0)), 1e-15);
}

TEST(Operator, EigensystemSmallCases) {
    const Eigensystem z = hermitian_eigensystem(oracle::sigma(3));
    EXPECT_NEAR(z.values(0), -1.0, 1e-15);
    EXPECT_NEAR(z.values(1), 1.0, 1e-15);
    const Eigensystem id = hermitian_eigensystem(identity(4));
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(id.values(k), 1.0, 1e-15);
}

TEST(Operator, EigensystemMatchesCharacteristicPolynomial) {
    const OperatorTable f = build_f_operators(gell_mann_basis(3));
    for (const auto& axis : f) {
        for (const auto& op : axis) {
            const Eigensystem es = hermitian_eigensystem(op);
            const auto ref = oracle::eig3_charpoly(op);
            for (int k = 0; k < 3; ++k) EXPECT_NEAR(es.values(k), ref[k], 1e-10);
        }
    }
    // F_0^(4) specifically
    const Eigensystem es = hermitian_eigensystem(f[3][0]);
    const auto ref = oracle::eig3_charpoly(f[3][0]);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(es.values(k), ref[k], 1e-12);
}

TEST(Operator, EigensystemReconstructsRandomHermitian) {
    for (int d : {2, 3, 5, 8}) {
        for (int s = 0; s < 10; ++s) {
            CounterRng rng(1, static_cast<std::uint64_t>(d * 100 + s));
            const Operator a = random_hermitian(d, rng);
            const Eigensystem es = hermitian_eigensystem(a);
            const Operator back = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
            EXPECT_LE((back - a).norm(), 1e-10 * a.norm());
            EXPECT_LE((es.vectors.adjoint() * es.vectors - identity(d)).norm(), 1e-10);
            for (int k = 1; k < d; ++k) EXPECT_LE(es.values(k - 1), es.values(k));
        }
    }
}

TEST(Operator, EigensystemRejectsNonHermitian) {
    EXPECT_THROW(hermitian_eigensystem(ket_bra(2, 0, 1)), Error);
    try {
        is_psd(ket_bra(3, 0, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonHermitianInput);
    }
}

TEST(Operator, FrobeniusInner) {
    EXPECT_NEAR(std::abs(frobenius_inner(identity(4), identity(4)) - 4.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(frobenius_inner(oracle::sigma(1), oracle::sigma(2))), 0.0, 1e-15);
    try {
        frobenius_inner(identity(2), identity(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
    }
    for (int s = 0; s < 10; ++s) {
        CounterRng rng(2, s);
        const Operator a = random_operator(3, rng);
        const Complex v = frobenius_inner(a, a);
        EXPECT_NEAR(v.imag(), 0.0, 1e-12);
        EXPECT_GE(v.real(), 0.0);
    }
}

TEST(Operator, FrobeniusNormOfUOperators) {
    const AxisBasis gm = gell_mann_basis(3);
    const MumSet m = build_mums(gm, optimal_t(gm).t);
    const int d = 3;
    const double expected = d * (d * m.kappa() - 1.0) / (d - 1);
    const Complex w = oracle::omega(3, 1);
    for (const auto& axis : m.povms) {
        const Operator u = axis[0] + w * axis[1] + w * w * axis[2];
        EXPECT_NEAR(frobenius_inner(u, u).real(), expected, 1e-10);
    }
}

TEST(Operator, Kron) {
    EXPECT_EQ(kron(identity(2), identity(2)), identity(4));
    Operator zz = Operator::Zero(4, 4);
    zz.diagonal() << 1.0, -1.0, -1.0, 1.0;
    EXPECT_EQ(kron(oracle::sigma(3), oracle::sigma(3)), zz);
    const Operator k = kron(ket_bra(2, 0, 1), identity(2));
    EXPECT_EQ(k.block(0, 2, 2, 2), identity(2));
    EXPECT_EQ(k.block(0, 0, 2, 2), Operator::Zero(2, 2));
    EXPECT_EQ(k.block(2, 0, 2, 4), Operator::Zero(2, 4));
}

TEST(Operator, KronMixedProduct) {
    for (int s = 0; s < 10; ++s) {
        CounterRng rng(3, s);
        const Operator a = random_operator(2, rng), b = random_operator(3, rng);
        const Operator c = random_operator(2, rng), d = random_operator(3, rng);
        EXPECT_LE(oracle::max_abs(kron(a, b) * kron(c, d) - kron(a * c, b * d)), 1e-12);
    }
}

TEST(Operator, IsPsd) {
    EXPECT_TRUE(is_psd(identity(3)));
    Operator m = Operator::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -0.5;
    EXPECT_FALSE(is_psd(m));
    const AxisBasis gm = gell_mann_basis(3);
    const MumSet set = build_mums(gm, optimal_t(gm).t);
    EXPECT_TRUE(is_psd(set.povms[0][0]));
    double lowest = 1.0;
    for (const auto& axis : set.povms) {
        for (const auto& p : axis) lowest = std::min(lowest, min_eigenvalue(p));
    }
    EXPECT_NEAR(lowest, 0.0, 1e-9);
}

TEST(Operator, ProportionalToUnitary) {
    const auto s = proportional_to_unitary(3.0 * oracle::sigma(1));
    ASSERT_TRUE(s.has_value());
    EXPECT_NEAR(*s, 3.0, 1e-14);
    EXPECT_FALSE(proportional_to_unitary(ket_bra(3, 0, 1)).has_value());
    try {
        proportional_to_unitary(Operator::Zero(2, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroOperator);
    }
}

TEST(Operator, ToleranceMustBePositive) {
    EXPECT_THROW(Tolerance::make(0.0, 1e-10), Error);
    EXPECT_THROW(Tolerance::make(1e-10, -1.0), Error);
    const Tolerance t = Tolerance::make(1e-8, 1e-9);
    EXPECT_EQ(t.eq_tol, 1e-8);
    EXPECT_EQ(t.psd_tol, 1e-9);
    const Tolerance def;
    EXPECT_EQ(def.eq_tol, 1e-10);
    EXPECT_EQ(def.psd_tol, 1e-10);
}

TEST(Operator, PartialTransposeSwapsSecondFactor) {
    const Operator m = kron(ket_bra(2, 0, 1), ket_bra(3, 1, 2));
    EXPECT_EQ(partial_transpose(m, 2, 3), kron(ket_bra(2, 0, 1), ket_bra(3, 2, 1)));
}
