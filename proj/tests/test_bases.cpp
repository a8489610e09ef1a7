#include <gtest/gtest.h>

#include <cmath>

#include "mumch/bases.hpp"
#include "oracles.hpp"

using namespace mumch;

namespace {

void expect_valid(const AxisBasis& b) {
    const int d = b.dim;
    ASSERT_EQ(static_cast<int>(b.axes.size()), d + 1);
    int count = 0;
    for (const auto& axis : b.axes) {
        ASSERT_EQ(static_cast<int>(axis.size()), d - 1);
        for (const auto& op : axis) {
            EXPECT_LE(std::abs(op.trace()), 1e-12);
            EXPECT_LE(oracle::max_abs(op - op.adjoint()), 1e-12);
            ++count;
        }
    }
    EXPECT_EQ(count, d * d - 1);
    EXPECT_LE(gram_deviation(b), 1e-10);
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::IoError;
}

}  // namespace

TEST(Bases, PauliAxes) {
    const AxisBasis b = pauli_axis_basis();
    EXPECT_EQ(b.dim, 2);
    EXPECT_EQ(b.label, "pauli");
    for (int a = 0; a < 3; ++a) {
        EXPECT_LE(oracle::max_abs(b.axes[a][0] - oracle::sigma(a + 1) / std::sqrt(2.0)), 1e-15);
        EXPECT_NEAR(oracle::trace_product(b.axes[a][0], b.axes[a][0]).real(), 1.0, 1e-15);
    }
    expect_valid(b);
}

TEST(Bases, GellMannTwoIsRescaledPauli) {
    const AxisBasis b = gell_mann_basis(2);
    const double s = 1.0 / std::sqrt(2.0);
    // axis 1 = sigma_{10}, axis 2 = sigma_{01}, axis 3 = sigma_{11}
    EXPECT_LE(oracle::max_abs(b.axes[0][0] - s * oracle::sigma(2)), 1e-15);
    EXPECT_LE(oracle::max_abs(b.axes[1][0] - s * oracle::sigma(1)), 1e-15);
    EXPECT_LE(oracle::max_abs(b.axes[2][0] - s * oracle::sigma(3)), 1e-15);
}

TEST(Bases, GellMannDiagonalElement) {
    Operator expected = Operator::Zero(3, 3);
    expected(0, 0) = 1.0 / std::sqrt(2.0);
    expected(1, 1) = -1.0 / std::sqrt(2.0);
    EXPECT_LE(oracle::max_abs(gell_mann_operator(3, 1, 1) - expected), 1e-15);
}

TEST(Bases, GellMannGrouping) {
    const AxisBasis b = gell_mann_basis(3);
    EXPECT_LE(oracle::max_abs(b.axes[0][0] - gell_mann_operator(3, 1, 0)), 0.0);
    EXPECT_LE(oracle::max_abs(b.axes[0][1] - gell_mann_operator(3, 2, 0)), 0.0);
    EXPECT_LE(oracle::max_abs(b.axes[1][0] - gell_mann_operator(3, 0, 1)), 0.0);
    EXPECT_LE(oracle::max_abs(b.axes[2][1] - gell_mann_operator(3, 1, 2)), 0.0);
    EXPECT_LE(oracle::max_abs(b.axes[3][1] - gell_mann_operator(3, 2, 2)), 0.0);
}

TEST(Bases, GellMannValidAcrossDimensions) {
    for (int d = 2; d <= 7; ++d) expect_valid(gell_mann_basis(d));
    EXPECT_EQ(code_of([] { gell_mann_basis(1); }), ErrorCode::BadDimension);
}

TEST(Bases, WeylTwoDimensional) {
    EXPECT_LE(oracle::max_abs(weyl_operator(2, 1, 0) - oracle::sigma(3)), 1e-15);
    EXPECT_LE(oracle::max_abs(weyl_operator(2, 0, 1) - oracle::sigma(1)), 1e-15);
    // W_11 = sigma_x sigma_z = -i sigma_y
    EXPECT_LE(oracle::max_abs(weyl_operator(2, 1, 1) - Complex(0.0, -1.0) * oracle::sigma(2)), 1e-15);
    EXPECT_EQ(weyl_operator(2, 0, 0), identity(2));
}

TEST(Bases, WeylThreeDimensionalAction) {
    const Operator w = weyl_operator(3, 1, 1);
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(3), e1 = Eigen::VectorXcd::Zero(3);
    e0(0) = 1.0;
    e1(1) = 1.0;
    Eigen::VectorXcd r0 = Eigen::VectorXcd::Zero(3), r1 = Eigen::VectorXcd::Zero(3);
    r0(1) = 1.0;
    r1(2) = oracle::omega(3, 1);
    EXPECT_LE((w * e0 - r0).norm(), 1e-15);
    EXPECT_LE((w * e1 - r1).norm(), 1e-15);
}

TEST(Bases, WeylUnitaryAndOrthogonal) {
    for (int d : {2, 3, 4, 5}) {
        const auto ws = weyl_operators(d);
        ASSERT_EQ(static_cast<int>(ws.size()), d * d);
        for (std::size_t i = 0; i < ws.size(); ++i) {
            EXPECT_LE(oracle::max_abs(ws[i].adjoint() * ws[i] - identity(d)), 1e-12);
            for (std::size_t j = 0; j < ws.size(); ++j) {
                const Complex g = frobenius_inner(ws[i], ws[j]);
                EXPECT_LE(std::abs(g - (i == j ? Complex(d) : Complex(0.0))), 1e-12);
            }
        }
    }
}

TEST(Bases, WeylProductRule) {
    for (int d : {2, 3, 4}) {
        for (int k = 0; k < d; ++k) {
            for (int l = 0; l < d; ++l) {
                for (int k2 = 0; k2 < d; ++k2) {
                    for (int l2 = 0; l2 < d; ++l2) {
                        const Operator lhs = weyl_operator(d, k, l) * weyl_operator(d, k2, l2);
                        const Operator rhs = oracle::omega(d, k * l2) * weyl_operator(d, k + k2, l + l2);
                        EXPECT_LE(oracle::max_abs(lhs - rhs), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(Bases, HeisenbergWeylThree) {
    const AxisBasis b = hw_observable_basis(3);
    EXPECT_EQ(b.label, "heisenberg-weyl");
    expect_valid(b);
}

TEST(Bases, HeisenbergWeylValidAcrossDimensions) {
    for (int d = 2; d <= 7; ++d) expect_valid(hw_observable_basis(d));
}

TEST(Bases, HeisenbergWeylLiteralBranch) {
    const Operator w = weyl_operator(3, 1, 1);
    const double n = 2.0 * std::sqrt(3.0);
    const Operator expected = Complex(1.0, -1.0) / n * w + Complex(1.0, 1.0) / n * w.adjoint();
    EXPECT_LE(oracle::max_abs(hw_observable(3, 1, 1, HwPhase::Literal) - expected), 1e-15);
    const Operator w21 = weyl_operator(3, 2, 1);
    const Operator expected21 = Complex(1.0, 1.0) / n * w21 + Complex(1.0, -1.0) / n * w21.adjoint();
    EXPECT_LE(oracle::max_abs(hw_observable(3, 2, 1, HwPhase::Literal) - expected21), 1e-15);
}

TEST(Bases, HeisenbergWeylLiteralIsNotOrthonormal) {
    // Tr(V_11 V_22) = -sqrt(3)/2 for the two-branch formula on bare W_kl
    const Complex overlap =
        frobenius_inner(hw_observable(3, 1, 1, HwPhase::Literal), hw_observable(3, 2, 2, HwPhase::Literal));
    EXPECT_NEAR(overlap.real(), -std::sqrt(3.0) / 2.0, 1e-12);
    EXPECT_EQ(code_of([] { hw_observable_basis(3, HwPhase::Literal); }), ErrorCode::NonOrthonormal);
}

TEST(Bases, HeisenbergWeylFirstAxisIsClockFamily) {
    // axis 1 holds V_10, V_20, which are combinations of W_10 and W_20 only
    const AxisBasis b = hw_observable_basis(3);
    for (const auto& op : b.axes[0]) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i != j) {
                    EXPECT_LE(std::abs(op(i, j)), 1e-15);
                }
            }
        }
    }
}

TEST(Bases, CustomRoundTrip) {
    const AxisBasis gm = gell_mann_basis(3);
    std::vector<Operator> ops;
    std::vector<std::vector<int>> partition;
    for (const auto& axis : gm.axes) {
        std::vector<int> group;
        for (const auto& op : axis) {
            group.push_back(static_cast<int>(ops.size()));
            ops.push_back(op);
        }
        partition.push_back(group);
    }
    const AxisBasis c = custom_axis_basis(ops, partition);
    EXPECT_EQ(c.label, "custom");
    for (std::size_t a = 0; a < gm.axes.size(); ++a) {
        for (std::size_t l = 0; l < gm.axes[a].size(); ++l) EXPECT_EQ(c.axes[a][l], gm.axes[a][l]);
    }

    auto bad = partition;
    bad[0].push_back(bad[1].back());
    bad[1].pop_back();
    EXPECT_EQ(code_of([&] { custom_axis_basis(ops, bad); }), ErrorCode::BadPartition);
    auto repeated = partition;
    repeated[0][0] = repeated[0][1];
    EXPECT_EQ(code_of([&] { custom_axis_basis(ops, repeated); }), ErrorCode::BadPartition);

    auto with_identity = ops;
    with_identity[0] = identity(3) / std::sqrt(3.0);
    EXPECT_EQ(code_of([&] { custom_axis_basis(with_identity, partition); }), ErrorCode::NonTraceless);

    auto non_hermitian = ops;
    non_hermitian[2] = weyl_operator(3, 1, 1) / std::sqrt(3.0);
    EXPECT_EQ(code_of([&] { custom_axis_basis(non_hermitian, partition); }), ErrorCode::NonHermitian);

    auto scaled = ops;
    scaled[4] *= 2.0;
    EXPECT_EQ(code_of([&] { custom_axis_basis(scaled, partition); }), ErrorCode::NonOrthonormal);
}
