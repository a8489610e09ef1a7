#include "mumch/bases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mumch {
namespace {

void require_dim(int d, const char* what) {
    if (d < 2) {
        throw Error(ErrorCode::BadDimension, std::string(what) + ": dimension must be >= 2, got " + std::to_string(d));
    }
}

Complex root_of_unity(int d, long long power) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % d) / d;
    return std::polar(1.0, angle);
}

// Same grouping for Gell-Mann and HW observables: axis a (0-based, a < d)
// gets op(k, a) for k != a, the last axis gets op(k, k) for k >= 1.
template <typename Generator>
std::vector<std::vector<Operator>> group_axes(int d, Generator op) {
    std::vector<std::vector<Operator>> axes(d + 1);
    for (int a = 0; a < d; ++a) {
        for (int k = 0; k < d; ++k) {
            if (k != a) axes[a].push_back(op(k, a));
        }
    }
    for (int k = 1; k < d; ++k) axes[d].push_back(op(k, k));
    return axes;
}

}  // namespace

AxisBasis pauli_axis_basis() {
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex i(0.0, 1.0);
    Operator x(2, 2), y(2, 2), z(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    y << 0.0, -i, i, 0.0;
    z << 1.0, 0.0, 0.0, -1.0;
    return AxisBasis{2, "pauli", {{s * x}, {s * y}, {s * z}}};
}

Operator gell_mann_operator(int d, int k, int l) {
    require_dim(d, "gell_mann_operator");
    Operator m = Operator::Zero(d, d);
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex i(0.0, 1.0);
    if (k < l) {
        m(k, l) = s;
        m(l, k) = s;
    } else if (k > l) {
        m(l, k) = -i * s;
        m(k, l) = i * s;
    } else {
        if (k == 0) throw Error(ErrorCode::BadInput, "gell_mann_operator: sigma_00 is the identity, not a basis element");
        const double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int j = 0; j < k; ++j) m(j, j) = norm;
        m(k, k) = -k * norm;
    }
    return m;
}

AxisBasis gell_mann_basis(int d) {
    require_dim(d, "gell_mann_basis");
    return AxisBasis{d, "gell-mann", group_axes(d, [d](int k, int l) { return gell_mann_operator(d, k, l); })};
}

Operator weyl_operator(int d, int k, int l) {
    require_dim(d, "weyl_operator");
    Operator w = Operator::Zero(d, d);
    const int kk = ((k % d) + d) % d;
    const int ll = ((l % d) + d) % d;
    for (int m = 0; m < d; ++m) {
        w((m + ll) % d, m) = root_of_unity(d, static_cast<long long>(kk) * m);
    }
    return w;
}

std::vector<Operator> weyl_operators(int d) {
    require_dim(d, "weyl_operators");
    std::vector<Operator> out;
    out.reserve(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) out.push_back(weyl_operator(d, k, l));
    }
    return out;
}

Operator hw_observable(int d, int k, int l, HwPhase phase) {
    require_dim(d, "hw_observable");
    const double norm = 1.0 / (2.0 * std::sqrt(static_cast<double>(d)));
    const Complex minus(norm, -norm);  // (1-i)/(2 sqrt d)
    const Complex plus(norm, norm);    // (1+i)/(2 sqrt d)
    Operator w = weyl_operator(d, k, l);
    Complex c;
    if (phase == HwPhase::Literal) {
        c = (k <= l) ? minus : plus;
    } else {
        // tau^{kl} with tau = -exp(i pi/d) = exp(i pi (d+1)/d)
        const double angle = std::numbers::pi * static_cast<double>(d + 1) / d * static_cast<double>(k * l);
        w *= std::polar(1.0, std::fmod(angle, 2.0 * std::numbers::pi));
        c = (l == 0) ? plus : minus;
    }
    return c * w + std::conj(c) * w.adjoint();
}

AxisBasis hw_observable_basis(int d, HwPhase phase) {
    require_dim(d, "hw_observable_basis");
    AxisBasis basis{d, "heisenberg-weyl", group_axes(d, [d, phase](int k, int l) { return hw_observable(d, k, l, phase); })};
    validate_axis_basis(basis);
    return basis;
}

double gram_deviation(const AxisBasis& basis) {
    std::vector<const Operator*> all;
    for (const auto& axis : basis.axes) {
        for (const auto& op : axis) all.push_back(&op);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            const Complex g = frobenius_inner(*all[i], *all[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(g - expected));
        }
    }
    return worst;
}

void validate_axis_basis(const AxisBasis& basis, const Tolerance& tol) {
    const int d = basis.dim;
    require_dim(d, "validate_axis_basis");
    if (static_cast<int>(basis.axes.size()) != d + 1) {
        throw Error(ErrorCode::BadPartition, "expected " + std::to_string(d + 1) + " axes, got " +
                                                 std::to_string(basis.axes.size()));
    }
    for (std::size_t a = 0; a < basis.axes.size(); ++a) {
        const auto& axis = basis.axes[a];
        if (static_cast<int>(axis.size()) != d - 1) {
            throw Error(ErrorCode::BadPartition, "axis " + std::to_string(a + 1) + " has " + std::to_string(axis.size()) +
                                                     " operators, expected " + std::to_string(d - 1));
        }
        for (const auto& op : axis) {
            if (op.rows() != d || op.cols() != d) {
                throw Error(ErrorCode::DimMismatch, "basis operator has wrong shape");
            }
            if (!is_hermitian(op, tol.eq_tol)) {
                throw Error(ErrorCode::NonHermitian, "axis " + std::to_string(a + 1) + " contains a non-Hermitian operator");
            }
            if (std::abs(op.trace()) > std::max(1e-12, tol.eq_tol)) {
                throw Error(ErrorCode::NonTraceless, "axis " + std::to_string(a + 1) + " contains an operator with nonzero trace");
            }
        }
    }
    const double dev = gram_deviation(basis);
    if (dev > tol.eq_tol) {
        throw Error(ErrorCode::NonOrthonormal, "Gram matrix deviates from identity by " + std::to_string(dev));
    }
}

AxisBasis custom_axis_basis(const std::vector<Operator>& operators,
                            const std::vector<std::vector<int>>& partition,
                            const Tolerance& tol) {
    if (operators.empty()) throw Error(ErrorCode::BadPartition, "no operators supplied");
    const int d = static_cast<int>(operators.front().rows());
    require_dim(d, "custom_axis_basis");
    if (static_cast<int>(operators.size()) != d * d - 1) {
        throw Error(ErrorCode::BadPartition, "expected d^2-1 = " + std::to_string(d * d - 1) + " operators, got " +
                                                 std::to_string(operators.size()));
    }
    if (static_cast<int>(partition.size()) != d + 1) {
        throw Error(ErrorCode::BadPartition, "partition must have d+1 groups");
    }
    std::vector<int> used(operators.size(), 0);
    AxisBasis basis{d, "custom", {}};
    for (const auto& group : partition) {
        if (static_cast<int>(group.size()) != d - 1) {
            throw Error(ErrorCode::BadPartition, "every group must hold d-1 = " + std::to_string(d - 1) + " indices");
        }
        std::vector<Operator> axis;
        for (int idx : group) {
            if (idx < 0 || idx >= static_cast<int>(operators.size()) || used[idx]++ != 0) {
                throw Error(ErrorCode::BadPartition, "partition index " + std::to_string(idx) + " out of range or repeated");
            }
            axis.push_back(operators[idx]);
        }
        basis.axes.push_back(std::move(axis));
    }
    validate_axis_basis(basis, tol);
    return basis;
}

}  // namespace mumch
