#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "mumch/analysis.hpp"
#include "mumch/rng.hpp"
#include "oracles.hpp"

using namespace mumch;

namespace {

MumSet gm_optimal(int d) {
    const AxisBasis b = gell_mann_basis(d);
    return build_mums(b, optimal_t(b).t);
}

MumSet hw_optimal() {
    const AxisBasis b = hw_observable_basis(3);
    return build_mums(b, optimal_t(b).t);
}

MumSet weyl_mub(int d) { return mums_from_u_operators(weyl_mub_u_operators(d), 1.0); }

GeneralizedPauliChannel identity_channel(const MumSet& m) {
    RealVector p = RealVector::Zero(m.dim + 2);
    p(0) = 1.0;
    return GeneralizedPauliChannel::from_probs(m, p);
}

GeneralizedPauliChannel inside_eb_region(const MumSet& m, CounterRng& rng) {
    const RealVector w = random_simplex(m.dim + 2, rng);
    return GeneralizedPauliChannel::from_eigenvalues(m, contraction(m) * w.head(m.dim + 1));
}

}  // namespace

TEST(Analysis, EbSufficientExamples) {
    const MumSet m = gm_optimal(3);
    EXPECT_TRUE(eb_sufficient(GeneralizedPauliChannel::from_eigenvalues(m, RealVector::Zero(4))));
    EXPECT_FALSE(eb_sufficient(identity_channel(m)));
    // at kappa = 1 the threshold is sum lambda <= 1
    const MumSet w = weyl_mub(3);
    EXPECT_NEAR(contraction(w), 1.0, 1e-12);
    EXPECT_TRUE(eb_sufficient(GeneralizedPauliChannel::from_eigenvalues(w, RealVector::Constant(4, 0.25))));
    EXPECT_FALSE(eb_sufficient(GeneralizedPauliChannel::from_eigenvalues(w, RealVector::Constant(4, 0.26))));
}

TEST(Analysis, HolevoFormOfDepolarizing) {
    const MumSet m = gm_optimal(3);
    const auto phi0 = GeneralizedPauliChannel::from_eigenvalues(m, RealVector::Zero(4));
    const HolevoForm h = holevo_form(phi0);
    for (const auto& row : h.effects) {
        for (const auto& e : row) EXPECT_LE(oracle::max_abs(e - identity(3) / 12.0), 1e-15);
    }
    CounterRng rng(1, 0);
    const Operator x = random_operator(3, rng);
    EXPECT_LE(oracle::max_abs(holevo_apply(h, x) - depolarizing_apply(x)), 1e-14);
}

TEST(Analysis, HolevoBoundary) {
    const MumSet m = gm_optimal(3);
    const auto ch = GeneralizedPauliChannel::from_eigenvalues(m, RealVector::Constant(4, contraction(m) / 4.0));
    const HolevoValidity v = holevo_validity(holevo_form(ch));
    EXPECT_LE(v.completeness_deviation, 1e-12);
    EXPECT_GE(v.min_eigenvalue, -1e-12);
    EXPECT_TRUE(v.valid);
}

TEST(Analysis, HolevoReconstruction) {
    for (const MumSet& m : {gm_optimal(3), hw_optimal()}) {
        for (int s = 0; s < 50; ++s) {
            CounterRng rng(2, s);
            const auto ch = inside_eb_region(m, rng);
            const HolevoForm h = holevo_form(ch);
            EXPECT_TRUE(holevo_validity(h).valid);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    const Operator e = ket_bra(3, i, j);
                    EXPECT_LE(oracle::max_abs(holevo_apply(h, e) - channel_apply(ch, e)), 1e-10);
                    EXPECT_LE(oracle::max_abs(holevo_apply(h, e) - channel_apply_alt(ch, e)), 1e-10);
                }
            }
        }
    }
    try {
        holevo_form(identity_channel(gm_optimal(3)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSufficientRegime);
    }
}

TEST(Analysis, Ppt) {
    const MumSet q = build_mums(pauli_axis_basis(), 1.0 / (2.0 + std::sqrt(2.0)));
    EXPECT_FALSE(ppt_check(identity_channel(q)).pass);
    EXPECT_TRUE(ppt_check(GeneralizedPauliChannel::from_eigenvalues(q, RealVector::Zero(3))).pass);
    const auto not_cp = GeneralizedPauliChannel::from_eigenvalues(weyl_mub(3), RealVector::Constant(4, -0.6));
    try {
        ppt_check(not_cp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCP);
    }
}

TEST(Analysis, EbImplicationSweep) {
    for (const MumSet& m : {build_mums(pauli_axis_basis(), 0.2), gm_optimal(3), hw_optimal()}) {
        int covered = 0;
        for (int s = 0; s < 300; ++s) {
            CounterRng rng(3, s);
            RealVector lambda(m.dim + 1);
            for (int a = 0; a <= m.dim; ++a) lambda(a) = rng.uniform(0.0, 0.6) * contraction(m);
            const auto ch = GeneralizedPauliChannel::from_eigenvalues(m, lambda);
            const EbReport r = eb_report(ch);
            if (!r.sufficient_pass) continue;
            ++covered;
            ASSERT_TRUE(r.holevo_povm_valid.has_value());
            EXPECT_TRUE(*r.holevo_povm_valid);
            EXPECT_TRUE(r.cp);
            EXPECT_TRUE(r.ppt_pass);
        }
        EXPECT_GT(covered, 10);
    }
}

TEST(Analysis, Nu2Formula) {
    const MumSet q = build_mums(pauli_axis_basis(), 1.0 / (2.0 + std::sqrt(2.0)));
    EXPECT_NEAR(nu2_formula(identity_channel(q)), 1.0, 1e-12);
    const MumSet m = gm_optimal(3);
    EXPECT_NEAR(nu2_formula(GeneralizedPauliChannel::from_eigenvalues(m, RealVector::Zero(4))), 1.0 / std::sqrt(3.0), 1e-15);
    RealVector lambda = RealVector::Zero(4);
    lambda(0) = 1.0;
    const double nu = nu2_formula(GeneralizedPauliChannel::from_eigenvalues(m, lambda));
    EXPECT_NEAR(nu * nu, (1.0 + 2.0 / 3.0) / 3.0, 1e-12);
}

TEST(Analysis, Nu2RestrictedMatchesFormula) {
    for (const MumSet& m : {gm_optimal(3), hw_optimal(), weyl_mub(3)}) {
        EXPECT_LE(nu2_proof_identity_deviation(m), 1e-12);
        EXPECT_NEAR(nu2_restricted(identity_channel(m)), std::sqrt(m.povms[0][0].squaredNorm()), 1e-12);
        for (int s = 0; s < 30; ++s) {
            CounterRng rng(4, s);
            RealVector lambda(4);
            for (int a = 0; a < 4; ++a) lambda(a) = rng.uniform(-1.0, 1.0);
            const auto ch = GeneralizedPauliChannel::from_eigenvalues(m, lambda);
            EXPECT_NEAR(nu2_restricted(ch), nu2_formula(ch), 1e-12);
            // exhaustive: the best input sits on the axis with the largest lambda^2
            Eigen::Index star = 0;
            lambda.cwiseAbs2().maxCoeff(&star);
            EXPECT_NEAR(channel_apply(ch, m.povms[star][1]).norm(), nu2_restricted(ch), 1e-12);
        }
    }
}

TEST(Analysis, Nu2MonteCarlo) {
    const MumSet m = gm_optimal(3);
    const auto phi0 = GeneralizedPauliChannel::from_eigenvalues(m, RealVector::Zero(4));
    EXPECT_NEAR(nu2_pure_mc(phi0, 50, 0), 1.0 / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(nu2_pure_mc(identity_channel(m), 50, 0), 1.0, 1e-12);

    CounterRng rng(5, 0);
    const auto ch = GeneralizedPauliChannel::from_probs(m, random_simplex(5, rng));
    const double one = nu2_pure_mc(ch, 4000, 9, 1);
    EXPECT_EQ(one, nu2_pure_mc(ch, 4000, 9, 3));
    EXPECT_EQ(one, nu2_pure_mc(ch, 4000, 9, 8));
    EXPECT_LE(nu2_pure_mc(ch, 1000, 9, 1), one);
    EXPECT_THROW(nu2_pure_mc(ch, 0, 9), Error);
}

TEST(Analysis, Nu2QubitOracle) {
    const MumSet q = build_mums(pauli_axis_basis(), 0.2);
    RealVector lambda(3);
    lambda << 0.5, -0.7, 0.1;
    const auto ch = GeneralizedPauliChannel::from_eigenvalues(q, lambda);
    const double purity = oracle::qubit_max_purity(0.5, -0.7, 0.1);
    const Nu2Report r = nu2_report(ch, 100000, 0, 4);
    EXPECT_NEAR(r.mc_pure_max * r.mc_pure_max, purity, 2e-3);
    ASSERT_TRUE(r.qubit_pure_max.has_value());
    EXPECT_NEAR(*r.qubit_pure_max * *r.qubit_pure_max, purity, 1e-15);
    EXPECT_TRUE(r.mc_exceeds_formula);
    EXPECT_GT(r.mc_minus_formula, 0.0);
}

TEST(Analysis, Multiplicativity) {
    const MumSet w = weyl_mub(3);
    const MumSet g = gm_optimal(3);
    for (int s = 0; s < 20; ++s) {
        CounterRng rng(6, s);
        const RealVector p = random_simplex(5, rng);
        EXPECT_TRUE(multiplicativity_check(GeneralizedPauliChannel::from_probs(w, p)));
    }
    RealVector lambda = RealVector::Zero(4);
    lambda(0) = 1.0;
    EXPECT_FALSE(multiplicativity_check(GeneralizedPauliChannel::from_eigenvalues(g, lambda)));
    EXPECT_TRUE(multiplicativity_check(GeneralizedPauliChannel::from_eigenvalues(g, RealVector::Zero(4))));
}

TEST(Analysis, CensusGellMann) {
    const CensusReport r = eigenvector_census(gm_optimal(3));
    std::set<std::pair<int, int>> unitary;
    for (const auto& e : r.unitary_proportional) unitary.insert({e.u.axis, e.u.k});
    EXPECT_EQ(unitary, (std::set<std::pair<int, int>>{{4, 1}, {4, 2}}));
    ASSERT_EQ(r.commuting_pairs.size(), 1u);
    EXPECT_EQ(r.commuting_pairs[0].first.axis, 4);
    EXPECT_EQ(r.commuting_pairs[0].second.axis, 4);
}

TEST(Analysis, CensusHeisenbergWeyl) {
    const CensusReport r = eigenvector_census(hw_optimal());
    std::set<std::tuple<int, int, int, int>> unitary;
    for (const auto& e : r.unitary_proportional) {
        unitary.insert({e.u.axis, e.u.k, e.weyl ? e.weyl->first : -1, e.weyl ? e.weyl->second : -1});
    }
    // U_{1,k} ~ W_{k0} as printed; U_{4,k} are unitary-proportional as well in
    // the orthonormal basis
    EXPECT_TRUE(unitary.count({1, 1, 1, 0}));
    EXPECT_TRUE(unitary.count({1, 2, 2, 0}));
    std::set<std::tuple<int, int, int, int>> pairs;
    for (const auto& [a, b] : r.commuting_pairs) pairs.insert({a.axis, a.k, b.axis, b.k});
    EXPECT_EQ(pairs, (std::set<std::tuple<int, int, int, int>>{{1, 1, 1, 2}, {4, 1, 4, 2}}));
}

TEST(Analysis, CensusQubit) {
    const CensusReport r = eigenvector_census(build_mums(pauli_axis_basis(), 0.2));
    EXPECT_EQ(r.unitary_proportional.size(), 3u);
    for (const auto& e : r.unitary_proportional) EXPECT_TRUE(e.weyl.has_value());
    EXPECT_TRUE(r.commuting_pairs.empty());
}
