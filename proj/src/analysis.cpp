#include "mumch/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "mumch/rng.hpp"

namespace mumch {
namespace {

constexpr double kCommuteTol = 1e-10;

double purity_norm(const Operator& a) { return a.norm(); }

}  // namespace

bool eb_sufficient(const GeneralizedPauliChannel& ch, const Tolerance& tol) {
    const RealVector& lambda = ch.eigenvalues();
    return lambda.minCoeff() >= -tol.eq_tol && lambda.sum() <= contraction(ch.mums()) + tol.eq_tol;
}

HolevoForm holevo_form(const GeneralizedPauliChannel& ch, const Tolerance& tol) {
    if (!eb_sufficient(ch, tol)) {
        throw Error(ErrorCode::NotSufficientRegime, "channel does not satisfy lambda >= 0 and sum lambda <= (d kappa - 1)/(d - 1)");
    }
    const int d = ch.dim();
    const RealVector mu = alt_weights(ch);
    const double base = (1.0 - mu.sum()) / (d * (d + 1.0));
    HolevoForm h;
    h.states = ch.mums().povms;
    for (int a = 0; a <= d; ++a) {
        std::vector<Operator> row;
        for (int k = 0; k < d; ++k) row.push_back(base * identity(d) + mu(a) * ch.mums().povms[a][k]);
        h.effects.push_back(std::move(row));
    }
    return h;
}

Operator holevo_apply(const HolevoForm& h, const Operator& x) {
    Operator out = Operator::Zero(x.rows(), x.cols());
    for (std::size_t a = 0; a < h.states.size(); ++a) {
        for (std::size_t k = 0; k < h.states[a].size(); ++k) out += h.states[a][k] * (x * h.effects[a][k]).trace();
    }
    return out;
}

HolevoValidity holevo_validity(const HolevoForm& h, const Tolerance& tol) {
    HolevoValidity v;
    if (h.effects.empty()) return v;
    const auto d = h.effects.front().front().rows();
    Operator sum = Operator::Zero(d, d);
    v.min_eigenvalue = 1.0;
    for (const auto& row : h.effects) {
        for (const auto& e : row) {
            sum += e;
            v.min_eigenvalue = std::min(v.min_eigenvalue, min_eigenvalue(e, tol));
        }
    }
    v.completeness_deviation = (sum - Operator::Identity(d, d)).cwiseAbs().maxCoeff();
    v.valid = v.completeness_deviation <= tol.eq_tol && v.min_eigenvalue >= -tol.psd_tol;
    return v;
}

PptResult ppt_check(const GeneralizedPauliChannel& ch, const Tolerance& tol) {
    const CpVerdict cp = is_completely_positive(ch, tol);
    if (!cp.pass) {
        throw Error(ErrorCode::NotCP, "Choi matrix has eigenvalue " + std::to_string(cp.choi_min_eigenvalue));
    }
    const int d = ch.dim();
    const Operator pt = hermitian_part(partial_transpose(choi_matrix(ch), d, d));
    Eigen::SelfAdjointEigenSolver<Operator> es(pt, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0);
    return PptResult{lo, lo >= -tol.psd_tol};
}

EbReport eb_report(const GeneralizedPauliChannel& ch, const Tolerance& tol) {
    EbReport r;
    const RealVector& lambda = ch.eigenvalues();
    r.sum_lambda = lambda.sum();
    r.sufficient_threshold = contraction(ch.mums());
    r.necessary_pass = lambda.minCoeff() >= -tol.eq_tol && r.sum_lambda <= 1.0 + tol.eq_tol;
    r.sufficient_pass = eb_sufficient(ch, tol);
    if (r.sufficient_pass) r.holevo_povm_valid = holevo_validity(holevo_form(ch, tol), tol).valid;
    r.cp = is_completely_positive(ch, tol).pass;
    if (r.cp) {
        const PptResult ppt = ppt_check(ch, tol);
        r.ppt_min_eigenvalue = ppt.min_eigenvalue;
        r.ppt_pass = ppt.pass;
    }
    return r;
}

double nu2_formula(const GeneralizedPauliChannel& ch) {
    const int d = ch.dim();
    const double max_sq = ch.eigenvalues().cwiseAbs2().maxCoeff();
    return std::sqrt((1.0 + (d * ch.mums().kappa() - 1.0) * max_sq) / d);
}

double nu2_restricted(const GeneralizedPauliChannel& ch) {
    double best = 0.0;
    for (const auto& axis : ch.mums().povms) {
        for (const auto& p : axis) best = std::max(best, purity_norm(channel_apply(ch, p)));
    }
    return best;
}

double nu2_pure_mc(const GeneralizedPauliChannel& ch, long long samples, std::uint64_t seed, int threads) {
    if (samples < 1) throw Error(ErrorCode::BadInput, "samples must be >= 1");
    const int d = ch.dim();
    const Operator s = channel_superoperator(ch);
    const int workers = static_cast<int>(std::clamp<long long>(threads, 1, samples));
    std::vector<double> best(workers, 0.0);
    auto work = [&](int w) {
        const long long lo = samples * w / workers;
        const long long hi = samples * (w + 1) / workers;
        Eigen::VectorXcd out(d * d);
        for (long long i = lo; i < hi; ++i) {
            CounterRng rng(seed, static_cast<std::uint64_t>(i));
            const Operator rho = haar_pure_state(d, rng);
            out.noalias() = s * rho.reshaped();
            best[w] = std::max(best[w], out.norm());
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    return *std::max_element(best.begin(), best.end());
}

double nu2_proof_identity_deviation(const MumSet& m) {
    const int d = m.dim;
    const double c = d * m.kappa() - 1.0;
    double worst = 0.0;
    const int axes = static_cast<int>(m.povms.size());
    for (int a = 0; a < axes; ++a) {
        for (int b = 0; b < axes; ++b) {
            for (int l = 0; l < d; ++l) {
                double sum = 0.0;
                for (int k = 0; k < d; ++k) {
                    const double v = (m.povms[a][k] * m.povms[b][l]).trace().real();
                    sum += v * v;
                }
                const double expected = (1.0 + (a == b ? c * c / (d - 1) : 0.0)) / d;
                worst = std::max(worst, std::abs(sum - expected));
            }
        }
    }
    return worst;
}

bool multiplicativity_check(const GeneralizedPauliChannel& ch, const Tolerance& tol) {
    const int d = ch.dim();
    const double nu = nu2_formula(ch);
    const double target = (1.0 + (d - 1.0) * ch.eigenvalues().cwiseAbs2().maxCoeff()) / d;
    return std::abs(nu * nu - target) <= tol.eq_tol;
}

Nu2Report nu2_report(const GeneralizedPauliChannel& ch, long long samples, std::uint64_t seed, int threads,
                     const Tolerance& tol) {
    Nu2Report r;
    r.formula_value = nu2_formula(ch);
    r.restricted_max = nu2_restricted(ch);
    r.mc_samples = samples;
    r.seed = seed;
    r.mc_pure_max = nu2_pure_mc(ch, samples, seed, threads);
    if (ch.dim() == 2) r.qubit_pure_max = std::sqrt((1.0 + ch.eigenvalues().cwiseAbs2().maxCoeff()) / 2.0);
    r.mc_minus_formula = r.mc_pure_max - r.formula_value;
    r.mc_exceeds_formula = r.mc_pure_max > r.formula_value + 1e-9;
    r.multiplicativity_pass = multiplicativity_check(ch, tol);
    return r;
}

CensusReport eigenvector_census(const MumSet& m, const Tolerance& tol) {
    const int d = m.dim;
    const OperatorTable u = u_operators(m);
    const std::vector<Operator> weyl = weyl_operators(d);
    CensusReport r;
    std::vector<std::pair<UIndex, const Operator*>> all;
    for (int a = 0; a < static_cast<int>(u.size()); ++a) {
        for (int k = 1; k < d; ++k) {
            const Operator& op = u[a][k - 1];
            const UIndex idx{a + 1, k};
            all.emplace_back(idx, &op);
            const auto scale = proportional_to_unitary(op, tol);
            if (!scale) continue;
            UnitaryEntry entry{idx, *scale, std::nullopt};
            for (int w = 1; w < d * d; ++w) {
                const Complex coef = frobenius_inner(weyl[w], op) / static_cast<double>(d);
                if ((op - coef * weyl[w]).norm() <= tol.eq_tol * std::max(1.0, op.norm())) {
                    entry.weyl = std::make_pair(w / d, w % d);
                    break;
                }
            }
            r.unitary_proportional.push_back(entry);
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (commute(*all[i].second, *all[j].second, kCommuteTol)) {
                r.commuting_pairs.emplace_back(all[i].first, all[j].first);
            }
        }
    }
    return r;
}

}  // namespace mumch
