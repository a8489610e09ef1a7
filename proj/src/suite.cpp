#include "mumch/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

#include "mumch/analysis.hpp"
#include "mumch/bases.hpp"
#include "mumch/channel.hpp"
#include "mumch/rng.hpp"

namespace mumch {
namespace {

struct NamedMum {
    std::string name;
    MumSet mum;
    bool kappa_one = false;
};

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << v;
    return s.str();
}

std::string fix(double v, int digits = 9) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

double max_abs(const Operator& a) { return a.cwiseAbs().maxCoeff(); }

class Suite {
public:
    explicit Suite(const SuiteOptions& o) : opt_(o) {
        const AxisBasis pauli = pauli_axis_basis();
        add("pauli-d2", build_mums(pauli, optimal_t(pauli).t));
        add("pauli-d2-t0.2", build_mums(pauli, 0.2));
        for (int d : {3, 4, 5}) {
            const AxisBasis gm = gell_mann_basis(d);
            add("gell-mann-d" + std::to_string(d), build_mums(gm, optimal_t(gm).t));
        }
        const AxisBasis hw = hw_observable_basis(3);
        add("heisenberg-weyl-d3", build_mums(hw, optimal_t(hw).t));
        for (int d : {2, 3}) add("weyl-mub-d" + std::to_string(d), mums_from_u_operators(weyl_mub_u_operators(d), 1.0));
    }

    std::vector<CheckResult> run() {
        std::vector<std::pair<std::string, std::function<std::pair<bool, std::string>()>>> checks = {
            {"gell-mann optimum", [this] { return c1(); }},
            {"heisenberg-weyl optimum", [this] { return c2(); }},
            {"d=2 feasibility interval", [this] { return c3(); }},
            {"MUM invariants", [this] { return c4(); }},
            {"state reconstruction", [this] { return c5(); }},
            {"reference U matrices", [this] { return c6(); }},
            {"spectral identity", [this] { return c7(); }},
            {"CP logic", [this] { return c8(); }},
            {"composition identities", [this] { return c9(); }},
            {"entanglement breaking (Holevo form)", [this] { return c10(); }},
            {"maximal output 2-norm", [this] { return c11(); }},
            {"multiplicativity", [this] { return c12(); }},
            {"eigenvector census", [this] { return c13(); }},
            {"U-operator round trip", [this] { return c14(); }},
            {"nu2 pure-state diagnostic", [this] { return c15(); }},
        };
        std::vector<CheckResult> out;
        for (std::size_t i = 0; i < checks.size(); ++i) {
            current_ = static_cast<int>(i) + 1;
            CheckResult r{current_, checks[i].first, false, ""};
            try {
                auto [pass, detail] = checks[i].second();
                r.pass = pass;
                r.detail = detail;
            } catch (const std::exception& e) {
                r.detail = std::string("exception: ") + e.what();
            }
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    void add(std::string name, MumSet m) {
        const bool one = std::abs(m.kappa() - 1.0) <= 1e-12;
        sets_.push_back(NamedMum{std::move(name), std::move(m), one});
    }

    const MumSet& find(const std::string& name) const {
        for (const auto& s : sets_) {
            if (s.name == name) return s.mum;
        }
        throw Error(ErrorCode::BadInput, "no MumSet named " + name);
    }

    double bump() const {
        auto it = opt_.perturbation.find(current_);
        return it == opt_.perturbation.end() ? 0.0 : it->second;
    }

    CounterRng rng(std::uint64_t salt, std::uint64_t index) const {
        return CounterRng(opt_.seed ^ (salt * 0x9E3779B97F4A7C15ULL), index);
    }

    std::pair<bool, std::string> c1() {
        bool pass = true;
        std::string detail;
        for (int d : {3, 4, 5}) {
            const OptimalT o = optimal_t(gell_mann_basis(d));
            const double sd = std::sqrt(static_cast<double>(d));
            const double t_ref = std::numbers::sqrt2 / (d * (sd + 1.0) * std::sqrt(d - 1.0)) + bump();
            const double k_ref = (d + 2.0) / (d * d);
            const double dt = std::abs(o.t - t_ref), dk = std::abs(o.kappa - k_ref);
            pass = pass && dt <= 1e-10 && dk <= 1e-10;
            detail += "d=" + std::to_string(d) + " kappa=" + fix(o.kappa, 12) + " |dt|=" + sci(dt) + " |dk|=" + sci(dk) + "; ";
        }
        return {pass, detail};
    }

    std::pair<bool, std::string> c2() {
        const OptimalT o = optimal_t(hw_observable_basis(3));
        const double dt = std::abs(o.t - (0.112 + bump()));
        const double dk = std::abs(o.kappa - 0.522);
        const bool worse = o.kappa < 5.0 / 9.0;
        return {dt <= 5e-3 && dk <= 5e-3 && worse,
                "t=" + fix(o.t) + " kappa=" + fix(o.kappa) + " |dt|=" + sci(dt) + " |dk|=" + sci(dk) +
                    (worse ? " kappa_HW < 5/9" : " kappa_HW >= 5/9")};
    }

    std::pair<bool, std::string> c3() {
        const TInterval iv = feasible_t_interval(pauli_axis_basis());
        const double lo_ref = -(std::numbers::sqrt2 - 1.0) / std::numbers::sqrt2 + bump();
        const double hi_ref = 1.0 / (2.0 + std::numbers::sqrt2);
        const double dlo = std::abs(iv.t_min - lo_ref), dhi = std::abs(iv.t_max - hi_ref);
        const double dk = std::abs(kappa_from_t(2, iv.t_max) - 1.0);
        return {dlo <= 1e-12 && dhi <= 1e-12 && dk <= 1e-12,
                "t_min=" + fix(iv.t_min, 15) + " t_max=" + fix(iv.t_max, 15) + " |dk|=" + sci(dk)};
    }

    std::pair<bool, std::string> c4() {
        const Tolerance tol{1e-10, 1e-10};
        bool pass = true;
        std::string detail;
        for (const auto& s : sets_) {
            MumReport r = verify_mum_conditions(s.mum, tol);
            r.table_deviation += std::abs(bump());
            bool ok = r.table_deviation <= 1e-10 && r.trace_deviation <= 1e-10 && r.completeness_deviation <= 1e-10 &&
                      r.min_eigenvalue >= -1e-10;
            double mub = 0.0;
            if (s.kappa_one) {
                const int d = s.mum.dim;
                for (int a = 0; a <= d; ++a) {
                    for (int k = 0; k < d; ++k) {
                        for (int b = 0; b <= d; ++b) {
                            for (int l = 0; l < d; ++l) {
                                const double expected = a == b ? (k == l ? 1.0 : 0.0) : 1.0 / d;
                                const double v = (s.mum.povms[a][k] * s.mum.povms[b][l]).trace().real();
                                mub = std::max(mub, std::abs(v - expected));
                            }
                        }
                    }
                }
                ok = ok && mub <= 1e-10;
            }
            pass = pass && ok;
            detail += s.name + ":" + sci(r.table_deviation) + (s.kappa_one ? "/mub " + sci(mub) : "") + " ";
        }
        return {pass, "max table deviation " + detail};
    }

    std::pair<bool, std::string> c5() {
        double worst = 0.0;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            const MumSet& m = sets_[i].mum;
            for (int s = 0; s < 20; ++s) {
                CounterRng g = rng(5 + i, s);
                const Operator rho = haar_pure_state(m.dim, g);
                worst = std::max(worst, max_abs(reconstruct_state(m, measure(m, rho)) - rho));
            }
        }
        worst += std::abs(bump());
        return {worst <= 1e-10, "max |rho_rec - rho| = " + sci(worst) + " over " + std::to_string(20 * sets_.size()) + " states"};
    }

    std::pair<bool, std::string> c6() {
        bool pass = true;
        std::string detail;
        for (const std::string label : {"gell-mann", "heisenberg-weyl"}) {
            const MumSet& m = find(label == "gell-mann" ? "gell-mann-d3" : "heisenberg-weyl-d3");
            const OperatorTable u = u_operators(m);
            const std::vector<Operator> expected = reference_u_matrices(label, m.t);
            const double target = 3.0 * (3.0 * m.kappa() - 1.0) / 2.0;
            for (int a = 0; a < 4; ++a) {
                const double dev = max_abs(u[a][0] - expected[a]) + std::abs(bump());
                const bool ok = dev <= 1e-10;
                pass = pass && ok;
                const double norm = (expected[a] * expected[a].adjoint()).trace().real();
                detail += (label == "gell-mann" ? "GM" : "HW") + std::string(" U") + std::to_string(a + 1) + ",1 " +
                          (ok ? "ok" : "dev " + sci(dev) + " Tr(UU+)=" + fix(norm, 4) + " vs " + fix(target, 4)) + "; ";
            }
        }
        return {pass, detail};
    }

    std::pair<bool, std::string> c7() {
        double eig = 0.0, trip = 0.0;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            const MumSet& m = sets_[i].mum;
            const OperatorTable u = u_operators(m);
            for (int s = 0; s < 100; ++s) {
                CounterRng g = rng(7 + i, s);
                const RealVector p = random_simplex(m.dim + 2, g);
                const auto ch = GeneralizedPauliChannel::from_probs(m, p);
                const RealVector& lambda = ch.eigenvalues();
                eig = std::max(eig, max_abs(channel_apply(ch, identity(m.dim)) - identity(m.dim)));
                for (int a = 0; a <= m.dim; ++a) {
                    for (const auto& op : u[a]) eig = std::max(eig, max_abs(channel_apply(ch, op) - lambda(a) * op));
                }
                trip = std::max(trip, (probs_from_eigenvalues(lambda, m) - p).cwiseAbs().maxCoeff());
                trip = std::max(trip, (eigenvalues_from_probs(probs_from_eigenvalues(lambda, m), m) - lambda).cwiseAbs().maxCoeff());
            }
        }
        eig += std::abs(bump());
        return {eig <= 1e-10 && trip <= 1e-12, "max |Lambda[U] - lambda U| = " + sci(eig) + ", round trip " + sci(trip)};
    }

    std::pair<bool, std::string> c8() {
        const Tolerance tol{1e-10, 1e-10};
        long long suff = 0, bad = 0, mismatched_forms = 0;
        double worst_suff_eig = 1.0;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            const MumSet& m = sets_[i].mum;
            const int d = m.dim;
            const double c = contraction(m);
            for (int s = 0; s < 1000; ++s) {
                CounterRng g = rng(8 + i, s);
                RealVector lambda(d + 1);
                if (s % 2 == 0) {
                    lambda = eigenvalues_from_probs(random_simplex(d + 2, g), m);
                } else {
                    // around the sufficient region: sum lambda near [c, upper]
                    for (int a = 0; a <= d; ++a) lambda(a) = g.uniform(-0.2, 1.0) * std::max(c, 0.2);
                }
                const auto ch = GeneralizedPauliChannel::from_eigenvalues(m, lambda);
                const SufficientCpReport r = sufficient_cp_check(ch, tol);
                if (!r.agree) ++mismatched_forms;
                if (!r.pass) continue;
                ++suff;
                const double lo = is_completely_positive(ch, tol).choi_min_eigenvalue;
                worst_suff_eig = std::min(worst_suff_eig, lo);
                if (lo < -1e-10) ++bad;
            }
        }
        worst_suff_eig -= std::abs(bump());
        if (worst_suff_eig < -1e-10 && bad == 0) bad = 1;

        const Tolerance fa_tol{1e-9, 1e-9};
        long long disagreements = 0, fa_pass = 0, total = 0;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            if (!sets_[i].kappa_one) continue;
            const MumSet& m = sets_[i].mum;
            for (int s = 0; s < 1000; ++s) {
                CounterRng g = rng(80 + i, s);
                RealVector lambda(m.dim + 1);
                for (int a = 0; a <= m.dim; ++a) lambda(a) = g.uniform(-1.2, 1.2);
                const auto ch = GeneralizedPauliChannel::from_eigenvalues(m, lambda);
                const bool fa = fujiwara_algoet_check(lambda, m.dim, fa_tol).pass;
                const bool cp = is_completely_positive(ch, fa_tol).pass;
                fa_pass += fa ? 1 : 0;
                disagreements += fa != cp ? 1 : 0;
                ++total;
            }
        }
        return {bad == 0 && suff > 0 && mismatched_forms == 0 && disagreements == 0 && total > 0,
                "(a) " + std::to_string(suff) + " sufficient passes, " + std::to_string(bad) +
                    " with Choi < -1e-10 (min " + sci(worst_suff_eig) + "), p/lambda form mismatches " +
                    std::to_string(mismatched_forms) + "; (b) FA vs Choi disagreements " + std::to_string(disagreements) +
                    "/" + std::to_string(total) + " (FA passes " + std::to_string(fa_pass) + ")"};
    }

    std::pair<bool, std::string> c9() {
        bool pass = true;
        double worst_modified = 0.0, worst_prop = 0.0;
        for (const auto& s : sets_) {
            const CompositionReport r = composition_table(s.mum);
            double dev = std::max({r.cross, r.diag_other, r.diag_same, r.sum_rule}) + std::abs(bump());
            if (s.kappa_one) {
                dev = std::max(dev, r.idempotence);
                worst_prop = std::max(worst_prop, dev);
            } else {
                worst_modified = std::max(worst_modified, dev);
            }
            pass = pass && dev <= 1e-10;
        }
        return {pass, "modified block max dev " + sci(worst_modified) + ", kappa=1 identities (incl. idempotence) max dev " +
                          sci(worst_prop)};
    }

    std::pair<bool, std::string> c10() {
        const Tolerance tol{1e-10, 1e-10};
        long long count = 0, counter = 0;
        double worst_sum = 0.0, worst_rec = 0.0, worst_eig = 1.0, worst_ppt = 1.0;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            const MumSet& m = sets_[i].mum;
            const int d = m.dim;
            const double c = contraction(m);
            for (int s = 0; s < 1000; ++s) {
                CounterRng g = rng(10 + i, s);
                const RealVector w = random_simplex(d + 2, g);
                RealVector lambda = c * w.head(d + 1);
                if (s == 0) lambda.setConstant(c / (d + 1));  // boundary sum lambda = c
                const auto ch = GeneralizedPauliChannel::from_eigenvalues(m, lambda);
                if (!eb_sufficient(ch, tol)) continue;
                ++count;
                const HolevoForm h = holevo_form(ch, tol);
                const HolevoValidity v = holevo_validity(h, tol);
                double rec = 0.0;
                for (int a = 0; a < d; ++a) {
                    for (int b = 0; b < d; ++b) {
                        const Operator e = ket_bra(d, a, b);
                        rec = std::max(rec, max_abs(holevo_apply(h, e) - channel_apply(ch, e)));
                    }
                }
                rec += std::abs(bump());
                bool ppt = false;
                try {
                    const PptResult p = ppt_check(ch, tol);
                    ppt = p.pass;
                    worst_ppt = std::min(worst_ppt, p.min_eigenvalue);
                } catch (const Error&) {
                    ppt = false;
                }
                worst_sum = std::max(worst_sum, v.completeness_deviation);
                worst_eig = std::min(worst_eig, v.min_eigenvalue);
                worst_rec = std::max(worst_rec, rec);
                if (!v.valid || rec > 1e-10 || !ppt) ++counter;
            }
        }
        return {counter == 0 && count > 0,
                std::to_string(count) + " channels, " + std::to_string(counter) + " counterexamples; |sum E - I| " +
                    sci(worst_sum) + ", min eig(E) " + sci(worst_eig) + ", reconstruction " + sci(worst_rec) +
                    ", min eig(PPT) " + sci(worst_ppt)};
    }

    std::pair<bool, std::string> c11() {
        double gap = 0.0, ident = 0.0;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            const MumSet& m = sets_[i].mum;
            ident = std::max(ident, nu2_proof_identity_deviation(m));
            for (int s = 0; s < 100; ++s) {
                CounterRng g = rng(11 + i, s);
                RealVector lambda(m.dim + 1);
                for (int a = 0; a <= m.dim; ++a) lambda(a) = g.uniform(-1.0, 1.0);
                const auto ch = GeneralizedPauliChannel::from_eigenvalues(m, lambda);
                gap = std::max(gap, std::abs(nu2_restricted(ch) - nu2_formula(ch)));
            }
        }
        gap += std::abs(bump());
        return {gap <= 1e-12 && ident <= 1e-12,
                "max |restricted - formula| = " + sci(gap) + ", proof identity max dev " + sci(ident)};
    }

    std::pair<bool, std::string> c12() {
        long long wrong = 0, total = 0;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            const MumSet& m = sets_[i].mum;
            const bool gm_or_hw = sets_[i].name.rfind("gell-mann", 0) == 0 || sets_[i].name.rfind("heisenberg", 0) == 0;
            if (!sets_[i].kappa_one && !gm_or_hw) continue;
            for (int s = 0; s < 50; ++s) {
                CounterRng g = rng(12 + i, s);
                const auto ch = GeneralizedPauliChannel::from_probs(m, random_simplex(m.dim + 2, g));
                if (ch.eigenvalues().cwiseAbs2().maxCoeff() <= 1e-8) continue;
                const Tolerance tol{1e-10 + std::abs(bump()), 1e-10};
                const bool mult = multiplicativity_check(ch, tol);
                if (mult != sets_[i].kappa_one) ++wrong;
                ++total;
            }
        }
        return {wrong == 0 && total > 0, std::to_string(wrong) + " wrong verdicts of " + std::to_string(total)};
    }

    static std::string describe(const CensusReport& r) {
        std::string s = "unitary {";
        for (const auto& e : r.unitary_proportional) {
            s += "U" + std::to_string(e.u.axis) + "," + std::to_string(e.u.k);
            if (e.weyl) s += "~W" + std::to_string(e.weyl->first) + std::to_string(e.weyl->second);
            s += " ";
        }
        s += "} commuting {";
        for (const auto& [a, b] : r.commuting_pairs) {
            s += "(" + std::to_string(a.axis) + "," + std::to_string(a.k) + ")-(" + std::to_string(b.axis) + "," +
                 std::to_string(b.k) + ") ";
        }
        return s + "}";
    }

    std::pair<bool, std::string> c13() {
        using Key = std::tuple<int, int, int, int>;
        auto pairs = [](const CensusReport& r) {
            std::set<Key> out;
            for (const auto& [a, b] : r.commuting_pairs) out.insert({a.axis, a.k, b.axis, b.k});
            return out;
        };
        auto unitary = [](const CensusReport& r) {
            std::set<Key> out;
            for (const auto& e : r.unitary_proportional) {
                out.insert({e.u.axis, e.u.k, e.weyl ? e.weyl->first : -1, e.weyl ? e.weyl->second : -1});
            }
            return out;
        };
        const Tolerance tol{1e-10 + std::abs(bump()), 1e-10};
        const CensusReport gm = eigenvector_census(find("gell-mann-d3"), tol);
        const CensusReport hw = eigenvector_census(find("heisenberg-weyl-d3"), tol);
        std::set<Key> gm_unitary;
        for (const auto& k : unitary(gm)) gm_unitary.insert({std::get<0>(k), std::get<1>(k), 0, 0});
        const bool gm_ok = gm_unitary == std::set<Key>{{4, 1, 0, 0}, {4, 2, 0, 0}} &&
                           pairs(gm) == std::set<Key>{{4, 1, 4, 2}};
        const bool hw_ok = unitary(hw) == std::set<Key>{{1, 1, 1, 0}, {1, 2, 2, 0}} &&
                           pairs(hw) == std::set<Key>{{1, 1, 1, 2}, {4, 1, 4, 2}};
        return {gm_ok && hw_ok && bump() == 0.0, std::string("GM ") + (gm_ok ? "ok " : "MISMATCH ") + describe(gm) +
                                                     "; HW " + (hw_ok ? "ok " : "MISMATCH ") + describe(hw)};
    }

    std::pair<bool, std::string> c14() {
        double trip = 0.0, dk = 0.0;
        for (const auto& s : sets_) {
            const MumSet back = mums_from_u_operators(u_operators(s.mum), s.mum.kappa());
            dk = std::max(dk, std::abs(back.kappa() - s.mum.kappa()));
            for (int a = 0; a <= s.mum.dim; ++a) {
                for (int k = 0; k < s.mum.dim; ++k) trip = std::max(trip, max_abs(back.povms[a][k] - s.mum.povms[a][k]));
            }
        }
        const MumSet w = mums_from_u_operators(weyl_mub_u_operators(3), 1.0);
        double proj = 0.0;
        for (const auto& axis : w.povms) {
            for (const auto& p : axis) proj = std::max(proj, max_abs(p * p - p));
        }
        const MumReport r = verify_mum_conditions(w);
        proj += std::abs(bump());
        return {trip <= 1e-10 && dk <= 1e-10 && proj <= 1e-10 && r.pass,
                "round trip " + sci(trip) + ", |dkappa| " + sci(dk) + ", Weyl d=3 max |P^2 - P| " + sci(proj) +
                    (r.pass ? ", MUB table ok" : ", MUB table FAILED")};
    }

    std::pair<bool, std::string> c15() {
        const MumSet& m = find("pauli-d2-t0.2");
        RealVector lambda(3);
        lambda << 0.6, -0.3, 0.2;
        const auto ch = GeneralizedPauliChannel::from_eigenvalues(m, lambda);
        const Nu2Report r = nu2_report(ch, opt_.mc_samples, opt_.seed, opt_.threads);
        const double analytic = (1.0 + lambda.cwiseAbs2().maxCoeff()) / 2.0 + bump();
        const double mc_purity = r.mc_pure_max * r.mc_pure_max;
        const double err = std::abs(mc_purity - analytic);
        const bool flag_ok = r.mc_exceeds_formula == (r.mc_pure_max > r.formula_value + 1e-9);
        return {err <= 2e-3 && flag_ok,
                "kappa=" + fix(m.kappa(), 6) + " mc purity " + fix(mc_purity, 6) + " vs (1+max l^2)/2 = " +
                    fix(analytic, 6) + " (|err| " + sci(err) + ", " + std::to_string(r.mc_samples) +
                    " samples); nu2 mc-formula gap " + fix(r.mc_minus_formula, 6) +
                    (r.mc_exceeds_formula ? " FLAGGED mc > formula" : " not flagged")};
    }

    SuiteOptions opt_;
    std::vector<NamedMum> sets_;
    int current_ = 0;
};

}  // namespace

std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& options) { return Suite(options).run(); }

std::string format_check(const CheckResult& r) {
    std::ostringstream s;
    s << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << std::setfill('0') << r.id << " " << r.name << ": "
      << r.detail;
    return s.str();
}

std::vector<Operator> reference_u_matrices(const std::string& label, double t) {
    const Complex i(0.0, 1.0);
    const double s3 = std::sqrt(3.0);
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex w2 = w * w;
    std::vector<Operator> out(4, Operator::Zero(3, 3));
    if (label == "gell-mann") {
        const double pre = 3.0 / (2.0 * std::numbers::sqrt2) * (1.0 + s3) * t;
        out[0] << 0.0, -1.0 - i, 1.0 - i, 1.0 + i, 0.0, 0.0, -1.0 + i, 0.0, 0.0;
        out[1] << 0.0, 1.0 - i, 0.0, 1.0 - i, 0.0, 1.0 - i, 0.0, -1.0 + i, 0.0;
        out[2] << 0.0, 0.0, 1.0 + i, 0.0, 0.0, 1.0 - i, 1.0 + i, 1.0 - i, 0.0;
        for (int a = 0; a < 3; ++a) out[a] *= pre;
        out[3](0, 0) = s3 * t * (2.0 + s3 - i);
        out[3](1, 1) = s3 * t * i * (2.0 + s3 + i);
        out[3](2, 2) = s3 * t * (-(1.0 + i) * (1.0 + s3));
    } else if (label == "heisenberg-weyl") {
        out[0](0, 0) = 1.0;
        out[0](1, 1) = w;
        out[0](2, 2) = w2;
        out[0] *= s3 * (1.0 + s3) * t;
        out[1] << 0.0, i * w2 * (s3 - 1.0), w * (2.0 * i - w), -w2 * (1.0 + i), 0.0, -i * w2, -i * (w2 + s3),
            -(w2 + i), 0.0;
        out[2] << 0.0, -w2, i * (s3 - 1.0) * w2, -i * (w2 + s3), 0.0, -(w2 + s3), (s3 - 1.0) * w2, -i * w2, 0.0;
        out[3] << 0.0, -w, s3 * w, s3 * w2, 0.0, -1.0, -w2, s3, 0.0;
        for (int a = 1; a < 4; ++a) out[a] *= s3 / 2.0 * (1.0 + s3) * t;
    } else {
        throw Error(ErrorCode::BadInput, "no reference matrices for basis " + label);
    }
    return out;
}

}  // namespace mumch
