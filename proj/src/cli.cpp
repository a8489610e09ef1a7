#include "mumch/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mumch/analysis.hpp"
#include "mumch/bases.hpp"
#include "mumch/channel.hpp"
#include "mumch/io.hpp"
#include "mumch/mum.hpp"
#include "mumch/suite.hpp"

namespace mumch {
namespace {

struct Config {
    bool strict = false;
    double eq_tol = 1e-10;
    double psd_tol = 1e-10;
    int threads = 0;
    std::optional<std::uint64_t> seed;
    std::string output;

    std::string basis = "gell-mann";
    std::string basis_file;
    std::string hw_phase = "symmetric";
    int dim = 3;
    std::string t = "optimal";
    double kappa = 1.0;
    std::string file;
    std::string mum_file;
    std::string probs;
    std::string eigenvalues;
    long long mc_samples = 20000;
    bool json = false;
    std::vector<std::string> perturb;

    Tolerance tol() const { return Tolerance::make(eq_tol, psd_tol); }
};

std::uint64_t resolve_seed(const Config& c) {
    if (c.seed) return *c.seed;
    if (const char* env = std::getenv("MUM_CHANNELS_SEED")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw Error(ErrorCode::BadInput, std::string("MUM_CHANNELS_SEED is not an unsigned integer: ") + env);
    }
    return 0;
}

int resolve_threads(const Config& c) {
    if (c.threads > 0) return c.threads;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

RealVector parse_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadInput, std::string(what) + ": cannot parse \"" + item + "\"");
        }
    }
    if (values.empty()) throw Error(ErrorCode::BadInput, std::string(what) + " is empty");
    return Eigen::Map<RealVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

AxisBasis make_basis(const Config& c) {
    const Tolerance tol = c.tol();
    if (c.basis == "pauli") {
        if (c.dim != 2) throw Error(ErrorCode::BadDimension, "the Pauli basis exists only for d = 2");
        return pauli_axis_basis();
    }
    if (c.basis == "gell-mann") return gell_mann_basis(c.dim);
    if (c.basis == "heisenberg-weyl") {
        return hw_observable_basis(c.dim, c.hw_phase == "literal" ? HwPhase::Literal : HwPhase::Symmetric);
    }
    if (c.basis == "file") {
        if (c.basis_file.empty()) throw Error(ErrorCode::BadInput, "--basis file requires --basis-file");
        return axis_basis_from_json(read_json_file(c.basis_file), tol);
    }
    throw Error(ErrorCode::BadInput, "unknown basis " + c.basis);
}

void emit(const Json& j, const Config& c, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + c.output);
    f << text;
}

int cmd_basis(const Config& c, std::ostream& out) {
    emit(axis_basis_to_json(make_basis(c)), c, out);
    return 0;
}

int cmd_mum_build(const Config& c, std::ostream& out) {
    const Tolerance tol = c.tol();
    MumSet m;
    if (c.basis == "weyl-mub") {
        m = mums_from_u_operators(weyl_mub_u_operators(c.dim, c.kappa), c.kappa, tol);
    } else {
        const AxisBasis b = make_basis(c);
        double t = 0.0;
        if (c.t == "optimal") {
            t = optimal_t(b, tol).t;
        } else {
            t = parse_list(c.t, "--t")(0);
        }
        m = build_mums(b, t, tol);
    }
    emit(mum_to_json(m), c, out);
    return 0;
}

int cmd_mum_verify(const Config& c, std::ostream& out) {
    const Tolerance tol = c.tol();
    const MumReport r = verify_mum_conditions(mum_from_json(read_json_file(c.file), tol), tol);
    emit(mum_report_to_json(r), c, out);
    return (c.strict && !r.pass) ? 1 : 0;
}

int cmd_mum_optimize(const Config& c, std::ostream& out) {
    const Tolerance tol = c.tol();
    const AxisBasis b = make_basis(c);
    Json j = interval_to_json(b.dim, feasible_t_interval(b, tol), optimal_t(b, tol));
    j["basis"] = b.label;
    emit(j, c, out);
    return 0;
}

int cmd_channel_build(const Config& c, std::ostream& out) {
    const Tolerance tol = c.tol();
    if (c.probs.empty() == c.eigenvalues.empty()) {
        throw Error(ErrorCode::BadInput, "give exactly one of --probs and --eigenvalues");
    }
    MumSet m = mum_from_json(read_json_file(c.mum_file), tol);
    const auto ch = c.probs.empty()
                        ? GeneralizedPauliChannel::from_eigenvalues(std::move(m), parse_list(c.eigenvalues, "--eigenvalues"))
                        : GeneralizedPauliChannel::from_probs(std::move(m), parse_list(c.probs, "--probs"), tol);
    emit(channel_to_json(ch, c.mum_file), c, out);
    return 0;
}

int cmd_channel_check(const Config& c, std::ostream& out) {
    const Tolerance tol = c.tol();
    const auto ch = channel_from_json(read_json_file(c.file), tol);
    const CpVerdict cp = is_completely_positive(ch, tol);
    Json j;
    j["cp"] = {{"choi_min_eig", cp.choi_min_eigenvalue}, {"verdict", cp.pass}};
    j["sufficient_cp"] = sufficient_cp_to_json(sufficient_cp_check(ch, tol));
    const CompositionReport comp = composition_table(ch.mums(), tol);
    j["fa"] = comp.kappa_is_one ? fa_report_to_json(fujiwara_algoet_check(ch.eigenvalues(), ch.dim(), tol)) : Json(nullptr);
    j["composition_deviations"] = composition_to_json(comp);
    j["commutation_deviations"] = commutation_to_json(commutation_check(ch, resolve_seed(c), 8, tol));
    emit(j, c, out);
    return (c.strict && !cp.pass) ? 1 : 0;
}

int cmd_analyze(const Config& c, std::ostream& out) {
    const Tolerance tol = c.tol();
    if (c.mc_samples < 1) throw Error(ErrorCode::BadInput, "--mc-samples must be >= 1");
    const auto ch = channel_from_json(read_json_file(c.file), tol);
    const EbReport eb = eb_report(ch, tol);
    Json j;
    j["eb"] = eb_report_to_json(eb);
    j["nu2"] = nu2_report_to_json(nu2_report(ch, c.mc_samples, resolve_seed(c), resolve_threads(c), tol));
    j["census"] = census_to_json(eigenvector_census(ch.mums(), tol));
    emit(j, c, out);
    return (c.strict && !eb.cp) ? 1 : 0;
}

int cmd_suite(const Config& c, std::ostream& out) {
    SuiteOptions opt;
    opt.seed = resolve_seed(c);
    opt.threads = resolve_threads(c);
    for (const auto& p : c.perturb) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::BadInput, "--perturb expects ID=DELTA, got " + p);
        try {
            opt.perturbation[std::stoi(p.substr(0, eq))] = std::stod(p.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadInput, "--perturb expects ID=DELTA, got " + p);
        }
    }
    const std::vector<CheckResult> rows = run_acceptance_suite(opt);
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (c.json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        emit(arr, c, out);
    } else {
        for (const auto& r : rows) out << format_check(r) << "\n";
        out << (all ? "all checks passed" : "some checks failed") << "\n";
    }
    return all ? 0 : 1;
}

Json error_json(std::string_view code, const std::string& detail) {
    Json j;
    j["error"] = code;
    j["detail"] = detail;
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Mutually unbiased measurements and generalized Pauli channels", "mumch"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--strict", c.strict, "Exit 1 when a verdict fails");
    app.add_option("--eq-tol", c.eq_tol, "Equality tolerance")->capture_default_str();
    app.add_option("--psd-tol", c.psd_tol, "Eigenvalue floor for positivity")->capture_default_str();
    app.add_option("--threads", c.threads, "Worker cap for Monte-Carlo sampling (0 = all cores)");
    app.add_option("--seed", c.seed, "RNG seed (default 0, or MUM_CHANNELS_SEED)");
    app.add_option("--output", c.output, "Write JSON here instead of stdout");

    const std::vector<std::string> bases = {"pauli", "gell-mann", "heisenberg-weyl", "file"};
    auto add_basis_options = [&](CLI::App* sub, bool allow_weyl) {
        std::vector<std::string> choices = bases;
        if (allow_weyl) choices.push_back("weyl-mub");
        sub->add_option("--basis", c.basis, "Operator basis")->check(CLI::IsMember(choices))->capture_default_str();
        sub->add_option("--dim", c.dim, "Dimension d")->capture_default_str();
        sub->add_option("--basis-file", c.basis_file, "AxisBasis JSON for --basis file");
        sub->add_option("--hw-phase", c.hw_phase, "Heisenberg-Weyl phase convention")
            ->check(CLI::IsMember({"symmetric", "literal"}))
            ->capture_default_str();
    };

    auto* basis = app.add_subcommand("basis", "Emit an axis basis as JSON");
    add_basis_options(basis, false);

    auto* mum = app.add_subcommand("mum", "Build, verify or optimize MUMs");
    mum->require_subcommand(1);
    mum->fallthrough();
    auto* mum_build = mum->add_subcommand("build", "Build a MumSet");
    add_basis_options(mum_build, true);
    mum_build->add_option("--t", c.t, "optimal or a number")->capture_default_str();
    mum_build->add_option("--kappa", c.kappa, "kappa for --basis weyl-mub")->capture_default_str();
    auto* mum_verify = mum->add_subcommand("verify", "Check the MUM conditions of a MumSet file");
    mum_verify->add_option("--file", c.file, "MumSet JSON")->required();
    auto* mum_optimize = mum->add_subcommand("optimize", "Report the feasible t interval and optimum");
    add_basis_options(mum_optimize, false);

    auto* channel = app.add_subcommand("channel", "Build or check generalized Pauli channels");
    channel->require_subcommand(1);
    channel->fallthrough();
    auto* channel_build = channel->add_subcommand("build", "Build a channel from a MumSet file");
    channel_build->add_option("--mum", c.mum_file, "MumSet JSON")->required();
    channel_build->add_option("--probs", c.probs, "p0,p1,...,p_{d+1}");
    channel_build->add_option("--eigenvalues", c.eigenvalues, "l1,...,l_{d+1} (use --eigenvalues=-1,... for a leading minus)");
    auto* channel_check = channel->add_subcommand("check", "CP, composition and commutation checks");
    channel_check->add_option("--file", c.file, "Channel JSON")->required();

    auto* analyze = app.add_subcommand("analyze", "Entanglement breaking, output 2-norm and eigenvector census");
    analyze->add_option("--channel", c.file, "Channel JSON")->required();
    analyze->add_option("--mc-samples", c.mc_samples, "Haar samples for the pure-state maximum")->capture_default_str();

    auto* suite = app.add_subcommand("paper-suite", "Run the acceptance checks");
    suite->add_flag("--json", c.json, "Machine-readable results");
    suite->add_option("--perturb", c.perturb, "Test hook: ID=DELTA shifts the reference constant of check ID");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        out << error_json(code_name(ErrorCode::BadInput), e.what()).dump() << "\n";
        err << "mumch: " << e.what() << "\n";
        return 2;
    }

    try {
        if (basis->parsed()) return cmd_basis(c, out);
        if (mum_build->parsed()) return cmd_mum_build(c, out);
        if (mum_verify->parsed()) return cmd_mum_verify(c, out);
        if (mum_optimize->parsed()) return cmd_mum_optimize(c, out);
        if (channel_build->parsed()) return cmd_channel_build(c, out);
        if (channel_check->parsed()) return cmd_channel_check(c, out);
        if (analyze->parsed()) return cmd_analyze(c, out);
        if (suite->parsed()) return cmd_suite(c, out);
    } catch (const Error& e) {
        out << error_json(code_name(e.code()), e.what()).dump() << "\n";
        err << "mumch: " << code_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace mumch
