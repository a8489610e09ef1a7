#include "mumch/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mumch {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    return j.get<double>();
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

Json index_to_json(const UIndex& u) { return Json::array({u.axis, u.k}); }

OperatorTable table_from_json(const Json& j, int d, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of arrays");
    OperatorTable out;
    for (const auto& row : j) {
        if (!row.is_array()) bad(std::string(what) + " must be an array of arrays");
        std::vector<Operator> ops;
        for (const auto& m : row) {
            Operator a = matrix_from_json(m);
            if (a.rows() != d) throw Error(ErrorCode::DimMismatch, std::string(what) + ": operator dimension differs from dim");
            ops.push_back(std::move(a));
        }
        out.push_back(std::move(ops));
    }
    return out;
}

}  // namespace

Json matrix_to_json(const Operator& a) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(Json::array({a(i, j).real(), a(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    Json out;
    out["dim"] = a.rows();
    out["entries"] = std::move(rows);
    return out;
}

Operator matrix_from_json(const Json& j) {
    const int d = integer(field(j, "dim"), "dim");
    if (d < 1) bad("dim must be positive");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != d) bad("entries must have dim rows");
    Operator a(d, d);
    for (int r = 0; r < d; ++r) {
        const Json& row = entries[r];
        if (!row.is_array() || static_cast<int>(row.size()) != d) bad("entries must be dim x dim");
        for (int c = 0; c < d; ++c) {
            const Json& z = row[c];
            if (!z.is_array() || z.size() != 2) bad("each entry must be [re, im]");
            a(r, c) = Complex(number(z[0], "re"), number(z[1], "im"));
        }
    }
    return a;
}

Json axis_basis_to_json(const AxisBasis& b) {
    Json axes = Json::array();
    for (const auto& axis : b.axes) {
        Json row = Json::array();
        for (const auto& op : axis) row.push_back(matrix_to_json(op));
        axes.push_back(std::move(row));
    }
    Json out;
    out["dim"] = b.dim;
    out["label"] = b.label;
    out["axes"] = std::move(axes);
    return out;
}

AxisBasis axis_basis_from_json(const Json& j, const Tolerance& tol) {
    AxisBasis b;
    b.dim = integer(field(j, "dim"), "dim");
    b.label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "custom";
    b.axes = table_from_json(field(j, "axes"), b.dim, "axes");
    validate_axis_basis(b, tol);
    return b;
}

Json mum_to_json(const MumSet& m) {
    Json povms = Json::array();
    for (const auto& axis : m.povms) {
        Json row = Json::array();
        for (const auto& p : axis) row.push_back(matrix_to_json(p));
        povms.push_back(std::move(row));
    }
    Json out;
    out["dim"] = m.dim;
    out["label"] = m.label;
    out["t"] = m.t;
    out["kappa"] = m.kappa();
    out["povms"] = std::move(povms);
    return out;
}

MumSet mum_from_json(const Json& j, const Tolerance& tol) {
    MumSet m;
    m.dim = integer(field(j, "dim"), "dim");
    if (m.dim < 2) throw Error(ErrorCode::BadDimension, "dim must be >= 2");
    m.label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "custom";
    m.t = number(field(j, "t"), "t");
    if (m.t == 0.0) throw Error(ErrorCode::TZero, "t must be nonzero");
    if (j.contains("kappa")) {
        const double stored = number(j["kappa"], "kappa");
        if (std::abs(stored - m.kappa()) > 1e-9) bad("kappa is inconsistent with t");
    }
    m.povms = table_from_json(field(j, "povms"), m.dim, "povms");
    if (static_cast<int>(m.povms.size()) != m.dim + 1) bad("povms must have d+1 axes");
    const Operator base = identity(m.dim) / static_cast<double>(m.dim);
    for (const auto& axis : m.povms) {
        if (static_cast<int>(axis.size()) != m.dim) bad("every axis must hold d POVM elements");
        std::vector<Operator> row;
        for (const auto& p : axis) {
            if (!is_hermitian(p, tol.eq_tol)) throw Error(ErrorCode::NonHermitian, "POVM element is not Hermitian");
            row.push_back((p - base) / m.t);
        }
        m.f_ops.push_back(std::move(row));
    }
    return m;
}

Json vector_to_json(const RealVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

RealVector vector_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array of numbers");
    RealVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], "vector entry");
    return v;
}

Json channel_to_json(const GeneralizedPauliChannel& ch, const std::string& mum_ref) {
    Json out;
    out["mum_ref"] = mum_ref;
    out["mum"] = mum_to_json(ch.mums());
    out["probs"] = vector_to_json(ch.probs());
    out["eigenvalues"] = vector_to_json(ch.eigenvalues());
    return out;
}

GeneralizedPauliChannel channel_from_json(const Json& j, const Tolerance& tol) {
    MumSet m;
    if (j.contains("mum")) {
        m = mum_from_json(j["mum"], tol);
    } else {
        m = mum_from_json(read_json_file(field(j, "mum_ref").get<std::string>()), tol);
    }
    if (j.contains("eigenvalues")) {
        return GeneralizedPauliChannel::from_eigenvalues(std::move(m), vector_from_json(j["eigenvalues"]));
    }
    return GeneralizedPauliChannel::from_probs(std::move(m), vector_from_json(field(j, "probs")), tol);
}

Json mum_report_to_json(const MumReport& r) {
    Json out;
    out["trace_deviation"] = r.trace_deviation;
    out["table_deviation"] = r.table_deviation;
    out["completeness_deviation"] = r.completeness_deviation;
    out["hermiticity_deviation"] = r.hermiticity_deviation;
    out["min_eigenvalue"] = r.min_eigenvalue;
    out["pass"] = r.pass;
    return out;
}

Json interval_to_json(int d, const TInterval& iv, const OptimalT& opt) {
    Json out;
    out["dim"] = d;
    out["t_min"] = iv.t_min;
    out["t_max"] = iv.t_max;
    out["kappa_at_t_min"] = kappa_from_t(d, iv.t_min);
    out["kappa_at_t_max"] = kappa_from_t(d, iv.t_max);
    out["kappa_range"] = Json::array({1.0 / d, opt.kappa});
    out["t_opt"] = opt.t;
    out["kappa_opt"] = opt.kappa;
    return out;
}

Json eb_report_to_json(const EbReport& r) {
    Json out;
    out["sum_lambda"] = r.sum_lambda;
    out["sufficient_threshold"] = r.sufficient_threshold;
    out["necessary_pass"] = r.necessary_pass;
    out["sufficient_pass"] = r.sufficient_pass;
    out["holevo_povm_valid"] = r.holevo_povm_valid ? Json(*r.holevo_povm_valid) : Json(nullptr);
    out["cp"] = r.cp;
    out["ppt_min_eigenvalue"] = r.ppt_min_eigenvalue ? Json(*r.ppt_min_eigenvalue) : Json(nullptr);
    out["ppt_pass"] = r.ppt_pass;
    return out;
}

Json nu2_report_to_json(const Nu2Report& r) {
    Json out;
    out["formula_value"] = r.formula_value;
    out["restricted_max"] = r.restricted_max;
    out["mc_pure_max"] = r.mc_pure_max;
    out["mc_samples"] = r.mc_samples;
    out["seed"] = r.seed;
    out["qubit_pure_max"] = r.qubit_pure_max ? Json(*r.qubit_pure_max) : Json(nullptr);
    out["mc_minus_formula"] = r.mc_minus_formula;
    out["mc_exceeds_formula"] = r.mc_exceeds_formula;
    out["multiplicativity_pass"] = r.multiplicativity_pass;
    return out;
}

Json census_to_json(const CensusReport& r) {
    Json unitary = Json::array();
    for (const auto& e : r.unitary_proportional) {
        Json item;
        item["u"] = index_to_json(e.u);
        item["scale"] = e.scale;
        item["weyl"] = e.weyl ? Json::array({e.weyl->first, e.weyl->second}) : Json(nullptr);
        unitary.push_back(std::move(item));
    }
    Json pairs = Json::array();
    for (const auto& [a, b] : r.commuting_pairs) pairs.push_back(Json::array({index_to_json(a), index_to_json(b)}));
    Json out;
    out["unitary_proportional"] = std::move(unitary);
    out["commuting_pairs"] = std::move(pairs);
    return out;
}

Json composition_to_json(const CompositionReport& r) {
    Json out;
    out["kappa"] = r.kappa;
    out["kappa_is_one"] = r.kappa_is_one;
    out["cross"] = r.cross;
    out["diag_other"] = r.diag_other;
    out["diag_same"] = r.diag_same;
    out["sum_rule"] = r.sum_rule;
    out["idempotence"] = r.idempotence;
    out["pass"] = r.pass;
    return out;
}

Json commutation_to_json(const CommutationReport& r) {
    Json per = Json::array();
    for (const auto& row : r.covariance_per_u) per.push_back(row);
    Json out;
    out["lambda_phi"] = r.lambda_phi;
    out["lambda_phi_pass"] = r.lambda_phi_pass;
    out["covariance"] = r.covariance;
    out["covariance_per_u"] = std::move(per);
    return out;
}

Json sufficient_cp_to_json(const SufficientCpReport& r) {
    Json out;
    out["p_form"] = r.p_form;
    out["lambda_form"] = r.lambda_form;
    out["sum_lambda"] = r.sum_lambda;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["agree"] = r.agree;
    out["pass"] = r.pass;
    return out;
}

Json fa_report_to_json(const FaReport& r) {
    Json out;
    out["sum_lambda"] = r.sum_lambda;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["pass"] = r.pass;
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::exception& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace mumch
