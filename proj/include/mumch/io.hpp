#pragma once

#include <string>

#include "json.hpp"
#include "mumch/analysis.hpp"
#include "mumch/bases.hpp"
#include "mumch/channel.hpp"
#include "mumch/mum.hpp"

namespace mumch {

using Json = nlohmann::ordered_json;

// {"dim": d, "entries": [[[re, im], ...], ...]}, row-major.
Json matrix_to_json(const Operator& a);
Operator matrix_from_json(const Json& j);

// {"dim", "label", "axes": [[matrix, ...], ...]}
Json axis_basis_to_json(const AxisBasis& b);
AxisBasis axis_basis_from_json(const Json& j, const Tolerance& tol = {});

// {"dim", "label", "t", "kappa", "povms"}; F operators are rebuilt on load
// as (P - I/d)/t.
Json mum_to_json(const MumSet& m);
MumSet mum_from_json(const Json& j, const Tolerance& tol = {});

// {"mum_ref", "mum", "probs", "eigenvalues"}; loading goes through the
// eigenvalues so channels with negative p survive a round trip.
Json channel_to_json(const GeneralizedPauliChannel& ch, const std::string& mum_ref);
GeneralizedPauliChannel channel_from_json(const Json& j, const Tolerance& tol = {});

Json vector_to_json(const RealVector& v);
RealVector vector_from_json(const Json& j);

Json mum_report_to_json(const MumReport& r);
Json interval_to_json(int d, const TInterval& iv, const OptimalT& opt);
Json eb_report_to_json(const EbReport& r);
Json nu2_report_to_json(const Nu2Report& r);
Json census_to_json(const CensusReport& r);
Json composition_to_json(const CompositionReport& r);
Json commutation_to_json(const CommutationReport& r);
Json sufficient_cp_to_json(const SufficientCpReport& r);
Json fa_report_to_json(const FaReport& r);

Json read_json_file(const std::string& path);

}  // namespace mumch
