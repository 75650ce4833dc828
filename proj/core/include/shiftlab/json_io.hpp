#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "shiftlab/boundary.hpp"
#include "shiftlab/dilation.hpp"
#include "shiftlab/matrix_polynomial.hpp"
#include "shiftlab/normalize.hpp"
#include "shiftlab/parrott.hpp"
#include "shiftlab/shift.hpp"
#include "shiftlab/vn_check.hpp"
#include "shiftlab/weights.hpp"

namespace shiftlab::io {

using nlohmann::json;

// Complex numbers serialize as [re, im]; multi-indices as integer arrays.
json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

json multi_index_to_json(const MultiIndex& I);
MultiIndex multi_index_from_json(const json& j);

// {"d":3,"N":2,"weights":[{"I":[0,0,0],"j":1,"re":0.5,"im":0.0}, ...]}
// Every (I, j) pair must be present; missing entries are an error.
json weight_family_to_json(const WeightFamily& W);
WeightFamily weight_family_from_json(const json& j);

// {"d":2,"N":2,"beta":[{"I":[0,0],"value":1.0}, ...]} over |I| <= N+1.
json beta_family_to_json(const BetaFamily& B);
BetaFamily beta_family_from_json(const json& j);

// {"d":3,"n":3,"terms":[{"K":[1,0,0],"coeff":[[[re,im],...], ...]}, ...]}
json matrix_polynomial_to_json(const MatrixPolynomial& p);
MatrixPolynomial matrix_polynomial_from_json(const json& j);

// Row-major matrices of [re, im] pairs with the basis enumeration attached.
json shift_to_json(const TruncatedShift& T);

json matrix_to_json(const Eigen::MatrixXcd& A);

json validation_report_to_json(const ValidationReport& report);
json gauge_to_json(const PhaseGauge& gauge);
json boundary_state_to_json(const BoundaryState& state);
json push_result_to_json(const PushResult& result);
json sup_norm_to_json(const SupNormResult& sup);
json vn_result_to_json(const VnResult& result);
json dilation_to_json(const CyclicDilation& cert);
json obstruction_to_json(const ObstructionResult& result);
json parrott_config_to_json(const ParrottConfig& config);
json refutation_report_to_json(const RefutationReport& report);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace shiftlab::io
