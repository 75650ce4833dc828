#include "shiftlab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace shiftlab::io {

namespace {

void require_field(const json& j, const char* field, const char* context) {
  if (!j.contains(field)) {
    throw std::invalid_argument(std::string(context) + ": missing field \"" + field + "\"");
  }
}

}  // namespace

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex value must be a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json multi_index_to_json(const MultiIndex& I) {
  json out = json::array();
  for (int c : I.coords()) out.push_back(c);
  return out;
}

MultiIndex multi_index_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("multi-index must be a non-empty integer array");
  }
  std::vector<int> coords;
  coords.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_number_integer() || c.get<int>() < 0) {
      throw std::invalid_argument("multi-index coordinates must be non-negative integers");
    }
    coords.push_back(c.get<int>());
  }
  return MultiIndex(std::move(coords));
}

json weight_family_to_json(const WeightFamily& W) {
  json entries = json::array();
  for (int r = 0; r < W.domain().dim(); ++r) {
    const MultiIndex& I = W.domain().unrank(r);
    for (int j = 1; j <= W.d(); ++j) {
      const Complex w = W.at_rank(r, j);
      entries.push_back({{"I", multi_index_to_json(I)},
                         {"j", j},
                         {"re", w.real()},
                         {"im", w.imag()}});
    }
  }
  return json{{"d", W.d()}, {"N", W.level()}, {"weights", std::move(entries)}};
}

WeightFamily weight_family_from_json(const json& j) {
  require_field(j, "d", "weight family");
  require_field(j, "N", "weight family");
  require_field(j, "weights", "weight family");
  const int d = j["d"].get<int>();
  const int N = j["N"].get<int>();
  if (d < 1 || N < 0) {
    throw std::invalid_argument("weight family: need d >= 1 and N >= 0");
  }
  std::vector<WeightEntry> entries;
  for (const auto& e : j["weights"]) {
    require_field(e, "I", "weight entry");
    require_field(e, "j", "weight entry");
    require_field(e, "re", "weight entry");
    WeightEntry entry;
    entry.index = multi_index_from_json(e["I"]);
    entry.axis = e["j"].get<int>();
    entry.value = Complex(e["re"].get<double>(),
                          e.contains("im") ? e["im"].get<double>() : 0.0);
    entries.push_back(std::move(entry));
  }
  return WeightFamily::from_entries(d, N, entries);
}

json beta_family_to_json(const BetaFamily& B) {
  json values = json::array();
  for (int r = 0; r < B.domain().dim(); ++r) {
    values.push_back({{"I", multi_index_to_json(B.domain().unrank(r))},
                      {"value", B.values()[static_cast<size_t>(r)]}});
  }
  return json{{"d", B.d()}, {"N", B.level()}, {"beta", std::move(values)}};
}

BetaFamily beta_family_from_json(const json& j) {
  require_field(j, "d", "beta family");
  require_field(j, "N", "beta family");
  require_field(j, "beta", "beta family");
  const int d = j["d"].get<int>();
  const int N = j["N"].get<int>();
  if (d < 1 || N < 0) {
    throw std::invalid_argument("beta family: need d >= 1 and N >= 0");
  }
  BasisEnumeration domain(d, N + 1);
  std::vector<double> values(static_cast<size_t>(domain.dim()), 0.0);
  std::vector<bool> seen(static_cast<size_t>(domain.dim()), false);
  for (const auto& e : j["beta"]) {
    require_field(e, "I", "beta entry");
    require_field(e, "value", "beta entry");
    const MultiIndex I = multi_index_from_json(e["I"]);
    if (I.dim() != d || I.degree() > N + 1) {
      throw std::invalid_argument("beta family: index " + I.to_string() +
                                  " outside {|I| <= " + std::to_string(N + 1) + "}");
    }
    const int r = domain.rank(I);
    if (seen[static_cast<size_t>(r)]) {
      throw std::invalid_argument("beta family: duplicate index " + I.to_string());
    }
    seen[static_cast<size_t>(r)] = true;
    values[static_cast<size_t>(r)] = e["value"].get<double>();
  }
  for (int r = 0; r < domain.dim(); ++r) {
    if (!seen[static_cast<size_t>(r)]) {
      throw std::invalid_argument("beta family: missing index " +
                                  domain.unrank(r).to_string());
    }
  }
  return BetaFamily(d, N, std::move(values));
}

json matrix_to_json(const Eigen::MatrixXcd& A) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      row.push_back(complex_to_json(A(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Eigen::MatrixXcd matrix_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw std::invalid_argument("coefficient matrix must have " + std::to_string(n) + " rows");
  }
  Eigen::MatrixXcd out(n, n);
  for (int r = 0; r < n; ++r) {
    const auto& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("coefficient matrix must be square of size " +
                                  std::to_string(n));
    }
    for (int c = 0; c < n; ++c) {
      out(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
    }
  }
  return out;
}

}  // namespace

json matrix_polynomial_to_json(const MatrixPolynomial& p) {
  json terms = json::array();
  for (const auto& [K, coeff] : p.terms()) {
    terms.push_back({{"K", multi_index_to_json(K)}, {"coeff", matrix_to_json(coeff)}});
  }
  return json{{"d", p.d()}, {"n", p.n()}, {"terms", std::move(terms)}};
}

MatrixPolynomial matrix_polynomial_from_json(const json& j) {
  require_field(j, "d", "matrix polynomial");
  require_field(j, "n", "matrix polynomial");
  require_field(j, "terms", "matrix polynomial");
  MatrixPolynomial p(j["d"].get<int>(), j["n"].get<int>());
  for (const auto& term : j["terms"]) {
    require_field(term, "K", "polynomial term");
    require_field(term, "coeff", "polynomial term");
    p.add_term(multi_index_from_json(term["K"]), matrix_from_json(term["coeff"], p.n()));
  }
  return p;
}

json shift_to_json(const TruncatedShift& T) {
  json basis = json::array();
  for (const MultiIndex& I : T.basis()) basis.push_back(multi_index_to_json(I));
  json mats = json::array();
  for (int j = 1; j <= T.d(); ++j) mats.push_back(matrix_to_json(T.component(j)));
  return json{{"d", T.d()},
              {"N", T.level()},
              {"dim", T.dim()},
              {"basis", std::move(basis)},
              {"matrices", std::move(mats)}};
}

json validation_report_to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const CommutationViolation& v : report.violations) {
    violations.push_back({{"I", multi_index_to_json(v.index)},
                          {"j", v.j},
                          {"k", v.k},
                          {"residual", v.residual}});
  }
  return json{{"max_residual", report.max_residual},
              {"tol", report.tol},
              {"ok", report.ok()},
              {"violations", std::move(violations)}};
}

json gauge_to_json(const PhaseGauge& gauge) {
  json lambda = json::object();
  for (int r = 0; r < gauge.domain.dim(); ++r) {
    lambda[gauge.domain.unrank(r).to_string()] =
        complex_to_json(gauge.lambda[static_cast<size_t>(r)]);
  }
  return json{{"lambda", std::move(lambda)},
              {"max_path_residual", gauge.max_path_residual}};
}

namespace {

json scalable_pairs_to_json(const std::vector<ScalablePair>& pairs) {
  json out = json::array();
  for (const ScalablePair& p : pairs) {
    out.push_back({{"I", multi_index_to_json(p.index)}, {"j", p.axis}});
  }
  return out;
}

}  // namespace

json boundary_state_to_json(const BoundaryState& state) {
  json good = json::array();
  json bad = json::array();
  for (int r = 0; r < state.basis.dim(); ++r) {
    (state.good[static_cast<size_t>(r)] ? good : bad)
        .push_back(multi_index_to_json(state.basis.unrank(r)));
  }
  json out{{"good", std::move(good)},
           {"bad", std::move(bad)},
           {"scalable", scalable_pairs_to_json(state.scalable)},
           {"at_boundary", state.at_boundary()}};
  if (!state.at_boundary()) out["radius"] = state.radius;
  return out;
}

json push_result_to_json(const PushResult& result) {
  json steps = json::array();
  for (const PushStep& s : result.steps) {
    steps.push_back({{"scalable", scalable_pairs_to_json(s.scalable)},
                     {"r", s.radius},
                     {"t0", complex_to_json(s.t0)},
                     {"f_before", s.f_before},
                     {"f_after", s.f_after},
                     {"slack", s.slack},
                     {"new_unimodular", scalable_pairs_to_json(s.new_unimodular)}});
  }
  return json{{"steps", std::move(steps)},
              {"path_length", result.path.size()},
              {"circle_samples", result.circle_samples},
              {"total_slack", result.total_slack},
              {"final_weights", weight_family_to_json(result.path.back())}};
}

json sup_norm_to_json(const SupNormResult& sup) {
  json angles = json::array();
  for (double a : sup.angles) angles.push_back(a);
  return json{{"value", sup.value},
              {"uncertainty", sup.uncertainty},
              {"grid_per_axis", sup.grid_per_axis},
              {"refined", sup.refined},
              {"argmax_angles", std::move(angles)}};
}

json vn_result_to_json(const VnResult& result) {
  return json{{"operator_norm", result.operator_norm},
              {"sup_norm", sup_norm_to_json(result.sup)},
              {"ratio", result.ratio},
              {"verdict", to_string(result.verdict)}};
}

json dilation_to_json(const CyclicDilation& cert) {
  return json{{"d", cert.d},
              {"N", cert.N},
              {"degree_bound", cert.degree_bound},
              {"grid_per_axis", cert.M},
              {"grid_dim", cert.grid_dim},
              {"window_dim", cert.window.dim()},
              {"battery_size", cert.battery_size},
              {"seed", cert.seed},
              {"residual", cert.residual}};
}

json obstruction_to_json(const ObstructionResult& result) {
  json spectrum = json::array();
  for (Eigen::Index i = 0; i < result.spectrum.size(); ++i) {
    spectrum.push_back(result.spectrum(i));
  }
  return json{{"min_eigenvalue", result.min_eigenvalue},
              {"verdict", to_string(result.verdict)},
              {"spectrum", std::move(spectrum)}};
}

json parrott_config_to_json(const ParrottConfig& config) {
  json couplings = json::object();
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      couplings["a_" + std::to_string(i) + std::to_string(j)] =
          complex_to_json(config.a(i, j));
    }
  }
  json delta = json::array();
  for (const Complex& dj : config.delta) delta.push_back(complex_to_json(dj));
  return json{{"couplings", std::move(couplings)}, {"delta", std::move(delta)}};
}

json refutation_report_to_json(const RefutationReport& report) {
  return json{{"config", parrott_config_to_json(report.config)},
              {"norm_full_tuple", report.norm_full_tuple},
              {"norm_compressed", report.norm_compressed},
              {"compression_gap", report.compression_gap},
              {"submatrix", matrix_to_json(report.submatrix)},
              {"submatrix_norm", report.submatrix_norm},
              {"sup_norm", sup_norm_to_json(report.sup)},
              {"ratio", report.ratio},
              {"matrix_vn_violated", report.matrix_vn_violated},
              {"grid_per_axis", report.grid_per_axis}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  return json::parse(in);  // nlohmann reports line/column on failure
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path);
  }
  out << j.dump(2) << '\n';
}

}  // namespace shiftlab::io
