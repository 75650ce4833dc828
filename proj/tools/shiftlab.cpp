// shiftlab: weighted-shift construction, certification and counterexample CLI.
//
// Exit codes: 0 success, 1 mathematical failure (an inequality violation or a
// dilation obstruction was found where the contract expects none), 2 input
// error (unreadable/ill-formed files, bad arguments).

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "shiftlab/json_io.hpp"
#include "shiftlab/parallel.hpp"
#include "shiftlab/version.hpp"

namespace {

using namespace shiftlab;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;
constexpr std::int64_t kDimensionCap = 50000;

struct GlobalOptions {
  double tol = kDefaultCommutationTol;
  int grid = 64;
  std::uint64_t seed = 12345;
  bool pretty = false;
  std::string output_path;
};

void emit(const GlobalOptions& opts, json doc) {
  doc["tool"] = "shiftlab";
  doc["version"] = kVersion;
  doc["tolerances"] = {{"commutation", opts.tol},
                       {"unimodular", kUnimodularTol},
                       {"grid_per_axis", opts.grid}};
  const std::string text = opts.pretty ? doc.dump(2) : doc.dump();
  if (opts.output_path.empty()) {
    std::cout << text << '\n';
  } else {
    io::save_json_file(opts.output_path, doc);
  }
}

void enforce_dimension_cap(int d, int N) {
  // The shift acts on the level N+1 space; keep dense SVDs at desk scale.
  const std::int64_t D = basis_dimension(d, N + 1);
  if (D > kDimensionCap) {
    throw std::invalid_argument("shift dimension " + std::to_string(D) +
                                " exceeds the safety cap " + std::to_string(kDimensionCap));
  }
}

WeightFamily load_weights(const std::string& path) {
  const WeightFamily W = io::weight_family_from_json(io::load_json_file(path));
  enforce_dimension_cap(W.d(), W.level());
  return W;
}

int cmd_validate(const GlobalOptions& opts, const std::string& weights_path) {
  const WeightFamily W = load_weights(weights_path);
  const ValidationReport report = validate_commuting(W, opts.tol);
  json doc{{"command", "validate"},
           {"report", io::validation_report_to_json(report)},
           {"contractive", W.contractive()},
           {"injective", W.injective()}};
  emit(opts, doc);
  return report.ok() ? kExitOk : kExitMathFailure;
}

int cmd_build(const GlobalOptions& opts, const std::string& weights_path) {
  const TruncatedShift T = build_shift(load_weights(weights_path), opts.tol);
  json doc{{"command", "build"}, {"shift", io::shift_to_json(T)}};
  emit(opts, doc);
  return kExitOk;
}

int cmd_normalize(const GlobalOptions& opts, const std::string& weights_path) {
  const WeightFamily W = load_weights(weights_path);
  const PhaseNormalization norm = phase_normalize(W);
  json doc{{"command", "normalize"},
           {"gauge", io::gauge_to_json(norm.gauge)},
           {"abs_weights", io::weight_family_to_json(norm.abs_weights)}};
  emit(opts, doc);
  return kExitOk;
}

int cmd_classify(const GlobalOptions& opts, const std::string& weights_path) {
  const BoundaryState state = classify(load_weights(weights_path));
  json doc{{"command", "classify"}, {"state", io::boundary_state_to_json(state)}};
  emit(opts, doc);
  return kExitOk;
}

std::optional<AnalyticFunctional> make_functional(const WeightFamily& W,
                                                  const std::string& poly_path) {
  if (poly_path.empty()) return std::nullopt;
  AnalyticFunctional f;
  f.poly = io::matrix_polynomial_from_json(io::load_json_file(poly_path));
  if (f.poly.d() != W.d()) {
    throw std::invalid_argument("functional polynomial has " + std::to_string(f.poly.d()) +
                                " variables, family has " + std::to_string(W.d()));
  }
  const Eigen::Index size =
      static_cast<Eigen::Index>(f.poly.n()) * basis_dimension(W.d(), W.level() + 1);
  f.g = Eigen::VectorXcd::Ones(size).normalized();
  f.h = Eigen::VectorXcd::Ones(size).normalized();
  return f;
}

int cmd_push(const GlobalOptions& opts, const std::string& weights_path,
             const std::string& poly_path, int samples) {
  const WeightFamily W = load_weights(weights_path);
  const PushResult result = push_to_boundary(W, make_functional(W, poly_path), samples);
  json doc{{"command", "push"}, {"trace", io::push_result_to_json(result)}};
  emit(opts, doc);
  return kExitOk;
}

int cmd_vn_check(const GlobalOptions& opts, const std::string& weights_path,
                 const std::string& poly_path, bool no_refine) {
  const WeightFamily W = load_weights(weights_path);
  const MatrixPolynomial p = io::matrix_polynomial_from_json(io::load_json_file(poly_path));
  const VnResult result = vn_check(p, build_shift(W, opts.tol), opts.grid, !no_refine);
  json doc{{"command", "vn-check"}, {"result", io::vn_result_to_json(result)}};
  emit(opts, doc);
  return result.verdict == VnVerdict::kViolated ? kExitMathFailure : kExitOk;
}

int cmd_dilate_check(const GlobalOptions& opts, int d, int N, int degree_bound, int battery) {
  enforce_dimension_cap(d, N);
  const CyclicDilation cert = build_cyclic_dilation(N, d, degree_bound, battery, opts.seed);
  json doc{{"command", "dilate-check"}, {"certificate", io::dilation_to_json(cert)}};
  emit(opts, doc);
  return cert.residual <= 1e-12 ? kExitOk : kExitMathFailure;
}

std::vector<int> parse_axis_set(const std::string& text, int d) {
  std::vector<int> axes;
  std::string token;
  for (char c : text + ",") {
    if (c == ',') {
      if (!token.empty()) {
        axes.push_back(std::stoi(token));
        token.clear();
      }
    } else {
      token.push_back(c);
    }
  }
  for (int axis : axes) {
    if (axis < 1 || axis > d) {
      throw std::invalid_argument("axis " + std::to_string(axis) + " out of range 1.." +
                                  std::to_string(d));
    }
  }
  return axes;
}

int cmd_brehmer(const GlobalOptions& opts, const std::string& weights_path,
                const std::string& axes_text) {
  const WeightFamily W = load_weights(weights_path);
  const TruncatedShift T = build_shift(W, opts.tol);
  const std::vector<int> axes = parse_axis_set(axes_text, W.d());
  const Eigen::MatrixXcd delta = brehmer_defect(T, axes);
  const Eigen::VectorXd spectrum = hermitian_eigenvalues(delta);
  json spectrum_json = json::array();
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) spectrum_json.push_back(spectrum(i));
  const bool obstruction = spectrum(0) < -opts.tol;
  json doc{{"command", "brehmer"},
           {"axes", axes},
           {"spectrum", std::move(spectrum_json)},
           {"min_eigenvalue", spectrum(0)},
           {"obstruction", obstruction}};
  emit(opts, doc);
  return obstruction ? kExitMathFailure : kExitOk;
}

int cmd_parrott(const GlobalOptions& opts, bool all_ones) {
  const ParrottConfig config =
      all_ones ? ParrottConfig::all_ones() : ParrottConfig::signed_config();
  const RefutationReport report = parrott_refutation_report(config, opts.grid);
  const DeltaRigidity rigidity = solve_delta_constraints(config);
  json doc{{"command", "parrott"},
           {"report", io::refutation_report_to_json(report)},
           {"delta_nullity", rigidity.nullity}};
  emit(opts, doc);

  std::cerr << "||p(T)|| = " << report.norm_full_tuple
            << ", sup over the torus = " << report.sup.value << " +/- "
            << report.sup.uncertainty << ", ratio = " << report.ratio << "\n"
            << "matrix von Neumann inequality "
            << (report.matrix_vn_violated
                    ? "VIOLATED: the tuple does not dilate to commuting unitaries"
                    : "not violated at this grid")
            << "\n";

  // The signed configuration must reproduce the violation; the all-ones
  // configuration must not produce one.
  const bool expected = all_ones ? !report.matrix_vn_violated : report.matrix_vn_violated;
  return expected ? kExitOk : kExitMathFailure;
}

int cmd_pipeline(const GlobalOptions& opts, const std::string& weights_path, bool no_push,
                 int battery, int samples) {
  const WeightFamily W = load_weights(weights_path);
  json doc{{"command", "pipeline"}, {"seed", opts.seed}};
  bool math_failure = false;

  const ValidationReport validation = validate_commuting(W, opts.tol);
  doc["validate"] = io::validation_report_to_json(validation);
  doc["injective"] = W.injective();
  doc["contractive"] = W.contractive();
  if (!validation.ok()) {
    doc["verdict"] = "family does not commute";
    emit(opts, doc);
    return kExitMathFailure;
  }

  if (W.injective()) {
    const PhaseNormalization norm = phase_normalize(W);
    doc["normalize"] = {{"max_path_residual", norm.gauge.max_path_residual},
                        {"skipped", false}};
  } else {
    doc["normalize"] = {{"skipped", true}, {"reason", "zero weights"}};
  }

  const bool classifiable = W.injective() && W.contractive();
  if (classifiable) {
    const BoundaryState state = classify(W);
    doc["classify"] = io::boundary_state_to_json(state);
    if (!no_push && !state.at_boundary()) {
      const PushResult push = push_to_boundary(W, std::nullopt, samples);
      doc["push"] = {{"steps", push.steps.size()},
                     {"total_slack", push.total_slack},
                     {"final_unimodular",
                      push.path.back().unimodular_count() ==
                          static_cast<int>(push.path.back().entries().size())}};
    } else {
      doc["push"] = {{"skipped", true},
                     {"reason", no_push ? "disabled" : "already on the boundary"}};
    }
  } else {
    const char* reason = W.injective() ? "not contractive" : "zero weights";
    doc["classify"] = {{"skipped", true}, {"reason", reason}};
    doc["push"] = {{"skipped", true}, {"reason", reason}};
  }

  if (W.contractive()) {
    const TruncatedShift T = build_shift(W, opts.tol);
    json battery_json = json::array();
    double worst_ratio = 0.0;
    int violations = 0;
    for (int i = 0; i < battery; ++i) {
      const int n = (i % 2 == 0) ? 1 : 2;
      const MatrixPolynomial p =
          random_matrix_polynomial(W.d(), n, 3, opts.seed + static_cast<std::uint64_t>(i));
      const VnResult result = vn_check(p, T, opts.grid, true);
      worst_ratio = std::max(worst_ratio, result.ratio);
      if (result.verdict == VnVerdict::kViolated) ++violations;
      battery_json.push_back({{"n", n}, {"ratio", result.ratio},
                              {"verdict", to_string(result.verdict)}});
    }
    doc["vn_battery"] = {{"count", battery},
                         {"worst_ratio", worst_ratio},
                         {"violations", violations},
                         {"results", std::move(battery_json)}};
    // A violation on an injective contractive family would contradict the
    // dilation guarantee; on zero-weight families it is a legitimate finding.
    if (violations > 0 && W.injective()) math_failure = true;
  } else {
    doc["vn_battery"] = {{"skipped", true}, {"reason", "not contractive"}};
  }

  const TruncatedShift T = build_shift(W, opts.tol);
  json brehmer_json = json::array();
  for (int j = 1; j <= W.d(); ++j) {
    for (int k = j + 1; k <= W.d(); ++k) {
      const ObstructionResult result = doubly_commuting_obstruction(T, j, k);
      brehmer_json.push_back({{"axes", {j, k}},
                              {"min_eigenvalue", result.min_eigenvalue},
                              {"verdict", to_string(result.verdict)}});
    }
  }
  doc["brehmer"] = std::move(brehmer_json);

  doc["verdict"] = math_failure ? "violation found where the theory expects none" : "ok";
  emit(opts, doc);
  return math_failure ? kExitMathFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutative weighted shifts at finite truncation: construction, "
               "von Neumann certification, boundary scaling, dilation diagnostics"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand name too

  GlobalOptions opts;
  app.add_option("--tol", opts.tol, "commutation tolerance")->capture_default_str();
  app.add_option("--grid", opts.grid, "torus grid points per axis")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized batteries")->capture_default_str();
  app.add_flag("--pretty", opts.pretty, "pretty-print the JSON output");
  app.add_option("-o,--output", opts.output_path, "write the JSON document to a file");

  std::string weights_path, poly_path, axes_text = "1,2";
  int samples = 720, dil_d = 2, dil_N = 2, dil_deg = 3, battery = 50;
  bool no_refine = false, all_ones = false, no_push = false;
  int pipeline_battery = 12;

  auto* validate = app.add_subcommand("validate", "check the commutation relations");
  validate->add_option("weights", weights_path, "weight family JSON file")->required();

  auto* build = app.add_subcommand("build", "assemble the truncated shift matrices");
  build->add_option("weights", weights_path)->required();

  auto* normalize = app.add_subcommand("normalize", "phase-normalize a nonzero family");
  normalize->add_option("weights", weights_path)->required();

  auto* classify_cmd = app.add_subcommand("classify", "good/bad indices and scalable pairs");
  classify_cmd->add_option("weights", weights_path)->required();

  auto* push = app.add_subcommand("push", "push a family to the all-unimodular boundary");
  push->add_option("weights", weights_path)->required();
  push->add_option("--poly", poly_path, "polynomial defining the functional to grow");
  push->add_option("--samples", samples, "circle samples per step")->capture_default_str();

  auto* vn = app.add_subcommand("vn-check", "von Neumann ratio of a polynomial on a shift");
  vn->add_option("weights", weights_path)->required();
  vn->add_option("poly", poly_path, "matrix polynomial JSON file")->required();
  vn->add_flag("--no-refine", no_refine, "skip the local refinement pass");

  auto* dilate = app.add_subcommand("dilate-check",
                                    "compression identity of the cyclic unitary dilation");
  dilate->add_option("--d", dil_d, "variables")->capture_default_str();
  dilate->add_option("--N", dil_N, "truncation level")->capture_default_str();
  dilate->add_option("--deg", dil_deg, "polynomial degree bound")->capture_default_str();
  dilate->add_option("--battery", battery, "random polynomials to test")->capture_default_str();

  auto* brehmer = app.add_subcommand("brehmer", "defect spectrum for an axis subset");
  brehmer->add_option("weights", weights_path)->required();
  brehmer->add_option("--axes", axes_text, "comma-separated axis subset")
      ->capture_default_str();

  auto* parrott = app.add_subcommand("parrott",
                                     "three-variable zero-weight counterexample report");
  parrott->add_flag("--all-ones", all_ones, "run the dilatable all-ones configuration");

  auto* pipeline = app.add_subcommand("pipeline", "validate, normalize, classify, push, "
                                      "vn battery and defect spectra in one pass");
  pipeline->add_option("weights", weights_path)->required();
  pipeline->add_flag("--no-push", no_push, "skip the boundary push stage");
  pipeline->add_option("--battery", pipeline_battery, "vn battery size")
      ->capture_default_str();
  pipeline->add_option("--samples", samples, "circle samples per push step")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opts, weights_path);
    if (app.got_subcommand(build)) return cmd_build(opts, weights_path);
    if (app.got_subcommand(normalize)) return cmd_normalize(opts, weights_path);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(opts, weights_path);
    if (app.got_subcommand(push)) return cmd_push(opts, weights_path, poly_path, samples);
    if (app.got_subcommand(vn)) return cmd_vn_check(opts, weights_path, poly_path, no_refine);
    if (app.got_subcommand(dilate)) {
      return cmd_dilate_check(opts, dil_d, dil_N, dil_deg, battery);
    }
    if (app.got_subcommand(brehmer)) return cmd_brehmer(opts, weights_path, axes_text);
    if (app.got_subcommand(parrott)) return cmd_parrott(opts, all_ones);
    if (app.got_subcommand(pipeline)) {
      return cmd_pipeline(opts, weights_path, no_push, pipeline_battery, samples);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
