#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ctgeo/checks.hpp"
#include "ctgeo/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitModelError = 2;

struct CommonArgs {
  std::string model_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::string report_path;
  ctgeo::CheckOptions options;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_tolerances) {
  cmd->add_option("model", args.model_path, "model file (JSON)")->required();
  cmd->add_option("--seed", [&args](const std::vector<std::string>& v) {
        args.seed = std::stoull(v.at(0));
        return true;
      }, "sampling seed override");
  cmd->add_option("--samples", [&args](const std::vector<std::string>& v) {
        args.samples = std::stoi(v.at(0));
        return true;
      }, "sample count override");
  cmd->add_option("--report", args.report_path, "write the JSON report to this path");
  if (with_tolerances) {
    cmd->add_option("--tol-algebraic", args.options.tol_algebraic,
                    "tolerance for derivative-free identities");
    cmd->add_option("--tol-symbolic", args.options.tol_symbolic,
                    "tolerance for symbolic-derivative identities");
    cmd->add_option("--tol-numeric", args.options.tol_numeric,
                    "tolerance for Newton / finite-difference identities");
  }
}

int emit_report(const ctgeo::CheckReport& report, const std::string& report_path) {
  const std::string json = ctgeo::report_to_json(report);
  if (report_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write report to '" << report_path << "'\n";
      return kExitModelError;
    }
    out << json;
  }
  ctgeo::print_report_table(report, std::cerr);
  return report.overall_pass ? kExitPass : kExitCheckFailure;
}

// "x=1,0.5;p=0,2" -> chart point
ctgeo::ChartPoint parse_point(const std::string& text, const ctgeo::ChartPtr& chart) {
  const int n = chart->dimension();
  std::vector<double> values(static_cast<std::size_t>(2 * n), 0.0);
  std::vector<bool> seen(2, false);
  std::istringstream segments(text);
  std::string segment;
  while (std::getline(segments, segment, ';')) {
    const std::size_t eq = segment.find('=');
    if (eq == std::string::npos)
      throw ctgeo::Error("point syntax: \"x=v1,..,vn;" + chart->fiber_prefix() + "=v1,..,vn\"");
    std::string name = segment.substr(0, eq);
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    int block;
    if (name == "x")
      block = 0;
    else if (name == chart->fiber_prefix())
      block = 1;
    else
      throw ctgeo::Error("unknown point block '" + name + "'");
    seen[static_cast<std::size_t>(block)] = true;
    std::istringstream numbers(segment.substr(eq + 1));
    std::string number;
    int i = 0;
    while (std::getline(numbers, number, ',')) {
      if (i >= n) throw ctgeo::Error("too many values for block '" + name + "'");
      values[static_cast<std::size_t>(block * n + i)] = std::stod(number);
      ++i;
    }
    if (i != n) throw ctgeo::Error("block '" + name + "' needs " + std::to_string(n) + " values");
  }
  if (!seen[0] || !seen[1]) throw ctgeo::Error("point needs both coordinate blocks");
  return ctgeo::make_point(chart, std::move(values));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric structures on the cotangent bundle: check, evaluate, dualize"};
  app.set_version_flag("--version", ctgeo::kToolVersion);
  app.require_subcommand(1);

  CommonArgs check_args;
  CLI::App* check = app.add_subcommand("check", "run the identity suite at sampled points");
  add_common(check, check_args, true);

  CommonArgs legendre_args;
  double epsilon = 0.0;
  bool epsilon_given = false;
  CLI::App* legendre = app.add_subcommand("legendre", "fiber map, duality, and spray pipeline");
  add_common(legendre, legendre_args, true);
  legendre->add_option("--epsilon", epsilon, "perturbed-spray contrapositive at this size")
      ->each([&epsilon_given](const std::string&) { epsilon_given = true; });

  std::string eval_object_name, eval_at;
  CommonArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a named object at a point");
  eval->add_option("model", eval_args.model_path, "model file (JSON)")->required();
  eval->add_option("--object", eval_object_name, "object name")->required();
  eval->add_option("--at", eval_at, "point, e.g. \"x=1,0;p=0.5,1\"")->required();

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "parse and validate a model file");
  validate->add_option("model", validate_path, "model file (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      check_args.options.seed = check_args.seed;
      check_args.options.count = check_args.samples;
      ctgeo::ModelFile model = ctgeo::load_model(check_args.model_path);
      ctgeo::CheckReport report = ctgeo::run_check_suite(model, check_args.options);
      return emit_report(report, check_args.report_path);
    }
    if (legendre->parsed()) {
      legendre_args.options.seed = legendre_args.seed;
      legendre_args.options.count = legendre_args.samples;
      ctgeo::ModelFile model = ctgeo::load_model(legendre_args.model_path);
      std::optional<double> eps;
      if (epsilon_given) eps = epsilon;
      ctgeo::CheckReport report =
          ctgeo::run_legendre_suite(model, legendre_args.options, eps);
      return emit_report(report, legendre_args.report_path);
    }
    if (eval->parsed()) {
      ctgeo::ModelFile model = ctgeo::load_model(eval_args.model_path);
      ctgeo::ChartPoint pt = parse_point(eval_at, model.cotangent_chart);
      int rows = 0, cols = 0;
      std::vector<double> values = ctgeo::eval_object(model, eval_object_name, pt, rows, cols);
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
          std::cout << (j ? " " : "") << ctgeo::exact_double_text(
                                             values[static_cast<std::size_t>(i * cols + j)]);
        std::cout << "\n";
      }
      return kExitPass;
    }
    if (validate->parsed()) {
      ctgeo::load_model(validate_path);
      std::cout << "valid\n";
      return kExitPass;
    }
  } catch (const ctgeo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModelError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModelError;
  }
  return kExitModelError;
}
