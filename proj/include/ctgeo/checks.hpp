#pragma once

#include <iosfwd>
#include <optional>

#include "ctgeo/lagrange.hpp"
#include "ctgeo/model.hpp"

namespace ctgeo {

struct CheckOptions {
  std::optional<std::uint64_t> seed;
  std::optional<int> count;
  double tol_algebraic = 1e-12;  // derivative-free identities
  double tol_symbolic = 1e-9;    // identities through symbolic derivatives
  double tol_numeric = 1e-6;     // Newton / finite-difference limited
};

struct CheckRecord {
  std::string name;
  std::string anchor;  // the identity the record verifies
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  int points_evaluated = 0;
  bool pass = false;
  bool informational = false;  // diagnostic only; never flips overall_pass
  std::string note;
};

struct CheckReport {
  std::string model;
  std::string tool_version;
  std::string timestamp;
  std::string rng;
  std::uint64_t seed = 0;
  int sample_count = 0;
  std::vector<CheckRecord> checks;
  bool overall_pass = true;

  void add(CheckRecord record);
};

/// The full identity suite over a model's sampled points.
CheckReport run_check_suite(const ModelFile& model, const CheckOptions& options);

/// Legendre round trip, inverse-function identities, spray construction,
/// pullback, and the duality conditions; `epsilon`, when given, adds the
/// perturbed-spray contrapositive at epsilon, epsilon/10, epsilon/100.
CheckReport run_legendre_suite(const ModelFile& model, const CheckOptions& options,
                               std::optional<double> epsilon);

/// Requested component array of a named geometric object at a point,
/// row-major. Valid names: metric, connection, curvature, tension, torsion,
/// strong_torsion, jacobi, almost_complex.
std::vector<double> eval_object(const ModelFile& model, const std::string& object,
                                const ChartPoint& pt, int& rows, int& cols);

std::string report_to_json(const CheckReport& report);
void print_report_table(const CheckReport& report, std::ostream& os);

}  // namespace ctgeo
