#pragma once

#include "ctgeo/legendre.hpp"

namespace ctgeo {

/// A regular Lagrangian on a tangent chart with its fiber metric
/// g_ij = d^2 L / dy^i dy^j and the canonical spray coefficients
/// S^i = g^ij (dL/dx^j - d^2L/dx^k dy^j y^k).
class LagrangeModel {
 public:
  static LagrangeModel build(ScalarField lagrangian);

  const ChartPtr& chart() const { return chart_; }
  const ScalarField& lagrangian() const { return l_; }
  const SfMatrix& fiber_metric() const { return g_; }
  const SfMatrix& fiber_metric_inverse() const { return g_inv_; }
  const std::vector<ScalarField>& canonical_spray() const { return spray_; }

 private:
  ChartPtr chart_;
  ScalarField l_;
  SfMatrix g_, g_inv_;
  std::vector<ScalarField> spray_;
};

/// A second-order field y^i d/dx^i + S^i d/dy^i on a tangent chart.
struct TangentSemispray {
  ChartPtr chart;
  std::vector<ScalarField> s;

  PhaseVectorField field() const;
  /// N^i_j = -(dS^i/dy^j)/2, indexed (i, j).
  SfMatrix connection() const;
};

/// Transport a semispray to the cotangent chart through the inverse tangent
/// map of the Legendre diffeomorphism:
/// rho = xi^i d/dx^i + (-xi^i g_kj dxi^j/dx^i + S^i g_ik) d/dp_k,
/// with S^i composed with y = xi(x, p) by symbolic substitution.
PhaseVectorField pullback_semispray(const HamiltonModel& m, const TangentSemispray& spray);

struct Theorem2Residuals {
  double semi_a = 0.0;       // d xi^j/d p_i symmetry of the pullback
  double semi_b = 0.0;       // d chi_i/d p_j + d xi^j/d x^i of the pullback
  double metric = 0.0;       // S(g_ik) - N^l_k g_li - N^l_i g_lk
  double symplectic = 0.0;   // N^l_i g_lk - N^l_k g_li + d2L/dx^k dy^i - d2L/dx^i dy^k

  bool pullback_semi_hamiltonian(double tol) const { return semi_a <= tol && semi_b <= tol; }
  bool connection_canonical(double tol) const { return metric <= tol && symplectic <= tol; }
};

/// Residuals with a symbolic Lagrangian: the tangent-side conditions are
/// evaluated at the forward image of the cotangent sample points.
Theorem2Residuals theorem2_residuals(const HamiltonModel& m, const LagrangeModel& lagrange,
                                     const TangentSemispray& spray, const LegendreMap& map,
                                     std::span<const ChartPoint> cotangent_pts);

/// Residuals for the Legendre-dual Lagrangian when no Lagrangian text is
/// available. Every tangent-side object of the dual spray equals a
/// cotangent-side field composed with the map, so the conditions are
/// evaluated symbolically on the cotangent chart; `spray_perturbation`
/// (tangent-chart fields, may be empty) is added to the dual spray.
Theorem2Residuals theorem2_residuals_dual(const HamiltonModel& m, const LegendreMap& map,
                                          std::span<const ScalarField> spray_perturbation,
                                          std::span<const ChartPoint> cotangent_pts);

/// Substitute y = dH/dp into a tangent-chart field, yielding a
/// cotangent-chart field.
ScalarField compose_with_forward_map(const HamiltonModel& m, const ScalarField& tangent_field);

}  // namespace ctgeo
