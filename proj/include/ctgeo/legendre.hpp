#pragma once

#include "ctgeo/hamilton.hpp"

namespace ctgeo {

struct NewtonSettings {
  double tolerance = 1e-12;
  int max_iterations = 50;
};

/// The fiber map Psi: (x, p) -> (x, y = dH/dp) between the cotangent and
/// tangent charts. The inverse is solved per point by Newton iteration with
/// the fiber Hessian as Jacobian; no closed form is assumed.
class LegendreMap {
 public:
  explicit LegendreMap(HamiltonModel model, NewtonSettings settings = {});

  const HamiltonModel& model() const { return model_; }
  const ChartPtr& tangent_chart() const { return tangent_chart_; }
  const NewtonSettings& settings() const { return settings_; }

  ChartPoint forward(const ChartPoint& cotangent_pt) const;

  struct Inverse {
    ChartPoint point;
    int iterations = 0;
    double residual = 0.0;
  };
  /// Solve dH/dp(x, p) = y starting from p = y. Throws
  /// NewtonConvergenceError when the iteration budget is exhausted.
  Inverse inverse(const ChartPoint& tangent_pt) const;

  /// L(x, y) = zeta_i y^i - H(x, zeta) with zeta the Newton inverse.
  double induced_lagrangian(const ChartPoint& tangent_pt) const;

  /// The canonical dual spray seen through the map: S^i composed with Psi,
  /// as cotangent-chart fields s^i = xi^k dxi^i/dx^k + chi_k g^{ki}.
  std::vector<ScalarField> dual_spray_through_map() const;

 private:
  HamiltonModel model_;
  ChartPtr tangent_chart_;
  NewtonSettings settings_;
};

}  // namespace ctgeo
