#pragma once

#include <span>

#include "ctgeo/canonical.hpp"
#include "ctgeo/dynamics.hpp"

namespace ctgeo {

/// A regular Hamiltonian with its derived data: the fiber Hessian
/// g^ij = d^2 H / dp_i dp_j, its inverse g_ij, the induced tangent
/// structure with t^ij = g^ij, and the Hamiltonian vector field
/// rho_H = dH/dp_i d/dx^i - dH/dx^i d/dp_i.
class HamiltonModel {
 public:
  static HamiltonModel build(ScalarField hamiltonian);

  const ChartPtr& chart() const { return chart_; }
  const ScalarField& hamiltonian() const { return h_; }
  const SfMatrix& metric_upper() const { return g_upper_; }
  const SfMatrix& metric_lower() const { return g_lower_; }
  const AdaptedTangentStructure& tangent_structure() const { return j_; }
  const PhaseVectorField& hamiltonian_field() const { return rho_; }

  /// Throws RegularityError naming the first point where |det g^ij| drops
  /// below the floor.
  void check_regularity(std::span<const ChartPoint> pts, double floor = 1e-8) const;

 private:
  ChartPtr chart_;
  ScalarField h_;
  SfMatrix g_upper_, g_lower_;
  AdaptedTangentStructure j_;
  PhaseVectorField rho_;
};

/// The canonical metric connection of the Hamilton space:
/// N_ij = ({g_ij, H} - g_ik d^2H/dp_k dx^j - g_jk d^2H/dp_k dx^i) / 2.
NonlinearConnection canonical_hamilton_connection(const HamiltonModel& m);

}  // namespace ctgeo
