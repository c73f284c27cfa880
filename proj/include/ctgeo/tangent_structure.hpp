#pragma once

#include <optional>
#include <span>

#include "ctgeo/connection.hpp"

namespace ctgeo {

/// An adapted almost tangent structure: a rank-n endomorphism of the phase
/// chart with square zero whose image and kernel are the vertical
/// distribution, given by a regular coefficient matrix t_ij (first index
/// pairs with dx^i). The inverse t^ij with t_ij t^jk = delta_i^k is held
/// symbolically so it stays closed under differentiation.
class AdaptedTangentStructure {
 public:
  AdaptedTangentStructure() = default;

  static AdaptedTangentStructure from_lower(ChartPtr chart, SfMatrix t_lower);
  static AdaptedTangentStructure from_upper(ChartPtr chart, SfMatrix t_upper);
  /// t_ij = delta_ij
  static AdaptedTangentStructure kronecker(ChartPtr chart);

  const ChartPtr& chart() const { return chart_; }
  const SfMatrix& lower() const { return lower_; }
  const SfMatrix& upper() const { return upper_; }

  /// The full endomorphism t_ij dx^i (x) d/dp_j.
  FullTensor11 full() const;

  /// Smallest |det t_ij| over the points (regularity floor check).
  double min_abs_det(std::span<const ChartPoint> pts) const;

 private:
  ChartPtr chart_;
  SfMatrix lower_, upper_;
};

struct TangentStructureDiagnostics {
  double integrability = 0.0;  // max |dt^ij/dp_k - dt^kj/dp_i|
  double homogeneity = 0.0;    // max |p_k dt_ij/dp_k|
  double symmetry = 0.0;       // max |t_ij - t_ji|
  std::optional<double> metric_match;  // max |t^ij - g^ij| when a metric is given
  double min_abs_det = 0.0;
};

TangentStructureDiagnostics tangent_structure_diagnostics(
    const AdaptedTangentStructure& j, const std::optional<SfMatrix>& metric_upper,
    std::span<const ChartPoint> pts, double regularity_floor = 1e-8);

/// T_ijk = t_is dN_jk/dp_s - t_js dN_ik/dp_s + delta t_jk/delta x^i
///       - delta t_ik/delta x^j
Curvature3 torsion_components(const AdaptedTangentStructure& j, const NonlinearConnection& nc);

/// xi^i T_ijk + N_jk - p_s dN_jk/dp_s, indexed (j,k).
SfMatrix strong_torsion(const PhaseVectorField& rho, const AdaptedTangentStructure& j,
                        const NonlinearConnection& nc);

}  // namespace ctgeo
