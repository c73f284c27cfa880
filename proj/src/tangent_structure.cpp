#include "ctgeo/tangent_structure.hpp"

#include <cmath>

namespace ctgeo {

AdaptedTangentStructure AdaptedTangentStructure::from_lower(ChartPtr chart, SfMatrix t_lower) {
  if (t_lower.rows() != chart->dimension() || t_lower.cols() != chart->dimension())
    throw Error("tangent structure coefficients must be n x n");
  AdaptedTangentStructure j;
  j.chart_ = std::move(chart);
  j.upper_ = sf_inverse(t_lower);
  j.lower_ = std::move(t_lower);
  return j;
}

AdaptedTangentStructure AdaptedTangentStructure::from_upper(ChartPtr chart, SfMatrix t_upper) {
  if (t_upper.rows() != chart->dimension() || t_upper.cols() != chart->dimension())
    throw Error("tangent structure coefficients must be n x n");
  AdaptedTangentStructure j;
  j.chart_ = std::move(chart);
  j.lower_ = sf_inverse(t_upper);
  j.upper_ = std::move(t_upper);
  return j;
}

AdaptedTangentStructure AdaptedTangentStructure::kronecker(ChartPtr chart) {
  return from_lower(chart, SfMatrix::identity(chart, chart->dimension()));
}

FullTensor11 AdaptedTangentStructure::full() const {
  FullTensor11 j(chart_);
  const int n = chart_->dimension();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) j.at(chart_->fiber_index(k), i) = lower_.at(i, k);
  return j;
}

double AdaptedTangentStructure::min_abs_det(std::span<const ChartPoint> pts) const {
  ScalarField det = sf_determinant(lower_);
  double best = std::numeric_limits<double>::infinity();
  for (const ChartPoint& pt : pts) best = std::min(best, std::abs(det(pt)));
  return best;
}

TangentStructureDiagnostics tangent_structure_diagnostics(
    const AdaptedTangentStructure& j, const std::optional<SfMatrix>& metric_upper,
    std::span<const ChartPoint> pts, double regularity_floor) {
  const ChartPtr& chart = j.chart();
  const int n = chart->dimension();
  TangentStructureDiagnostics out;

  out.min_abs_det = j.min_abs_det(pts);
  if (out.min_abs_det < regularity_floor)
    throw RegularityError("tangent structure singular at a sampled point (|det| = " +
                          std::to_string(out.min_abs_det) + ")");

  std::vector<ScalarField> integrability, homogeneity, symmetry, metric;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      symmetry.push_back(j.lower().at(i, k) - j.lower().at(k, i));
      ScalarField euler = ScalarField::constant(chart, 0.0);
      for (int s = 0; s < n; ++s)
        euler = euler + ScalarField::coordinate(chart, chart->fiber_index(s)) *
                            j.lower().at(i, k).derivative(chart->fiber_index(s));
      homogeneity.push_back(euler);
      for (int m = 0; m < n; ++m)
        integrability.push_back(j.upper().at(i, k).derivative(chart->fiber_index(m)) -
                                j.upper().at(m, k).derivative(chart->fiber_index(i)));
      if (metric_upper) metric.push_back(j.upper().at(i, k) - metric_upper->at(i, k));
    }
  }

  auto max_abs = [&pts](const std::vector<ScalarField>& fields) {
    double worst = 0.0;
    for (const ChartPoint& pt : pts)
      for (const ScalarField& f : fields) worst = std::max(worst, std::abs(f(pt)));
    return worst;
  };

  out.integrability = max_abs(integrability);
  out.homogeneity = max_abs(homogeneity);
  out.symmetry = max_abs(symmetry);
  if (metric_upper) out.metric_match = max_abs(metric);
  return out;
}

Curvature3 torsion_components(const AdaptedTangentStructure& j, const NonlinearConnection& nc) {
  require_compatible(j.chart(), nc.chart());
  const ChartPtr& chart = j.chart();
  const int n = chart->dimension();
  const SfMatrix& t = j.lower();
  Curvature3 out;
  out.n = n;
  out.comp.assign(static_cast<std::size_t>(n * n * n), ScalarField::constant(chart, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int jj = 0; jj < n; ++jj) {
      for (int k = 0; k < n; ++k) {
        ScalarField acc = nc.adapted_derivative(t.at(jj, k), i) -
                          nc.adapted_derivative(t.at(i, k), jj);
        for (int s = 0; s < n; ++s) {
          const int ps = chart->fiber_index(s);
          acc = acc + t.at(i, s) * nc.at(jj, k).derivative(ps) -
                t.at(jj, s) * nc.at(i, k).derivative(ps);
        }
        out.at(i, jj, k) = acc;
      }
    }
  }
  return out;
}

SfMatrix strong_torsion(const PhaseVectorField& rho, const AdaptedTangentStructure& j,
                        const NonlinearConnection& nc) {
  require_compatible(rho.chart(), nc.chart());
  const ChartPtr& chart = nc.chart();
  const int n = chart->dimension();
  Curvature3 t = torsion_components(j, nc);
  SfMatrix out(chart, n, n);
  for (int jj = 0; jj < n; ++jj) {
    for (int k = 0; k < n; ++k) {
      ScalarField acc = nc.at(jj, k);
      for (int i = 0; i < n; ++i) acc = acc + rho.base_component(i) * t.at(i, jj, k);
      for (int s = 0; s < n; ++s)
        acc = acc - ScalarField::coordinate(chart, chart->fiber_index(s)) *
                        nc.at(jj, k).derivative(chart->fiber_index(s));
      out.at(jj, k) = acc;
    }
  }
  return out;
}

}  // namespace ctgeo
