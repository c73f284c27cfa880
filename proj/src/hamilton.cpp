#include "ctgeo/hamilton.hpp"

#include <cmath>

namespace ctgeo {

HamiltonModel HamiltonModel::build(ScalarField hamiltonian) {
  HamiltonModel m;
  m.chart_ = hamiltonian.chart();
  if (!m.chart_->is_cotangent()) throw ChartMismatchError("cotangent chart required");
  m.h_ = std::move(hamiltonian);
  const int n = m.chart_->dimension();

  m.g_upper_ = SfMatrix(m.chart_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.g_upper_.at(i, j) =
          m.h_.derivative(m.chart_->fiber_index(i)).derivative(m.chart_->fiber_index(j));

  if (sf_determinant(m.g_upper_).is_zero())
    throw RegularityError("fiber Hessian of the Hamiltonian is identically singular");
  m.g_lower_ = sf_inverse(m.g_upper_);
  m.j_ = AdaptedTangentStructure::from_upper(m.chart_, m.g_upper_);

  std::vector<ScalarField> base, fiber;
  for (int i = 0; i < n; ++i) {
    base.push_back(m.h_.derivative(m.chart_->fiber_index(i)));
    fiber.push_back(-m.h_.derivative(m.chart_->base_index(i)));
  }
  m.rho_ = PhaseVectorField::from_parts(m.chart_, std::move(base), std::move(fiber));
  return m;
}

void HamiltonModel::check_regularity(std::span<const ChartPoint> pts, double floor) const {
  ScalarField det = sf_determinant(g_upper_);
  for (const ChartPoint& pt : pts) {
    if (std::abs(det(pt)) < floor) {
      std::string where = "(";
      for (std::size_t a = 0; a < pt.values.size(); ++a) {
        if (a) where += ", ";
        where += exact_double_text(pt.values[a]);
      }
      throw RegularityError("fiber Hessian singular at point " + where + ")");
    }
  }
}

NonlinearConnection canonical_hamilton_connection(const HamiltonModel& m) {
  const ChartPtr& chart = m.chart();
  const int n = chart->dimension();
  SfMatrix out(chart, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ScalarField acc = poisson_bracket(m.metric_lower().at(i, j), m.hamiltonian());
      for (int k = 0; k < n; ++k) {
        ScalarField hpk = m.hamiltonian().derivative(chart->fiber_index(k));
        acc = acc - m.metric_lower().at(i, k) * hpk.derivative(chart->base_index(j));
        acc = acc - m.metric_lower().at(j, k) * hpk.derivative(chart->base_index(i));
      }
      out.at(i, j) = 0.5 * acc;
    }
  }
  return {chart, std::move(out)};
}

}  // namespace ctgeo
