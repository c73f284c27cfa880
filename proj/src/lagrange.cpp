#include "ctgeo/lagrange.hpp"

#include <cmath>

namespace ctgeo {

LagrangeModel LagrangeModel::build(ScalarField lagrangian) {
  LagrangeModel m;
  m.chart_ = lagrangian.chart();
  if (m.chart_->is_cotangent()) throw ChartMismatchError("tangent chart required");
  m.l_ = std::move(lagrangian);
  const int n = m.chart_->dimension();

  m.g_ = SfMatrix(m.chart_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.g_.at(i, j) =
          m.l_.derivative(m.chart_->fiber_index(i)).derivative(m.chart_->fiber_index(j));
  if (sf_determinant(m.g_).is_zero())
    throw RegularityError("fiber metric of the Lagrangian is identically singular");
  m.g_inv_ = sf_inverse(m.g_);

  for (int i = 0; i < n; ++i) {
    ScalarField acc = ScalarField::constant(m.chart_, 0.0);
    for (int j = 0; j < n; ++j) {
      ScalarField force = m.l_.derivative(m.chart_->base_index(j));
      for (int k = 0; k < n; ++k)
        force = force - m.l_.derivative(m.chart_->base_index(k))
                            .derivative(m.chart_->fiber_index(j)) *
                            ScalarField::coordinate(m.chart_, m.chart_->fiber_index(k));
      acc = acc + m.g_inv_.at(i, j) * force;
    }
    m.spray_.push_back(acc);
  }
  return m;
}

PhaseVectorField TangentSemispray::field() const {
  const int n = chart->dimension();
  std::vector<ScalarField> base;
  base.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    base.push_back(ScalarField::coordinate(chart, chart->fiber_index(i)));
  return PhaseVectorField::from_parts(chart, std::move(base), s);
}

SfMatrix TangentSemispray::connection() const {
  const int n = chart->dimension();
  SfMatrix out(chart, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.at(i, j) = -0.5 * s[static_cast<std::size_t>(i)].derivative(chart->fiber_index(j));
  return out;
}

ScalarField compose_with_forward_map(const HamiltonModel& m, const ScalarField& tangent_field) {
  const ChartPtr& cot = m.chart();
  const int n = cot->dimension();
  std::vector<ScalarField> map;
  map.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) map.push_back(ScalarField::coordinate(cot, cot->base_index(i)));
  for (int i = 0; i < n; ++i) map.push_back(m.hamiltonian_field().base_component(i));
  return substitute(tangent_field, cot, map);
}

PhaseVectorField pullback_semispray(const HamiltonModel& m, const TangentSemispray& spray) {
  const ChartPtr& cot = m.chart();
  const int n = cot->dimension();
  if (spray.chart->dimension() != n) throw ChartMismatchError("spray dimension mismatch");

  std::vector<ScalarField> base, fiber;
  for (int i = 0; i < n; ++i) base.push_back(m.hamiltonian_field().base_component(i));
  for (int k = 0; k < n; ++k) {
    ScalarField acc = ScalarField::constant(cot, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        acc = acc - base[static_cast<std::size_t>(i)] * m.metric_lower().at(k, j) *
                        base[static_cast<std::size_t>(j)].derivative(cot->base_index(i));
    }
    for (int i = 0; i < n; ++i)
      acc = acc + compose_with_forward_map(m, spray.s[static_cast<std::size_t>(i)]) *
                      m.metric_lower().at(i, k);
    fiber.push_back(acc);
  }
  return PhaseVectorField::from_parts(cot, std::move(base), std::move(fiber));
}

namespace {

struct SemiResiduals {
  double a = 0.0, b = 0.0;
};

SemiResiduals semi_hamiltonian_residuals(const PhaseVectorField& rho,
                                         std::span<const ChartPoint> pts) {
  const ChartPtr& chart = rho.chart();
  const int n = chart->dimension();
  std::vector<ScalarField> ra, rb;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ra.push_back(rho.base_component(j).derivative(chart->fiber_index(i)) -
                   rho.base_component(i).derivative(chart->fiber_index(j)));
      rb.push_back(rho.fiber_component(i).derivative(chart->fiber_index(j)) +
                   rho.base_component(j).derivative(chart->base_index(i)));
    }
  }
  SemiResiduals out;
  for (const ChartPoint& pt : pts) {
    for (const ScalarField& f : ra) out.a = std::max(out.a, std::abs(f(pt)));
    for (const ScalarField& f : rb) out.b = std::max(out.b, std::abs(f(pt)));
  }
  return out;
}

}  // namespace

Theorem2Residuals theorem2_residuals(const HamiltonModel& m, const LagrangeModel& lagrange,
                                     const TangentSemispray& spray, const LegendreMap& map,
                                     std::span<const ChartPoint> cotangent_pts) {
  const ChartPtr& tan = lagrange.chart();
  const int n = tan->dimension();

  PhaseVectorField rho = pullback_semispray(m, spray);
  SemiResiduals semi = semi_hamiltonian_residuals(rho, cotangent_pts);

  PhaseVectorField s_field = spray.field();
  SfMatrix conn = spray.connection();
  const SfMatrix& g = lagrange.fiber_metric();

  std::vector<ScalarField> metric_fields, symplectic_fields;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      ScalarField metric = s_field.directional(g.at(i, k));
      ScalarField symplectic =
          lagrange.lagrangian().derivative(tan->base_index(k)).derivative(tan->fiber_index(i)) -
          lagrange.lagrangian().derivative(tan->base_index(i)).derivative(tan->fiber_index(k));
      for (int l = 0; l < n; ++l) {
        metric = metric - conn.at(l, k) * g.at(l, i) - conn.at(l, i) * g.at(l, k);
        symplectic = symplectic + conn.at(l, i) * g.at(l, k) - conn.at(l, k) * g.at(l, i);
      }
      metric_fields.push_back(metric);
      symplectic_fields.push_back(symplectic);
    }
  }

  Theorem2Residuals out;
  out.semi_a = semi.a;
  out.semi_b = semi.b;
  for (const ChartPoint& pt : cotangent_pts) {
    ChartPoint tpt = map.forward(pt);
    for (const ScalarField& f : metric_fields) out.metric = std::max(out.metric, std::abs(f(tpt)));
    for (const ScalarField& f : symplectic_fields)
      out.symplectic = std::max(out.symplectic, std::abs(f(tpt)));
  }
  return out;
}

Theorem2Residuals theorem2_residuals_dual(const HamiltonModel& m, const LegendreMap& map,
                                          std::span<const ScalarField> spray_perturbation,
                                          std::span<const ChartPoint> cotangent_pts) {
  const ChartPtr& cot = m.chart();
  const int n = cot->dimension();

  // the dual spray composed with the map, plus any perturbation
  std::vector<ScalarField> s = map.dual_spray_through_map();
  if (!spray_perturbation.empty()) {
    if (static_cast<int>(spray_perturbation.size()) != n)
      throw Error("spray perturbation needs n components");
    for (int i = 0; i < n; ++i)
      s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)] +
                                       compose_with_forward_map(m, spray_perturbation[i]);
  }

  // pullback field: chi_k = -xi^i g_kj dxi^j/dx^i + s^i g_ik
  std::vector<ScalarField> base, fiber;
  for (int i = 0; i < n; ++i) base.push_back(m.hamiltonian_field().base_component(i));
  for (int k = 0; k < n; ++k) {
    ScalarField acc = ScalarField::constant(cot, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        acc = acc - base[static_cast<std::size_t>(i)] * m.metric_lower().at(k, j) *
                        base[static_cast<std::size_t>(j)].derivative(cot->base_index(i));
    for (int i = 0; i < n; ++i)
      acc = acc + s[static_cast<std::size_t>(i)] * m.metric_lower().at(i, k);
    fiber.push_back(acc);
  }
  PhaseVectorField rho = PhaseVectorField::from_parts(cot, base, std::move(fiber));
  SemiResiduals semi = semi_hamiltonian_residuals(rho, cotangent_pts);

  // the tangent-side spray connection seen through the map:
  // (dS^l/dy^k) o Psi = ds^l/dp_m g_mk, so N^l_k o Psi = -(ds^l/dp_m g_mk)/2
  SfMatrix conn(cot, n, n);
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      ScalarField acc = ScalarField::constant(cot, 0.0);
      for (int mm = 0; mm < n; ++mm)
        acc = acc + s[static_cast<std::size_t>(l)].derivative(cot->fiber_index(mm)) *
                        m.metric_lower().at(mm, k);
      conn.at(l, k) = -0.5 * acc;
    }
  }

  // tangent fiber metric o Psi is the cotangent g_ik; S(G) o Psi = rho(g_ik);
  // d2L/dx^k dy^i o Psi = -g_il dxi^l/dx^k for the dual Lagrangian
  std::vector<ScalarField> metric_fields, symplectic_fields;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      ScalarField metric = rho.directional(m.metric_lower().at(i, k));
      ScalarField zx_ki = ScalarField::constant(cot, 0.0);  // dzeta_i/dx^k o Psi
      ScalarField zx_ik = ScalarField::constant(cot, 0.0);  // dzeta_k/dx^i o Psi
      for (int l = 0; l < n; ++l) {
        metric = metric - conn.at(l, k) * m.metric_lower().at(l, i) -
                 conn.at(l, i) * m.metric_lower().at(l, k);
        zx_ki = zx_ki - m.metric_lower().at(i, l) *
                            base[static_cast<std::size_t>(l)].derivative(cot->base_index(k));
        zx_ik = zx_ik - m.metric_lower().at(k, l) *
                            base[static_cast<std::size_t>(l)].derivative(cot->base_index(i));
      }
      ScalarField symplectic = zx_ki - zx_ik;
      for (int l = 0; l < n; ++l)
        symplectic = symplectic + conn.at(l, i) * m.metric_lower().at(l, k) -
                     conn.at(l, k) * m.metric_lower().at(l, i);
      metric_fields.push_back(metric);
      symplectic_fields.push_back(symplectic);
    }
  }

  Theorem2Residuals out;
  out.semi_a = semi.a;
  out.semi_b = semi.b;
  for (const ChartPoint& pt : cotangent_pts) {
    for (const ScalarField& f : metric_fields) out.metric = std::max(out.metric, std::abs(f(pt)));
    for (const ScalarField& f : symplectic_fields)
      out.symplectic = std::max(out.symplectic, std::abs(f(pt)));
  }
  return out;
}

}  // namespace ctgeo
