#include "ctgeo/dynamics.hpp"

#include <cmath>

namespace ctgeo {

RegularityResidual j_regularity_residual(const PhaseVectorField& rho,
                                         const AdaptedTangentStructure& j,
                                         std::span<const ChartPoint> pts) {
  require_compatible(rho.chart(), j.chart());
  const ChartPtr& chart = rho.chart();
  const int n = chart->dimension();

  std::vector<ScalarField> closed;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      closed.push_back(j.upper().at(i, k) -
                       rho.base_component(k).derivative(chart->fiber_index(i)));

  FullTensor11 jt = j.full();
  std::vector<ScalarField> intrinsic;
  for (int a = 0; a < chart->coord_count(); ++a) {
    PhaseVectorField je = jt.column(a);
    PhaseVectorField res = jt.apply(lie_bracket(rho, je)) + je;
    for (int c = 0; c < chart->coord_count(); ++c) intrinsic.push_back(res.component(c));
  }

  RegularityResidual out;
  for (const ChartPoint& pt : pts) {
    for (const ScalarField& f : closed) out.closed_form = std::max(out.closed_form, std::abs(f(pt)));
    for (const ScalarField& f : intrinsic) out.intrinsic = std::max(out.intrinsic, std::abs(f(pt)));
  }
  return out;
}

NonlinearConnection canonical_connection(const PhaseVectorField& rho,
                                         const AdaptedTangentStructure& j) {
  require_compatible(rho.chart(), j.chart());
  const ChartPtr& chart = rho.chart();
  const int n = chart->dimension();
  const SfMatrix& t = j.lower();
  SfMatrix out(chart, n, n);
  for (int i = 0; i < n; ++i) {
    for (int jj = 0; jj < n; ++jj) {
      ScalarField acc = -rho.directional(t.at(i, jj));
      for (int k = 0; k < n; ++k) {
        acc = acc + t.at(i, k) * rho.fiber_component(jj).derivative(chart->fiber_index(k));
        acc = acc - t.at(k, jj) * rho.base_component(k).derivative(chart->base_index(i));
      }
      out.at(i, jj) = 0.5 * acc;
    }
  }
  return {chart, std::move(out)};
}

SfMatrix vertical_block(const FullTensor11& t) {
  const ChartPtr& chart = t.chart();
  const int n = chart->dimension();
  SfMatrix out(chart, n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) out.at(i, jj) = t.at(chart->fiber_index(jj), i);
  return out;
}

FullTensor11 jacobi_intrinsic(const PhaseVectorField& rho, const NonlinearConnection& nc) {
  return nc.vertical().compose(lie_derivative_tensor11(rho, nc.horizontal()));
}

SfMatrix jacobi_closed_form(const PhaseVectorField& rho, const NonlinearConnection& nc) {
  require_compatible(rho.chart(), nc.chart());
  const ChartPtr& chart = nc.chart();
  const int n = chart->dimension();
  SfMatrix out(chart, n, n);
  for (int jj = 0; jj < n; ++jj) {
    for (int k = 0; k < n; ++k) {
      ScalarField acc = rho.directional(nc.at(jj, k)) -
                        nc.adapted_derivative(rho.fiber_component(k), jj);
      for (int i = 0; i < n; ++i)
        acc = acc + nc.adapted_derivative(rho.base_component(i), jj) * nc.at(i, k);
      out.at(jj, k) = acc;
    }
  }
  return out;
}

DynCovDerivative::DynCovDerivative(PhaseVectorField rho, const NonlinearConnection& nc)
    : rho_(std::move(rho)), h_(nc.horizontal()), v_(nc.vertical()) {
  require_compatible(rho_.chart(), nc.chart());
}

ScalarField DynCovDerivative::operator()(const ScalarField& f) const {
  return rho_.directional(f);
}

PhaseVectorField DynCovDerivative::operator()(const PhaseVectorField& x) const {
  return h_.apply(lie_bracket(rho_, h_.apply(x))) + v_.apply(lie_bracket(rho_, v_.apply(x)));
}

PhaseOneForm DynCovDerivative::operator()(const PhaseOneForm& phi) const {
  // (nabla phi)(X) = rho(phi(X)) - phi(nabla X) on the coordinate frame
  const ChartPtr& chart = phi.chart();
  PhaseOneForm out = PhaseOneForm::zero(chart);
  for (int a = 0; a < chart->coord_count(); ++a) {
    PhaseVectorField frame = PhaseVectorField::frame(chart, a);
    out.coefficient(a) =
        rho_.directional(phi.coefficient(a)) - phi.pair((*this)(frame));
  }
  return out;
}

FullTensor11 DynCovDerivative::operator()(const FullTensor11& t) const {
  // nabla T = nabla o T - T o nabla, assembled on the coordinate frame
  const ChartPtr& chart = t.chart();
  FullTensor11 out(chart);
  for (int b = 0; b < t.dim(); ++b) {
    PhaseVectorField frame = PhaseVectorField::frame(chart, b);
    PhaseVectorField col = (*this)(t.column(b)) - t.apply((*this)(frame));
    for (int a = 0; a < t.dim(); ++a) out.at(a, b) = col.component(a);
  }
  return out;
}

FullTensor11 almost_complex(const PhaseVectorField& rho, const AdaptedTangentStructure& j,
                            const NonlinearConnection& nc) {
  FullTensor11 h = nc.horizontal();
  return h.compose(lie_derivative_tensor11(rho, h)) - j.full();
}

FullTensor11 almost_complex_local(const AdaptedTangentStructure& j,
                                  const NonlinearConnection& nc) {
  const ChartPtr& chart = j.chart();
  const int n = chart->dimension();
  FullTensor11 f(chart);
  // t^ij delta/delta x^i (x) delta p_j with delta p_j = dp_j - N_js dx^s
  for (int i = 0; i < n; ++i) {
    for (int jj = 0; jj < n; ++jj) {
      if (j.upper().at(i, jj).is_zero()) continue;
      PhaseVectorField delta = nc.adapted_frame(i);
      for (int a = 0; a < chart->coord_count(); ++a) {
        if (delta.component(a).is_zero()) continue;
        // column for dp_j input
        f.at(a, chart->fiber_index(jj)) =
            f.at(a, chart->fiber_index(jj)) + j.upper().at(i, jj) * delta.component(a);
        // columns for dx^s inputs carry -N_js
        for (int s = 0; s < n; ++s) {
          if (nc.at(jj, s).is_zero()) continue;
          f.at(a, s) = f.at(a, s) - j.upper().at(i, jj) * nc.at(jj, s) * delta.component(a);
        }
      }
    }
  }
  // minus t_ij d/dp_i (x) dx^j
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      f.at(chart->fiber_index(i), jj) = f.at(chart->fiber_index(i), jj) - j.lower().at(i, jj);
  return f;
}

DecompositionResiduals decomposition_check(const PhaseVectorField& rho,
                                           const AdaptedTangentStructure& j,
                                           const NonlinearConnection& nc,
                                           std::span<const ChartPoint> pts) {
  const ChartPtr& chart = rho.chart();
  DynCovDerivative nabla(rho, nc);
  FullTensor11 jt = j.full();
  FullTensor11 f = almost_complex(rho, j, nc);
  FullTensor11 phi = jacobi_intrinsic(rho, nc);

  std::vector<ScalarField> decomposition;
  for (int a = 0; a < chart->coord_count(); ++a) {
    PhaseVectorField frame = PhaseVectorField::frame(chart, a);
    PhaseVectorField res = nabla(frame) - lie_bracket(rho, frame) - f.column(a) -
                           jt.column(a) + phi.column(a);
    for (int c = 0; c < chart->coord_count(); ++c) decomposition.push_back(res.component(c));
  }

  FullTensor11 nabla_j = nabla(jt);
  FullTensor11 nabla_f = nabla(f);

  DecompositionResiduals out;
  for (const ChartPoint& pt : pts) {
    for (const ScalarField& r : decomposition)
      out.decomposition = std::max(out.decomposition, std::abs(r(pt)));
    for (double v : nabla_j.eval(pt)) out.nabla_j = std::max(out.nabla_j, std::abs(v));
    for (double v : nabla_f.eval(pt)) out.nabla_f = std::max(out.nabla_f, std::abs(v));
  }
  return out;
}

HamiltonianConditionResiduals hamiltonian_conditions(const PhaseVectorField& rho,
                                                     std::span<const ChartPoint> pts) {
  const ChartPtr& chart = rho.chart();
  const int n = chart->dimension();
  std::vector<ScalarField> ra, rb, rc;
  for (int i = 0; i < n; ++i) {
    for (int jj = 0; jj < n; ++jj) {
      ra.push_back(rho.base_component(jj).derivative(chart->fiber_index(i)) -
                   rho.base_component(i).derivative(chart->fiber_index(jj)));
      rb.push_back(rho.fiber_component(i).derivative(chart->fiber_index(jj)) +
                   rho.base_component(jj).derivative(chart->base_index(i)));
      rc.push_back(rho.fiber_component(i).derivative(chart->base_index(jj)) -
                   rho.fiber_component(jj).derivative(chart->base_index(i)));
    }
  }
  HamiltonianConditionResiduals out;
  for (const ChartPoint& pt : pts) {
    for (const ScalarField& f : ra) out.a = std::max(out.a, std::abs(f(pt)));
    for (const ScalarField& f : rb) out.b = std::max(out.b, std::abs(f(pt)));
    for (const ScalarField& f : rc) out.c = std::max(out.c, std::abs(f(pt)));
  }
  return out;
}

}  // namespace ctgeo
