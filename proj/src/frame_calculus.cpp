#include "ctgeo/frame_calculus.hpp"

namespace ctgeo {

PhaseVectorField lie_bracket(const PhaseVectorField& x, const PhaseVectorField& y) {
  require_compatible(x.chart(), y.chart());
  const ChartPtr& chart = x.chart();
  const int m = x.coord_count();
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    ScalarField acc = ScalarField::constant(chart, 0.0);
    for (int b = 0; b < m; ++b) {
      if (!x.component(b).is_zero()) acc = acc + x.component(b) * y.component(a).derivative(b);
      if (!y.component(b).is_zero()) acc = acc - y.component(b) * x.component(a).derivative(b);
    }
    comps.push_back(acc);
  }
  return {chart, std::move(comps)};
}

FullTensor11 lie_derivative_tensor11(const PhaseVectorField& x, const FullTensor11& a) {
  require_compatible(x.chart(), a.chart());
  const ChartPtr& chart = a.chart();
  FullTensor11 out(chart);
  for (int b = 0; b < a.dim(); ++b) {
    PhaseVectorField frame = PhaseVectorField::frame(chart, b);
    PhaseVectorField col = lie_bracket(x, a.column(b)) - a.apply(lie_bracket(x, frame));
    for (int r = 0; r < a.dim(); ++r) out.at(r, b) = col.component(r);
  }
  return out;
}

VectorValued2Form fn_bracket_11(const FullTensor11& a, const FullTensor11& b) {
  require_compatible(a.chart(), b.chart());
  return {"fn_bracket", a.chart(),
          [a, b](const PhaseVectorField& x, const PhaseVectorField& y) {
            PhaseVectorField ax = a.apply(x), ay = a.apply(y);
            PhaseVectorField bx = b.apply(x), by = b.apply(y);
            PhaseVectorField xy = lie_bracket(x, y);
            return lie_bracket(ax, by) + lie_bracket(bx, ay) + a.apply(b.apply(xy)) +
                   b.apply(a.apply(xy)) - a.apply(lie_bracket(x, by)) -
                   b.apply(lie_bracket(x, ay)) - a.apply(lie_bracket(bx, y)) -
                   b.apply(lie_bracket(ax, y));
          }};
}

VectorValued2Form nijenhuis(const FullTensor11& a) {
  return {"nijenhuis", a.chart(),
          [a](const PhaseVectorField& x, const PhaseVectorField& y) {
            PhaseVectorField ax = a.apply(x), ay = a.apply(y);
            PhaseVectorField xy = lie_bracket(x, y);
            return lie_bracket(ax, ay) + a.apply(a.apply(xy)) - a.apply(lie_bracket(x, ay)) -
                   a.apply(lie_bracket(ax, y));
          }};
}

}  // namespace ctgeo
