#pragma once

#include <functional>
#include <string>

#include "ctgeo/tensor11.hpp"
#include "ctgeo/vector_field.hpp"

namespace ctgeo {

/// [X,Y]^a = X^b dY^a/dc_b - Y^b dX^a/dc_b, assembled symbolically.
PhaseVectorField lie_bracket(const PhaseVectorField& x, const PhaseVectorField& y);

/// (L_X A)(Y) = [X, A Y] - A [X, Y], assembled on the coordinate frame.
FullTensor11 lie_derivative_tensor11(const PhaseVectorField& x, const FullTensor11& a);

/// A vector-valued 2-form given by its evaluation recipe. Checks only ever
/// probe frame pairs, so the full component array is never stored; the
/// recipe assembles the symbolic value for a concrete argument pair.
class VectorValued2Form {
 public:
  using Recipe =
      std::function<PhaseVectorField(const PhaseVectorField&, const PhaseVectorField&)>;

  VectorValued2Form(std::string tag, ChartPtr chart, Recipe recipe)
      : tag_(std::move(tag)), chart_(std::move(chart)), recipe_(std::move(recipe)) {}

  const std::string& tag() const { return tag_; }
  const ChartPtr& chart() const { return chart_; }

  PhaseVectorField symbolic(const PhaseVectorField& x, const PhaseVectorField& y) const {
    return recipe_(x, y);
  }

  std::vector<double> operator()(const PhaseVectorField& x, const PhaseVectorField& y,
                                 const ChartPoint& pt) const {
    return recipe_(x, y).eval(pt);
  }

 private:
  std::string tag_;
  ChartPtr chart_;
  Recipe recipe_;
};

/// The 8-term bracket of two (1,1)-tensors:
/// [A,B](X,Y) = [AX,BY] + [BX,AY] + (AB+BA)[X,Y]
///            - A[X,BY] - B[X,AY] - A[BX,Y] - B[AX,Y].
VectorValued2Form fn_bracket_11(const FullTensor11& a, const FullTensor11& b);

/// N_A(X,Y) = [AX,AY] + A^2[X,Y] - A[X,AY] - A[AX,Y]  (equals [A,A]/2).
VectorValued2Form nijenhuis(const FullTensor11& a);

}  // namespace ctgeo
