#pragma once

#include "ctgeo/vector_field.hpp"

namespace ctgeo {

/// C* = p_i d/dp_i, the generator of fiber dilations.
PhaseVectorField liouville_hamilton_field(const ChartPtr& chart);

/// theta = p_i dx^i.
PhaseOneForm liouville_one_form(const ChartPtr& chart);

/// omega(X,Y) for the canonical symplectic pairing dp_i ^ dx^i, assembled
/// symbolically. The pairing is stored as the constant canonical matrix;
/// d theta = omega is a fact of the chart, not something recomputed here.
ScalarField symplectic_pairing(const PhaseVectorField& x, const PhaseVectorField& y);

/// {f,g} = df/dp_i dg/dx^i - dg/dp_i df/dx^i.
ScalarField poisson_bracket(const ScalarField& f, const ScalarField& g);

}  // namespace ctgeo
