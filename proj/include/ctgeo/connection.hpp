#pragma once

#include "ctgeo/sf_matrix.hpp"
#include "ctgeo/tensor11.hpp"

namespace ctgeo {

/// Lower-3-index coefficient array R_ijk, antisymmetric in (i,j); k pairs
/// with the fiber frame.
struct Curvature3 {
  int n = 0;
  std::vector<ScalarField> comp;  // (i*n + j)*n + k

  const ScalarField& at(int i, int j, int k) const {
    return comp[static_cast<std::size_t>((i * n + j) * n + k)];
  }
  ScalarField& at(int i, int j, int k) {
    return comp[static_cast<std::size_t>((i * n + j) * n + k)];
  }
};

/// A nonlinear connection on a cotangent chart, as the coefficient matrix
/// N_ij (first index pairs with dx^i, second with the fiber frame d/dp_j).
class NonlinearConnection {
 public:
  NonlinearConnection() = default;
  NonlinearConnection(ChartPtr chart, SfMatrix coefficients);

  static NonlinearConnection zero(ChartPtr chart);

  const ChartPtr& chart() const { return chart_; }
  const SfMatrix& coefficients() const { return n_; }
  const ScalarField& at(int i, int j) const { return n_.at(i, j); }

  /// delta/delta x^i = d/dx^i + N_ij d/dp_j
  PhaseVectorField adapted_frame(int i) const;

  /// delta f / delta x^i applied to a scalar.
  ScalarField adapted_derivative(const ScalarField& f, int i) const;

  FullTensor11 horizontal() const;
  FullTensor11 vertical() const;
  /// h - v
  FullTensor11 connection_tensor() const;

  /// tau_ij = (N_ij - N_ji)/2
  SfMatrix antisymmetric_part() const;

  /// R_ijk = delta N_jk / delta x^i - delta N_ik / delta x^j
  Curvature3 curvature() const;

  /// p_k dN_ij/dp_k - N_ij  (vanishes iff N is 1-homogeneous in p)
  SfMatrix tension() const;

 private:
  ChartPtr chart_;
  SfMatrix n_;
};

}  // namespace ctgeo
