#pragma once

#include <span>

#include "ctgeo/frame_calculus.hpp"
#include "ctgeo/tangent_structure.hpp"

namespace ctgeo {

/// Residuals of the regularity condition t^ij = d xi^j / d p_i for a vector
/// field rho = xi^i d/dx^i + chi_i d/dp_i paired with a tangent structure.
struct RegularityResidual {
  double closed_form = 0.0;  // max |t^ij - d xi^j/d p_i|
  double intrinsic = 0.0;    // max |J[rho, J e_a] + J e_a|
};

RegularityResidual j_regularity_residual(const PhaseVectorField& rho,
                                         const AdaptedTangentStructure& j,
                                         std::span<const ChartPoint> pts);

/// The connection singled out by compatibility of the dynamical covariant
/// derivative with the tangent structure:
/// N_ij = (t_ik dchi_j/dp_k - t_kj dxi^k/dx^i - rho(t_ij)) / 2.
NonlinearConnection canonical_connection(const PhaseVectorField& rho,
                                         const AdaptedTangentStructure& j);

/// Vertical-block components of a vertically valued tensor, indexed so that
/// entry (i,j) pairs with dx^i (x) d/dp_j.
SfMatrix vertical_block(const FullTensor11& t);

/// Jacobi endomorphism, intrinsically v o L_rho h (the authoritative route).
FullTensor11 jacobi_intrinsic(const PhaseVectorField& rho, const NonlinearConnection& nc);

/// Closed-form components R_jk = (delta xi^i/delta x^j) N_ik
/// - delta chi_k/delta x^j + rho(N_jk).
SfMatrix jacobi_closed_form(const PhaseVectorField& rho, const NonlinearConnection& nc);

/// The tensor derivation nabla = h o L_rho o h + v o L_rho o v. Scalars map
/// to rho(f); 1-forms and (1,1)-tensors follow from duality and the
/// commutator rule.
class DynCovDerivative {
 public:
  DynCovDerivative(PhaseVectorField rho, const NonlinearConnection& nc);

  const PhaseVectorField& rho() const { return rho_; }
  const FullTensor11& horizontal() const { return h_; }
  const FullTensor11& vertical() const { return v_; }

  ScalarField operator()(const ScalarField& f) const;
  PhaseVectorField operator()(const PhaseVectorField& x) const;
  PhaseOneForm operator()(const PhaseOneForm& phi) const;
  FullTensor11 operator()(const FullTensor11& t) const;

 private:
  PhaseVectorField rho_;
  FullTensor11 h_, v_;
};

/// F = h o L_rho h - J.
FullTensor11 almost_complex(const PhaseVectorField& rho, const AdaptedTangentStructure& j,
                            const NonlinearConnection& nc);

/// Local form t^ij delta/delta x^i (x) delta p_j - t_ij d/dp_i (x) dx^j.
FullTensor11 almost_complex_local(const AdaptedTangentStructure& j,
                                  const NonlinearConnection& nc);

/// Max residuals of nabla = L_rho + F + J - Phi on the coordinate frame,
/// and of nabla J and nabla F.
struct DecompositionResiduals {
  double decomposition = 0.0;
  double nabla_j = 0.0;
  double nabla_f = 0.0;
};

DecompositionResiduals decomposition_check(const PhaseVectorField& rho,
                                           const AdaptedTangentStructure& j,
                                           const NonlinearConnection& nc,
                                           std::span<const ChartPoint> pts);

/// Residuals of the three closedness conditions of a Hamiltonian field:
/// a) d xi^j/d p_i symmetric, b) d chi_i/d p_j = -d xi^j/d x^i,
/// c) d chi_i/d x^j symmetric. Semi-Hamiltonian requires only a) and b).
struct HamiltonianConditionResiduals {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  enum class Kind { hamiltonian, semi_hamiltonian, neither };
  Kind classify(double tol) const {
    if (a <= tol && b <= tol) return c <= tol ? Kind::hamiltonian : Kind::semi_hamiltonian;
    return Kind::neither;
  }
};

HamiltonianConditionResiduals hamiltonian_conditions(const PhaseVectorField& rho,
                                                     std::span<const ChartPoint> pts);

}  // namespace ctgeo
