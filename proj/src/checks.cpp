#include "ctgeo/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ctgeo/canonical.hpp"
#include "ctgeo/numeric.hpp"
#include "ctgeo/version.hpp"

namespace ctgeo {

void CheckReport::add(CheckRecord record) {
  if (!record.informational) overall_pass = overall_pass && record.pass;
  checks.push_back(std::move(record));
}

namespace {

// ---- small dense helpers on row-major matrices -------------------------

std::vector<double> mat_mul(const std::vector<double>& a, const std::vector<double>& b, int m) {
  std::vector<double> out(static_cast<std::size_t>(m * m), 0.0);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      const double aik = a[static_cast<std::size_t>(i * m + k)];
      if (aik == 0.0) continue;
      for (int j = 0; j < m; ++j)
        out[static_cast<std::size_t>(i * m + j)] += aik * b[static_cast<std::size_t>(k * m + j)];
    }
  return out;
}

std::vector<double> mat_sub(std::vector<double> a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::vector<double> mat_add(std::vector<double> a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<double> mat_eye(int m) {
  std::vector<double> out(static_cast<std::size_t>(m * m), 0.0);
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i * m + i)] = 1.0;
  return out;
}

std::vector<double> mat_scale(std::vector<double> a, double c) {
  for (double& v : a) v *= c;
  return a;
}

// ---- suite context ------------------------------------------------------

struct SuiteContext {
  ChartPtr chart;
  std::vector<ChartPoint> pts;
  std::optional<HamiltonModel> hamilton;
  AdaptedTangentStructure j;
  PhaseVectorField rho;
  NonlinearConnection active;     // connection override when given, else canonical
  NonlinearConnection canonical;  // of (rho, j)
  bool connection_overridden = false;
  bool j_overridden = false;
  bool rho_overridden = false;
  std::vector<ScalarField> ingredients;  // every user-visible scalar field
};

SuiteContext build_context(const ModelFile& model, const CheckOptions& options,
                           double fiber_abs_min = 0.0) {
  SuiteContext ctx;
  ctx.chart = model.cotangent_chart;

  SamplingConfig sampling = model.sampling;
  if (options.seed) sampling.seed = *options.seed;
  if (options.count) sampling.count = *options.count;
  ctx.pts = sample_chart_points(ctx.chart, sampling, fiber_abs_min);

  if (model.hamiltonian) {
    ctx.hamilton = HamiltonModel::build(*model.hamiltonian);
    ctx.hamilton->check_regularity(ctx.pts);
    ctx.ingredients.push_back(*model.hamiltonian);
  }

  if (model.tangent_structure) {
    ctx.j = AdaptedTangentStructure::from_lower(ctx.chart, *model.tangent_structure);
    ctx.j_overridden = ctx.hamilton.has_value();
  } else {
    ctx.j = ctx.hamilton->tangent_structure();
  }
  if (ctx.j.min_abs_det(ctx.pts) < 1e-8)
    throw RegularityError("tangent structure singular on the sampling box");

  if (model.vector_field) {
    ctx.rho = *model.vector_field;
    ctx.rho_overridden = ctx.hamilton.has_value();
  } else {
    ctx.rho = ctx.hamilton->hamiltonian_field();
  }

  ctx.canonical = canonical_connection(ctx.rho, ctx.j);
  if (model.connection) {
    ctx.active = NonlinearConnection(ctx.chart, *model.connection);
    ctx.connection_overridden = true;
  } else {
    ctx.active = ctx.canonical;
  }

  const int n = ctx.chart->dimension();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      ctx.ingredients.push_back(ctx.j.lower().at(i, jj));
      ctx.ingredients.push_back(ctx.active.at(i, jj));
    }
  for (int a = 0; a < ctx.chart->coord_count(); ++a)
    ctx.ingredients.push_back(ctx.rho.component(a));
  return ctx;
}

double max_abs_at(const std::vector<ScalarField>& fields, std::span<const ChartPoint> pts) {
  double worst = 0.0;
  for (const ChartPoint& pt : pts)
    for (const ScalarField& f : fields) worst = std::max(worst, std::abs(f(pt)));
  return worst;
}

CheckRecord make_record(std::string name, std::string anchor, double residual, double tol,
                        int points, std::string note = {}) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.max_abs_residual = residual;
  r.tolerance = tol;
  r.points_evaluated = points;
  r.pass = residual <= tol;
  r.note = std::move(note);
  return r;
}

CheckRecord make_info(std::string name, std::string anchor, double residual, int points,
                      std::string note) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.max_abs_residual = residual;
  r.tolerance = 0.0;
  r.points_evaluated = points;
  r.pass = true;
  r.informational = true;
  r.note = std::move(note);
  return r;
}

// scaled finite-difference residual: relative above 1, absolute (x100) below
double fd_scaled_residual(double symbolic, double fd) {
  const double err = std::abs(symbolic - fd);
  const double mag = std::abs(symbolic);
  return mag >= 1.0 ? err / mag : err * 100.0;
}

std::string stamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CheckReport start_report(const ModelFile& model, const SamplingConfig& effective) {
  CheckReport report;
  report.model = model.id;
  report.tool_version = kToolVersion;
  report.timestamp = stamp_now();
  report.rng = kSamplerAlgorithm;
  report.seed = effective.seed;
  report.sample_count = effective.count;
  return report;
}

SamplingConfig effective_sampling(const ModelFile& model, const CheckOptions& options) {
  SamplingConfig sampling = model.sampling;
  if (options.seed) sampling.seed = *options.seed;
  if (options.count) sampling.count = *options.count;
  return sampling;
}

}  // namespace

// ---- the identity suite --------------------------------------------------

CheckReport run_check_suite(const ModelFile& model, const CheckOptions& options) {
  SuiteContext ctx = build_context(model, options);
  CheckReport report = start_report(model, effective_sampling(model, options));
  const ChartPtr& chart = ctx.chart;
  const int n = chart->dimension();
  const int m = chart->coord_count();
  const int npts = static_cast<int>(ctx.pts.size());

  // differentiation engine against its central-difference oracle
  {
    double worst = 0.0;
    const double h = 1e-5;
    for (const ScalarField& f : ctx.ingredients) {
      for (const ChartPoint& pt : ctx.pts) {
        std::vector<double> shifted = pt.values;
        for (int a = 0; a < m; ++a) {
          const double center = pt.values[static_cast<std::size_t>(a)];
          shifted[static_cast<std::size_t>(a)] = center + h;
          const double fp = f.eval(shifted);
          shifted[static_cast<std::size_t>(a)] = center - h;
          const double fm = f.eval(shifted);
          shifted[static_cast<std::size_t>(a)] = center;
          worst = std::max(
              worst, fd_scaled_residual(f.derivative(a)(pt), (fp - fm) / (2.0 * h)));
        }
      }
    }
    report.add(make_record("fd_gradient", "symbolic gradient vs central differences", worst,
                           options.tol_numeric, npts));
  }

  // mixed partials commute
  {
    std::vector<ScalarField> residuals;
    for (const ScalarField& f : ctx.ingredients)
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          residuals.push_back(f.derivative(a).derivative(b) - f.derivative(b).derivative(a));
    report.add(make_record("mixed_partial_symmetry", "mixed partial derivatives commute",
                           max_abs_at(residuals, ctx.pts), options.tol_algebraic, npts));
  }

  FullTensor11 h_proj = ctx.active.horizontal();
  FullTensor11 v_proj = ctx.active.vertical();
  FullTensor11 j_full = ctx.j.full();

  // projector algebra
  {
    double worst = 0.0;
    for (const ChartPoint& pt : ctx.pts) {
      std::vector<double> hv = h_proj.eval(pt);
      std::vector<double> vv = v_proj.eval(pt);
      std::vector<double> nt = ctx.active.connection_tensor().eval(pt);
      worst = std::max(worst, max_abs(mat_sub(mat_mul(hv, hv, m), hv)));
      worst = std::max(worst, max_abs(mat_sub(mat_mul(vv, vv, m), vv)));
      worst = std::max(worst, max_abs(mat_mul(hv, vv, m)));
      worst = std::max(worst, max_abs(mat_mul(vv, hv, m)));
      worst = std::max(worst, max_abs(mat_sub(mat_add(hv, vv), mat_eye(m))));
      worst = std::max(worst, max_abs(mat_sub(mat_sub(hv, vv), nt)));
    }
    report.add(make_record("projector_algebra",
                           "h2=h, v2=v, hv=vh=0, h+v=Id, h-v=N tensor", worst,
                           options.tol_algebraic, npts));
  }

  // relations between J and the projectors
  {
    double worst = 0.0;
    for (const ChartPoint& pt : ctx.pts) {
      std::vector<double> hv = h_proj.eval(pt);
      std::vector<double> vv = v_proj.eval(pt);
      std::vector<double> jv = j_full.eval(pt);
      worst = std::max(worst, max_abs(mat_sub(mat_mul(jv, hv, m), jv)));
      worst = std::max(worst, max_abs(mat_mul(hv, jv, m)));
      worst = std::max(worst, max_abs(mat_mul(jv, vv, m)));
      worst = std::max(worst, max_abs(mat_sub(mat_mul(vv, jv, m), jv)));
    }
    report.add(make_record("tangent_structure_relations", "Jh=J, hJ=0, Jv=0, vJ=J", worst,
                           options.tol_algebraic, npts));
  }

  // curvature coefficients against the Nijenhuis tensor of h
  {
    Curvature3 r = ctx.active.curvature();
    VectorValued2Form nh = nijenhuis(h_proj);
    std::vector<ScalarField> residuals;
    for (int i = 0; i < n; ++i) {
      for (int jj = i + 1; jj < n; ++jj) {
        PhaseVectorField value =
            nh.symbolic(ctx.active.adapted_frame(i), ctx.active.adapted_frame(jj));
        for (int a = 0; a < n; ++a) residuals.push_back(value.component(a));
        for (int k = 0; k < n; ++k)
          residuals.push_back(value.component(chart->fiber_index(k)) - r.at(i, jj, k));
      }
    }
    report.add(make_record("curvature_vs_nijenhuis",
                           "curvature coefficients vs Nijenhuis tensor of h",
                           max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
  }

  // torsion coefficients against the bracket [J, h]
  {
    Curvature3 t = torsion_components(ctx.j, ctx.active);
    VectorValued2Form fn = fn_bracket_11(j_full, h_proj);
    std::vector<ScalarField> residuals;
    for (int i = 0; i < n; ++i) {
      for (int jj = i + 1; jj < n; ++jj) {
        PhaseVectorField value = fn.symbolic(PhaseVectorField::frame(chart, i),
                                             PhaseVectorField::frame(chart, jj));
        for (int a = 0; a < n; ++a) residuals.push_back(value.component(a));
        for (int k = 0; k < n; ++k)
          residuals.push_back(value.component(chart->fiber_index(k)) - t.at(i, jj, k));
      }
    }
    report.add(make_record("torsion_vs_fn_bracket", "torsion coefficients vs bracket [J,h]",
                           max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
  }

  // tension against the Liouville-field Lie derivative
  {
    SfMatrix tension = ctx.active.tension();
    FullTensor11 intrinsic =
        lie_derivative_tensor11(liouville_hamilton_field(chart),
                                ctx.active.connection_tensor()).scaled(0.5);
    std::vector<ScalarField> residuals;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        residuals.push_back(intrinsic.at(chart->fiber_index(jj), i) - tension.at(i, jj));
    report.add(make_record("tension_vs_lie_derivative",
                           "tension vs Lie derivative of h-v along the Liouville field",
                           max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
    std::vector<ScalarField> magnitude;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) magnitude.push_back(tension.at(i, jj));
    report.add(make_info("tension_magnitude", "tension (vanishes iff N is 1-homogeneous in p)",
                         max_abs_at(magnitude, ctx.pts), npts, "diagnostic"));
  }

  // regular-field condition
  {
    RegularityResidual rr = j_regularity_residual(ctx.rho, ctx.j, ctx.pts);
    report.add(make_record("j_regularity",
                           "t^ij = dxi^j/dp_i and J[rho,JX] = -JX",
                           std::max(rr.closed_form, rr.intrinsic), options.tol_symbolic, npts));
  }

  // homogeneous structures pair with the Liouville field
  {
    std::vector<ScalarField> hom;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        ScalarField euler = ScalarField::constant(chart, 0.0);
        for (int s = 0; s < n; ++s)
          euler = euler + ScalarField::coordinate(chart, chart->fiber_index(s)) *
                              ctx.j.lower().at(i, jj).derivative(chart->fiber_index(s));
        hom.push_back(euler);
      }
    const double hom_residual = max_abs_at(hom, ctx.pts);
    if (hom_residual <= options.tol_symbolic) {
      PhaseVectorField diff =
          j_full.apply(ctx.rho) - liouville_hamilton_field(chart);
      std::vector<ScalarField> residuals;
      for (int a = 0; a < m; ++a) residuals.push_back(diff.component(a));
      report.add(make_record("homogeneous_structure_field", "J rho = C* for 0-homogeneous J",
                             max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
    } else {
      report.add(make_info("homogeneous_structure_field", "J rho = C* for 0-homogeneous J",
                           hom_residual, npts, "skipped: t_ij is not 0-homogeneous in p"));
    }
  }

  // compatibility of the Lie transport with J and v
  {
    std::vector<ScalarField> residuals;
    for (int a = 0; a < m; ++a) {
      PhaseVectorField frame = PhaseVectorField::frame(chart, a);
      PhaseVectorField r1 =
          h_proj.apply(lie_bracket(ctx.rho, j_full.apply(frame))) + h_proj.column(a);
      PhaseVectorField r2 =
          j_full.apply(lie_bracket(ctx.rho, v_proj.apply(frame))) + v_proj.column(a);
      for (int c = 0; c < m; ++c) {
        residuals.push_back(r1.component(c));
        residuals.push_back(r2.component(c));
      }
    }
    report.add(make_record("lie_compatibility", "h.L_rho.J = -h and J.L_rho.v = -v",
                           max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
  }

  DynCovDerivative nabla(ctx.rho, ctx.active);

  // compatibility with the tangent structure singles out the connection
  {
    FullTensor11 nabla_j = nabla(j_full);
    std::vector<ScalarField> residuals;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) residuals.push_back(nabla_j.at(a, b));
    report.add(make_record(
        "nabla_j", "nabla J = 0 fixes the canonical connection",
        max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts,
        ctx.connection_overridden ? "connection supplied by the model, not the canonical one"
                                  : ""));
  }

  // almost complex structure identity suite
  FullTensor11 f_tensor = almost_complex(ctx.rho, ctx.j, ctx.active);
  {
    FullTensor11 lrh = lie_derivative_tensor11(ctx.rho, h_proj);
    FullTensor11 phi = jacobi_intrinsic(ctx.rho, ctx.active);
    double worst = 0.0;
    for (const ChartPoint& pt : ctx.pts) {
      std::vector<double> fv = f_tensor.eval(pt);
      std::vector<double> jv = j_full.eval(pt);
      std::vector<double> hv = h_proj.eval(pt);
      std::vector<double> vv = v_proj.eval(pt);
      std::vector<double> nt = mat_sub(hv, vv);
      std::vector<double> lv = lrh.eval(pt);
      std::vector<double> pv = phi.eval(pt);
      worst = std::max(worst, max_abs(mat_add(mat_mul(fv, fv, m), mat_eye(m))));
      worst = std::max(worst, max_abs(mat_sub(mat_mul(fv, jv, m), hv)));
      worst = std::max(worst, max_abs(mat_sub(mat_mul(jv, fv, m), vv)));
      worst = std::max(worst, max_abs(mat_add(mat_mul(vv, fv, m), jv)));
      worst = std::max(worst, max_abs(mat_add(mat_mul(fv, hv, m), jv)));
      worst = std::max(worst, max_abs(mat_sub(mat_mul(hv, fv, m), mat_add(fv, jv))));
      worst = std::max(worst, max_abs(mat_sub(mat_mul(fv, vv, m), mat_add(fv, jv))));
      worst = std::max(worst,
                       max_abs(mat_sub(mat_mul(nt, fv, m),
                                       mat_add(fv, mat_scale(jv, 2.0)))));
      worst = std::max(worst, max_abs(mat_sub(mat_sub(mat_sub(lv, fv), jv), pv)));
    }
    report.add(make_record(
        "almost_complex_suite",
        "F2=-Id, FJ=h, JF=v, vF=Fh=-J, hF=Fv=F+J, NF=F+2J, Phi=L_rho h-F-J", worst,
        options.tol_symbolic, npts,
        ctx.connection_overridden ? "identities stated for the canonical connection" : ""));
  }

  // local form of the almost complex structure
  {
    FullTensor11 local = almost_complex_local(ctx.j, ctx.active);
    std::vector<ScalarField> residuals;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) residuals.push_back(f_tensor.at(a, b) - local.at(a, b));
    report.add(make_record("almost_complex_local_form",
                           "F = t^ij delta_i (x) delta p_j - t_ij d/dp_i (x) dx^j",
                           max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
  }

  // operator decomposition of the dynamical covariant derivative
  {
    DecompositionResiduals d = decomposition_check(ctx.rho, ctx.j, ctx.active, ctx.pts);
    report.add(make_record("nabla_decomposition", "nabla = L_rho + F + J - Phi",
                           d.decomposition, options.tol_symbolic, npts));
    report.add(make_record(
        "nabla_f", "nabla F = 0", d.nabla_f, options.tol_symbolic, npts,
        ctx.connection_overridden ? "identity stated for the canonical connection" : ""));
  }

  // adapted-frame expansion of the transport brackets
  {
    SfMatrix r_closed = jacobi_closed_form(ctx.rho, ctx.active);
    std::vector<ScalarField> residuals;
    for (int jj = 0; jj < n; ++jj) {
      // [rho, d/dp_j] = -t^{ji} delta_i + (t^{ji} N_ik - dchi_k/dp_j) d/dp_k
      PhaseVectorField expected = PhaseVectorField::zero(chart);
      for (int i = 0; i < n; ++i)
        expected = expected +
                   ctx.active.adapted_frame(i).scaled(-ctx.j.upper().at(jj, i));
      for (int k = 0; k < n; ++k) {
        ScalarField coeff =
            -ctx.rho.fiber_component(k).derivative(chart->fiber_index(jj));
        for (int i = 0; i < n; ++i)
          coeff = coeff + ctx.j.upper().at(jj, i) * ctx.active.at(i, k);
        expected = expected +
                   PhaseVectorField::frame(chart, chart->fiber_index(k)).scaled(coeff);
      }
      PhaseVectorField actual =
          lie_bracket(ctx.rho, PhaseVectorField::frame(chart, chart->fiber_index(jj)));
      PhaseVectorField diff = actual - expected;
      for (int c = 0; c < m; ++c) residuals.push_back(diff.component(c));

      // [rho, delta_j] = -(delta xi^i/delta x^j) delta_i + R_jk d/dp_k
      PhaseVectorField expected2 = PhaseVectorField::zero(chart);
      for (int i = 0; i < n; ++i)
        expected2 = expected2 + ctx.active.adapted_frame(i).scaled(
                                    -ctx.active.adapted_derivative(ctx.rho.base_component(i), jj));
      for (int k = 0; k < n; ++k)
        expected2 = expected2 + PhaseVectorField::frame(chart, chart->fiber_index(k))
                                    .scaled(r_closed.at(jj, k));
      PhaseVectorField actual2 = lie_bracket(ctx.rho, ctx.active.adapted_frame(jj));
      PhaseVectorField diff2 = actual2 - expected2;
      for (int c = 0; c < m; ++c) residuals.push_back(diff2.component(c));
    }
    report.add(make_record("frame_bracket_expansion",
                           "adapted-frame expansion of [rho, d/dp_j] and [rho, delta_j]",
                           max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
  }

  // two independent formulas for the canonical connection
  if (ctx.hamilton && !ctx.j_overridden && !ctx.rho_overridden) {
    NonlinearConnection metric = canonical_hamilton_connection(*ctx.hamilton);
    std::vector<ScalarField> residuals;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        residuals.push_back(ctx.canonical.at(i, jj) - metric.at(i, jj));
    report.add(make_record("metric_connection_agreement",
                           "regular-field connection vs Hamilton metric connection",
                           max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
  }

  // Jacobi endomorphism: closed form against the intrinsic composition
  {
    FullTensor11 phi = jacobi_intrinsic(ctx.rho, ctx.active);
    SfMatrix closed = jacobi_closed_form(ctx.rho, ctx.active);
    SfMatrix intrinsic_block = vertical_block(phi);
    std::vector<ScalarField> residuals;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        residuals.push_back(intrinsic_block.at(i, jj) - closed.at(i, jj));
    // vertically valued: h Phi = 0 and Phi v = 0
    double worst = max_abs_at(residuals, ctx.pts);
    for (const ChartPoint& pt : ctx.pts) {
      std::vector<double> pv = phi.eval(pt);
      std::vector<double> hv = h_proj.eval(pt);
      std::vector<double> vv = v_proj.eval(pt);
      worst = std::max(worst, max_abs(mat_mul(hv, pv, m)));
      worst = std::max(worst, max_abs(mat_mul(pv, vv, m)));
    }
    report.add(make_record("jacobi_closed_form_agreement",
                           "Jacobi endomorphism closed form vs v.L_rho.h", worst,
                           options.tol_symbolic, npts,
                           worst > options.tol_symbolic ? "formula discrepancy finding" : ""));

    // decomposition into a curvature contraction and a vertical remainder
    VectorValued2Form nh = nijenhuis(h_proj);
    PhaseVectorField v_rho = v_proj.apply(ctx.rho);
    std::vector<ScalarField> decomposition;
    for (int a = 0; a < m; ++a) {
      PhaseVectorField frame = PhaseVectorField::frame(chart, a);
      PhaseVectorField expected =
          nh.symbolic(frame, ctx.rho) + v_proj.apply(lie_bracket(v_rho, h_proj.column(a)));
      PhaseVectorField diff = phi.column(a) - expected;
      for (int c = 0; c < m; ++c) decomposition.push_back(diff.component(c));
    }
    report.add(make_record("jacobi_curvature_decomposition",
                           "Phi = Omega(., rho) + v.L_{v rho}.h",
                           max_abs_at(decomposition, ctx.pts), options.tol_symbolic, npts));
  }

  // closedness conditions of a Hamiltonian field
  {
    HamiltonianConditionResiduals hc = hamiltonian_conditions(ctx.rho, ctx.pts);
    const double worst = std::max({hc.a, hc.b, hc.c});
    if (!ctx.rho_overridden && ctx.hamilton) {
      report.add(make_record("hamiltonian_conditions",
                             "closedness conditions of a Hamiltonian field", worst,
                             options.tol_algebraic, npts));
    } else {
      const char* kind = "neither";
      switch (hc.classify(options.tol_symbolic)) {
        case HamiltonianConditionResiduals::Kind::hamiltonian: kind = "hamiltonian"; break;
        case HamiltonianConditionResiduals::Kind::semi_hamiltonian: kind = "semi-hamiltonian"; break;
        case HamiltonianConditionResiduals::Kind::neither: kind = "neither"; break;
      }
      report.add(make_info("hamiltonian_conditions",
                           "closedness conditions of a Hamiltonian field", worst, npts,
                           std::string("classification: ") + kind));
    }
  }

  // symmetry of the structure coefficients is optional
  {
    std::optional<SfMatrix> metric;
    if (ctx.hamilton) metric = ctx.hamilton->metric_upper();
    TangentStructureDiagnostics diag =
        tangent_structure_diagnostics(ctx.j, metric, ctx.pts);
    std::ostringstream note;
    note << "integrability " << exact_double_text(diag.integrability) << ", homogeneity "
         << exact_double_text(diag.homogeneity);
    if (diag.metric_match) note << ", metric match " << exact_double_text(*diag.metric_match);
    report.add(make_info("tangent_structure_symmetry", "symmetry of t_ij (optional property)",
                         diag.symmetry, npts, note.str()));
  }

  return report;
}

// ---- the Legendre / duality suite -----------------------------------------

CheckReport run_legendre_suite(const ModelFile& model, const CheckOptions& options,
                               std::optional<double> epsilon) {
  if (!model.hamiltonian)
    throw ModelError("hamiltonian", "the Legendre pipeline needs a Hamiltonian");

  // fiber entries stay away from zero so every point is inside the
  // iteration basin of the inverse
  SuiteContext ctx = build_context(model, options, 0.1);
  CheckReport report = start_report(model, effective_sampling(model, options));
  const ChartPtr& chart = ctx.chart;
  const int n = chart->dimension();
  const int npts = static_cast<int>(ctx.pts.size());

  LegendreMap map(*ctx.hamilton);
  const HamiltonModel& hm = *ctx.hamilton;

  std::vector<ChartPoint> tangent_pts;
  tangent_pts.reserve(ctx.pts.size());
  for (const ChartPoint& pt : ctx.pts) tangent_pts.push_back(map.forward(pt));

  // round trip through the numeric inverse
  {
    double worst = 0.0;
    int max_iterations = 0;
    for (const ChartPoint& tpt : tangent_pts) {
      LegendreMap::Inverse inv = map.inverse(tpt);
      max_iterations = std::max(max_iterations, inv.iterations);
      ChartPoint back = map.forward(inv.point);
      for (int a = 0; a < chart->coord_count(); ++a)
        worst = std::max(worst, std::abs(back.values[static_cast<std::size_t>(a)] -
                                         tpt.values[static_cast<std::size_t>(a)]));
    }
    report.add(make_record("fiber_map_round_trip", "Psi(Psi^-1(x,y)) = (x,y)", worst, 1e-10,
                           npts));
    report.add(make_info("newton_iterations", "fiber inversion iteration count",
                         max_iterations, npts, "max over sampled points"));
  }

  // inverse-function identities, finite differences of the numeric inverse
  {
    const double h = 1e-5;
    double worst = 0.0;
    auto zeta = [&](const ChartPoint& tpt, int i) { return map.inverse(tpt).point.fiber(i); };
    for (const ChartPoint& tpt : tangent_pts) {
      ChartPoint cpt = map.inverse(tpt).point;
      for (int i = 0; i < n; ++i) {
        for (int jj = 0; jj < n; ++jj) {
          ChartPoint plus = tpt, minus = tpt;
          plus.values[static_cast<std::size_t>(n + jj)] += h;
          minus.values[static_cast<std::size_t>(n + jj)] -= h;
          const double dzeta_dy = (zeta(plus, i) - zeta(minus, i)) / (2.0 * h);
          worst = std::max(worst, std::abs(dzeta_dy - hm.metric_lower().at(i, jj)(cpt)));

          ChartPoint xplus = tpt, xminus = tpt;
          xplus.values[static_cast<std::size_t>(jj)] += h;
          xminus.values[static_cast<std::size_t>(jj)] -= h;
          const double dzeta_dx = (zeta(xplus, i) - zeta(xminus, i)) / (2.0 * h);
          double expected = 0.0;
          for (int k = 0; k < n; ++k)
            expected -= hm.metric_lower().at(i, k)(cpt) *
                        hm.hamiltonian_field().base_component(k).derivative(
                            chart->base_index(jj))(cpt);
          worst = std::max(worst, std::abs(dzeta_dx - expected));
        }
      }
    }
    report.add(make_record("inverse_function_identities",
                           "dzeta/dy = g and dzeta/dx = -g dxi/dx", worst, options.tol_numeric,
                           npts));
  }

  // energy is constant along the Hamiltonian field
  {
    ScalarField drift = hm.hamiltonian_field().directional(hm.hamiltonian());
    report.add(make_record("energy_conservation", "rho_H(H) = 0",
                           max_abs_at({drift}, ctx.pts), options.tol_algebraic, npts));
  }

  // Lagrangian data: supplied text or the dual construction
  std::optional<LagrangeModel> lagrange;
  if (model.lagrangian) {
    lagrange = LagrangeModel::build(*model.lagrangian);
    double worst = 0.0;
    for (const ChartPoint& tpt : tangent_pts)
      worst = std::max(worst,
                       std::abs(map.induced_lagrangian(tpt) - (*model.lagrangian)(tpt)));
    report.add(make_record("lagrangian_consistency",
                           "supplied Lagrangian vs zeta_i y^i - H(x, zeta)", worst, 1e-10,
                           npts));
    if (worst > 1e-10)
      throw ModelError("lagrangian", "supplied Lagrangian is inconsistent with the Hamiltonian");
  }

  auto run_duality = [&](std::span<const ScalarField> perturbation) -> Theorem2Residuals {
    if (lagrange) {
      TangentSemispray spray{lagrange->chart(), lagrange->canonical_spray()};
      for (std::size_t i = 0; i < perturbation.size(); ++i)
        spray.s[i] = spray.s[i] + perturbation[i];
      return theorem2_residuals(hm, *lagrange, spray, map, ctx.pts);
    }
    return theorem2_residuals_dual(hm, map, perturbation, ctx.pts);
  };

  // canonical spray: pullback against the Hamiltonian field
  {
    PhaseVectorField pulled = [&] {
      if (lagrange) {
        TangentSemispray spray{lagrange->chart(), lagrange->canonical_spray()};
        return pullback_semispray(hm, spray);
      }
      // the dual spray pulls back by the same fiber-metric contraction
      std::vector<ScalarField> s = map.dual_spray_through_map();
      std::vector<ScalarField> base, fiber;
      for (int i = 0; i < n; ++i) base.push_back(hm.hamiltonian_field().base_component(i));
      for (int k = 0; k < n; ++k) {
        ScalarField acc = ScalarField::constant(chart, 0.0);
        for (int i = 0; i < n; ++i)
          for (int jj = 0; jj < n; ++jj)
            acc = acc - base[static_cast<std::size_t>(i)] * hm.metric_lower().at(k, jj) *
                            base[static_cast<std::size_t>(jj)].derivative(chart->base_index(i));
        for (int i = 0; i < n; ++i)
          acc = acc + s[static_cast<std::size_t>(i)] * hm.metric_lower().at(i, k);
        fiber.push_back(acc);
      }
      return PhaseVectorField::from_parts(chart, std::move(base), std::move(fiber));
    }();
    PhaseVectorField diff = pulled - hm.hamiltonian_field();
    std::vector<ScalarField> residuals;
    for (int a = 0; a < chart->coord_count(); ++a) residuals.push_back(diff.component(a));
    report.add(make_record("spray_pullback_duality",
                           "pullback of the canonical spray equals rho_H",
                           max_abs_at(residuals, ctx.pts), options.tol_symbolic, npts));
  }

  // duality conditions for the canonical spray
  {
    Theorem2Residuals r = run_duality({});
    report.add(make_record("semi_hamiltonian_a", "pullback: dxi^j/dp_i symmetric", r.semi_a,
                           1e-10, npts));
    report.add(make_record("semi_hamiltonian_b", "pullback: dchi_i/dp_j = -dxi^j/dx^i",
                           r.semi_b, 1e-10, npts));
    report.add(make_record("metric_condition", "S(g_ik) - N^l_k g_li - N^l_i g_lk = 0",
                           r.metric, 1e-10, npts));
    report.add(make_record("symplectic_condition",
                           "N^l_i g_lk - N^l_k g_li + d2L/dx^k dy^i - d2L/dx^i dy^k = 0",
                           r.symplectic, 1e-10, npts));
    const bool lhs = r.pullback_semi_hamiltonian(1e-10);
    const bool rhs = r.connection_canonical(1e-10);
    report.add(make_info("duality_verdict", "semi-Hamiltonian pullback iff canonical connection",
                         0.0, npts,
                         std::string(lhs ? "pullback semi-Hamiltonian" : "pullback NOT semi-Hamiltonian") +
                             "; " + (rhs ? "connection canonical" : "connection NOT canonical") +
                             (lhs == rhs ? "; equivalence holds" : "; EQUIVALENCE VIOLATED")));
    if (lhs != rhs) {
      CheckRecord fail = make_record("duality_equivalence", "both sides agree", 1.0, 0.0, npts);
      report.add(fail);
    }
  }

  // perturbed sprays: residuals must scale linearly with the perturbation
  if (epsilon) {
    const ChartPtr tangent_chart = lagrange ? lagrange->chart() : Chart::tangent(n);
    std::vector<double> semi_b_values, metric_values;
    for (int k = 0; k < 3; ++k) {
      const double eps = *epsilon / std::pow(10.0, k);
      std::vector<ScalarField> perturbation(
          static_cast<std::size_t>(n), ScalarField::constant(tangent_chart, 0.0));
      perturbation[0] =
          eps * pow(ScalarField::coordinate(tangent_chart, tangent_chart->fiber_index(0)), 2.0);
      Theorem2Residuals r = run_duality(perturbation);
      semi_b_values.push_back(r.semi_b);
      metric_values.push_back(r.metric);
      std::ostringstream note;
      note << "epsilon " << exact_double_text(eps) << ": semi_b "
           << exact_double_text(r.semi_b) << ", metric " << exact_double_text(r.metric)
           << ", symplectic " << exact_double_text(r.symplectic);
      report.add(make_info("perturbed_spray_" + std::to_string(k),
                           "perturbed spray residuals", r.semi_b, npts, note.str()));
    }
    auto scaling_record = [&](const char* name, const std::vector<double>& values) {
      double worst = 0.0;
      for (int k = 0; k + 1 < 3; ++k) {
        const double ratio = values[static_cast<std::size_t>(k)] /
                             values[static_cast<std::size_t>(k + 1)];
        worst = std::max(worst, std::abs(ratio - 10.0));
      }
      report.add(make_record(name, "residual ratios across decades = 10 +- 20%", worst, 2.0,
                             npts));
    };
    scaling_record("perturbation_scaling_semi_b", semi_b_values);
    scaling_record("perturbation_scaling_metric", metric_values);
  }

  return report;
}

// ---- object evaluation -----------------------------------------------------

std::vector<double> eval_object(const ModelFile& model, const std::string& object,
                                const ChartPoint& pt, int& rows, int& cols) {
  CheckOptions options;
  options.count = 1;  // context sampling is irrelevant here
  SuiteContext ctx = build_context(model, options);
  const int n = ctx.chart->dimension();

  auto matrix_values = [&](const SfMatrix& m) {
    rows = m.rows();
    cols = m.cols();
    return m.eval(pt);
  };

  if (object == "metric") {
    if (!ctx.hamilton) throw ModelError("hamiltonian", "metric needs a Hamiltonian");
    return matrix_values(ctx.hamilton->metric_upper());
  }
  if (object == "connection") return matrix_values(ctx.active.coefficients());
  if (object == "tension") return matrix_values(ctx.active.tension());
  if (object == "strong_torsion")
    return matrix_values(strong_torsion(ctx.rho, ctx.j, ctx.active));
  if (object == "jacobi")
    return matrix_values(vertical_block(jacobi_intrinsic(ctx.rho, ctx.active)));
  if (object == "curvature" || object == "torsion") {
    Curvature3 c = object == "curvature" ? ctx.active.curvature()
                                         : torsion_components(ctx.j, ctx.active);
    rows = n * n;
    cols = n;
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        for (int k = 0; k < n; ++k) out.push_back(c.at(i, jj, k)(pt));
    return out;
  }
  if (object == "almost_complex") {
    FullTensor11 f = almost_complex(ctx.rho, ctx.j, ctx.active);
    rows = cols = ctx.chart->coord_count();
    return f.eval(pt);
  }
  throw ModelError("object",
                   "unknown object '" + object +
                       "'; valid names: metric, connection, curvature, tension, torsion, "
                       "strong_torsion, jacobi, almost_complex");
}

// ---- report serialization --------------------------------------------------

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string json_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string report_to_json(const CheckReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"model\": \"" << json_escape(report.model) << "\",\n";
  os << "  \"tool_version\": \"" << json_escape(report.tool_version) << "\",\n";
  os << "  \"timestamp\": \"" << json_escape(report.timestamp) << "\",\n";
  os << "  \"rng\": \"" << report.rng << "\",\n";
  os << "  \"seed\": " << report.seed << ",\n";
  os << "  \"sample_count\": " << report.sample_count << ",\n";
  os << "  \"overall_pass\": " << (report.overall_pass ? "true" : "false") << ",\n";
  os << "  \"checks\": [\n";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckRecord& r = report.checks[i];
    os << "    {\"name\": \"" << json_escape(r.name) << "\", \"anchor\": \""
       << json_escape(r.anchor) << "\", \"max_abs_residual\": " << json_number(r.max_abs_residual)
       << ", \"tolerance\": " << json_number(r.tolerance)
       << ", \"points_evaluated\": " << r.points_evaluated
       << ", \"pass\": " << (r.pass ? "true" : "false")
       << ", \"informational\": " << (r.informational ? "true" : "false") << ", \"note\": \""
       << json_escape(r.note) << "\"}";
    os << (i + 1 < report.checks.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

void print_report_table(const CheckReport& report, std::ostream& os) {
  os << "model " << report.model << "  seed " << report.seed << "  samples "
     << report.sample_count << "\n";
  for (const CheckRecord& r : report.checks) {
    os << (r.informational ? "  [info] " : (r.pass ? "  [pass] " : "  [FAIL] "));
    os << std::left << std::setw(34) << r.name << " residual " << std::scientific
       << std::setprecision(3) << r.max_abs_residual;
    if (!r.informational) os << " tol " << r.tolerance;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n" << std::defaultfloat;
  }
  os << (report.overall_pass ? "overall: pass" : "overall: FAIL") << "\n";
}

}  // namespace ctgeo
