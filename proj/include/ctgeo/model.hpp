#pragma once

#include <optional>
#include <string>

#include "ctgeo/sampling.hpp"
#include "ctgeo/sf_matrix.hpp"
#include "ctgeo/vector_field.hpp"

namespace ctgeo {

/// A model file: a JSON object with lower-snake-case fields. Expressions are
/// parsed eagerly at load time; at least a hamiltonian or an explicit
/// (tangent_structure, vector_field) pair must be present.
struct ModelFile {
  std::string id;
  int dimension = 0;
  ChartPtr cotangent_chart;
  ChartPtr tangent_chart;

  std::optional<ScalarField> hamiltonian;        // over the cotangent chart
  std::optional<ScalarField> lagrangian;         // over the tangent chart
  std::optional<SfMatrix> connection;            // N_ij texts
  std::optional<SfMatrix> tangent_structure;     // t_ij texts
  std::optional<PhaseVectorField> vector_field;  // xi / chi texts

  SamplingConfig sampling;
};

ModelFile load_model(const std::string& path);
ModelFile parse_model(const std::string& json_text, std::string id);

}  // namespace ctgeo
