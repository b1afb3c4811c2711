#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "nsit/classifier.hpp"
#include "nsit/datagen.hpp"
#include "nsit/dynamics.hpp"
#include "nsit/gellmann.hpp"
#include "nsit/measurement.hpp"
#include "nsit/states.hpp"

// File schemas, all plain text:
//   ggmmb-v1    generator basis with eigenvalue/projector blocks (JSON)
//   rho-v1      density matrix as re/im parts (JSON)
//   pvec-v1     probability vector as tuples (JSON)
//   tmat-v1     transfer matrix as dense rows (JSON)
//   witness-v1  witness report, optionally with a negativity scan (JSON)
//   dataset-v1  labeled examples, one CSV row each, "#"-header metadata
//   model-v1    classifier weights, bias and training metadata (JSON)
namespace nsit::io {

// Wrong or missing schema key in an input file.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_basis(const std::string& path, const GeneratorBasis& basis);

void write_density(const std::string& path, const DensityMatrix& rho);
DensityMatrix read_density(const std::string& path);

// Hermitian matrix in angular-frequency units, schema "hmat-v1" (same re/im
// layout as rho-v1 but without the unit-trace requirement).
void write_hamiltonian(const std::string& path, const HamiltonianSpec& h);
HamiltonianSpec read_hamiltonian(const std::string& path);

void write_probability_vector(const std::string& path, const ProbabilityVector& p);
ProbabilityVector read_probability_vector(const std::string& path);

void write_transfer_matrix(const std::string& path, const TransferMatrix& tm);
TransferMatrix read_transfer_matrix(const std::string& path);

// The scan part is optional so plain witness evaluations and negativity
// scans share one schema.
struct WitnessFile {
  int dim = 0;
  int generator = 0;
  int outcome = 0;
  WitnessReport report;
  std::optional<NegativityScan> scan;
};
void write_witness(const std::string& path, const WitnessFile& file);

void write_dataset(const std::string& path, const Dataset& dataset);
Dataset read_dataset(const std::string& path);

void write_model(const std::string& path, const ClassifierModel& model);
ClassifierModel read_model(const std::string& path);

// Reads the "schema" key of a JSON file ("" when absent or not JSON).
std::string peek_schema(const std::string& path);

}  // namespace nsit::io
