// Command-line front end: every subcommand is a thin adapter over the
// library, with explicit seeds on anything randomized and text-only I/O.
// Exit codes: 0 success, 2 validation error (bad flags, malformed or
// mismatched input files), 1 runtime error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsit/classical.hpp"
#include "nsit/classifier.hpp"
#include "nsit/datagen.hpp"
#include "nsit/dynamics.hpp"
#include "nsit/io.hpp"
#include "nsit/measurement.hpp"
#include "nsit/qubit.hpp"

namespace {

using namespace nsit;

std::string fmt(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  return buffer;
}

// Streams rows to --out when given, to stdout otherwise; the first line is
// always a "# schema: <name>" header.
class Sink {
 public:
  Sink(const std::string& path, const char* schema) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
    out() << "# schema: " << schema << '\n';
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

ProbabilityVector load_state(const std::string& path, const GeneratorBasis& basis) {
  const std::string schema = io::peek_schema(path);
  if (schema == "rho-v1") {
    const auto rho = io::read_density(path);
    if (rho.dim != basis.dim)
      throw std::invalid_argument(path + ": state dimension does not match --dim");
    return probability_vector_from_density(rho, basis);
  }
  if (schema == "pvec-v1") {
    auto p = io::read_probability_vector(path);
    if (p.dim != basis.dim)
      throw std::invalid_argument(path + ": state dimension does not match --dim");
    return p;
  }
  throw io::SchemaError(path + ": expected a rho-v1 or pvec-v1 state file");
}

// Accepts x / y / z (1-based Pauli index, dim 2 only) or a 1-based integer.
int parse_generator(const std::string& text, int dim) {
  int index = 0;
  if (text == "x") index = 1;
  else if (text == "y") index = 2;
  else if (text == "z") index = 3;
  if (index != 0) {
    if (dim != 2) throw std::invalid_argument("axis names x/y/z require --dim 2");
    return index - 1;
  }
  index = std::stoi(text);
  if (index < 1 || index > dim * dim - 1)
    throw std::invalid_argument("--measure index out of range (1.." +
                                std::to_string(dim * dim - 1) + ")");
  return index - 1;
}

// Accepts +1/-1 outcome labels (dim 2) or a 1-based eigenvalue index in the
// descending order of the basis.
int parse_outcome(const std::string& text, int dim) {
  if (text == "+1") return 0;
  if (text == "-1") {
    if (dim != 2) throw std::invalid_argument("outcome label -1 requires --dim 2");
    return 1;
  }
  const int index = std::stoi(text);
  if (index < 1 || index > dim)
    throw std::invalid_argument("--outcome index out of range (1.." + std::to_string(dim) + ")");
  return index - 1;
}

int parse_axis(const std::string& text) {
  if (text == "x") return 0;
  if (text == "y") return 1;
  if (text == "z") return 2;
  throw std::invalid_argument("--axis must be x, y or z");
}

struct FieldOptions {
  double bx = 0, by = 0, bz = 0;
  std::string ham_path;
  std::string tmat_path;
};

void add_field_options(CLI::App* cmd, FieldOptions& field) {
  cmd->add_option("--bx", field.bx, "Qubit field component B_x (dim 2)");
  cmd->add_option("--by", field.by, "Qubit field component B_y (dim 2)");
  cmd->add_option("--bz", field.bz, "Qubit field component B_z (dim 2)");
  cmd->add_option("--ham", field.ham_path, "Hamiltonian file (hmat-v1), any dimension");
  cmd->add_option("--tmat", field.tmat_path, "Transfer-matrix file (tmat-v1), any dimension");
}

TransferMatrix resolve_transfer_matrix(const FieldOptions& field, const GeneratorBasis& basis) {
  if (!field.tmat_path.empty()) {
    auto tm = io::read_transfer_matrix(field.tmat_path);
    if (tm.dim != basis.dim)
      throw std::invalid_argument(field.tmat_path + ": transfer matrix dimension mismatch");
    return tm;
  }
  if (!field.ham_path.empty()) {
    const auto ham = io::read_hamiltonian(field.ham_path);
    if (ham.dim != basis.dim)
      throw std::invalid_argument(field.ham_path + ": Hamiltonian dimension mismatch");
    return transfer_matrix(ham, basis);
  }
  if (basis.dim != 2)
    throw std::invalid_argument("field flags --bx/--by/--bz require --dim 2; use --ham or --tmat");
  return transfer_matrix(qubit_field_hamiltonian(field.bx, field.by, field.bz), basis);
}

std::vector<double> time_grid(double start, double end, std::size_t steps) {
  if (!(end >= start) || steps < 1)
    throw std::invalid_argument("bad time grid: need t-end >= t-start and steps >= 1");
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i)
    grid.push_back(start + (end - start) * static_cast<double>(i) / static_cast<double>(steps));
  return grid;
}

void print_row(std::ostream& out, double t, const ProbabilityVector& p) {
  out << fmt(t);
  for (Eigen::Index i = 0; i < p.values.size(); ++i) out << '\t' << fmt(p.values[i]);
  out << '\n';
}

int run(CLI::App& app, int argc, char** argv) {
  std::function<void()> action;

  // ---- basis ---------------------------------------------------------
  auto* basis_cmd = app.add_subcommand("basis", "Build the generator basis and verify it");
  {
    struct {
      int dim = 2;
      std::string out;
    } static opts;
    basis_cmd->add_option("--dim", opts.dim, "System dimension N")->required();
    basis_cmd->add_option("--out", opts.out, "Write the basis as ggmmb-v1 JSON");
    basis_cmd->callback([] {
      const auto basis = build_basis(opts.dim);
      const auto report = verify_basis(basis);
      std::cout << "generators = " << basis.count() << '\n'
                << "hermiticity = " << fmt(report.hermiticity) << '\n'
                << "tracelessness = " << fmt(report.tracelessness) << '\n'
                << "orthonormality = " << fmt(report.orthonormality) << '\n'
                << "spectral_reconstruction = " << fmt(report.spectral_reconstruction) << '\n'
                << "projector_completeness = " << fmt(report.projector_completeness) << '\n'
                << "projector_orthogonality = " << fmt(report.projector_orthogonality) << '\n'
                << "closure = " << fmt(report.closure) << '\n';
      if (!opts.out.empty()) io::write_basis(opts.out, basis);
    });
  }

  // ---- evolve --------------------------------------------------------
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a probability vector by exp(tH)");
  {
    struct {
      int dim = 2;
      FieldOptions field;
      std::string state;
      double t = 0;
      double t_start = 0, t_end = 0;
      std::size_t steps = 0;
      std::string out, pvec_out, tmat_out;
    } static opts;
    evolve_cmd->add_option("--dim", opts.dim, "System dimension N")->required();
    add_field_options(evolve_cmd, opts.field);
    evolve_cmd->add_option("--state", opts.state, "Initial state (pvec-v1 or rho-v1)")->required();
    auto* single = evolve_cmd->add_option("--t", opts.t, "Single evolution time");
    evolve_cmd->add_option("--t-start", opts.t_start, "Grid start time");
    evolve_cmd->add_option("--t-end", opts.t_end, "Grid end time");
    evolve_cmd->add_option("--steps", opts.steps, "Grid step count");
    evolve_cmd->add_option("--out", opts.out, "Row output path (default stdout)");
    evolve_cmd->add_option("--pvec-out", opts.pvec_out, "Write the final vector as pvec-v1");
    evolve_cmd->add_option("--tmat-out", opts.tmat_out, "Export the transfer matrix as tmat-v1");
    evolve_cmd->callback([single] {
      const auto basis = build_basis(opts.dim);
      const auto tm = resolve_transfer_matrix(opts.field, basis);
      if (!opts.tmat_out.empty()) io::write_transfer_matrix(opts.tmat_out, tm);
      const auto p0 = load_state(opts.state, basis);

      Sink sink(opts.out, "evolve-rows-v1");
      ProbabilityVector last = p0;
      if (single->count() > 0) {
        last = evolve_probabilities(p0, tm, opts.t);
        print_row(sink.out(), opts.t, last);
      } else {
        for (double t : time_grid(opts.t_start, opts.t_end, opts.steps)) {
          last = evolve_probabilities(p0, tm, t);
          print_row(sink.out(), t, last);
        }
      }
      if (!opts.pvec_out.empty()) io::write_probability_vector(opts.pvec_out, last);
    });
  }

  // ---- measure -------------------------------------------------------
  auto* measure_cmd = app.add_subcommand("measure", "Apply a noninvasive collapse");
  {
    struct {
      int dim = 2;
      std::string state, generator, outcome = "1", out;
    } static opts;
    measure_cmd->add_option("--dim", opts.dim, "System dimension N")->required();
    measure_cmd->add_option("--state", opts.state, "State file (pvec-v1 or rho-v1)")->required();
    measure_cmd->add_option("--generator", opts.generator, "Measured generator (x/y/z or 1-based index)")
        ->required();
    measure_cmd->add_option("--outcome", opts.outcome, "Observed outcome (+1/-1 or 1-based index)");
    measure_cmd->add_option("--out", opts.out, "Collapsed vector output (pvec-v1)")->required();
    measure_cmd->callback([] {
      const auto basis = build_basis(opts.dim);
      const MeasurementRecord record{parse_generator(opts.generator, opts.dim),
                                     parse_outcome(opts.outcome, opts.dim)};
      io::write_probability_vector(opts.out, collapse(load_state(opts.state, basis), record));
    });
  }

  // ---- witness -------------------------------------------------------
  auto* witness_cmd = app.add_subcommand("witness", "Interference witness of a measurement");
  {
    struct {
      int dim = 2;
      std::string state, measure, outcome = "1", out;
    } static opts;
    witness_cmd->add_option("--dim", opts.dim, "System dimension N")->required();
    witness_cmd->add_option("--state", opts.state, "State file (pvec-v1 or rho-v1)")->required();
    witness_cmd->add_option("--measure", opts.measure, "Measured generator (x/y/z or 1-based index)")
        ->required();
    witness_cmd->add_option("--outcome", opts.outcome, "Observed outcome (+1/-1 or 1-based index)");
    witness_cmd->add_option("--out", opts.out, "Witness report output (witness-v1)");
    witness_cmd->callback([] {
      const auto basis = build_basis(opts.dim);
      const MeasurementRecord record{parse_generator(opts.measure, opts.dim),
                                     parse_outcome(opts.outcome, opts.dim)};
      const auto report = witness_gamma(load_state(opts.state, basis), record, basis);
      std::cout << "gamma = " << fmt(report.gamma) << '\n';
      if (!opts.out.empty()) {
        io::WitnessFile file;
        file.dim = opts.dim;
        file.generator = record.generator;
        file.outcome = record.outcome;
        file.report = report;
        io::write_witness(opts.out, file);
      }
    });
  }

  // ---- scan ----------------------------------------------------------
  auto* scan_cmd = app.add_subcommand("scan", "Negativity scan of an evolving vector");
  {
    struct {
      int dim = 2;
      FieldOptions field;
      std::string state, out;
      double t_start = 0, t_end = 1;
      std::size_t steps = 100;
    } static opts;
    scan_cmd->add_option("--dim", opts.dim, "System dimension N")->required();
    add_field_options(scan_cmd, opts.field);
    scan_cmd->add_option("--state", opts.state, "Start vector (pvec-v1 or rho-v1)")->required();
    scan_cmd->add_option("--t-start", opts.t_start, "Grid start time");
    scan_cmd->add_option("--t-end", opts.t_end, "Grid end time")->required();
    scan_cmd->add_option("--steps", opts.steps, "Grid step count");
    scan_cmd->add_option("--out", opts.out, "Report output (witness-v1 with scan block)");
    scan_cmd->callback([] {
      const auto basis = build_basis(opts.dim);
      const auto tm = resolve_transfer_matrix(opts.field, basis);
      const auto p0 = load_state(opts.state, basis);
      const auto grid = time_grid(opts.t_start, opts.t_end, opts.steps);
      const auto scan = negativity_scan(p0, tm, grid);
      if (scan.violating) {
        const auto& hit = *scan.first_negative;
        std::cout << "violating = true\nfirst_negative: t = " << fmt(hit.time)
                  << " generator = " << hit.generator + 1 << " outcome = " << hit.outcome + 1
                  << " value = " << fmt(hit.value) << '\n';
      } else {
        std::cout << "violating = false\n";
      }
      if (!opts.out.empty()) {
        io::WitnessFile file;
        file.dim = opts.dim;
        file.generator = -1;
        file.outcome = -1;
        // Spectrum of the start vector's pseudodensity for context.
        const auto pseudo = reconstruct_pseudodensity(p0, basis);
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(pseudo.matrix, Eigen::EigenvaluesOnly);
        file.report.spectrum = solver.eigenvalues().reverse();
        for (int j = 0; j < file.report.spectrum.size(); ++j)
          if (file.report.spectrum[j] < -1e-10) {
            file.report.negative_eigenvalues.push_back(file.report.spectrum[j]);
            file.report.gamma += -file.report.spectrum[j];
          }
        file.scan = scan;
        io::write_witness(opts.out, file);
      }
    });
  }

  // ---- qubit-delta ---------------------------------------------------
  auto* delta_cmd = app.add_subcommand("qubit-delta", "Qubit witness/backreaction sweep");
  {
    struct {
      std::vector<double> bloch;
      std::size_t grid = 0;
      std::string out;
    } static opts;
    delta_cmd->add_option("--bloch", opts.bloch, "Single Bloch triple x,y,z")
        ->delimiter(',')
        ->expected(3);
    delta_cmd->add_option("--grid", opts.grid, "Cube grid points per axis (keeps |v| <= 1)");
    delta_cmd->add_option("--out", opts.out, "Row output path (default stdout)");
    delta_cmd->callback([] {
      Sink sink(opts.out, "qubit-delta-rows-v1");
      auto row = [&](const Bloch3& v) {
        const auto set = qubit_witness_set(v);
        const auto bound = bound_check(set.gamma[0], set.gamma[1], set.gamma[2]);
        sink.out() << fmt(v[0]) << '\t' << fmt(v[1]) << '\t' << fmt(v[2]) << '\t'
                   << fmt(set.gamma[0]) << '\t' << fmt(set.gamma[1]) << '\t'
                   << fmt(set.gamma[2]) << '\t' << fmt(set.delta) << '\t' << fmt(bound.lhs)
                   << '\n';
      };
      if (!opts.bloch.empty()) {
        row({opts.bloch[0], opts.bloch[1], opts.bloch[2]});
        return;
      }
      if (opts.grid < 2) throw std::invalid_argument("need --bloch x,y,z or --grid >= 2");
      const auto n = opts.grid;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            const auto coord = [n](std::size_t s) {
              return -1.0 + 2.0 * static_cast<double>(s) / static_cast<double>(n - 1);
            };
            const Bloch3 v(coord(i), coord(j), coord(k));
            if (v.squaredNorm() <= 1.0) row(v);
          }
    });
  }

  // ---- classical-check -----------------------------------------------
  auto* classical_cmd = app.add_subcommand("classical-check", "Classical ensemble NSIT check");
  {
    struct {
      std::string dist = "uniform-sphere";
      std::vector<double> params;
      std::size_t n = 100000;
      std::uint64_t seed = 0;
      double bx = 0, by = 0, bz = 0;
      std::string axis = "x";
      std::vector<double> times;
      std::string out;
    } static opts;
    classical_cmd->add_option("--dist", opts.dist,
                              "uniform-sphere | isotropic-gaussian | point-mass");
    classical_cmd->add_option("--param", opts.params, "Distribution parameters")->delimiter(',');
    classical_cmd->add_option("--n", opts.n, "Sample count");
    classical_cmd->add_option("--seed", opts.seed, "RNG seed")->required();
    classical_cmd->add_option("--bx", opts.bx, "Field B_x");
    classical_cmd->add_option("--by", opts.by, "Field B_y");
    classical_cmd->add_option("--bz", opts.bz, "Field B_z");
    classical_cmd->add_option("--axis", opts.axis, "Conditioning axis x|y|z");
    classical_cmd->add_option("--times", opts.times, "Evaluation times")->delimiter(',')->required();
    classical_cmd->add_option("--out", opts.out, "Row output path (default stdout)");
    classical_cmd->callback([] {
      const auto dist = SpinDistribution::from_name(opts.dist, opts.params);
      const auto ensemble = sample_ensemble(dist, opts.n, opts.seed);
      const Eigen::Vector3d field(opts.bx, opts.by, opts.bz);
      const int axis = parse_axis(opts.axis);
      const char* names[3] = {"Sx", "Sy", "Sz"};
      Sink sink(opts.out, "classical-rows-v1");
      for (double t : opts.times) {
        const auto marginals = coarse_grain(evolve_ensemble(ensemble, field, t));
        for (int component = 0; component < 3; ++component) {
          const auto estimate = nsit_residual(
              ensemble, field, axis, t,
              [component](const Eigen::Vector3d& s) { return s[component]; });
          sink.out() << fmt(t) << '\t' << names[component];
          for (int a = 0; a < 3; ++a)
            sink.out() << '\t' << fmt(marginals.plus(a)) << '\t' << fmt(marginals.minus(a));
          sink.out() << '\t' << fmt(estimate.residual) << '\t' << fmt(estimate.std_error)
                     << '\n';
        }
      }
    });
  }

  // ---- datagen -------------------------------------------------------
  auto* datagen_cmd = app.add_subcommand("datagen", "Generate a labeled dataset");
  {
    struct {
      GenerationConfig cfg;
      std::string out;
    } static opts;
    datagen_cmd->add_option("--dim", opts.cfg.dim, "System dimension N")->required();
    datagen_cmd->add_option("--count", opts.cfg.count_per_class, "Examples per class")->required();
    datagen_cmd->add_option("--seed", opts.cfg.seed, "Master seed")->required();
    datagen_cmd->add_option("--violating-low", opts.cfg.violating_low, "Spectrum interval low end");
    datagen_cmd->add_option("--violating-high", opts.cfg.violating_high, "Spectrum interval high end");
    datagen_cmd->add_option("--out", opts.out, "Dataset output (dataset-v1 CSV)")->required();
    datagen_cmd->callback([] {
      const auto dataset = generate_dataset(opts.cfg);
      io::write_dataset(opts.out, dataset);
      std::cout << "examples = " << dataset.examples.size()
                << "\nconforming_acceptance = " << fmt(dataset.conforming.acceptance_rate())
                << "\nviolating_acceptance = " << fmt(dataset.violating.acceptance_rate())
                << '\n';
    });
  }

  // ---- hist-gamma ----------------------------------------------------
  auto* hist_cmd = app.add_subcommand("hist-gamma", "Histogram of gamma over violating examples");
  {
    struct {
      std::string in, out;
      int bins = 50;
    } static opts;
    hist_cmd->add_option("--in", opts.in, "Dataset input (dataset-v1)")->required();
    hist_cmd->add_option("--bins", opts.bins, "Bin count");
    hist_cmd->add_option("--out", opts.out, "Row output path (default stdout)");
    hist_cmd->callback([] {
      const auto dataset = io::read_dataset(opts.in);
      const auto histogram = gamma_histogram(dataset.examples, opts.bins);
      Sink sink(opts.out, "gamma-hist-v1");
      for (std::size_t b = 0; b < histogram.counts.size(); ++b)
        sink.out() << fmt(histogram.edges[b]) << '\t' << fmt(histogram.edges[b + 1]) << '\t'
                   << histogram.counts[b] << '\n';
      std::cout << "mean_gamma = " << fmt(histogram.mean) << "\ncount = " << histogram.total
                << '\n';
    });
  }

  // ---- sample-bloch --------------------------------------------------
  auto* bloch_cmd = app.add_subcommand("sample-bloch", "Sample qubit states in and out of the ball");
  {
    struct {
      std::size_t count = 100;
      std::uint64_t seed = 0;
      std::string out;
    } static opts;
    bloch_cmd->add_option("--count", opts.count, "Points per set");
    bloch_cmd->add_option("--seed", opts.seed, "RNG seed")->required();
    bloch_cmd->add_option("--out", opts.out, "Row output path (default stdout)");
    bloch_cmd->callback([] {
      const auto sets = sample_bloch_points(opts.count, opts.seed);
      Sink sink(opts.out, "bloch-points-v1");
      for (const auto& v : sets.inside)
        sink.out() << "inside\t" << fmt(v[0]) << '\t' << fmt(v[1]) << '\t' << fmt(v[2]) << '\n';
      for (const auto& v : sets.outside)
        sink.out() << "outside\t" << fmt(v[0]) << '\t' << fmt(v[1]) << '\t' << fmt(v[2]) << '\n';
    });
  }

  // ---- train ---------------------------------------------------------
  auto* train_cmd = app.add_subcommand("train", "Train the logistic classifier");
  {
    struct {
      std::string in, out;
      TrainConfig config;
    } static opts;
    train_cmd->add_option("--in", opts.in, "Training dataset (dataset-v1)")->required();
    train_cmd->add_option("--epochs", opts.config.epochs, "Gradient-descent epochs");
    train_cmd->add_option("--lr", opts.config.learning_rate, "Initial learning rate");
    train_cmd->add_option("--seed", opts.config.seed, "Shuffle/split seed")->required();
    train_cmd->add_option("--val-fraction", opts.config.validation_fraction,
                          "Held-out validation fraction");
    train_cmd->add_option("--out", opts.out, "Model output (model-v1)")->required();
    train_cmd->callback([] {
      const auto dataset = io::read_dataset(opts.in);
      const auto model = train(dataset.examples, opts.config);
      io::write_model(opts.out, model);
      std::cout << "final_loss = " << fmt(model.metadata.final_loss)
                << "\nvalidation_accuracy = " << fmt(model.metadata.validation_accuracy)
                << "\nepochs_run = " << model.metadata.epochs_run << '\n';
    });
  }

  // ---- classify ------------------------------------------------------
  auto* classify_cmd = app.add_subcommand("classify", "Classify one probability vector");
  {
    struct {
      std::string model, state;
    } static opts;
    classify_cmd->add_option("--model", opts.model, "Model file (model-v1)")->required();
    classify_cmd->add_option("--state", opts.state, "State file (pvec-v1 or rho-v1)")->required();
    classify_cmd->callback([] {
      const auto model = io::read_model(opts.model);
      const auto basis = build_basis(model.dim);
      const auto prediction = predict(model, load_state(opts.state, basis));
      std::cout << "label = " << prediction.label << "\nscore = " << fmt(prediction.score)
                << '\n';
    });
  }

  // ---- evaluate ------------------------------------------------------
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate a model on a labeled dataset");
  {
    struct {
      std::string model, in;
    } static opts;
    evaluate_cmd->add_option("--model", opts.model, "Model file (model-v1)")->required();
    evaluate_cmd->add_option("--in", opts.in, "Evaluation dataset (dataset-v1)")->required();
    evaluate_cmd->callback([] {
      const auto model = io::read_model(opts.model);
      const auto dataset = io::read_dataset(opts.in);
      const auto metrics = evaluate(model, dataset.examples);
      std::cout << "accuracy = " << fmt(metrics.accuracy)
                << "\nprecision = " << fmt(metrics.precision)
                << "\nrecall = " << fmt(metrics.recall) << "\nconfusion = tp:"
                << metrics.true_positive << " fp:" << metrics.false_positive
                << " tn:" << metrics.true_negative << " fn:" << metrics.false_negative << '\n';
    });
  }

  app.require_subcommand(1);
  app.parse(argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probability-vector dynamics and NSIT analysis toolkit"};
  try {
    return run(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nsit::io::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
