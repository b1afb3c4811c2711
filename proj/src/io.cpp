#include "nsit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nsit::io {

namespace {

using nlohmann::json;

json load_json(const std::string& path, const char* expected_schema) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": not valid JSON (" + e.what() + ")");
  }
  if (!j.contains("schema") || !j["schema"].is_string())
    throw SchemaError(path + ": missing schema key");
  if (j["schema"].get<std::string>() != expected_schema)
    throw SchemaError(path + ": expected schema " + expected_schema + ", found " +
                      j["schema"].get<std::string>());
  return j;
}

void store_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << '\n';
}

json matrix_to_json(const CMatrix& m) {
  // Row-major [re, im] pairs.
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void write_basis(const std::string& path, const GeneratorBasis& basis) {
  json j;
  j["schema"] = "ggmmb-v1";
  j["dim"] = basis.dim;
  json generators = json::array();
  for (const auto& g : basis.generators) {
    json entry;
    entry["matrix"] = matrix_to_json(g.matrix);
    entry["eigenvalues"] = std::vector<double>(g.eigenvalues.begin(), g.eigenvalues.end());
    json projectors = json::array();
    for (const auto& p : g.projectors) projectors.push_back(matrix_to_json(p));
    entry["projectors"] = std::move(projectors);
    generators.push_back(std::move(entry));
  }
  j["generators"] = std::move(generators);
  store_json(path, j);
}

void write_density(const std::string& path, const DensityMatrix& rho) {
  json j;
  j["schema"] = "rho-v1";
  j["dim"] = rho.dim;
  json re = json::array(), im = json::array();
  for (int r = 0; r < rho.dim; ++r) {
    json re_row = json::array(), im_row = json::array();
    for (int c = 0; c < rho.dim; ++c) {
      re_row.push_back(rho.matrix(r, c).real());
      im_row.push_back(rho.matrix(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  store_json(path, j);
}

DensityMatrix read_density(const std::string& path) {
  const json j = load_json(path, "rho-v1");
  const int dim = j.at("dim").get<int>();
  CMatrix m(dim, dim);
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = Complex(re.at(r).at(c).get<double>(), im.at(r).at(c).get<double>());
  return make_density(dim, std::move(m));
}

void write_hamiltonian(const std::string& path, const HamiltonianSpec& h) {
  json j;
  j["schema"] = "hmat-v1";
  j["dim"] = h.dim;
  json re = json::array(), im = json::array();
  for (int r = 0; r < h.dim; ++r) {
    json re_row = json::array(), im_row = json::array();
    for (int c = 0; c < h.dim; ++c) {
      re_row.push_back(h.matrix(r, c).real());
      im_row.push_back(h.matrix(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  store_json(path, j);
}

HamiltonianSpec read_hamiltonian(const std::string& path) {
  const json j = load_json(path, "hmat-v1");
  const int dim = j.at("dim").get<int>();
  CMatrix m(dim, dim);
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = Complex(re.at(r).at(c).get<double>(), im.at(r).at(c).get<double>());
  return hamiltonian_from_matrix(std::move(m));
}

void write_probability_vector(const std::string& path, const ProbabilityVector& p) {
  json j;
  j["schema"] = "pvec-v1";
  j["dim"] = p.dim;
  json tuples = json::array();
  for (int n = 0; n < p.tuple_count(); ++n) {
    json tuple = json::array();
    for (int k = 0; k < p.dim; ++k) tuple.push_back(p(n, k));
    tuples.push_back(std::move(tuple));
  }
  j["tuples"] = std::move(tuples);
  store_json(path, j);
}

ProbabilityVector read_probability_vector(const std::string& path) {
  const json j = load_json(path, "pvec-v1");
  const int dim = j.at("dim").get<int>();
  const auto& tuples = j.at("tuples");
  RVector values(static_cast<Eigen::Index>(dim) * (dim * dim - 1));
  if (tuples.size() != static_cast<std::size_t>(dim * dim - 1))
    throw SchemaError(path + ": wrong tuple count");
  for (int n = 0; n < dim * dim - 1; ++n)
    for (int k = 0; k < dim; ++k)
      values[static_cast<Eigen::Index>(n) * dim + k] = tuples.at(n).at(k).get<double>();
  return make_probability_vector(dim, std::move(values));
}

void write_transfer_matrix(const std::string& path, const TransferMatrix& tm) {
  json j;
  j["schema"] = "tmat-v1";
  j["dim"] = tm.dim;
  json rows = json::array();
  for (Eigen::Index r = 0; r < tm.entries.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < tm.entries.cols(); ++c) row.push_back(tm.entries(r, c));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  store_json(path, j);
}

TransferMatrix read_transfer_matrix(const std::string& path) {
  const json j = load_json(path, "tmat-v1");
  const int dim = j.at("dim").get<int>();
  const Eigen::Index size = static_cast<Eigen::Index>(dim) * (dim * dim - 1);
  const auto& rows = j.at("rows");
  if (rows.size() != static_cast<std::size_t>(size))
    throw SchemaError(path + ": wrong row count");
  TransferMatrix tm{dim, RMatrix(size, size)};
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = 0; c < size; ++c)
      tm.entries(r, c) = rows.at(r).at(c).get<double>();
  return tm;
}

void write_witness(const std::string& path, const WitnessFile& file) {
  json j;
  j["schema"] = "witness-v1";
  j["dim"] = file.dim;
  j["generator"] = file.generator;
  j["outcome"] = file.outcome;
  j["gamma"] = file.report.gamma;
  j["spectrum"] = std::vector<double>(file.report.spectrum.begin(), file.report.spectrum.end());
  j["negative_eigenvalues"] = file.report.negative_eigenvalues;
  if (file.scan) {
    json scan;
    scan["violating"] = file.scan->violating;
    if (file.scan->first_negative) {
      scan["first_negative"] = {{"t", file.scan->first_negative->time},
                                {"generator", file.scan->first_negative->generator},
                                {"outcome", file.scan->first_negative->outcome},
                                {"value", file.scan->first_negative->value}};
    }
    j["scan"] = std::move(scan);
  }
  store_json(path, j);
}

void write_dataset(const std::string& path, const Dataset& dataset) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  const auto& cfg = dataset.config;
  out << "# schema: dataset-v1\n"
      << "# dim: " << cfg.dim << "\n"
      << "# count_per_class: " << cfg.count_per_class << "\n"
      << "# seed: " << cfg.seed << "\n"
      << "# conforming_sampler: simplex-uniform\n"
      << "# violating_sampler: uniform[" << cfg.violating_low << "," << cfg.violating_high
      << "]-shift-normalized-min-negative\n"
      << "# frame_sampler: gaussian-gram-schmidt\n"
      << "# conforming_acceptance: " << dataset.conforming.acceptance_rate() << "\n"
      << "# violating_acceptance: " << dataset.violating.acceptance_rate() << "\n"
      << "# columns: label,dim,p...,gamma\n";
  for (const auto& example : dataset.examples) {
    out << example.label << ',' << example.vector.dim;
    for (Eigen::Index i = 0; i < example.vector.values.size(); ++i)
      out << ',' << example.vector.values[i];
    out << ',' << example.gamma << '\n';
  }
}

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Dataset dataset;
  std::string line;
  bool schema_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line.substr(1));
      std::string key;
      header >> key;
      if (key == "schema:") {
        std::string value;
        header >> value;
        if (value != "dataset-v1") throw SchemaError(path + ": expected schema dataset-v1");
        schema_seen = true;
      } else if (key == "dim:") {
        header >> dataset.config.dim;
      } else if (key == "count_per_class:") {
        header >> dataset.config.count_per_class;
      } else if (key == "seed:") {
        header >> dataset.config.seed;
      }
      continue;
    }
    if (!schema_seen) throw SchemaError(path + ": missing dataset-v1 header");

    std::istringstream row(line);
    std::string cell;
    LabeledExample example;
    if (!std::getline(row, cell, ',')) throw std::runtime_error(path + ": malformed row");
    example.label = std::stoi(cell);
    if (!std::getline(row, cell, ',')) throw std::runtime_error(path + ": malformed row");
    const int dim = std::stoi(cell);
    const Eigen::Index size = static_cast<Eigen::Index>(dim) * (dim * dim - 1);
    RVector values(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      if (!std::getline(row, cell, ',')) throw std::runtime_error(path + ": truncated row");
      values[i] = std::stod(cell);
    }
    example.vector = make_probability_vector(dim, std::move(values));
    if (!std::getline(row, cell, ',')) throw std::runtime_error(path + ": missing gamma");
    example.gamma = std::stod(cell);
    dataset.examples.push_back(std::move(example));
  }
  if (!schema_seen) throw SchemaError(path + ": missing dataset-v1 header");
  return dataset;
}

void write_model(const std::string& path, const ClassifierModel& model) {
  json j;
  j["schema"] = "model-v1";
  j["dim"] = model.dim;
  j["weights"] = std::vector<double>(model.weights.begin(), model.weights.end());
  j["bias"] = model.bias;
  j["metadata"] = {{"epochs_run", model.metadata.epochs_run},
                   {"learning_rate_initial", model.metadata.learning_rate_initial},
                   {"learning_rate_final", model.metadata.learning_rate_final},
                   {"final_loss", model.metadata.final_loss},
                   {"seed", model.metadata.seed},
                   {"validation_accuracy", model.metadata.validation_accuracy},
                   {"train_count", model.metadata.train_count},
                   {"validation_count", model.metadata.validation_count},
                   {"features", "squared-deviation-from-uniform"}};
  store_json(path, j);
}

ClassifierModel read_model(const std::string& path) {
  const json j = load_json(path, "model-v1");
  ClassifierModel model;
  model.dim = j.at("dim").get<int>();
  const auto weights = j.at("weights").get<std::vector<double>>();
  model.weights = Eigen::Map<const RVector>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  model.bias = j.at("bias").get<double>();
  if (j.contains("metadata")) {
    const auto& md = j["metadata"];
    model.metadata.epochs_run = md.value("epochs_run", 0);
    model.metadata.learning_rate_initial = md.value("learning_rate_initial", 0.0);
    model.metadata.learning_rate_final = md.value("learning_rate_final", 0.0);
    model.metadata.final_loss = md.value("final_loss", 0.0);
    model.metadata.seed = md.value("seed", std::uint64_t{0});
    model.metadata.validation_accuracy = md.value("validation_accuracy", 0.0);
    model.metadata.train_count = md.value("train_count", std::size_t{0});
    model.metadata.validation_count = md.value("validation_count", std::size_t{0});
  }
  if (model.weights.size() != static_cast<Eigen::Index>(model.dim) * (model.dim * model.dim - 1))
    throw SchemaError(path + ": weight count does not match dim");
  return model;
}

std::string peek_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error&) {
    return "";
  }
  if (!j.contains("schema") || !j["schema"].is_string()) return "";
  return j["schema"].get<std::string>();
}

}  // namespace nsit::io
