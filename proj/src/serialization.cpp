// chanest: learned OFDM channel estimation and sample-complexity analysis
// Copyright (C) 2026 The chanest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "chanest/serialization.hpp"

#include "chanest/errors.hpp"

namespace chanest {

using nlohmann::json;

namespace {

json complex_matrix(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix complex_matrix_from(const json& rows, int expected) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != expected)
    throw InvalidArgument("weight matrix has wrong row count");
  CMatrix m(expected, expected);
  for (int r = 0; r < expected; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != expected)
      throw InvalidArgument("weight matrix has wrong column count");
    for (int c = 0; c < expected; ++c) {
      const json& z = row[static_cast<std::size_t>(c)];
      m(r, c) = cdouble(z.at(0).get<double>(), z.at(1).get<double>());
    }
  }
  return m;
}

json real_matrix(const RMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMatrix real_matrix_from(const json& rows, Eigen::Index n_rows, Eigen::Index n_cols) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n_rows)
    throw InvalidArgument("MLP weight matrix has wrong row count");
  RMatrix m(n_rows, n_cols);
  for (Eigen::Index r = 0; r < n_rows; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<Eigen::Index>(row.size()) != n_cols) throw InvalidArgument("MLP weight matrix has wrong column count");
    for (Eigen::Index c = 0; c < n_cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
  }
  return m;
}

json real_vector(const RVector& v) { return json(std::vector<double>(v.begin(), v.end())); }

RVector real_vector_from(const json& a, Eigen::Index n) {
  const auto values = a.get<std::vector<double>>();
  if (static_cast<Eigen::Index>(values.size()) != n) throw InvalidArgument("MLP bias has wrong length");
  return Eigen::Map<const RVector>(values.data(), n);
}

}  // namespace

json to_json(const MlpHyper& h) {
  return {{"optimizer", "adam"},
          {"initialization", "glorot_uniform"},
          {"batch_size", h.batch_size},
          {"learning_rate", h.learning_rate},
          {"beta1", h.beta1},
          {"beta2", h.beta2},
          {"adam_epsilon", h.adam_epsilon},
          {"max_epochs", h.max_epochs},
          {"patience", h.patience},
          {"min_improvement", h.min_improvement}};
}

MlpHyper mlp_hyper_from_json(const json& doc) {
  MlpHyper h;
  h.batch_size = doc.value("batch_size", h.batch_size);
  h.learning_rate = doc.value("learning_rate", h.learning_rate);
  h.beta1 = doc.value("beta1", h.beta1);
  h.beta2 = doc.value("beta2", h.beta2);
  h.adam_epsilon = doc.value("adam_epsilon", h.adam_epsilon);
  h.max_epochs = doc.value("max_epochs", h.max_epochs);
  h.patience = doc.value("patience", h.patience);
  h.min_improvement = doc.value("min_improvement", h.min_improvement);
  return h;
}

json estimator_to_json(const Estimator& e, std::uint64_t seed) {
  json doc;
  doc["type"] = estimator_type(e);
  doc["dimension"] = estimator_dimension(e);
  doc["seed"] = seed;
  doc["hyperparameters"] = json::object();
  if (const auto* w = std::get_if<LinearWeights>(&e)) {
    doc["weights"] = complex_matrix(w->w);
  } else if (const auto* b = std::get_if<BlockwiseLinear>(&e)) {
    json blocks = json::array();
    for (const auto& block : b->blocks) blocks.push_back(complex_matrix(block.w));
    doc["weights"] = std::move(blocks);
    doc["block_size"] = b->block_size();
  } else if (const auto* m = std::get_if<MlpEstimator>(&e)) {
    doc["seed"] = m->seed;
    doc["hyperparameters"] = to_json(m->hyper);
    doc["weights"] = {{"hidden_w", real_matrix(m->hidden_w)},
                      {"hidden_b", real_vector(m->hidden_b)},
                      {"output_w", real_matrix(m->output_w)},
                      {"output_b", real_vector(m->output_b)}};
    doc["training"] = {{"initial_loss", m->log.initial_loss},
                       {"final_loss", m->log.final_loss},
                       {"epochs", m->log.epochs}};
  } else {
    doc["weights"] = nullptr;
  }
  return doc;
}

Estimator estimator_from_json(const json& doc) {
  try {
    const auto type = doc.at("type").get<std::string>();
    const int d = doc.at("dimension").get<int>();
    if (type == "ls") return LsIdentity{};
    if (type == "linear") return LinearWeights{complex_matrix_from(doc.at("weights"), d)};
    if (type == "blockwise") {
      const int size = doc.at("block_size").get<int>();
      BlockwiseLinear b;
      for (const auto& block : doc.at("weights")) b.blocks.push_back(LinearWeights{complex_matrix_from(block, size)});
      if (b.dimension() != d) throw InvalidArgument("blockwise dimension does not match its blocks");
      return b;
    }
    if (type == "mlp") {
      MlpEstimator m = MlpEstimator::zeros(d);
      const json& w = doc.at("weights");
      m.hidden_w = real_matrix_from(w.at("hidden_w"), 4 * d, 2 * d);
      m.hidden_b = real_vector_from(w.at("hidden_b"), 4 * d);
      m.output_w = real_matrix_from(w.at("output_w"), 2 * d, 4 * d);
      m.output_b = real_vector_from(w.at("output_b"), 2 * d);
      m.hyper = mlp_hyper_from_json(doc.value("hyperparameters", json::object()));
      m.seed = doc.value("seed", std::uint64_t{0});
      if (doc.contains("training")) {
        const json& t = doc["training"];
        m.log = {t.value("initial_loss", 0.0), t.value("final_loss", 0.0), t.value("epochs", 0)};
      }
      return m;
    }
    throw InvalidArgument("unknown estimator type '" + type + "'");
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("malformed estimator document: ") + ex.what());
  }
}

std::string dump_estimator(const Estimator& e, std::uint64_t seed) { return estimator_to_json(e, seed).dump(); }

Estimator parse_estimator(const std::string& text) {
  try {
    return estimator_from_json(json::parse(text));
  } catch (const json::parse_error& ex) {
    throw InvalidArgument(std::string("estimator document is not JSON: ") + ex.what());
  }
}

}  // namespace chanest
