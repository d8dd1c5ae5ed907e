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

#include "chanest/estimators.hpp"

#include <Eigen/Cholesky>

#include "chanest/errors.hpp"

namespace chanest {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DimensionMismatch(std::string(what) + " must be square and non-empty");
}

// Smallest-to-largest squared pivot ratio of a Cholesky factor.
double pivot_ratio(const Eigen::LLT<CMatrix>& llt) {
  const RVector d = llt.matrixLLT().diagonal().real().cwiseAbs2();
  return d.minCoeff() / d.maxCoeff();
}

constexpr double kGramPivotFloor = 1e-10;

}  // namespace

std::string estimator_type(const Estimator& e) {
  return std::visit(overloaded{[](const LsIdentity&) { return std::string("ls"); },
                               [](const LinearWeights&) { return std::string("linear"); },
                               [](const MlpEstimator&) { return std::string("mlp"); },
                               [](const BlockwiseLinear&) { return std::string("blockwise"); }},
                    e);
}

int estimator_dimension(const Estimator& e) {
  return std::visit(overloaded{[](const LsIdentity&) { return 0; },
                               [](const LinearWeights& w) { return w.dimension(); },
                               [](const MlpEstimator& m) { return m.dimension(); },
                               [](const BlockwiseLinear& b) { return b.dimension(); }},
                    e);
}

LinearWeights lmmse_weights(const CMatrix& r_hh, double sigma2) {
  check_square(r_hh, "correlation matrix");
  CMatrix a = r_hh;
  a.diagonal().array() += sigma2;
  Eigen::LLT<CMatrix> llt(a);
  if (llt.info() != Eigen::Success || !(pivot_ratio(llt) > 0.0))
    throw IllConditioned("R_hh + sigma2 I is not numerically positive definite");
  // A Hermitian, so W = R A^-1 = (A^-1 R)^H
  return LinearWeights{llt.solve(r_hh).adjoint()};
}

double lmmse_mse_theoretical(const CMatrix& r_hh, double sigma2) {
  const LinearWeights w = lmmse_weights(r_hh, sigma2);
  const CMatrix err = r_hh - w.w * r_hh;
  return err.trace().real() / static_cast<double>(r_hh.rows());
}

LinearWeights robust_lmmse_weights(int tau_upper, const OfdmConfig& cfg, double sigma2) {
  return lmmse_weights(freq_correlation(PdpSpec{PdpKind::Uniform, tau_upper}, cfg), sigma2);
}

LinearWeights train_linear(const TrainingSet& ts) {
  check_training_set(ts);
  const int d = ts.dimension();
  const int m = ts.size();
  if (m < d)
    throw RankDeficient("training set of " + std::to_string(m) + " samples cannot determine a " +
                        std::to_string(d) + "-dimensional filter");

  CMatrix gram = ts.inputs * ts.inputs.adjoint();  // D x D
  const CMatrix cross = ts.inputs * ts.labels.adjoint();  // X Y^H

  Eigen::LLT<CMatrix> llt(gram);
  if (llt.info() != Eigen::Success || !(pivot_ratio(llt) > kGramPivotFloor)) {
    const double jitter = 1e-12 * gram.trace().real() / d;
    gram.diagonal().array() += jitter;
    llt.compute(gram);
    if (llt.info() != Eigen::Success || !(pivot_ratio(llt) > kGramPivotFloor))
      throw RankDeficient("Gram matrix of the training inputs is singular");
  }
  // W G = Y X^H with G Hermitian  =>  W = (G^-1 X Y^H)^H
  return LinearWeights{llt.solve(cross).adjoint()};
}

double linear_training_loss(const LinearWeights& w, const TrainingSet& ts) {
  if (w.dimension() != ts.dimension()) throw DimensionMismatch("filter and training set dimensions differ");
  return (w.w * ts.inputs - ts.labels).squaredNorm();
}

CVector apply_linear(const LinearWeights& w, const CVector& x) {
  if (w.w.cols() != x.size())
    throw DimensionMismatch("filter expects length " + std::to_string(w.w.cols()) + ", got " +
                            std::to_string(x.size()));
  return w.w * x;
}

CVector apply_estimator(const Estimator& e, const CVector& x) {
  return std::visit(overloaded{[&](const LsIdentity&) -> CVector { return x; },
                               [&](const LinearWeights& w) -> CVector { return apply_linear(w, x); },
                               [&](const auto&) -> CVector { return apply_estimator_batch(e, x); }},
                    e);
}

CMatrix apply_estimator_batch(const Estimator& e, const CMatrix& x) {
  return std::visit(
      overloaded{[&](const LsIdentity&) -> CMatrix { return x; },
                 [&](const LinearWeights& w) -> CMatrix {
                   if (w.w.cols() != x.rows())
                     throw DimensionMismatch("filter expects length " + std::to_string(w.w.cols()) +
                                             ", got " + std::to_string(x.rows()));
                   return w.w * x;
                 },
                 [&](const MlpEstimator& m) -> CMatrix {
                   if (m.dimension() != x.rows())
                     throw DimensionMismatch("MLP expects length " + std::to_string(m.dimension()) +
                                             ", got " + std::to_string(x.rows()));
                   return m.apply(x);
                 },
                 [&](const BlockwiseLinear& b) -> CMatrix {
                   if (b.dimension() != x.rows())
                     throw DimensionMismatch("blockwise filter expects length " + std::to_string(b.dimension()) +
                                             ", got " + std::to_string(x.rows()));
                   CMatrix out(x.rows(), x.cols());
                   const int size = b.block_size();
                   for (std::size_t i = 0; i < b.blocks.size(); ++i) {
                     const auto start = static_cast<Eigen::Index>(i) * size;
                     out.middleRows(start, size).noalias() = b.blocks[i].w * x.middleRows(start, size);
                   }
                   return out;
                 }},
      e);
}

}  // namespace chanest
