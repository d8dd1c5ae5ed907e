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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chanest/analysis.hpp"
#include "chanest/channel.hpp"
#include "chanest/cli.hpp"
#include "chanest/errors.hpp"
#include "chanest/estimators.hpp"
#include "chanest/experiments.hpp"
#include "chanest/special.hpp"

namespace py = pybind11;
using namespace chanest;

namespace {

PdpSpec pdp_from(const std::string& kind, int tau_max) {
  if (kind == "exponential") return {PdpKind::Exponential, tau_max};
  if (kind == "uniform") return {PdpKind::Uniform, tau_max};
  throw InvalidArgument("unknown PDP kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "chanest native core";
  m.attr("__version__") = CHANEST_VERSION;

  py::register_exception<Error>(m, "ChanestError", PyExc_ValueError);

  m.def("noise_variance_from_snr", &noise_variance_from_snr, py::arg("snr_db"));
  m.def(
      "usable_indices", [](int n, int k) { return OfdmConfig::centered(n, k).usable_indices; }, py::arg("n"),
      py::arg("k"));
  m.def(
      "pdp_powers", [](const std::string& kind, int tau_max) { return RVector(pdp_powers(pdp_from(kind, tau_max))); },
      py::arg("kind"), py::arg("tau_max"));
  m.def(
      "freq_correlation",
      [](int n, int k, int tau_max, const std::string& kind) {
        return CMatrix(freq_correlation(pdp_from(kind, tau_max), OfdmConfig::centered(n, k)));
      },
      py::arg("n"), py::arg("k"), py::arg("tau_max"), py::arg("kind") = "exponential");
  m.def(
      "lmmse_weights", [](const CMatrix& r, double sigma2) { return lmmse_weights(r, sigma2).w; }, py::arg("r_hh"),
      py::arg("sigma2"));
  m.def("lmmse_mse_theoretical", &lmmse_mse_theoretical, py::arg("r_hh"), py::arg("sigma2"));
  m.def(
      "train_linear",
      [](const CMatrix& inputs, const CMatrix& labels) {
        TrainingSet ts{inputs, labels, "python", 0};
        return train_linear(ts).w;
      },
      py::arg("inputs"), py::arg("labels"), "Weights W minimizing |W X - Y|^2 with samples as columns.");
  m.def(
      "generate_training_set",
      [](int n, int k, int tau_max, double snr_db, int m_samples, std::uint64_t seed) {
        Rng rng = Rng::derive(seed, StreamPurpose::Training);
        const TrainingSet ts = generate_training_set(ChannelScenario::stationary({PdpKind::Exponential, tau_max}, snr_db),
                                                     OfdmConfig::centered(n, k), m_samples, rng);
        return py::make_tuple(ts.inputs, ts.labels);
      },
      py::arg("n"), py::arg("k"), py::arg("tau_max"), py::arg("snr_db"), py::arg("m"), py::arg("seed") = 1,
      "Returns (ls_inputs, cfr_labels), each K x M.");
  m.def(
      "evaluate_mse",
      [](const CMatrix& w, int n, int tau_max, double snr_db, std::int64_t trials, std::uint64_t seed) {
        const OfdmConfig cfg = OfdmConfig::centered(n, static_cast<int>(w.rows()));
        const auto scenario = ChannelScenario::stationary({PdpKind::Exponential, tau_max}, snr_db);
        const EvalReport r = evaluate_mse(LinearWeights{w}, scenario, cfg, trials, EvalStream{seed, 0, 1});
        py::dict out;
        out["mse"] = r.mse;
        out["mse_std_error"] = r.mse_std_error;
        out["alpha"] = r.alpha ? py::cast(*r.alpha) : py::none();
        return out;
      },
      py::arg("weights"), py::arg("n"), py::arg("tau_max"), py::arg("snr_db"), py::arg("trials"),
      py::arg("seed") = 1);

  m.def("regularized_gamma_p", &regularized_gamma_p, py::arg("a"), py::arg("x"));
  m.def("chi2_cdf", &chi2_cdf, py::arg("x"), py::arg("dof"));
  m.def("epsilon_quadrature", &epsilon_quadrature, py::arg("kappa"), py::arg("alpha"));
  m.def(
      "epsilon_monte_carlo",
      [](int kappa, double alpha, std::int64_t n, std::uint64_t seed) {
        Rng rng = Rng::derive(seed, StreamPurpose::Oracle);
        const McEstimate e = epsilon_monte_carlo(kappa, alpha, n, rng);
        return py::make_tuple(e.estimate, e.std_error);
      },
      py::arg("kappa"), py::arg("alpha"), py::arg("n"), py::arg("seed") = 1);
  m.def("alpha_for_epsilon", &alpha_for_epsilon, py::arg("kappa"), py::arg("epsilon"));
  m.def("sufficient_sample_size", &sufficient_sample_size, py::arg("alpha"), py::arg("epsilon"));
  m.def(
      "alpha_curve",
      [](const std::vector<int>& kappa, double eps) {
        std::vector<std::pair<int, double>> out;
        for (const auto& p : build_alpha_curve(kappa, eps).points) out.emplace_back(p.kappa, p.alpha);
        return out;
      },
      py::arg("kappa_grid"), py::arg("epsilon") = 0.05);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"chanest"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int rc = 0;
        {
          py::gil_scoped_release release;
          rc = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
