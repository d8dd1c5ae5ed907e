# chanest: learned OFDM channel estimation and sample-complexity analysis
# Copyright (C) 2026 The chanest authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

"""Learned OFDM channel estimation: sample-complexity analysis and simulation."""

from ._core import (
    __version__,
    alpha_curve,
    alpha_for_epsilon,
    chi2_cdf,
    epsilon_monte_carlo,
    epsilon_quadrature,
    evaluate_mse,
    freq_correlation,
    generate_training_set,
    lmmse_mse_theoretical,
    lmmse_weights,
    noise_variance_from_snr,
    pdp_powers,
    regularized_gamma_p,
    run_cli,
    sufficient_sample_size,
    train_linear,
    usable_indices,
)

__all__ = [
    "__version__",
    "alpha_curve",
    "alpha_for_epsilon",
    "chi2_cdf",
    "epsilon_monte_carlo",
    "epsilon_quadrature",
    "evaluate_mse",
    "freq_correlation",
    "generate_training_set",
    "lmmse_mse_theoretical",
    "lmmse_weights",
    "noise_variance_from_snr",
    "pdp_powers",
    "regularized_gamma_p",
    "run_cli",
    "sufficient_sample_size",
    "train_linear",
    "usable_indices",
]
