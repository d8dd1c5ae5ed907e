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

import math

import numpy as np
import pytest

import chanest


def test_version():
    assert chanest.__version__ == "0.1.0"


def test_pdp_and_correlation():
    p = chanest.pdp_powers("exponential", 2)
    assert np.allclose(p, np.exp(-np.arange(3) / 2) / np.exp(-np.arange(3) / 2).sum())
    r = chanest.freq_correlation(16, 12, 2)
    assert r.shape == (12, 12)
    assert np.allclose(r, r.conj().T)
    assert np.linalg.eigvalsh(r).min() > -1e-9


def test_lmmse_matches_numpy():
    r = chanest.freq_correlation(16, 8, 2)
    w = chanest.lmmse_weights(r, 0.5)
    assert np.allclose(w, r @ np.linalg.inv(r + 0.5 * np.eye(8)))
    mse = chanest.lmmse_mse_theoretical(r, 0.5)
    assert mse == pytest.approx(np.trace(r - w @ r).real / 8)


def test_train_linear_matches_lstsq():
    x, y = chanest.generate_training_set(16, 4, 2, 0.0, 50, seed=3)
    w = chanest.train_linear(x, y)
    ref = np.linalg.lstsq(x.T, y.T, rcond=None)[0].T
    assert np.allclose(w, ref)
    report = chanest.evaluate_mse(w, 16, 2, 0.0, 20000)
    assert report["alpha"] is not None
    assert report["mse"] > 0


def test_gamma_against_scipy_reference():
    assert chanest.regularized_gamma_p(5.0, 3.0) == pytest.approx(0.18473675547622787, rel=1e-12)
    assert chanest.chi2_cdf(10.0, 10.0) == pytest.approx(0.5595067149347879, rel=1e-12)


def test_analysis():
    assert abs(chanest.epsilon_quadrature(200, 0.0) - 0.5) < 1e-6
    assert 0.08 <= chanest.alpha_for_epsilon(1200, 0.05) <= 0.12
    assert 540 <= chanest.sufficient_sample_size(0.1, 0.05) <= 660
    est, se = chanest.epsilon_monte_carlo(100, 0.1, 100000)
    assert abs(est - chanest.epsilon_quadrature(100, 0.1)) < 4 * se
    curve = chanest.alpha_curve([100, 1200, 5000])
    assert [k for k, _ in curve] == [100, 1200, 5000]
    assert curve[0][1] > curve[1][1] > curve[2][1]


def test_errors_are_raised():
    with pytest.raises(ValueError):
        chanest.alpha_for_epsilon(100, 0.7)
    with pytest.raises(ValueError):
        chanest.pdp_powers("gaussian", 2)


def test_cli(tmp_path):
    rc, out, err = chanest.run_cli(["alpha-curve", "--kappa", "1000:1400:200", "--out", str(tmp_path)])
    assert rc == 0, err
    text = (tmp_path / "alpha-curve.csv").read_text()
    assert text.startswith("kappa,alpha,epsilon")
    rc, _, err = chanest.run_cli(["alpha-curve", "--nope"])
    assert rc == 2
    assert "--nope" in err
