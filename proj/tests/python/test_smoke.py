import math
import os
import subprocess

import numpy as np
import pytest

import twodist


def test_gegenbauer_normalised_at_one():
    for k in range(6):
        assert twodist.gegenbauer_eval(7, k, 1.0) == pytest.approx(1.0)
    assert twodist.gegenbauer_poly(7, 1) == pytest.approx([0.0, 1.0])


def test_basis_round_trip():
    p = [0.3, -1.0, 2.0, 0.5]
    back = twodist.from_gegenbauer(9, twodist.to_gegenbauer(9, p))
    assert back == pytest.approx(p)


def test_first_candidate_closed_form():
    c = twodist.build_candidate(1, 7, 1 / 3, -1 / 3)
    assert c.in_domain
    assert c.value == pytest.approx(28.0)
    value, winners = twodist.best_bound(23, 0.2, -0.2)
    assert value <= 276.0 + 1e-9
    assert winners


def test_delsarte_check():
    f = twodist.build_candidate(1, 7, 1 / 3, -1 / 3).expansion
    assert twodist.delsarte_check(7, f, [1 / 3, -1 / 3]) == 28
    assert isinstance(twodist.delsarte_check(7, [1.0, -1.0], [0.0]), str)


def test_phi_and_table():
    assert abs(twodist.phi(25, 3) - 284.14) <= 0.05
    rows = twodist.table(7, 7)
    assert len(rows) == 1
    assert rows[0].omega_hat == 28 and rows[0].rho == 28 and rows[0].k_star == 2
    assert twodist.g_upper(23) == 277
    with pytest.raises(ValueError):
        twodist.rho(6)


def test_profile():
    samples = twodist.profile(25, 3, 11)
    assert len(samples) == 11
    assert all(math.isinf(q) or q <= 284.15 for _, q, _ in samples)


def test_constructions():
    pts = twodist.lambda_set(7)
    assert isinstance(pts, np.ndarray)
    assert pts.shape == (28, 7)
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0)
    cert = twodist.verify_two_distance(pts)
    assert cert["valid"]
    assert twodist.gram_check(pts) == (True, 7)
    a, b = twodist.lambda_params(7)
    assert twodist.independence_rank(pts, a, b) == 35


@pytest.mark.skipif("TWODIST_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_table_row():
    out = subprocess.run(
        [os.environ["TWODIST_CLI"], "table", "--n-min", "23", "--n-max", "23"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    assert "\n23,277,276,3,277,true" in out
