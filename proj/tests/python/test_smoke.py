import json
import math

import numpy as np
import pytest

import tqft

PHI = (1 + math.sqrt(5)) / 2


def test_fixtures_listed():
    assert "fib" in tqft.fixtures("categories")
    assert "t3" in tqft.fixtures("triangulations")


def test_pentagon_and_dimension():
    assert tqft.pentagon_residual("fib") < 1e-12
    assert abs(tqft.global_dimension("fib") - (1 + PHI**2)) < 1e-12


def test_tv_sphere_and_torus():
    assert abs(tqft.tv_invariant("fib", "s3_1tet") - 1 / (1 + PHI**2)) < 1e-9
    assert abs(tqft.tv_invariant("ising", "t3") - 9) < 1e-9
    assert tqft.homology("l31") == "Z_3"


def test_tv_matches_rt_of_center():
    z = tqft.Center("fib")
    for p, t in enumerate(["s3_1tet", "rp3", "l31", "l41", "l51"], start=1):
        assert abs(tqft.tv_invariant("fib", t) - z.lens_rt(p)) < 1e-9


def test_center_data():
    z = tqft.Center("vec_z2")
    assert z.rank == 4
    s = np.asarray(z.S)
    assert np.allclose(s @ s.conj().T, np.eye(4), atol=1e-9)
    assert z.closed_surface_dimension(2) == 16


def test_indicator_against_oracle():
    z = tqft.Center("fib")
    v = np.array([0, 1], dtype=complex)
    for x in range(z.rank):
        e = np.zeros(z.rank, dtype=complex)
        e[x] = 1
        assert abs(z.indicator(2, 1, v, e) - z.indicator_oracle(2, 1, 1, x)) < 1e-9


def test_positivity_and_surfaces():
    assert min(tqft.min_eigenvalues("rep_s3", 4)) > -1e-9
    assert tqft.surface_dimension("fib", "annulus") == 2
    assert tqft.closed_surface_dimension("fib", 2) == 5


def test_cli_roundtrip():
    code, out, _ = tqft.run(["compare", "--fsymbols", "vec_z2", "--lens", "3"])
    assert code == 0
    rep = json.loads(out)
    assert abs(rep["outputs"]["tv"][0] - 0.5) < 1e-9
    code, _, _ = tqft.run(["nope"])
    assert code == 2


def test_errors_are_python_exceptions():
    with pytest.raises(RuntimeError):
        tqft.tv_invariant("no_such_category", "t3")
