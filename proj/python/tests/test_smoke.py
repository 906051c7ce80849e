import json
import math

import numpy as np
import pytest

import bergcomm

CROSS = {"type": "monomial_combo", "n": 2, "terms": [{"a": [1, 0], "b": [0, 1], "re": 1, "im": 0}]}
ABS1 = {"type": "separately_radial", "n": 2, "s": [1, 0], "h": {"kind": "constant", "value": 1}}
RADIAL = {"type": "separately_radial", "n": 2, "s": [0, 0], "h": {"kind": "power", "t": 2}}


def test_coefficients():
    assert bergcomm.d_coeff(1, 0.0, [1], [1]) == pytest.approx(2 / math.sqrt(3), rel=1e-14)
    assert bergcomm.norm_constant(2, 0.0, [1, 1]) == pytest.approx(math.sqrt(12), rel=1e-14)
    assert bergcomm.log_gamma(5.0) == pytest.approx(math.lgamma(5.0), rel=1e-14)
    assert bergcomm.basis(2, 1) == [[0, 0], [1, 0], [0, 1]]


def test_omega_and_matrix():
    assert bergcomm.omega(ABS1, [0, 0]).real == pytest.approx(1 / 3, rel=1e-14)
    M = bergcomm.matrix(CROSS, 2)
    assert M.shape == (6, 6)
    assert M.dtype == np.complex128
    # row (1,0), column (0,1)
    assert M[1, 2].real == pytest.approx(0.25, rel=1e-14)
    D = bergcomm.matrix(ABS1, 1)
    assert np.allclose(np.diag(D).real, [1 / 3, 1 / 2, 1 / 4])


def test_commutation():
    assert bergcomm.commutator_max(CROSS, RADIAL, 6) <= 1e-12
    r = bergcomm.theorem2(CROSS, RADIAL, 8)
    assert r["residual"] <= 1e-12 and r["predicate"] and r["agree"]
    r = bergcomm.theorem2(CROSS, ABS1, 8)
    assert r["residual"] > 1e-4 and not r["predicate"]


def test_analytic_extraction():
    f = {"type": "monomial_combo", "n": 2,
         "terms": [{"a": [1, 0], "b": [0, 0], "re": 2}, {"a": [0, 1], "b": [0, 0], "re": -1}]}
    assert bergcomm.analytic_test(f, 4)["pass"]
    back = bergcomm.extract_symbol(f, 4)
    # terms come sorted by exponent: z2 before z1
    assert [t["re"] for t in back["terms"]] == pytest.approx([-1.0, 2.0], abs=1e-10)
    with pytest.raises(ValueError):
        bergcomm.extract_symbol(CROSS, 3)


def test_sets():
    v = bergcomm.property_p({"tag": "full", "n": 2})
    assert v["status"] == "no" and v["replay"]
    v = bergcomm.property_p({"tag": "product_with_full", "axis": 1,
                             "children": [{"tag": "finite", "n": 1, "points": [[3]]}]})
    assert v["status"] == "yes"
    z1 = {"type": "monomial_combo", "n": 2, "terms": [{"a": [1, 0], "b": [0, 0], "re": 1}]}
    assert bergcomm.zero_set(z1, [-1, 0], 2) == []
    assert len(bergcomm.zero_set(z1, [0, 0], 2)) == 6


def test_errors():
    bad = {"type": "monomial_combo", "n": 2, "terms": [{"a": [1], "b": [0, 1], "re": 1}]}
    with pytest.raises(bergcomm.DimensionMismatch):
        bergcomm.matrix(bad, 2)
    with pytest.raises(ValueError):
        bergcomm.matrix("{broken", 2)


def test_cli_and_acceptance():
    code, out, _ = bergcomm.run("dcoeff", "--n", 1, "--m", 1, "--k", 1)
    assert code == 0
    assert json.loads(out)["d"] == pytest.approx(1.154700538, rel=1e-9)
    results = bergcomm.acceptance(20240917)
    assert len(results) == 10
    assert all(r["pass"] for r in results)
