"""Smoke tests for the python surface of the workbench."""

import json

import pytest

import novk


@pytest.fixture(scope="module")
def poincare():
    return novk.Group(novk.fixture("poincare.pres"))


def test_poincare_pipeline(poincare):
    assert poincare.order == 120
    assert poincare.abelianization == (0, [])
    assert not poincare.is_cyclic
    assert poincare.dim_hom == 0
    assert poincare.min_generators() == 2
    lower, upper, certs = poincare.mu_bounds()
    assert (lower, upper) == (2, 2)
    assert len(certs) == 2
    lower, upper, _ = poincare.rho_bounds()
    assert (lower, upper) == (2, 2)


def test_words_and_zip(poincare):
    w = poincare.word("[0:a][1:b][0:a]")
    assert str(w.zip(1)) == "[1:b]"
    assert (w * w.inverse()).is_identity
    assert w.shift(3).height == 4
    conj, core = poincare.word("[0:a][1:b][0:a^-1]").cyclic_reduce()
    assert str(conj) == "[0:a]"
    assert str(core) == "[1:b]"


def test_single_letter_counterexample():
    z2 = novk.Group("gens: a; rel: a^2")
    x = z2.word("[0:a][1:a][0:a]")
    assert not x.is_single_letter
    assert x.power(2).is_identity


def test_laurent_series():
    one_minus_t = novk.LaurentSeries("1 - t", 3, ring="Z")
    assert str(one_minus_t.invert()) == "1 + t + t^2 + t^3"
    with pytest.raises(novk.NovkError):
        novk.LaurentSeries("2 - t", 3, ring="Z").invert()
    t = novk.LaurentSeries("t", 5, ring="Q")
    assert t.invert().valuation == -1
    assert novk.LaurentSeries("0", 2, ring="Q").valuation is None


def test_span_membership():
    z3 = novk.Group("gens: a; rel: a^3")
    witness = z3.span_member(z3.word("[0:a^2]"), [("g1", z3.word("[0:a]"))], max_len=3)
    assert witness is not None
    klein = novk.Group("gens: a b; rel: a^2; rel: b^2; rel: a b a^-1 b^-1")
    assert klein.span_member(klein.word("[0:b]"), [("g1", klein.word("[0:a]"))]) is None


def test_homology_and_hn():
    rp4 = novk.ChainComplex(novk.fixture("rp4.cx.json"))
    assert rp4.homology(1) == (0, [2])
    assert rp4.homology(2) == (0, [])
    free_rank, torsion, pretty = rp4.hn_connected_sum(1, 4)
    assert (free_rank, torsion) == (0, [2])
    assert pretty == "Z/2((t))"


def test_smith_normal_form():
    assert novk.smith_normal_form([[5, -3], [3, -2]]) == [1, 1]
    assert novk.smith_normal_form([[2, 0], [0, 0]]) == [2, 0]


def test_rho_matrix():
    assert novk.l_lambda_dim(["g1"], ["{0:g1^1}{-1:g1^-1}"]) == 0
    assert novk.rho_matrix(["g1"], ["{0:g1^1}{-1:g1^1}"]) == [["1 + t"]]


def test_hurewicz_and_ml():
    z2 = novk.Group("gens: a; rel: a^2")
    levels = z2.hurewicz(z2.word("[0:a][1:a][0:a]"), 0, 2)
    assert levels == [[0], [1], [0]]
    assert z2.ml_check(0, 3, 1)


def test_report_json_schema():
    report = json.loads(novk.report_json("rp4"))
    assert report["example"] == "rp4"
    assert report["mu_dtc"]["lower"] == 1
    assert report["novikov_homology"]["HN1"]["pretty"] == "Z/2((t))"
    assert "critical point" in novk.report_text("rp4")
