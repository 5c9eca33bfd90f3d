import cmath
import math

import numpy as np
import pytest

import wshift


def test_periodic_verdicts():
    v = wshift.decide_similarity(wshift.parse_sequence("periodic:1,2"))
    assert v["verdict"] == "similar"
    assert v["c"] == pytest.approx(2 ** -0.5, rel=1e-15)
    assert v["kappa"] == pytest.approx(math.sqrt(2), rel=1e-14)

    split = wshift.decide_similarity(wshift.WeightSequence.split([1], [2], 0))
    assert split["verdict"] == "not-similar"
    assert split["witness"]["reason"] == "rate-mismatch"
    assert len(split["witness"]["windows"]) == 3


def test_weight_access_and_windows():
    seq = wshift.WeightSequence.modified([1, 2], {0: 4})
    assert seq[0] == 4
    assert seq[1] == 2
    assert seq.kind == "modified"
    assert wshift.window_product(wshift.parse_sequence("split:1|2@0"), -3, 6) == pytest.approx(16)
    assert wshift.candidate_c(wshift.parse_sequence("split:1|2@0")) is None


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        wshift.parse_sequence("periodic:1,x")
    with pytest.raises(wshift.ParseError):
        wshift.parse_sequence("periodic:0")


def test_norms_and_truncation():
    seq = wshift.parse_sequence("periodic:1,2")
    assert wshift.power_norm_exact(seq, 3) == 4
    assert wshift.inverse_power_norm_exact(seq, 2) == 0.5
    t = wshift.truncation(seq, 8)
    assert t.shape == (17, 17)
    t3 = np.linalg.matrix_power(t, 3)
    assert wshift.operator_norm(t3) == pytest.approx(np.linalg.norm(t3, 2), rel=1e-10)


def test_spectrum_and_normality():
    seq = wshift.parse_sequence("periodic:1,2")
    for z in wshift.wrap_spectrum(seq, 8):
        assert abs(z) == pytest.approx(math.sqrt(2), rel=1e-14)
    assert wshift.normality_residual(wshift.wrap(seq, 8)) == pytest.approx(3.0)
    assert wshift.verify_similarity(seq) <= 1e-12


def test_stab():
    assert wshift.stab_normal_diag([0.5, 2], [1, 0])
    assert not wshift.stab_normal_diag([cmath.exp(0.3j)], [1])
    assert wshift.dichotomy_check(wshift.parse_sequence("periodic:1/2"))["verdict"] == "dense"
    assert wshift.stab_similarity_consistency(wshift.parse_sequence("periodic:1,2"))


def test_matrix_oracles():
    rng = np.random.default_rng(4)
    a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    x = 1.5 * np.eye(5) + (rng.uniform(-1, 1, (5, 5)) + 1j * rng.uniform(-1, 1, (5, 5))) / 5
    b = x @ a @ np.linalg.inv(x)
    assert wshift.lemma1_harness(a, b, x, 4)["holds"]
    r = wshift.sznagy_check(np.diag([2.0, 0.5]).astype(complex), 20)
    assert r["sup_forward"] == pytest.approx(2.0 ** 20)
    assert not r["power_bounded_within_horizon"]


def test_cli_round_trip():
    code, out, err = wshift.run_cli(["norms", "periodic:1", "--c", "2", "--n-max", "3", "--csv"])
    assert code == 0
    assert out == "n,forward_norm,backward_norm\n1,2,0.5\n2,4,0.25\n3,8,0.125\n"
    report = wshift.analyze("periodic:1")
    assert report["spectrum_radius"] == pytest.approx(1.0)
