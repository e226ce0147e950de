import math

import pytest

import muntzlab as ml


def test_sequence_roundtrip():
    seq = ml.ExponentSequence.geometric(2.0, 12)
    assert len(seq) == 12
    assert seq[0] == 2.0
    assert seq[11] == 2.0**12
    assert seq.is_rip()

    parsed = ml.ExponentSequence.parse("geometric:2:scale=0.5", 6)
    assert parsed.values == [1.0, 2.0, 4.0, 8.0, 16.0, 32.0]

    assert ml.ExponentSequence.from_values([1.0, 3.0, 7.0]).is_rip()
    assert not ml.ExponentSequence.from_values([1.0, 1.5, 2.0]).is_rip()

    ps = seq.prefix(5).partial_sum()
    assert ps["partial_sum"] == pytest.approx(sum(2.0**-k for k in range(1, 6)))
    assert ps["rip_tail_bound"] == pytest.approx(2.0 / 32.0)


def test_rip_extraction():
    seq = ml.ExponentSequence.from_values([1.0, 1.5, 2.0, 3.0, 5.0, 9.0])
    assert ml.extract_rip_subsequence(seq, 3) == [0, 2, 4]
    with pytest.raises(ml.InsufficientSequenceError):
        ml.extract_rip_subsequence(seq, 9)


def test_spike_profile():
    s = ml.Spike(2.0, 4.0)
    prof = ml.profile(s)
    assert prof["norm"] == pytest.approx(0.25, abs=1e-15)
    assert prof["argmax"]["x"] == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-15)
    assert prof["quarter_bound_applies"]

    iv = ml.superlevel_interval(s, 0.125)
    assert iv["a"]["x"] < prof["argmax"]["x"] < iv["b"]["x"]
    assert s.value(iv["a"]["x"]) == pytest.approx(0.125, abs=1e-9)


def test_sup_norm_engine():
    p = ml.Polynomial([(1.0, 1.0), (3.0, -1.0)])
    r = ml.sup_norm(p)
    assert r["value"] == pytest.approx(2.0 / (3.0 * math.sqrt(3.0)), rel=1e-12)
    assert r["argmax"][0]["x"] == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-12)
    assert not r["degraded_precision"]


def test_functional():
    mu = ml.Functional([(0.5, 0.6), (1.0, 0.4)])
    assert mu.total_variation == pytest.approx(1.0)
    p = ml.Polynomial([(2.0, 1.0)])
    assert mu(p) == pytest.approx(0.6 * 0.25 + 0.4)
    with pytest.raises(ValueError):
        ml.Functional([(0.5, 0.7), (0.6, 0.7)])
    assert ml.Functional.parse("0.5@0.3,0.5@0.9").total_variation == 1.0


def test_c0_certificate():
    seq = ml.ExponentSequence.geometric(2.0, 120)
    cert = ml.c0_build(seq, 4)
    assert cert.count == 4

    conds = ml.verify_conditions(cert, grid_points=20000)
    assert conds["all_hold"]
    assert len(conds["margins"]) == 5
    assert all(m["margin"] >= 0.0 for m in conds["margins"])

    ineq = ml.verify_inequalities(cert, trials=100, seed=42)
    assert ineq["all_within"]
    assert ineq["min_norm"] >= 0.25
    assert ineq["max_norm"] <= 1.0 + 1e-9
    assert ineq["worst_basis_norm_error"] <= 1e-9

    text = cert.to_json()
    again = ml.C0Certificate.from_json(text)
    assert again.to_json() == text
    assert cert.to_dict()["schema"] == "c0-cert/1"


def test_octa_certificate():
    seq = ml.ExponentSequence.geometric(2.0, 66)
    slices = [
        ml.Slice(ml.Functional([(1.0, 1.0)]), 0.2, ml.Polynomial([(256.0, 1.0)])),
        ml.Slice(
            ml.Functional([(0.9, 0.6), (1.0, 0.4)]), 0.3, ml.Polynomial([(2.0, 1.0)])
        ),
    ]
    rep = ml.find_K(slices, 0.05, seq, 64)
    assert rep["found"]

    cert = ml.diameter_certificate(slices, [0.5, 0.5], 0.05, seq, 64)
    assert cert.verified
    assert cert.chosen_k == rep["k"]
    assert cert.separation >= 2.0 / 1.1 - 1e-9
    assert ml.OctaCertificate.from_json(cert.to_json()).to_json() == cert.to_json()


def test_weak_null_trace():
    seq = ml.ExponentSequence.geometric(2.0, 31)
    mu = ml.Functional([(0.3, 0.5), (0.9, 0.5)])
    trace = ml.weak_null_trace(seq, mu, 30)
    assert len(trace) == 30
    assert all(v < 0.01 for v in trace[5:])


def test_witness_finder():
    seq = ml.ExponentSequence.geometric(2.0, 10)
    found = ml.witness_finder(ml.Functional([(1.0, 1.0)]), 0.2, seq, 3)
    assert found["witness"] is not None
    assert found["best_value"] > 0.8

    short = ml.Functional([(0.5, 0.3)])
    missed = ml.witness_finder(short, 0.1, seq, 3)
    assert missed["witness"] is None
    assert missed["best_value"] <= 0.3 + 1e-9
