#!/usr/bin/env python3
"""Smoke tests for the Python module: end-to-end sanity over the bindings."""

import math
import os
import tempfile

import fairscore as fs


def test_fdr_arithmetic():
    assert abs(fs.fdr(0.158, 0.001, 0.5) - 0.9205) < 1e-12
    assert fs.fdr(0.0, 0.0, 0.3) == 1.0
    assert fs.verdict(0.95, 0.05).fair
    assert not fs.verdict(0.94, 0.05).fair
    try:
        fs.fdr(1.5, 0.0, 0.5)
    except fs.Error:
        pass
    else:
        raise AssertionError("expected fs.Error for out-of-range gap")


def test_rates_and_calibration():
    scores = [0.9, 0.2, 0.3]
    assert abs(fs.fmr(scores, 0.5) - 1.0 / 3.0) < 1e-12
    assert abs(fs.fnmr(scores, 0.5) - 2.0 / 3.0) < 1e-12

    cal = fs.ScoreSet([("A", "A", s / 10.0, "impostor") for s in range(1, 11)])
    t = fs.calibrate_threshold(cal, 1.0)
    assert t.tau == 1.0 and abs(t.achieved_dev_fmr - 0.1) < 1e-12
    assert fs.calibrate_threshold(cal, 3.0).degenerate


def test_synthetic_pipeline():
    params = {
        "A": fs.DemographicScoreParams(0.0, 1.0, 4.0, 1.0, 20000, 2000),
        "B": fs.DemographicScoreParams(0.0, 1.0, 3.2, 1.1, 20000, 2000),
    }
    spec = fs.SyntheticSpec(params, seed=7, dev_fraction=0.5)
    data = fs.generate(spec)
    again = fs.generate(spec)
    assert len(data.dev) == len(again.dev)
    assert [r.score for r in data.dev.records()[:50]] == [
        r.score for r in again.dev.records()[:50]
    ]

    grid = fs.OperatingPointGrid([1.0, 2.0, 3.0])
    curve = fs.fdr_curve(data, grid, 0.5)
    assert len(curve.points) == 3
    assert all(0.0 <= p.fdr <= 1.0 for p in curve.points)
    assert curve.aufdr is not None and 0.0 <= curve.aufdr <= 1.0
    assert curve.exponent_range == (1.0, 3.0)

    sweep = fs.alpha_sweep(data, grid, [0.0, 0.5, 1.0])
    assert [round(r.alpha, 2) for r in sweep] == [0.0, 0.5, 1.0]
    # the B cohort drifts, so weighting its FNMR gap less must help
    assert sweep[2].aufdr >= sweep[0].aufdr


def test_csv_round_trip():
    rows = [("A", "A", 0.25, "genuine"), ("A", "B", -1.5, "impostor")]
    original = fs.ScoreSet(rows)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "scores.csv")
        fs.write_scores(path, original)
        reloaded = fs.load_scores(path)
    assert [r.score for r in reloaded.records()] == [r.score for r in original.records()]
    assert reloaded.label_universe() == ["A", "B"]


def test_det_invariance():
    rows = [("A", "A", s, "impostor") for s in (-1.0, -0.5, 0.0)]
    rows += [("A", "A", s, "genuine") for s in (0.5, 1.0)]
    base = fs.det_points(fs.ScoreSet(rows), "A")
    warped_rows = [(e, p, 3.0 * s + 1.0, k) for (e, p, s, k) in rows]
    warped = fs.det_points(fs.ScoreSet(warped_rows), "A")
    assert [(p.fmr, p.fnmr) for p in base] == [(p.fmr, p.fnmr) for p in warped]


def test_identification():
    trials = [
        fs.IdentificationTrial("p1", "X", True, "g1", {"g1": 0.9, "g2": 0.5}),
        fs.IdentificationTrial("p2", "X", False, None, {"g1": 0.3, "g2": 0.2}),
        fs.IdentificationTrial("p3", "Y", True, "g2", {"g1": 0.6, "g2": 0.4}),
        fs.IdentificationTrial("p4", "Y", False, None, {"g1": 0.7, "g2": 0.2}),
    ]
    gallery = fs.GallerySet(trials)
    assert fs.rank_of(trials[0]) == 1
    assert fs.rank_of(trials[2]) == 2
    assert fs.rank_n_rate(gallery, 2) == 1.0
    assert fs.dir(gallery, 0.45, "X") == 1.0
    assert fs.far_open(gallery, 0.65, "Y") == 1.0
    value = fs.fdr_prime(gallery, 0.45, 0.5)
    assert 0.0 <= value <= 1.0
    assert math.isclose(fs.fdr_prime_complement(gallery, 0.45, 0.5), 1.0 - value)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
