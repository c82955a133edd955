import itertools
import json

import jsonschema
import pytest

from ringlab import ClineQuadruple, build_ring, run_sweep
from ringlab.errors import HypothesisViolation
from ringlab.identities import (
    REPORT_SCHEMA,
    THEOREMS,
    cline_quadruples,
    equivalence_verdicts,
    hypothesis_quadruples,
    run_cases,
    verify_cline,
    verify_cline_power,
    verify_jacobson,
    verify_jacobson_power,
    verify_zhou_cline,
    verify_zhou_jacobson,
)


def naive_quadruples(R):
    m = R.mul
    N = range(len(R))
    return [(a, b, c, d) for a, b, c, d in itertools.product(N, repeat=4)
            if m(m(b, d), b) == m(m(b, a), c) and m(m(d, b), d) == m(m(a, c), d)]


@pytest.mark.parametrize("text", ["Z1", "Z4", "Z6", "T2(Z2)", "M2(Z2)"])
def test_hypothesis_scan_matches_naive_enumeration(text):
    R = build_ring(text)
    assert hypothesis_quadruples(R) == naive_quadruples(R)


def test_trivial_ring_has_one_quadruple():
    R = build_ring("Z1")
    assert [q.codes() for q in cline_quadruples(R)] == [(0, 0, 0, 0)]


def test_quadruple_hypothesis_is_enforced():
    R = build_ring("Z6")
    q = ClineQuadruple(*(R.element(x) for x in (2, 3, 3, 2)))
    assert verify_cline(R, q).ok
    with pytest.raises(HypothesisViolation):
        ClineQuadruple(*(R.element(x) for x in (1, 1, 2, 3)))
    with pytest.raises(HypothesisViolation):
        verify_cline(R, (1, 1, 2, 3))


def test_canonical_quadruple_reduces_to_ab_ba():
    R = build_ring("M2(Z2)")
    for x, y in itertools.product(list(R), repeat=2):
        assert ClineQuadruple.canonical(x, y).codes() == (x.code, y.code, y.code, x.code)


def test_noncanonical_quadruples_exist_in_m2z2():
    R = build_ring("M2(Z2)")
    quads = hypothesis_quadruples(R)
    non = [q for q in quads if not (q[1] == q[2] and q[0] == q[3])]
    assert non
    for q in non[::97]:
        assert verify_cline(R, q).ok
        assert verify_jacobson(R, q).ok
        assert verify_zhou_cline(R, q).ok
        assert verify_zhou_jacobson(R, q).ok


def test_cline_example_z6():
    R = build_ring("Z6")
    res = verify_cline(R, (2, 3, 3, 2))
    assert res.ok and res.transcript["bd"] == "0" and res.transcript["(bd)^z"] == "0"
    res = verify_cline(R, (1, 5, 5, 1))
    assert res.ok and res.transcript["(bd)^z"] == "5"


def test_power_versions():
    R = build_ring("Z12")
    assert verify_jacobson_power(R, 2, 3, 2).ok
    assert verify_cline_power(R, 2, 3, 2).ok
    with pytest.raises(ValueError):
        verify_cline_power(R, 2, 3, 0)


def test_jacobson_transcript_and_readings():
    R = build_ring("T2(Z2)")
    res = verify_jacobson(R, (R.one.code, 1, 1, R.one.code))
    assert res.ok
    assert set(res.transcript) >= {"1-ac", "1-bd", "(1-ac)^z", "(1-bd)^z", "lhs", "rhs"}
    assert len(res.tallies) == 5


def test_winning_reading_matches_everywhere():
    R = build_ring("T2(Z2)")
    report = run_sweep("jacobson", R)
    quads = sum(1 for _ in hypothesis_quadruples(R))
    assert report.details["reading 1+b[az-api(1-api a)^-1]d matches"] == quads
    assert report.details["reading 1+b az d matches"] < quads


def test_equivalence_verdicts_agree():
    R = build_ring("Z12")
    for a in range(len(R)):
        v = equivalence_verdicts(R, a)
        assert len(v) == 8 and len(set(v.values())) == 1


@pytest.mark.parametrize("theorem", sorted(THEOREMS))
@pytest.mark.parametrize("ring", ["Z6", "T2(Z2)", "Z4 x Z2"])
def test_every_sweep_passes(theorem, ring):
    report = run_sweep(theorem, build_ring(ring))
    assert report.ok, report.counterexamples[:3]
    assert report.population == report.passes > 0
    jsonschema.validate(report.to_dict(), REPORT_SCHEMA)


def test_sampled_sweep_is_seeded():
    R = build_ring("T2(Z3)")
    a = run_sweep("cline", R, exhaustive=False, samples=200, seed=4)
    b = run_sweep("cline", R, exhaustive=False, samples=200, seed=4)
    c = run_sweep("cline", R, exhaustive=False, samples=200, seed=5)
    assert a.to_json(timing=False) == b.to_json(timing=False)
    assert a.seed == 4 and a.ok and c.ok


def test_reports_are_byte_identical_without_timing():
    R = build_ring("Z8")
    first = run_sweep("unique", R).to_json(timing=False)
    second = run_sweep("unique", R).to_json(timing=False)
    assert first == second
    assert json.loads(first)["duration_ms"] is None


def test_parallel_sweep_matches_serial():
    R = build_ring("T2(Z2)")
    serial = run_sweep("jacobson", R, jobs=1)
    parallel = run_sweep("jacobson", R, jobs=2)
    assert serial.to_json(timing=False) == parallel.to_json(timing=False)


def test_counterexamples_are_recorded(monkeypatch):
    import ringlab.identities as ids
    cases_fn, check = THEOREMS["equiv"]

    def broken(R, case):
        res = check(R, case)
        res.ok = case[0] != 3
        return res

    monkeypatch.setitem(ids.THEOREMS, "equiv", (cases_fn, broken))
    report = run_cases("equiv", build_ring("Z6"), [(a,) for a in range(6)])
    assert not report.ok and report.fails == 1
    assert report.counterexamples[0]["a"] == "3"


def test_unknown_theorem():
    with pytest.raises(ValueError):
        run_sweep("nope", build_ring("Z2"))


def test_notes_explain_choices():
    assert run_sweep("zhou-jacobson", build_ring("Z4")).notes
    assert run_sweep("jacobson", build_ring("Z2")).notes
