import dataclasses

import pytest

from ringlab import (
    InverseKind,
    TheoremViolation,
    build_ring,
    characterization_n,
    gzhou_constructive,
    inverse_bruteforce,
    lift_idempotent_binomial,
    verify_certificate,
)
from ringlab import inverses
from ringlab.errors import UniquenessViolation
from ringlab.inverses import binomial_seed, inverse_codes, seed_is_idempotent_mod_radical


# -- a naive oracle built only from the ring operations ------------------------

def _pow(R, x, n):
    out = R.one.code
    for _ in range(n):
        out = R.mul(out, x)
    return out


def _naive_sets(R):
    N = len(R)
    one = R.one.code
    unit = {x for x in range(N) if any(R.mul(x, y) == one == R.mul(y, x) for y in range(N))}
    nil = {x for x in range(N) if _pow(R, x, N) == 0}
    J = {x for x in range(N) if all(R.sub(one, R.mul(r, x)) in unit for r in range(N))}
    root = {x for x in range(N) if any(_pow(R, x, n) in J for n in range(1, N + 1))}
    return nil, root


def naive_inverse(R, a, kind, sets):
    nil, root = sets
    N = len(R)
    comm = [y for y in range(N) if R.mul(a, y) == R.mul(y, a)]
    comm2 = [x for x in range(N) if all(R.mul(x, c) == R.mul(c, x) for c in comm)]
    pool = comm if kind is InverseKind.DRAZIN else comm2
    hits = []
    for b in pool:
        if R.mul(R.mul(b, a), b) != b:
            continue
        ab = R.mul(a, b)
        if kind is InverseKind.DRAZIN:
            ok = any(_pow(R, a, n) == R.mul(_pow(R, a, n + 1), b) for n in range(1, N + 2))
        elif kind is InverseKind.P_DRAZIN:
            ok = R.sub(a, R.mul(a, ab)) in root
        else:
            target = nil if kind is InverseKind.ZHOU else root
            ok = any(R.sub(_pow(R, a, n), ab) in target for n in range(1, N + 2))
        if ok:
            hits.append(b)
    assert len(hits) <= 1
    return hits[0] if hits else None


@pytest.mark.parametrize("kind", list(InverseKind))
def test_bruteforce_against_naive_oracle(small_ring, kind):
    R = small_ring
    sets = _naive_sets(R)
    for a in R:
        cert = inverse_bruteforce(R, a, kind)
        expected = naive_inverse(R, a.code, kind, sets)
        assert (cert.b.code if cert else None) == expected, str(a)


# -- documented examples -------------------------------------------------------

@pytest.mark.parametrize("a, b, n, p", [(0, 0, 1, 0), (1, 1, 1, 1), (2, 3, 4, 1), (3, 2, 4, 1), (4, 4, 2, 1)])
def test_z5_gzhou(a, b, n, p):
    R = build_ring("Z5")
    cert = inverse_bruteforce(R, R.element(a), "gzhou")
    assert (cert.b.code, cert.n, cert.p.code) == (b, n, p)
    assert cert.b == R.element(a) ** 3
    assert cert.w == R.zero


def test_z4_zhou_smallest_exponent():
    R = build_ring("Z4")
    cert = inverse_bruteforce(R, R.element(2), InverseKind.ZHOU)
    # 2 - 2*0 = 2 is already nilpotent, so the smallest exponent is 1
    assert (cert.b.code, cert.n, cert.p.code) == (0, 1, 0)
    assert cert.witness_exponents == {"w": 2}
    assert gzhou_constructive(R, R.element(2)).n == 2


def test_z6_gzhou():
    R = build_ring("Z6")
    cert = inverse_bruteforce(R, R.element(2), InverseKind.G_ZHOU)
    assert (str(cert.b), cert.n, str(cert.p)) == ("2", 2, "4")


def test_zhou_and_gzhou_exist_together():
    # N equals the root set of J in a finite ring, so the two notions have the same domain
    R = build_ring("Z12")
    for a in R:
        z = inverse_bruteforce(R, a, "zhou")
        g = inverse_bruteforce(R, a, "gzhou")
        assert (z is None) == (g is None)


# -- cross-checks between the two routes and between kinds ---------------------

def test_constructive_matches_bruteforce(suite_ring):
    R = suite_ring
    for a in R:
        brute = inverse_bruteforce(R, a, InverseKind.G_ZHOU)
        built = gzhou_constructive(R, a)
        assert brute is not None and built.b == brute.b and built.p == brute.p
        assert verify_certificate(R, built)
        assert built.n >= brute.n


def test_inverse_kind_relationships(suite_ring):
    R = suite_ring
    dr = inverse_codes(R, InverseKind.DRAZIN)
    for kind in (InverseKind.P_DRAZIN, InverseKind.ZHOU, InverseKind.G_ZHOU):
        for a, b in enumerate(inverse_codes(R, kind)):
            # any of the stronger inverses coincides with the Drazin inverse
            assert b is None or b == dr[a]


def test_drazin_certificate_properties(suite_ring):
    R = suite_ring
    for a in R:
        cert = inverse_bruteforce(R, a, InverseKind.DRAZIN)
        assert verify_certificate(R, cert)
        k = cert.n
        assert a ** k == a ** (k + 1) * cert.b
        assert k == 1 or a ** (k - 1) != a ** k * cert.b
        # a - a^2 b is nilpotent for the Drazin inverse of a finite ring element
        w = a - a * a * cert.b
        assert w ** len(R) == R.zero


def test_gzhou_power_residual_in_radical_root(suite_ring):
    R = suite_ring
    for a in R:
        cert = gzhou_constructive(R, a)
        n, b = cert.n, cert.b
        # a^n - a^(n+1) b lies in the root set as well
        assert characterization_n(R, a) is not None
        assert inverses._residual_ok(R, InverseKind.G_ZHOU, (a ** n - a ** (n + 1) * b).code)


def test_tampered_certificate_is_rejected():
    R = build_ring("Z5")
    cert = inverse_bruteforce(R, R.element(2), "gzhou")
    bad = dataclasses.replace(cert, b=R.element(4))
    check = verify_certificate(R, bad)
    assert not check and "bab=b" in check.failed
    bad_p = dataclasses.replace(cert, p=R.element(2))
    assert "p=ab" in verify_certificate(R, bad_p).failed
    bad_n = dataclasses.replace(cert, n=0)
    assert "n>=1" in verify_certificate(R, bad_n).failed


def test_certificate_dict_shape():
    R = build_ring("Z5")
    d = inverse_bruteforce(R, R.element(2), "gzhou").to_dict()
    assert set(d) == {"kind", "a", "b", "n", "p", "w", "witness_exponents", "checks"}
    assert all(d["checks"].values())


def test_uniqueness_violation_is_raised(monkeypatch):
    R = build_ring("Z6")
    monkeypatch.setattr(inverses, "_residual_ok", lambda R, kind, w: True)
    with pytest.raises(UniquenessViolation) as info:
        inverse_bruteforce(R, R.element(1), InverseKind.DRAZIN)
    assert isinstance(info.value, TheoremViolation)
    # every idempotent b satisfies bab = b and commutes with 1
    assert info.value.transcript["candidates"] == ["0", "1", "3", "4"]


def test_trivial_ring():
    R = build_ring("Z1")
    for kind in InverseKind:
        cert = inverse_bruteforce(R, R.zero, kind)
        assert cert.b == R.zero and verify_certificate(R, cert)


def test_bruteforce_is_deterministic():
    R = build_ring("T2(Z3)")
    first = [inverse_bruteforce(R, a, "gzhou") for a in R]
    again = [inverse_bruteforce(R, a, "gzhou") for a in R]
    assert first == again


def test_kind_parsing():
    assert InverseKind.parse("G_ZHOU") is InverseKind.G_ZHOU
    assert InverseKind.parse("p-drazin") is InverseKind.P_DRAZIN


@pytest.mark.parametrize("ring, a, radical, n", [("Z5", 2, "sqrtJ", 4), ("Z4", 2, "N", 1), ("Z6", 2, "N", 2),
                                                 ("Z8", 3, "sqrtJ", 1), ("Z9", 2, "N", 2), ("Z7", 0, "N", 1)])
def test_characterization_exponent(ring, a, radical, n):
    R = build_ring(ring)
    assert characterization_n(R, R.element(a), radical) == n


@pytest.mark.parametrize("ring, a, e", [("Z5", 2, 1), ("Z6", 2, 4), ("Z6", 3, 3), ("Z12", 2, 4), ("Z8", 6, 0)])
def test_binomial_lift_examples(ring, a, e):
    R = build_ring(ring)
    assert lift_idempotent_binomial(R, R.element(a)) == R.element(e)


def test_binomial_lift_equals_cycle_idempotent(suite_ring):
    R = suite_ring
    for a in R:
        e, n, m = binomial_seed(R, a)
        assert seed_is_idempotent_mod_radical(R, e)
        assert lift_idempotent_binomial(R, a) == gzhou_constructive(R, a).p


@pytest.mark.parametrize("ring, failing", [("Z5", ["2", "4"]), ("Z7", ["2", "3", "5", "6"]),
                                           ("Z12", []), ("M2(Z2)", [])])
def test_literal_binomial_factor_is_not_always_idempotent_mod_radical(ring, failing):
    R = build_ring(ring)
    bad = [str(a) for a in R if not seed_is_idempotent_mod_radical(R, binomial_seed(R, a, literal=True)[0])]
    assert bad == failing
