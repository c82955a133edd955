"""Structural subsets of a finite ring.

Units, nilpotents, the Jacobson radical J(R), its root set
{x : x^n in J(R) for some n}, idempotents, commutants and the quotient
R/J(R).  Everything is computed once per ring and cached on it; with Cayley
tables present the scans are vectorised with numpy.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotAUnitError, TheoremViolation
from .ring import Element, FiniteRing, _check_same, quotient_ring


@dataclass(frozen=True)
class StructuralSets:
    units: frozenset
    nilpotents: dict  # element -> nilpotency index
    radical: frozenset
    radical_root: dict  # element -> smallest n with x^n in J(R)
    idempotents: frozenset


@dataclass(frozen=True)
class Commutant:
    center: Element
    comm: frozenset
    comm2: frozenset


def _codes(mask):
    return tuple(int(c) for c in np.flatnonzero(mask))


def unit_mask(R: FiniteRing):
    def compute():
        N, one = len(R), R.one.code
        if R.has_tables:
            eq = R.mul_table == one
            return (eq & eq.T).any(axis=1)
        mask = np.zeros(N, dtype=bool)
        for x in range(N):
            for y in range(N):
                if R.mul(x, y) == one and R.mul(y, x) == one:
                    mask[x] = True
                    break
        return mask

    return R.cached("units", compute)


def nilpotency_indices(R: FiniteRing):
    """``{code: index}`` for every nilpotent code."""
    def compute():
        out = {}
        for x in range(len(R)):
            orbit = R.orbit_codes(x)[2]
            if 0 in orbit:
                out[x] = orbit.index(0) + 1
        return out

    return R.cached("nilpotents", compute)


def nilpotent_mask(R: FiniteRing):
    def compute():
        mask = np.zeros(len(R), dtype=bool)
        mask[list(nilpotency_indices(R))] = True
        return mask

    return R.cached("nilpotent_mask", compute)


def radical_mask(R: FiniteRing):
    """J(R) by quasi-regularity: x in J iff 1 - r x is a unit for every r."""
    def compute():
        N, one = len(R), R.one.code
        units = unit_mask(R)
        if R.has_tables:
            one_minus = R.add_table[one][R.neg_table[R.mul_table]]  # [r, x] -> 1 - r x
            mask = units[one_minus].all(axis=0)
        else:
            mask = np.array([all(units[R.sub(one, R.mul(r, x))] for r in range(N))
                             for x in range(N)], dtype=bool)
        _assert_ideal(R, mask)
        return mask

    return R.cached("radical", compute)


def _assert_ideal(R, mask):
    members = np.flatnonzero(mask)
    if not mask[0]:
        raise TheoremViolation(f"0 not in J({R})")
    if R.has_tables:
        ok = (mask[R.add_table[np.ix_(members, members)]].all()
              and mask[R.mul_table[:, members]].all()
              and mask[R.mul_table[members, :]].all())
    else:
        ms = [int(m) for m in members]
        ok = all(mask[R.add(x, y)] for x in ms for y in ms) and all(
            mask[R.mul(r, x)] and mask[R.mul(x, r)] for x in ms for r in range(len(R)))
    if not ok:
        raise TheoremViolation(f"J({R}) is not a two-sided ideal")


def radical_root_witnesses(R: FiniteRing):
    """``{code: n}`` with n the smallest exponent putting x^n in J(R)."""
    def compute():
        J = radical_mask(R)
        out = {}
        for x in range(len(R)):
            for e, y in enumerate(R.orbit_codes(x)[2], start=1):
                if J[y]:
                    out[x] = e
                    break
        return out

    return R.cached("radical_root", compute)


def radical_root_mask(R: FiniteRing):
    def compute():
        mask = np.zeros(len(R), dtype=bool)
        mask[list(radical_root_witnesses(R))] = True
        if not np.array_equal(mask, nilpotent_mask(R)):
            raise TheoremViolation(f"root of J({R}) differs from the nilpotent set")
        return mask

    return R.cached("radical_root_mask", compute)


def idempotent_mask(R: FiniteRing):
    def compute():
        codes = np.arange(len(R))
        if R.has_tables:
            return R.mul_table[codes, codes] == codes
        return np.array([R.mul(x, x) == x for x in codes], dtype=bool)

    return R.cached("idempotents", compute)


def comm_codes(R: FiniteRing, a: int) -> frozenset:
    def compute():
        if R.has_tables:
            return frozenset(_codes(R.mul_table[:, a] == R.mul_table[a, :]))
        return frozenset(x for x in range(len(R)) if R.mul(x, a) == R.mul(a, x))

    return R.cached(("comm", a), compute)


def comm2_codes(R: FiniteRing, a: int) -> frozenset:
    def compute():
        C = sorted(comm_codes(R, a))
        if R.has_tables:
            M = R.mul_table
            return frozenset(_codes((M[:, C] == M[C, :].T).all(axis=1)))
        return frozenset(x for x in range(len(R))
                         if all(R.mul(x, y) == R.mul(y, x) for y in C))

    return R.cached(("comm2", a), compute)


def _elements(R, codes):
    return frozenset(Element(R, c) for c in codes)


def units(R: FiniteRing) -> frozenset:
    return _elements(R, _codes(unit_mask(R)))


def is_unit(R: FiniteRing, x: Element) -> bool:
    _check_same(R, x)
    return bool(unit_mask(R)[x.code])


def unit_inverse_code(R: FiniteRing, x: int) -> int:
    one = R.one.code
    if R.has_tables:
        candidates = np.flatnonzero(R.mul_table[x] == one)
    else:
        candidates = [y for y in range(len(R)) if R.mul(x, y) == one]
    for y in candidates:
        y = int(y)
        if R.mul(y, x) == one:
            return y
    raise NotAUnitError(f"{R.format(x)} is not a unit in {R}")


def unit_inverse(R: FiniteRing, x: Element) -> Element:
    _check_same(R, x)
    return Element(R, unit_inverse_code(R, x.code))


def nilpotents(R: FiniteRing) -> dict:
    return {Element(R, c): k for c, k in sorted(nilpotency_indices(R).items())}


def jacobson_radical(R: FiniteRing) -> frozenset:
    return _elements(R, _codes(radical_mask(R)))


def sqrt_jacobson(R: FiniteRing) -> frozenset:
    return _elements(R, _codes(radical_root_mask(R)))


def in_sqrt_jacobson(R: FiniteRing, x: Element):
    """Smallest n >= 1 with x^n in J(R), or None."""
    _check_same(R, x)
    return radical_root_witnesses(R).get(x.code)


def idempotents(R: FiniteRing) -> frozenset:
    return _elements(R, _codes(idempotent_mask(R)))


def commutant(R: FiniteRing, a: Element) -> frozenset:
    _check_same(R, a)
    return _elements(R, comm_codes(R, a.code))


def double_commutant(R: FiniteRing, a: Element) -> frozenset:
    _check_same(R, a)
    return _elements(R, comm2_codes(R, a.code))


def commutant_data(R: FiniteRing, a: Element) -> Commutant:
    return Commutant(a, commutant(R, a), double_commutant(R, a))


def structural_sets(R: FiniteRing) -> StructuralSets:
    radical_root_mask(R)  # runs the root-of-J = nilpotents cross-check
    return StructuralSets(
        units=units(R),
        nilpotents=nilpotents(R),
        radical=jacobson_radical(R),
        radical_root={Element(R, c): n for c, n in sorted(radical_root_witnesses(R).items())},
        idempotents=idempotents(R),
    )


class _Projection:
    def __init__(self, R, Q):
        self.source, self.target = R, Q

    def __call__(self, x: Element) -> Element:
        _check_same(self.source, x)
        return Element(self.target, self.target._backend.index[x.code])

    def code(self, x: int) -> int:
        return self.target._backend.index[x]


def quotient_by_radical(R: FiniteRing):
    """``(R/J(R), projection)``; cosets are named by their least member."""
    def compute():
        Q = quotient_ring(R, _codes(radical_mask(R)), name=f"{R.name}/J")
        if _codes(radical_mask(Q)) != (0,):
            raise TheoremViolation(f"J({Q.name}) is not zero")
        return Q, _Projection(R, Q)

    return R.cached("quotient", compute)
