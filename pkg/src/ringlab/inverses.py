"""Drazin, p-Drazin, Zhou and generalized Zhou inverses in finite rings.

Two independent routes are provided:

* :func:`inverse_bruteforce` scans every candidate ``b`` against the
  defining predicate of the requested kind;
* :func:`gzhou_constructive` builds the inverse from the idempotent
  ``p = a^m`` sitting in the cycle of the power orbit of ``a``.

Both return an :class:`InverseCertificate` that :func:`verify_certificate`
replays with ring arithmetic alone.

All searches for an exponent ``n`` run over ``1 <= n <= index + period`` of
the power orbit of ``a`` and report the smallest hit.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb

from .errors import TheoremViolation, UniquenessViolation
from .ring import Element, FiniteRing, _check_same
from .structure import (
    comm2_codes,
    comm_codes,
    nilpotency_indices,
    nilpotent_mask,
    radical_mask,
    radical_root_mask,
    radical_root_witnesses,
    unit_inverse_code,
)


class InverseKind(enum.Enum):
    DRAZIN = "drazin"
    P_DRAZIN = "pdrazin"
    ZHOU = "zhou"
    G_ZHOU = "gzhou"

    @classmethod
    def parse(cls, text):
        return cls(text.lower().replace("-", "").replace("_", ""))


@dataclass(frozen=True)
class InverseCertificate:
    """A checkable witness that ``b`` is the ``kind`` inverse of ``a``.

    ``n`` is the residual exponent: the Drazin index for DRAZIN, the exponent
    in ``a^n - ab`` for ZHOU and G_ZHOU, and fixed at 1 for P_DRAZIN (whose
    residual is ``a - a^2 b``).  ``w`` is that residual and
    ``witness_exponents["w"]`` the exponent certifying its membership
    (nilpotency index, or smallest power in J).
    """

    kind: InverseKind
    a: Element
    b: Element
    n: int
    p: Element
    w: Element
    witness_exponents: dict = field(default_factory=dict)

    @property
    def e(self) -> Element:
        return self.a.ring.one - self.p

    def to_dict(self, checks=None) -> dict:
        if checks is None:
            checks = verify_certificate(self.a.ring, self).checks
        return {
            "kind": self.kind.value,
            "a": str(self.a),
            "b": str(self.b),
            "n": self.n,
            "p": str(self.p),
            "w": str(self.w),
            "witness_exponents": dict(self.witness_exponents),
            "checks": checks,
        }


@dataclass(frozen=True)
class Verification:
    ok: bool
    checks: dict

    @property
    def failed(self):
        return [name for name, passed in self.checks.items() if not passed]

    def __bool__(self):
        return self.ok


def _residual(R: FiniteRing, kind: InverseKind, a: int, b: int, n: int) -> int:
    if kind is InverseKind.P_DRAZIN:
        return R.sub(a, R.mul(R.mul(a, a), b))
    if kind is InverseKind.DRAZIN:
        an = R.power(a, n)
        return R.sub(an, R.mul(R.mul(an, a), b))
    return R.sub(R.power(a, n), R.mul(a, b))


def _residual_ok(R: FiniteRing, kind: InverseKind, w: int) -> bool:
    if kind is InverseKind.DRAZIN:
        return w == 0
    if kind is InverseKind.ZHOU:
        return bool(nilpotent_mask(R)[w])
    return bool(radical_root_mask(R)[w])


def _witness_exponent(R: FiniteRing, kind: InverseKind, w: int):
    if kind is InverseKind.DRAZIN:
        return 1 if w == 0 else None
    if kind is InverseKind.ZHOU:
        return nilpotency_indices(R).get(w)
    return radical_root_witnesses(R).get(w)


def search_bound(R: FiniteRing, a: int) -> int:
    k, l, _ = R.orbit_codes(a)
    return k + l


def _certificate(R, kind, a, b, n):
    w = _residual(R, kind, a, b, n)
    return InverseCertificate(
        kind=kind,
        a=Element(R, a),
        b=Element(R, b),
        n=n,
        p=Element(R, R.mul(a, b)),
        w=Element(R, w),
        witness_exponents={"w": _witness_exponent(R, kind, w)},
    )


def _smallest_n(R, kind, a, b, bound):
    if kind is InverseKind.P_DRAZIN:
        return 1 if _residual_ok(R, kind, _residual(R, kind, a, b, 1)) else None
    for n in range(1, bound + 1):
        if _residual_ok(R, kind, _residual(R, kind, a, b, n)):
            return n
    return None


def inverse_bruteforce(R: FiniteRing, a: Element, kind, bound=None):
    """Scan candidates for the ``kind`` inverse of ``a``; None if none exists.

    Candidates range over comm(a) for DRAZIN and comm^2(a) otherwise.  More
    than one solution raises :class:`UniquenessViolation`.
    """
    _check_same(R, a)
    kind = InverseKind(kind) if not isinstance(kind, InverseKind) else kind
    x = a.code
    bound = bound or search_bound(R, x)
    pool = comm_codes(R, x) if kind is InverseKind.DRAZIN else comm2_codes(R, x)
    found = []
    for b in sorted(pool):
        if R.mul(R.mul(b, x), b) != b or R.mul(x, b) != R.mul(b, x):
            continue
        n = _smallest_n(R, kind, x, b, bound)
        if n is not None:
            found.append((b, n))
    if len(found) > 1:
        raise UniquenessViolation(
            f"{len(found)} distinct {kind.value} inverses of {a} in {R}",
            {"ring": R.name, "a": str(a), "candidates": [R.format(b) for b, _ in found]},
        )
    if not found:
        return None
    return _certificate(R, kind, x, *found[0])


def cycle_idempotent(R: FiniteRing, a: int):
    """``(m, a^m)``: m is the least multiple of the period with m >= index."""
    k, l, _ = R.orbit_codes(a)
    m = l * -(-k // l)
    return m, R.power(a, m)


def gzhou_constructive(R: FiniteRing, a: Element) -> InverseCertificate:
    """Generalized Zhou inverse ``a^(n-1) (a^n + 1 - p)^-1 p`` with ``p = a^n``
    the idempotent in the cycle of ``a``'s powers."""
    _check_same(R, a)
    x = a.code
    n, p = cycle_idempotent(R, x)
    if R.mul(p, p) != p:
        raise TheoremViolation(f"cycle power of {a} is not idempotent")
    e = R.sub(R.one.code, p)
    u = R.add(R.power(x, n), e)
    core = R.mul(unit_inverse_code(R, u), p)
    b = R.mul(R.power(x, n - 1), core)
    cert = _certificate(R, InverseKind.G_ZHOU, x, b, n)
    check = verify_certificate(R, cert)
    if not check:
        raise TheoremViolation(f"constructed certificate for {a} fails: {check.failed}",
                               cert.to_dict(check.checks))
    return cert


def verify_certificate(R: FiniteRing, cert: InverseCertificate) -> Verification:
    """Replay every defining condition of ``cert``; see ``Verification.failed``."""
    a, b = cert.a.code, cert.b.code
    kind = cert.kind
    ab, ba = R.mul(a, b), R.mul(b, a)
    w = _residual(R, kind, a, b, cert.n)
    m = cert.witness_exponents.get("w")
    if kind is InverseKind.DRAZIN:
        witness_ok = w == 0
    elif m is None or m < 1:
        witness_ok = False
    elif kind is InverseKind.ZHOU:
        witness_ok = R.power(w, m) == 0
    else:
        witness_ok = bool(radical_mask(R)[R.power(w, m)])
    checks = {
        "bab=b": R.mul(ba, b) == b,
        "ab=ba": ab == ba,
        "b in comm(a)": b in comm_codes(R, a),
        "b in comm2(a)": b in comm2_codes(R, a),
        "p=ab": cert.p.code == ab,
        "p^2=p": R.mul(cert.p.code, cert.p.code) == cert.p.code,
        "n>=1": cert.n >= 1,
        "w=residual": cert.w.code == w,
        "residual in set": _residual_ok(R, kind, w),
        "witness exponent": witness_ok,
    }
    return Verification(all(checks.values()), checks)


def characterization_n(R: FiniteRing, a: Element, radical="sqrtJ", bound=None):
    """Smallest n with ``a - a^(n+1)`` in N(R) (``radical="N"``) or in the
    root set of J(R) (``radical="sqrtJ"``)."""
    _check_same(R, a)
    mask = nilpotent_mask(R) if radical == "N" else radical_root_mask(R)
    x = a.code
    bound = bound or search_bound(R, x)
    for n in range(1, bound + 1):
        if mask[R.sub(x, R.power(x, n + 1))]:
            return n
    return None


def binomial_seed(R: FiniteRing, a: Element, literal=False):
    """``(e, n, m)`` where ``e = sum_{i<=m} C(2m, i) (a^n)^(2m-i) t^i``.

    ``n`` is the characterization exponent, ``m`` the smallest power putting
    ``a - a^(n+1)`` in J(R), and ``t = 1 - a^n`` (or ``a - a^n`` when
    ``literal``).
    """
    n = characterization_n(R, a, "sqrtJ")
    if n is None:
        raise ValueError(f"{a} has no exponent n with a - a^(n+1) in the radical root set")
    x = a.code
    d = R.sub(x, R.power(x, n + 1))
    m = radical_root_witnesses(R)[d]
    an = R.power(x, n)
    t = R.sub(x, an) if literal else R.sub(R.one.code, an)
    e = 0
    for i in range(m + 1):
        term = R.mul(R.power(an, 2 * m - i), R.power(t, i))
        e = R.add(e, R.times(comb(2 * m, i), term))
    return Element(R, e), n, m


def seed_is_idempotent_mod_radical(R: FiniteRing, e: Element) -> bool:
    return bool(radical_mask(R)[R.sub(R.mul(e.code, e.code), e.code)])


def lift_idempotent(R: FiniteRing, e: Element) -> Element:
    """Lift ``e`` (idempotent modulo J) to a true idempotent via e <- 3e^2 - 2e^3."""
    x = e.code
    for _ in range(2 * len(R).bit_length() + 4):
        x2 = R.mul(x, x)
        if x2 == x:
            break
        x = R.sub(R.times(3, x2), R.times(2, R.mul(x2, x)))
    else:
        raise TheoremViolation(f"idempotent lifting of {e} did not converge")
    if not radical_mask(R)[R.sub(x, e.code)]:
        raise TheoremViolation(f"lifted idempotent differs from {e} outside J")
    return Element(R, x)


def lift_idempotent_binomial(R: FiniteRing, a: Element) -> Element:
    """The idempotent attached to ``a`` via the binomial seed and nil lifting."""
    e, _, _ = binomial_seed(R, a)
    if not seed_is_idempotent_mod_radical(R, e):
        raise TheoremViolation(f"binomial seed for {a} is not idempotent modulo J")
    return lift_idempotent(R, e)


def inverse_table(R: FiniteRing, kind) -> list:
    """Brute-force certificates for every element, in code order (cached)."""
    kind = InverseKind(kind) if not isinstance(kind, InverseKind) else kind
    return R.cached(("inverse_table", kind),
                    lambda: [inverse_bruteforce(R, Element(R, x), kind) for x in range(len(R))])


def inverse_codes(R: FiniteRing, kind) -> list:
    """Inverse codes per element (None where no inverse exists)."""
    kind = InverseKind(kind) if not isinstance(kind, InverseKind) else kind
    return R.cached(("inverse_codes", kind),
                    lambda: [None if c is None else c.b.code for c in inverse_table(R, kind)])
