"""Exact rational matrices: the non-enumerable backend.

Over ``M_k(Q)`` the Jacobson radical is zero, so the radical-root set is
exactly the nilpotent matrices and the generalized Zhou predicate reduces
to "A - A^(n+1) is nilpotent for some n".  That happens iff every nonzero
eigenvalue is a root of unity; a rational k x k matrix only carries roots of
unity of order m with phi(m) <= k, which bounds the search for n.

All arithmetic is exact (``fractions.Fraction``); there are no tolerances.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from ._literal import read_literal
from .errors import ParseError, SingularMatrixError


class Poly:
    """Dense polynomial over Q, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    def __neg__(self):
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(x * other for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        while len(r) - 1 >= other.degree and any(r):
            shift = len(r) - 1 - other.degree
            factor = r[-1] / other.lead()
            q[shift] = factor
            for i, y in enumerate(other.coeffs):
                r[i + shift] -= factor * y
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return Poly(q), Poly(r)

    def monic(self):
        return self * (1 / self.lead())

    def __call__(self, A: "RationalMatrix") -> "RationalMatrix":
        result = RationalMatrix.zero(A.k)
        for c in reversed(self.coeffs):
            result = result * A + RationalMatrix.scalar(A.k, c)
        return result

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = str(abs(c)) if abs(c) != 1 or i == 0 else ""
            sign = "-" if c < 0 else "+"
            terms.append((sign, coef + ("*" if coef and mono else "") + mono))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {t}" for s, t in terms[1:])


def poly_gcdext(f: Poly, g: Poly):
    """``(d, u, v)`` with ``u*f + v*g = d`` and ``d`` monic (or zero)."""
    r0, r1 = f, g
    u0, u1 = Poly([1]), Poly()
    v0, v1 = Poly(), Poly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    s = 1 / r0.lead()
    return r0 * s, u0 * s, v0 * s


class RationalMatrix:
    """Immutable k x k matrix with ``Fraction`` entries."""

    __slots__ = ("k", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square and non-empty")
        self.k = len(rows)
        self.rows = rows

    @classmethod
    def identity(cls, k):
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @classmethod
    def zero(cls, k):
        return cls([[0] * k for _ in range(k)])

    @classmethod
    def scalar(cls, k, c):
        return cls([[c if i == j else 0 for j in range(k)] for i in range(k)])

    @classmethod
    def diag(cls, *values):
        k = len(values)
        return cls([[values[i] if i == j else 0 for j in range(k)] for i in range(k)])

    @classmethod
    def parse(cls, text: str) -> "RationalMatrix":
        value = read_literal(text)
        if not (isinstance(value, list) and value and all(isinstance(r, list) for r in value)):
            raise ParseError("expected a matrix literal [[...],...]", text, 0)
        if any(len(r) != len(value) for r in value):
            raise ParseError("matrix literal must be square", text, 0)
        if any(isinstance(x, (list, tuple)) for r in value for x in r):
            raise ParseError("matrix entries must be rationals p or p/q", text, 0)
        return cls(value)

    def __str__(self):
        def fmt(x):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return "[" + ",".join("[" + ",".join(fmt(x) for x in r) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"RationalMatrix({self})"

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def _check(self, other):
        if other.k != self.k:
            raise ValueError(f"dimension mismatch: {self.k} vs {other.k}")

    def __add__(self, other):
        self._check(other)
        return RationalMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return RationalMatrix([[-x for x in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalMatrix([[x * other for x in r] for r in self.rows])
        self._check(other)
        cols = list(zip(*other.rows))
        return RationalMatrix([[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols]
                               for r in self.rows])

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = RationalMatrix.identity(self.k), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def vec(self):
        return [x for r in self.rows for x in r]

    def inverse(self) -> "RationalMatrix":
        k = self.k
        aug = [list(r) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(self.rows)]
        for col in range(k):
            piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(k):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        inv = RationalMatrix([row[k:] for row in aug])
        if self * inv != RationalMatrix.identity(k):
            raise AssertionError("inverse check failed")
        return inv

    def is_invertible(self):
        try:
            self.inverse()
        except SingularMatrixError:
            return False
        return True


def mat_arith(op: str, A: RationalMatrix, B=None) -> RationalMatrix:
    """``op`` in {"add", "mul", "pow", "inverse"}; for "pow" ``B`` is the exponent."""
    if op == "add":
        return A + B
    if op == "mul":
        return A * B
    if op == "pow":
        return A ** int(B)
    if op == "inverse":
        return A.inverse()
    raise ValueError(f"unknown operation {op!r}")


def is_nilpotent_matrix(A: RationalMatrix):
    """Smallest m with A^m = 0, or None (m <= dimension when it exists)."""
    P = A
    for m in range(1, A.k + 1):
        if P.is_zero():
            return m
        P = P * A
    return None


def _solve_dependency(vectors, target):
    """Coefficients c with sum c_i vectors[i] = target, or None."""
    n, dim = len(vectors), len(target)
    rows = [[vectors[j][i] for j in range(n)] + [target[i]] for i in range(dim)]
    pivots, r = [], 0
    for col in range(n):
        piv = next((i for i in range(r, dim) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(rows[i][n] != 0 for i in range(r, dim)):
        return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = rows[i][n]
    return sol


def minimal_polynomial(A: RationalMatrix) -> Poly:
    """Monic least-degree annihilator, found by the first linear dependency
    among I, A, A^2, ... (flattened to vectors)."""
    powers = [RationalMatrix.identity(A.k).vec()]
    P = RationalMatrix.identity(A.k)
    for d in range(1, A.k + 1):
        P = P * A
        c = _solve_dependency(powers, P.vec())
        if c is not None:
            m = Poly([-x for x in c] + [1])
            if not m(A).is_zero():
                raise AssertionError("minimal polynomial does not annihilate")
            return m
        powers.append(P.vec())
    raise AssertionError("no annihilator up to the dimension")


def _totient(m):
    return sum(1 for i in range(1, m + 1) if math.gcd(i, m) == 1)


def period_bound(k: int) -> int:
    """lcm of all m with phi(m) <= k; every m with phi(m) <= k has m <= 2k^2."""
    if k < 1:
        raise ValueError("k must be positive")
    orders = [m for m in range(1, 2 * k * k + 3) if _totient(m) <= k]
    return reduce(math.lcm, orders, 1)


def _powers(A, top):
    out = [RationalMatrix.identity(A.k)]
    for _ in range(top):
        out.append(out[-1] * A)
    return out


def scan_gzhou_n(A: RationalMatrix, limit: int):
    """Smallest n in [1, limit] with A - A^(n+1) nilpotent (plain scan)."""
    P = A * A
    for n in range(1, limit + 1):
        if is_nilpotent_matrix(A - P) is not None:
            return n
        P = P * A
    return None


def decide_gzhou_matrix(A: RationalMatrix):
    """Smallest n with A - A^(n+1) nilpotent, or None; None is conclusive."""
    return scan_gzhou_n(A, period_bound(A.k))


def spectral_idempotent_at_zero(A: RationalMatrix) -> RationalMatrix:
    """Projector onto the generalized null space of A, as a polynomial in A.

    With m(t) = t^s g(t), g(0) != 0 and u t^s + v g = 1, this is v(A) g(A)
    = I - u(A) A^s.  It is idempotent, commutes with A, and A + e is
    invertible.
    """
    m = minimal_polynomial(A)
    s = next(i for i, c in enumerate(m.coeffs) if c != 0)
    g = Poly(m.coeffs[s:])
    d, u, v = poly_gcdext(Poly.monomial(s), g)
    if d != Poly([1]):
        raise AssertionError("t^s and its cofactor are not coprime")
    I = RationalMatrix.identity(A.k)
    e = I - u(A) * (A ** s)
    if e * e != e or e * A != A * e or not (A + e).is_invertible():
        raise AssertionError("spectral idempotent postconditions failed")
    return e


def drazin_matrix(A: RationalMatrix) -> RationalMatrix:
    """``(A + e)^-1 (I - e)`` with ``e`` the spectral idempotent at zero."""
    e = spectral_idempotent_at_zero(A)
    x = (A + e).inverse() * (RationalMatrix.identity(A.k) - e)
    if x * A * x != x or A * x != x * A or is_nilpotent_matrix(A - A * A * x) is None:
        raise AssertionError("Drazin conditions failed")
    return x


def gzhou_matrix(A: RationalMatrix):
    """``(inverse, n)`` for the generalized Zhou inverse of A, or None."""
    n = decide_gzhou_matrix(A)
    if n is None:
        return None
    x = drazin_matrix(A)
    if is_nilpotent_matrix(A ** n - A * x) is None:
        raise AssertionError("generalized Zhou residual is not nilpotent")
    return x, n


def drazin_index(A: RationalMatrix) -> int:
    """Smallest n >= 1 with A^n = A^(n+1) A^D."""
    x = drazin_matrix(A)
    P = A
    for n in range(1, A.k + 2):
        if P == P * A * x:
            return n
        P = P * A
    raise AssertionError("no Drazin index up to k + 1")


def certificate_checks(A: RationalMatrix, x: RationalMatrix, n: int) -> dict:
    """Replay the defining conditions of a matrix generalized Zhou certificate."""
    return {
        "xax=x": x * A * x == x,
        "ax=xa": A * x == x * A,
        "a^n-ax nilpotent": is_nilpotent_matrix(A ** n - A * x) is not None,
    }


def characterization_verdicts(A: RationalMatrix) -> dict:
    """Independent yes/no answers to the equivalent existence conditions."""
    bound = period_bound(A.k)
    core = RationalMatrix.identity(A.k) - spectral_idempotent_at_zero(A)
    powers = _powers(A, bound + 1)
    return {
        "certificate": gzhou_matrix(A) is not None,
        "idempotent": any(is_nilpotent_matrix(powers[n] - core) is not None
                          for n in range(1, bound + 1)),
        "a-a^(n+1)": decide_gzhou_matrix(A) is not None,
    }
