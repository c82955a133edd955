"""Enumerable finite rings with exact arithmetic on canonical integer codes.

Every element of a ring ``R`` is identified with a code in ``range(len(R))``.
The encoding is mixed-radix over the construction tree:

* ``Z n``: the residue itself;
* ``M k (S)`` / ``T k (S)``: row-major entry codes as digits in base ``|S|``,
  the (0, 0) entry most significant (``T`` stores only entries on or above
  the diagonal);
* ``S x S'``: ``left * |S'| + right``.

Zero always has code 0.  When ``len(R)`` is at most the table threshold the
addition and multiplication tables are materialised as numpy arrays and all
scalar arithmetic becomes table lookups.
"""
from __future__ import annotations

import itertools
import random
import threading
from dataclasses import dataclass

import numpy as np

from . import expr as _expr
from ._literal import read_literal
from .errors import CardinalityError, ParseError, RingMismatchError

DEFAULT_TABLE_THRESHOLD = 1024


class _ZModBackend:
    def __init__(self, n):
        self.n = n
        self.cardinality = n
        self.one = 1 % n

    def add(self, x, y):
        return (x + y) % self.n

    def neg(self, x):
        return -x % self.n

    def mul(self, x, y):
        return x * y % self.n

    def tables(self):
        r = np.arange(self.n, dtype=np.int64)
        return (r[:, None] + r[None, :]) % self.n, (r[:, None] * r[None, :]) % self.n

    def to_text(self, code):
        return str(code)

    def from_value(self, value, text):
        if not isinstance(value, int):
            raise ParseError(f"expected an integer residue mod {self.n}", text, 0)
        if not 0 <= value < self.n:
            raise ParseError(f"value {value} out of range for Z{self.n}", text, 0)
        return value


class _MatrixBackend:
    def __init__(self, k, base, upper):
        self.k = k
        self.base = base
        self.upper = upper
        self.q = len(base)
        self.positions = [(i, j) for i in range(k) for j in range(k) if not upper or i <= j]
        self.slot = {pos: s for s, pos in enumerate(self.positions)}
        self.weights = [self.q ** (len(self.positions) - 1 - s) for s in range(len(self.positions))]
        self.cardinality = self.q ** len(self.positions)
        self.one = self.encode([base.one.code if i == j else 0 for (i, j) in self.positions])

    def encode(self, digits):
        code = 0
        for d in digits:
            code = code * self.q + d
        return code

    def decode(self, code):
        digits = [0] * len(self.positions)
        for s in range(len(self.positions) - 1, -1, -1):
            code, digits[s] = divmod(code, self.q)
        return digits

    def entry(self, digits, i, j):
        s = self.slot.get((i, j))
        return 0 if s is None else digits[s]

    def add(self, x, y):
        b = self.base
        return self.encode([b.add(u, v) for u, v in zip(self.decode(x), self.decode(y))])

    def neg(self, x):
        return self.encode([self.base.neg(u) for u in self.decode(x)])

    def mul(self, x, y):
        b = self.base
        dx, dy = self.decode(x), self.decode(y)
        out = []
        for i, j in self.positions:
            acc = 0
            for t in range(self.k):
                u, v = self.entry(dx, i, t), self.entry(dy, t, j)
                if u and v:
                    acc = b.add(acc, b.mul(u, v))
            out.append(acc)
        return self.encode(out)

    def tables(self):
        badd, bmul = self.base.add_table, self.base.mul_table
        codes = np.arange(self.cardinality, dtype=np.int64)
        digits = np.empty((self.cardinality, len(self.positions)), dtype=np.int64)
        rest = codes.copy()
        for s in range(len(self.positions) - 1, -1, -1):
            rest, digits[:, s] = np.divmod(rest, self.q)
        add = np.zeros((self.cardinality, self.cardinality), dtype=np.int64)
        mul = np.zeros_like(add)
        for s, (i, j) in enumerate(self.positions):
            add += self.weights[s] * badd[digits[:, None, s], digits[None, :, s]]
            acc = None
            for t in range(self.k):
                if (i, t) not in self.slot or (t, j) not in self.slot:
                    continue
                term = bmul[digits[:, None, self.slot[(i, t)]], digits[None, :, self.slot[(t, j)]]]
                acc = term if acc is None else badd[acc, term]
            mul += self.weights[s] * acc
        return add, mul

    def to_text(self, code):
        digits = self.decode(code)
        rows = []
        for i in range(self.k):
            row = ",".join(self.base.format(self.entry(digits, i, j)) for j in range(self.k))
            rows.append(f"[{row}]")
        return f"[{','.join(rows)}]"

    def from_value(self, value, text):
        if not (isinstance(value, list) and len(value) == self.k
                and all(isinstance(r, list) and len(r) == self.k for r in value)):
            raise ParseError(f"expected a {self.k}x{self.k} matrix literal", text, 0)
        digits = []
        for i in range(self.k):
            for j in range(self.k):
                code = self.base._backend.from_value(value[i][j], text)
                if (i, j) in self.slot:
                    digits.append(code)
                elif code != 0:
                    raise ParseError(f"entry ({i},{j}) below the diagonal must be zero", text, 0)
        return self.encode(digits)


class _ProductBackend:
    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.q = len(right)
        self.cardinality = len(left) * len(right)
        self.one = left.one.code * self.q + right.one.code

    def add(self, x, y):
        (a, b), (c, d) = divmod(x, self.q), divmod(y, self.q)
        return self.left.add(a, c) * self.q + self.right.add(b, d)

    def neg(self, x):
        a, b = divmod(x, self.q)
        return self.left.neg(a) * self.q + self.right.neg(b)

    def mul(self, x, y):
        (a, b), (c, d) = divmod(x, self.q), divmod(y, self.q)
        return self.left.mul(a, c) * self.q + self.right.mul(b, d)

    def tables(self):
        codes = np.arange(self.cardinality, dtype=np.int64)
        lc, rc = np.divmod(codes, self.q)
        tabs = []
        for lt, rt in ((self.left.add_table, self.right.add_table),
                       (self.left.mul_table, self.right.mul_table)):
            tabs.append(lt[lc[:, None], lc[None, :]] * self.q + rt[rc[:, None], rc[None, :]])
        return tuple(tabs)

    def to_text(self, code):
        a, b = divmod(code, self.q)
        return f"({self.left.format(a)},{self.right.format(b)})"

    def from_value(self, value, text):
        if not isinstance(value, tuple):
            raise ParseError("expected a pair literal (x,y)", text, 0)
        return (self.left._backend.from_value(value[0], text) * self.q
                + self.right._backend.from_value(value[1], text))


class _QuotientBackend:
    def __init__(self, parent, reps, index):
        self.parent = parent
        self.reps = reps
        self.index = index
        self.cardinality = len(reps)
        self.one = index[parent.one.code]

    def add(self, x, y):
        return self.index[self.parent.add(self.reps[x], self.reps[y])]

    def neg(self, x):
        return self.index[self.parent.neg(self.reps[x])]

    def mul(self, x, y):
        return self.index[self.parent.mul(self.reps[x], self.reps[y])]

    def tables(self):
        p = self.parent
        if p.add_table is None:
            r = range(self.cardinality)
            return (np.array([[self.add(x, y) for y in r] for x in r], dtype=np.int64),
                    np.array([[self.mul(x, y) for y in r] for x in r], dtype=np.int64))
        reps = np.asarray(self.reps, dtype=np.int64)
        idx = np.asarray(self.index, dtype=np.int64)
        sub = np.ix_(reps, reps)
        return idx[p.add_table[sub]], idx[p.mul_table[sub]]

    def to_text(self, code):
        return self.parent.format(self.reps[code])

    def from_value(self, value, text):
        return self.index[self.parent._backend.from_value(value, text)]


class Element:
    """A ring element: the owning ring plus its canonical code."""

    __slots__ = ("ring", "code")

    def __init__(self, ring: "FiniteRing", code: int):
        self.ring = ring
        self.code = int(code)

    def _other(self, other):
        if isinstance(other, Element):
            if other.ring is not self.ring:
                raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.code
        if isinstance(other, int):
            return self.ring.times(other, self.ring.one.code)
        return NotImplemented

    def _wrap(self, code):
        return Element(self.ring, code)

    def __add__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else self._wrap(self.ring.add(self.code, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else self._wrap(self.ring.sub(self.code, y))

    def __rsub__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else self._wrap(self.ring.sub(y, self.code))

    def __mul__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else self._wrap(self.ring.mul(self.code, y))

    def __rmul__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else self._wrap(self.ring.mul(y, self.code))

    def __neg__(self):
        return self._wrap(self.ring.neg(self.code))

    def __pow__(self, n):
        return self._wrap(self.ring.power(self.code, n))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring is other.ring and self.code == other.code
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.code))

    def __lt__(self, other):
        return self.code < self._other(other)

    def __repr__(self):
        return f"Element({self.ring.name}, {self.ring.format(self.code)})"

    def __str__(self):
        return self.ring.format(self.code)


@dataclass(frozen=True)
class PowerOrbit:
    """Powers of ``base`` eventually cycle: ``a**index == a**(index + period)``.

    ``orbit`` lists ``a**1, ..., a**(index + period - 1)``, all distinct.
    """

    base: Element
    index: int
    period: int
    orbit: tuple

    @property
    def bound(self) -> int:
        return self.index + self.period


class FiniteRing:
    """An immutable finite ring with cached Cayley tables and structural data."""

    def __init__(self, backend, descriptor=None, name=None,
                 table_threshold=DEFAULT_TABLE_THRESHOLD):
        self._backend = backend
        self.descriptor = descriptor
        self.name = name if name is not None else str(descriptor)
        self.cardinality = backend.cardinality
        self.table_threshold = table_threshold
        self._cache = {}
        self._lock = threading.RLock()
        self.add_table = self.mul_table = self.neg_table = None
        if self.cardinality <= table_threshold:
            add, mul = backend.tables()
            self.add_table, self.mul_table = add, mul
            self.neg_table = np.argmin(add, axis=1)  # zero has code 0
            self._add_rows = add.tolist()
            self._mul_rows = mul.tolist()
            self._neg_list = self.neg_table.tolist()
        self.zero = Element(self, 0)
        self.one = Element(self, backend.one)

    def __len__(self):
        return self.cardinality

    def __repr__(self):
        return f"FiniteRing({self.name})"

    def __str__(self):
        return self.name

    @property
    def has_tables(self) -> bool:
        return self.add_table is not None

    def cached(self, key, factory):
        """Return ``self._cache[key]``, computing it at most once (thread-safe)."""
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]

    # code-level arithmetic
    def add(self, x: int, y: int) -> int:
        if self.add_table is not None:
            return self._add_rows[x][y]
        return self._backend.add(x, y)

    def mul(self, x: int, y: int) -> int:
        if self.mul_table is not None:
            return self._mul_rows[x][y]
        return self._backend.mul(x, y)

    def neg(self, x: int) -> int:
        if self.neg_table is not None:
            return self._neg_list[x]
        return self._backend.neg(x)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def power(self, x: int, n: int) -> int:
        if n < 0:
            raise ValueError("negative exponent")
        result, base = self.one.code, x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def times(self, k: int, x: int) -> int:
        """The integer multiple ``k * x`` (repeated addition)."""
        if k < 0:
            return self.neg(self.times(-k, x))
        result, base = 0, x
        while k:
            if k & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            k >>= 1
        return result

    # elements
    def element(self, code: int) -> Element:
        if not 0 <= code < self.cardinality:
            raise ValueError(f"code {code} out of range for {self.name}")
        return Element(self, code)

    def elements(self):
        return [Element(self, c) for c in range(self.cardinality)]

    def __iter__(self):
        return iter(self.elements())

    def format(self, code: int) -> str:
        return self._backend.to_text(code)

    def parse(self, text: str) -> Element:
        return Element(self, self._backend.from_value(read_literal(text), text))

    def coerce(self, x) -> int:
        """Accept an Element of this ring, a code, or a literal string; return the code."""
        if isinstance(x, Element):
            if x.ring is not self:
                raise RingMismatchError(f"element of {x.ring} used in {self}")
            return x.code
        if isinstance(x, str):
            return self.parse(x).code
        return self.element(int(x)).code

    def orbit_codes(self, a: int):
        """``(index, period, (a^1, ..., a^(index+period-1)))`` on codes, cached."""
        def compute():
            seen = {}
            orbit = []
            cur, e = a, 1
            while cur not in seen:
                seen[cur] = e
                orbit.append(cur)
                cur = self.mul(cur, a)
                e += 1
            k = seen[cur]
            return k, e - k, tuple(orbit)

        return self.cached(("orbit", a), compute)


def build_ring(d, table_threshold=DEFAULT_TABLE_THRESHOLD, cap=_expr.DEFAULT_CAP,
               verify=True) -> FiniteRing:
    """Construct the ring described by ``d`` (a descriptor or expression text).

    Rings are immutable, so equal descriptors share one instance (and its
    caches) per table threshold.
    """
    if isinstance(d, str):
        d = _expr.parse_ring_expr(d, cap=cap)
    if cap is not None and d.cardinality > cap:
        raise CardinalityError(d.cardinality, cap)
    key = (d, table_threshold)
    with _REGISTRY_LOCK:
        ring = _REGISTRY.get(key)
        if ring is None:
            ring = _REGISTRY[key] = _construct(d, table_threshold)
    if verify and not ring._cache.get("axioms_checked"):
        failures = check_ring_axioms(ring, exhaustive_limit=64, samples=2000)
        if failures:
            raise AssertionError(f"{ring} violates ring axioms: {failures[:3]}")
        ring._cache["axioms_checked"] = True
    return ring


_REGISTRY = {}
_REGISTRY_LOCK = threading.RLock()


def _construct(d, table_threshold):
    if isinstance(d, _expr.ZMod):
        backend = _ZModBackend(d.n)
    elif isinstance(d, (_expr.Matrix, _expr.UpperTri)):
        base = build_ring(d.base, table_threshold, cap=None, verify=False)
        backend = _MatrixBackend(d.k, base, isinstance(d, _expr.UpperTri))
    elif isinstance(d, _expr.Product):
        backend = _ProductBackend(build_ring(d.left, table_threshold, cap=None, verify=False),
                                  build_ring(d.right, table_threshold, cap=None, verify=False))
    else:
        raise TypeError(f"not a ring descriptor: {d!r}")
    return FiniteRing(backend, d, table_threshold=table_threshold)


def quotient_ring(parent: FiniteRing, ideal_codes, name=None) -> FiniteRing:
    """The quotient of ``parent`` by an ideal given as a collection of codes.

    Cosets are represented by their smallest member code; quotient codes
    number those representatives in increasing order.
    """
    ideal = sorted(set(ideal_codes))
    rep_of = [None] * len(parent)
    for x in range(len(parent)):
        if rep_of[x] is None:
            coset = [parent.add(x, j) for j in ideal]
            r = min(coset)
            for y in coset:
                rep_of[y] = r
    reps = sorted(set(rep_of))
    pos = {r: i for i, r in enumerate(reps)}
    index = [pos[r] for r in rep_of]
    backend = _QuotientBackend(parent, reps, index)
    return FiniteRing(backend, None, name or f"{parent.name}/J",
                      table_threshold=max(parent.table_threshold, 0))


def check_ring_axioms(R: FiniteRing, exhaustive_limit=512, samples=10_000, seed=0):
    """Return a list of violated axiom descriptions (empty when all hold).

    Exhaustive over all triples when ``len(R) <= exhaustive_limit``, otherwise
    over ``samples`` seeded random triples.
    """
    failures = []
    N = len(R)
    one = R.one.code
    for x in range(N):
        if R.mul(one, x) != x or R.mul(x, one) != x:
            failures.append(f"identity fails at {R.format(x)}")
        if R.add(x, R.neg(x)) != 0:
            failures.append(f"additive inverse fails at {R.format(x)}")
        if len(failures) > 10:
            return failures
    if N <= exhaustive_limit and R.has_tables:
        A, M = R.add_table, R.mul_table
        for x in range(N):
            ax, mx, mcx = A[x], M[x], M[:, x]
            checks = {
                "(x+y)+z = x+(y+z)": np.array_equal(A[ax, :], ax[A]),
                "(xy)z = x(yz)": np.array_equal(M[mx, :], mx[M]),
                "x(y+z) = xy+xz": np.array_equal(mx[A], A[mx[:, None], mx[None, :]]),
                "(y+z)x = yx+zx": np.array_equal(mcx[A], A[mcx[:, None], mcx[None, :]]),
            }
            failures.extend(f"{name} fails for x={R.format(x)}" for name, ok in checks.items() if not ok)
        return failures
    if N <= exhaustive_limit:
        triples = itertools.product(range(N), repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(N), rng.randrange(N), rng.randrange(N)) for _ in range(samples))
    add, mul = R.add, R.mul
    for x, y, z in triples:
        if add(add(x, y), z) != add(x, add(y, z)):
            failures.append(f"(x+y)+z = x+(y+z) fails at {(x, y, z)}")
        if mul(mul(x, y), z) != mul(x, mul(y, z)):
            failures.append(f"(xy)z = x(yz) fails at {(x, y, z)}")
        if mul(x, add(y, z)) != add(mul(x, y), mul(x, z)):
            failures.append(f"x(y+z) = xy+xz fails at {(x, y, z)}")
        if mul(add(y, z), x) != add(mul(y, x), mul(z, x)):
            failures.append(f"(y+z)x = yx+zx fails at {(x, y, z)}")
        if len(failures) > 10:
            break
    return failures


def _check_same(R, *xs):
    for x in xs:
        if not isinstance(x, Element):
            raise TypeError(f"expected an Element, got {type(x).__name__}")
        if x.ring is not R:
            raise RingMismatchError(f"element of {x.ring} used in {R}")


def ring_arith(R: FiniteRing, op: str, x: Element, y: Element | None = None) -> Element:
    """Apply ``op`` in {"add", "neg", "mul", "sub"} to elements of ``R``."""
    if op == "neg":
        _check_same(R, x)
        return Element(R, R.neg(x.code))
    _check_same(R, x, y)
    fn = {"add": R.add, "mul": R.mul, "sub": R.sub}.get(op)
    if fn is None:
        raise ValueError(f"unknown operation {op!r}")
    return Element(R, fn(x.code, y.code))


def power(R: FiniteRing, a: Element, n: int) -> Element:
    _check_same(R, a)
    return Element(R, R.power(a.code, n))


def power_orbit(R: FiniteRing, a: Element) -> PowerOrbit:
    _check_same(R, a)
    k, l, orbit = R.orbit_codes(a.code)
    return PowerOrbit(a, k, l, tuple(Element(R, c) for c in orbit))


def parse_element(R: FiniteRing, text: str) -> Element:
    return R.parse(text)


def format_element(R: FiniteRing, e: Element) -> str:
    _check_same(R, e)
    return R.format(e.code)
