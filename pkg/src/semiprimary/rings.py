"""Finite commutative rings with identity, stored as dense operation tables.

Every ring encodes its elements as ``0 .. order-1`` with code 0 the additive
identity. Structural constructors (``Z_n``, products, truncated polynomial
rings) enumerate elements in :func:`itertools.product` order of their
component tuples, so codes sort the same way the tuples do.
"""

from __future__ import annotations

import hashlib
import itertools
from functools import cached_property

import numpy as np

from .errors import InvalidArity, InvalidOrder, InvalidRing, RingMismatch

HARD_CAP = 4096
RECOMMENDED_CAP = 64


def _frozen(arr):
    arr = np.ascontiguousarray(arr, dtype=np.int32)
    arr.flags.writeable = False
    return arr


class Ring:
    """A finite commutative ring with ``1 != 0``.

    ``kind`` is one of ``"zn"``, ``"product"``, ``"trunc"``, ``"quotient"``,
    ``"localization"`` or ``"table"``; ``params`` carries the constructor
    arguments (``n``, ``k``, base ring, ideal, ...). ``spec`` is the ring-spec
    DSL text that rebuilds the ring, or ``None`` for raw table rings.
    """

    def __init__(self, add, mul, names, one, *, kind="table", params=None,
                 spec=None, factors=(), verify=True):
        add = np.asarray(add)
        mul = np.asarray(mul)
        n = add.shape[0]
        if n < 2:
            raise InvalidOrder("a ring with 1 != 0 has at least two elements")
        if n > HARD_CAP:
            raise InvalidOrder(f"order {n} exceeds the hard cap {HARD_CAP}")
        if add.shape != (n, n) or mul.shape != (n, n):
            raise InvalidRing("operation tables must be square and of equal size")
        if len(names) != n:
            raise InvalidRing("need exactly one display name per element")
        self.order = n
        self.add_table = _frozen(add)
        self.mul_table = _frozen(mul)
        self.names = tuple(str(s) for s in names)
        self.one = int(one)
        self.zero = 0
        self.kind = kind
        self.params = dict(params or {})
        self.spec = spec
        self.factors = tuple(factors)
        if verify:
            _verify_axioms(self)
        neg = np.argmax(self.add_table == 0, axis=1)
        self.neg_table = _frozen(neg)
        self._index = {s: i for i, s in enumerate(self.names)}
        digest = hashlib.sha1()
        digest.update(self.add_table.tobytes())
        digest.update(self.mul_table.tobytes())
        digest.update("\x00".join(self.names).encode())
        self._key = (n, self.one, digest.hexdigest())

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Ring) and (self is other or self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Ring({self.spec or 'table'}, order={self.order})"

    def __len__(self):
        return self.order

    def check_same(self, other):
        if not (self is other or self == other):
            raise RingMismatch(f"{self!r} and {other!r} are different rings")

    # -- elements -----------------------------------------------------------

    def element(self, value):
        """Return the code of ``value``.

        Accepts an integer code, a tuple of factor elements (products), a
        coefficient tuple (truncated polynomial rings) or display/DSL text.
        """
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if not 0 <= value < self.order:
                raise ValueError(f"element code {value} out of range for {self!r}")
            return value
        if isinstance(value, tuple):
            if self.kind == "product":
                if len(value) != len(self.factors):
                    raise ValueError("tuple length does not match factor count")
                return sum(f.element(v) * stride
                           for f, stride, v in zip(self.factors, self._strides, value))
            if self.kind == "trunc":
                n, k = self.params["n"], self.params["k"]
                if len(value) > k:
                    raise ValueError("too many coefficients")
                coeffs = [int(c) % n for c in value] + [0] * (k - len(value))
                return _mixed_radix(coeffs, [n] * k)
        if isinstance(value, str):
            if value in self._index:
                return self._index[value]
            from .dsl import parse_element
            return parse_element(self, value)
        raise TypeError(f"cannot interpret {value!r} as an element of {self!r}")

    def name(self, code):
        return self.names[code]

    @cached_property
    def _strides(self):
        sizes = [f.order for f in self.factors]
        out = []
        for i in range(len(sizes)):
            out.append(int(np.prod(sizes[i + 1:], dtype=np.int64)))
        return tuple(out)

    def components(self, code):
        """Factor codes of a product-ring element."""
        if self.kind != "product":
            raise RingMismatch(f"{self!r} is not a product ring")
        return tuple((code // s) % f.order for f, s in zip(self.factors, self._strides))

    # -- arithmetic ---------------------------------------------------------

    def plus(self, a, b):
        return int(self.add_table[self.element(a), self.element(b)])

    def times(self, a, b):
        return int(self.mul_table[self.element(a), self.element(b)])

    def negate(self, a):
        return int(self.neg_table[self.element(a)])

    def minus(self, a, b):
        return int(self.add_table[self.element(a), self.neg_table[self.element(b)]])

    def power(self, a, e):
        if e < 0:
            raise ValueError("negative exponent")
        a = self.element(a)
        if e == 0:
            return self.one
        result = a
        for _ in range(e - 1):
            result = int(self.mul_table[result, a])
        return result

    # -- cached structure ---------------------------------------------------

    @cached_property
    def power_matrix(self):
        """``P[x, y]`` is true when ``y = x**m`` for some ``m >= 1``.

        Power sequences enter a cycle within ``order`` steps, so the walk
        stops at the first repeat.
        """
        n = self.order
        P = np.zeros((n, n), dtype=bool)
        mul = self.mul_table
        for x in range(n):
            p = x
            while not P[x, p]:
                P[x, p] = True
                p = int(mul[p, x])
        P.flags.writeable = False
        return P

    @cached_property
    def unit_mask(self):
        m = (self.mul_table == self.one).any(axis=1)
        m.flags.writeable = False
        return m

    @cached_property
    def zerodivisor_mask(self):
        m = (self.mul_table[:, 1:] == 0).any(axis=1)
        m.flags.writeable = False
        return m

    @cached_property
    def nilpotent_mask(self):
        m = self.power_matrix[:, 0].copy()
        m.flags.writeable = False
        return m

    @cached_property
    def is_boolean(self):
        return bool((np.diag(self.mul_table) == np.arange(self.order)).all())

    @cached_property
    def ideals(self):
        """All ideals of the ring (an :class:`~semiprimary.ideals.IdealSet`)."""
        from .ideals import enumerate_ideals
        return enumerate_ideals(self)


def _mixed_radix(digits, radices):
    code = 0
    for d, r in zip(digits, radices):
        code = code * r + d
    return code


def _verify_axioms(R):
    n = R.order
    A, M = R.add_table, R.mul_table
    if A.min() < 0 or A.max() >= n or M.min() < 0 or M.max() >= n:
        raise InvalidRing("table entries out of range")
    idx = np.arange(n)
    if not 0 <= R.one < n or R.one == 0:
        raise InvalidRing("1 must be a nonzero element")
    if not (A[0] == idx).all():
        raise InvalidRing("code 0 is not an additive identity")
    if not (A == A.T).all() or not (M == M.T).all():
        raise InvalidRing("operations are not commutative")
    if not ((A == 0).any(axis=1)).all():
        raise InvalidRing("some element has no additive inverse")
    if not (M[R.one] == idx).all():
        raise InvalidRing("the declared one is not a multiplicative identity")
    for x in range(n):
        if not (A[A[x]] == A[x][A]).all():
            raise InvalidRing(f"addition is not associative at x={x}")
        if not (M[M[x]] == M[x][M]).all():
            raise InvalidRing(f"multiplication is not associative at x={x}")
        # x(y+z) = xy + xz
        if not (M[x][A] == A[np.ix_(M[x], M[x])]).all():
            raise InvalidRing(f"distributivity fails at x={x}")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def make_zn(n):
    """The ring of integers modulo ``n``."""
    n = int(n)
    if n < 2:
        raise InvalidOrder(f"Z_n needs n >= 2, got {n}")
    if n > HARD_CAP:
        raise InvalidOrder(f"order {n} exceeds the hard cap {HARD_CAP}")
    r = np.arange(n)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    return Ring(add, mul, [str(i) for i in range(n)], 1 % n, kind="zn",
                params={"n": n}, spec=f"Z({n})", verify=False)


def make_product(factors):
    """Direct product with componentwise operations and mixed-radix codes."""
    factors = list(factors)
    if len(factors) < 2:
        raise InvalidArity("a product needs at least two factors")
    sizes = [f.order for f in factors]
    order = int(np.prod(sizes, dtype=np.int64))
    if order > HARD_CAP:
        raise InvalidOrder(f"order {order} exceeds the hard cap {HARD_CAP}")
    comps = np.array(list(itertools.product(*[range(s) for s in sizes])), dtype=np.int64)
    strides = [int(np.prod(sizes[i + 1:], dtype=np.int64)) for i in range(len(sizes))]
    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    for i, f in enumerate(factors):
        c = comps[:, i]
        add += f.add_table[c[:, None], c[None, :]] * strides[i]
        mul += f.mul_table[c[:, None], c[None, :]] * strides[i]
    names = ["(" + ",".join(f.names[c] for f, c in zip(factors, row)) + ")" for row in comps]
    one = sum(f.one * s for f, s in zip(factors, strides))
    spec = None
    if all(f.spec is not None for f in factors):
        spec = "prod(" + ",".join(f.spec for f in factors) + ")"
    return Ring(add, mul, names, one, kind="product", params={}, spec=spec,
                factors=factors, verify=False)


def make_boolean(k):
    """The Boolean ring ``Z_2^k``; ``k = 1`` gives ``Z_2`` itself."""
    k = int(k)
    if k < 1:
        raise InvalidArity("bool(k) needs k >= 1")
    if k == 1:
        R = make_zn(2)
    else:
        R = make_product([make_zn(2) for _ in range(k)])
    R.spec = f"bool({k})"
    return R


def _poly_name(coeffs, var):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def make_trunc_poly(n, k, var="X"):
    """``Z_n[X]/(X^k)``; elements are coefficient tuples ``(c0, ..., c_{k-1})``."""
    n, k = int(n), int(k)
    if n < 2:
        raise InvalidOrder(f"trunc needs n >= 2, got {n}")
    if k < 1:
        raise InvalidArity(f"trunc needs k >= 1, got {k}")
    order = n ** k
    if order > HARD_CAP:
        raise InvalidOrder(f"order {order} exceeds the hard cap {HARD_CAP}")
    C = np.array(list(itertools.product(range(n), repeat=k)), dtype=np.int64)
    weights = np.array([n ** (k - 1 - i) for i in range(k)], dtype=np.int64)
    add = ((C[:, None, :] + C[None, :, :]) % n) @ weights
    prod = np.zeros((order, order, k), dtype=np.int64)
    for i in range(k):
        for j in range(k - i):
            prod[:, :, i + j] += C[:, None, i] * C[None, :, j]
    mul = (prod % n) @ weights
    names = [_poly_name(row, var) for row in C]
    one = int(weights[0])
    return Ring(add, mul, names, one, kind="trunc", params={"n": n, "k": k, "var": var},
                spec=f"trunc(Z({n}),{k})", verify=False)


def make_table_ring(add, mul, zero=0, one=1, names=None):
    """Ring from user tables; the ring axioms are checked exhaustively.

    If ``zero`` is not index 0 the elements are relabelled (``zero`` and 0
    swap places) so that code 0 is the additive identity.
    """
    add = np.array(add, dtype=np.int64)
    mul = np.array(mul, dtype=np.int64)
    n = add.shape[0]
    names = list(names) if names is not None else [str(i) for i in range(n)]
    if zero != 0:
        perm = np.arange(n)
        perm[0], perm[zero] = zero, 0
        inv = np.argsort(perm)
        add = inv[add[np.ix_(perm, perm)]]
        mul = inv[mul[np.ix_(perm, perm)]]
        names = [names[p] for p in perm]
        one = int(inv[one])
    return Ring(add, mul, names, one, kind="table", verify=True)


# ---------------------------------------------------------------------------
# element sets
# ---------------------------------------------------------------------------

def units(R):
    """Codes of the units of ``R``."""
    return {int(x) for x in np.flatnonzero(R.unit_mask)}


def zerodivisors(R):
    """Codes ``x`` with ``xy = 0`` for some ``y != 0`` (so 0 is included)."""
    return {int(x) for x in np.flatnonzero(R.zerodivisor_mask)}


def nilradical(R):
    """The ideal of nilpotent elements."""
    from .ideals import Ideal
    return Ideal.from_bool(R, R.nilpotent_mask)
