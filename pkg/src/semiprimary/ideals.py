"""Ideals of finite rings as membership bitsets, and the ideal lattice."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import CapExceeded, InternalError, NotProper
from .rings import HARD_CAP


def _mask_from_bool(arr):
    packed = np.packbits(np.asarray(arr, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _bool_from_mask(mask, n):
    raw = mask.to_bytes((n + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits[:n].astype(bool)


class Ideal:
    """An ideal of a finite ring.

    Identity is the membership bitset ``mask`` (bit ``x`` set iff element
    code ``x`` is a member); generators are kept only for display.
    """

    __slots__ = ("ring", "mask", "_gens", "__dict__")

    def __init__(self, ring, mask, gens=None):
        self.ring = ring
        self.mask = int(mask)
        self._gens = tuple(gens) if gens is not None else None

    @classmethod
    def from_bool(cls, ring, arr, gens=None):
        return cls(ring, _mask_from_bool(arr), gens)

    # -- set behaviour ------------------------------------------------------

    @cached_property
    def array(self):
        """Boolean membership vector indexed by element code."""
        a = _bool_from_mask(self.mask, self.ring.order)
        a.flags.writeable = False
        return a

    @cached_property
    def codes(self):
        return tuple(int(x) for x in np.flatnonzero(self.array))

    @cached_property
    def product_in(self):
        """``product_in[a, b]`` is true when ``a*b`` lies in the ideal."""
        m = self.array[self.ring.mul_table]
        m.flags.writeable = False
        return m

    def __contains__(self, x):
        return bool(self.mask >> self.ring.element(x) & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.codes)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.mask == other.mask
                and self.ring == other.ring)

    def __hash__(self):
        return hash((self.ring, self.mask))

    def __le__(self, other):
        self.ring.check_same(other.ring)
        return self.mask & ~other.mask == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __repr__(self):
        return f"Ideal({self.to_spec()} in {self.ring.spec or 'table'})"

    @property
    def is_zero(self):
        return self.mask == 1

    def is_proper(self):
        return not self.mask >> self.ring.one & 1

    def equals(self, other):
        self.ring.check_same(other.ring)
        return self.mask == other.mask

    # -- display ------------------------------------------------------------

    @cached_property
    def generators(self):
        """Given generators, else a greedy pick (largest gain, then smallest code)."""
        if self._gens is not None:
            return self._gens
        gens = []
        current = zero_ideal(self.ring)
        while current.mask != self.mask:
            best = None
            for x in self.codes:
                if current.mask >> x & 1:
                    continue
                gain = len(ideal_sum(current, generate(self.ring, [x])))
                if best is None or gain > best[0]:
                    best = (gain, x)
            gens.append(best[1])
            current = generate(self.ring, gens)
        return tuple(gens)

    def to_spec(self):
        return "gen(" + ",".join(self.ring.names[g] for g in self.generators) + ")"

    @cached_property
    def rad(self):
        """Cached :func:`radical` of this ideal."""
        return radical(self)

    @cached_property
    def square(self):
        return ideal_product(self, self)

    def member_names(self):
        return [self.ring.names[x] for x in self.codes]


def _additive_closure(R, arr):
    add = R.add_table
    while True:
        idx = np.flatnonzero(arr)
        new = np.zeros(R.order, dtype=bool)
        new[add[np.ix_(idx, idx)].ravel()] = True
        if not (new & ~arr).any():
            return arr
        arr = arr | new


def generate(R, gens=()):
    """Smallest ideal containing ``gens``: all ``r*g``, then additive closure."""
    codes = [R.element(g) for g in gens]
    arr = np.zeros(R.order, dtype=bool)
    arr[0] = True
    for g in codes:
        arr[R.mul_table[g]] = True
    return Ideal.from_bool(R, _additive_closure(R, arr), gens=codes)


def zero_ideal(R):
    return Ideal(R, 1, gens=())


def unit_ideal(R):
    return Ideal(R, (1 << R.order) - 1, gens=(R.one,))


def ideal_sum(I, J):
    R = I.ring
    R.check_same(J.ring)
    arr = np.zeros(R.order, dtype=bool)
    arr[R.add_table[np.ix_(I.codes, J.codes)].ravel()] = True
    gens = None
    if I._gens is not None and J._gens is not None:
        gens = I._gens + tuple(g for g in J._gens if g not in I._gens)
    return Ideal.from_bool(R, arr, gens)


def intersect(I, J):
    I.ring.check_same(J.ring)
    return Ideal(I.ring, I.mask & J.mask)


def ideal_product(I, J):
    """``IJ``: the ideal generated by all pairwise products."""
    R = I.ring
    R.check_same(J.ring)
    arr = np.zeros(R.order, dtype=bool)
    arr[R.mul_table[np.ix_(I.codes, J.codes)].ravel()] = True
    return Ideal.from_bool(R, _additive_closure(R, arr))


def power(I, n):
    """``I^n`` for ``n >= 1`` (``I^0`` is the unit ideal)."""
    if n < 0:
        raise ValueError("ideal powers need n >= 0")
    if n == 0:
        return unit_ideal(I.ring)
    result = I
    for _ in range(n - 1):
        nxt = ideal_product(result, I)
        if nxt == result:
            break
        result = nxt
    return result


def power_chain(I):
    """``[I, I^2, ...]`` up to and including the first repeated power."""
    chain = [I]
    while True:
        nxt = ideal_product(chain[-1], I)
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)


def radical(I):
    """``{x : x^m in I for some m >= 1}``."""
    R = I.ring
    arr = (R.power_matrix & I.array[None, :]).any(axis=1)
    return Ideal.from_bool(R, arr)


def integral_closure(I):
    """Elements ``r`` with ``r^n + a_1 r^(n-1) + ... + a_n = 0``, ``a_i in I^i``.

    For fixed ``r`` let ``S_n`` be the set of all values of the monic
    expression of degree ``n``. Then ``S_1 = r + I`` and
    ``S_(n+1) = r*S_n + I^(n+1)``; ``r`` is integral iff ``0`` lies in some
    ``S_n``. Once the powers of ``I`` stabilise the recurrence is a map on a
    finite set, so a repeated state ``(S_n, I^n)`` proves non-integrality.
    """
    R = I.ring
    add, mul = R.add_table, R.mul_table
    chain = power_chain(I)
    chain_idx = [np.asarray(J.codes) for J in chain]
    bound = R.order ** 2 + len(chain)
    result = np.zeros(R.order, dtype=bool)
    for r in range(R.order):
        S = np.zeros(R.order, dtype=bool)
        S[add[r, chain_idx[0]]] = True
        level = 0
        seen = set()
        for _ in range(bound):
            if S[0]:
                result[r] = True
                break
            key = (S.tobytes(), level)
            if key in seen:
                break
            seen.add(key)
            level = min(level + 1, len(chain) - 1)
            T = np.unique(mul[r, np.flatnonzero(S)])
            S = np.zeros(R.order, dtype=bool)
            S[add[np.ix_(T, chain_idx[level])].ravel()] = True
        else:
            raise InternalError("integral-closure recurrence did not settle")
    return Ideal.from_bool(R, result)


def require_proper(I, what="ideal"):
    if not I.is_proper():
        raise NotProper(f"{what} must be proper, got the whole ring")


class IdealSet:
    """All ideals of a ring, sorted by cardinality then member codes."""

    def __init__(self, ring, ideals):
        self.ring = ring
        self.ideals = tuple(ideals)
        self._by_mask = {I.mask: i for i, I in enumerate(self.ideals)}

    def __iter__(self):
        return iter(self.ideals)

    def __len__(self):
        return len(self.ideals)

    def __getitem__(self, i):
        return self.ideals[i]

    def index(self, I):
        return self._by_mask[I.mask]

    def canonical(self, I):
        """The stored ideal equal to ``I`` (carries display generators)."""
        return self.ideals[self._by_mask[I.mask]]

    @property
    def zero(self):
        return self.ideals[0]

    @property
    def whole(self):
        return self.ideals[-1]

    @cached_property
    def proper(self):
        return tuple(I for I in self.ideals if I.is_proper())

    @cached_property
    def maximal(self):
        props = self.proper
        return tuple(M for M in props if not any(M < J for J in props))

    @property
    def is_quasi_local(self):
        return len(self.maximal) == 1

    @cached_property
    def products(self):
        """``products[i][j]`` is the index of ``ideals[i] * ideals[j]``."""
        n = len(self.ideals)
        table = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                k = self._by_mask[ideal_product(self.ideals[i], self.ideals[j]).mask]
                table[i][j] = table[j][i] = k
        return table


def enumerate_ideals(R):
    """Every ideal of ``R``: principal ideals closed under pairwise sums."""
    if R.order > HARD_CAP:
        raise CapExceeded(f"order {R.order} exceeds the cap {HARD_CAP}")
    found = {}
    for x in range(R.order):
        arr = np.zeros(R.order, dtype=bool)
        arr[R.mul_table[x]] = True
        I = Ideal.from_bool(R, arr, gens=(x,) if x else ())
        found.setdefault(I.mask, I)
    frontier = list(found.values())
    while frontier:
        fresh = []
        base = list(found.values())
        for I in frontier:
            for J in base:
                K = ideal_sum(I, J)
                if K.mask not in found:
                    found[K.mask] = K
                    fresh.append(K)
        frontier = fresh
    ideals = sorted(found.values(), key=lambda I: (len(I), I.codes))
    return IdealSet(R, ideals)
