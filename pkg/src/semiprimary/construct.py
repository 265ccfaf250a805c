"""Quotient rings, localizations, ring homomorphisms and product-ring ideals."""

from __future__ import annotations

import numpy as np

from .errors import (InvalidHomomorphism, NotSurjective, PreconditionViolation,
                     RingMismatch, ZeroRing)
from .ideals import Ideal, generate, require_proper
from .rings import Ring


class RingHom:
    """A ring homomorphism given by its element-code map."""

    def __init__(self, source, target, mapping, verify=True):
        self.source = source
        self.target = target
        m = np.asarray(mapping, dtype=np.int64)
        if m.shape != (source.order,):
            raise InvalidHomomorphism("map must have one entry per source element")
        m.flags.writeable = False
        self.map = m
        if verify:
            self._verify()
        self.surjective = bool(np.unique(m).size == target.order)

    def _verify(self):
        f, S, T = self.map, self.source, self.target
        if f.min() < 0 or f.max() >= T.order:
            raise InvalidHomomorphism("map leaves the target ring")
        if f[0] != 0 or f[S.one] != T.one:
            raise InvalidHomomorphism("f(0) = 0 and f(1) = 1 are required")
        if not (f[S.add_table] == T.add_table[f[:, None], f[None, :]]).all():
            raise InvalidHomomorphism("map is not additive")
        if not (f[S.mul_table] == T.mul_table[f[:, None], f[None, :]]).all():
            raise InvalidHomomorphism("map is not multiplicative")

    def __call__(self, x):
        return int(self.map[self.source.element(x)])

    def __repr__(self):
        return f"RingHom({self.source!r} -> {self.target!r})"


def kernel(f):
    return Ideal.from_bool(f.source, f.map == 0)


def image_ideal(f, I):
    """``f(I)``; an ideal of the target whenever ``f`` is surjective."""
    if not f.surjective:
        raise NotSurjective("image of an ideal is only an ideal under a surjection")
    f.source.check_same(I.ring)
    arr = np.zeros(f.target.order, dtype=bool)
    arr[f.map[list(I.codes)]] = True
    J = Ideal.from_bool(f.target, arr)
    if generate(f.target, J.codes).mask != J.mask:
        raise InvalidHomomorphism("image is not an ideal")
    return J


def preimage_ideal(f, J):
    f.target.check_same(J.ring)
    return Ideal.from_bool(f.source, J.array[f.map])


def quotient(R, I):
    """``R/I`` as a table ring over smallest coset representatives.

    Returns ``(Q, pi)`` with ``pi`` the canonical surjection. Elements of
    ``Q`` are displayed by the name of their smallest representative.
    """
    R.check_same(I.ring)
    require_proper(I)
    members = np.asarray(I.codes)
    cosets = R.add_table[:, members]          # row x = x + I
    rep = cosets.min(axis=1)
    reps = np.unique(rep)                      # sorted representatives
    cls = np.searchsorted(reps, rep)
    add = cls[R.add_table[np.ix_(reps, reps)]]
    mul = cls[R.mul_table[np.ix_(reps, reps)]]
    spec = f"quot({R.spec},{I.to_spec()})" if R.spec else None
    Q = Ring(add, mul, [R.names[r] for r in reps], int(cls[R.one]), kind="quotient",
             params={"base": R, "ideal": I, "reps": tuple(int(r) for r in reps),
                     "classes": cls},
             spec=spec, verify=False)
    return Q, RingHom(R, Q, cls, verify=False)


class MultiplicativeSet:
    """A multiplicatively closed subset containing 1."""

    def __init__(self, ring, members, gens=None):
        self.ring = ring
        arr = np.zeros(ring.order, dtype=bool)
        arr[[ring.element(x) for x in members]] = True
        if not arr[ring.one]:
            raise PreconditionViolation("a multiplicative set must contain 1")
        idx = np.flatnonzero(arr)
        if not arr[ring.mul_table[np.ix_(idx, idx)]].all():
            raise PreconditionViolation("set is not closed under multiplication")
        arr.flags.writeable = False
        self.array = arr
        self.codes = tuple(int(x) for x in idx)
        self.gens = tuple(gens) if gens is not None else self.codes

    @classmethod
    def generated_by(cls, ring, elems):
        """Smallest multiplicative set containing ``elems`` and 1."""
        codes = {ring.one}
        frontier = [ring.element(e) for e in elems]
        gens = list(frontier)
        while frontier:
            x = frontier.pop()
            if x in codes:
                continue
            codes.add(x)
            frontier.extend(ring.times(x, y) for y in list(codes))
        return cls(ring, sorted(codes), gens=gens)

    def __contains__(self, x):
        return bool(self.array[self.ring.element(x)])

    def __len__(self):
        return len(self.codes)


def localize(R, S):
    """``R_S`` from fractions ``a/s``, ``(a,s) ~ (b,t)`` iff ``u(at - bs) = 0``.

    Returns ``(R_S, f, transport)`` where ``f`` is ``a -> a/1`` and
    ``transport(I)`` is ``I_S = {a/s : a in I, s in S}``.
    """
    R.check_same(S.ring)
    if S.array[0]:
        raise ZeroRing("0 in S makes the localization the zero ring")
    add, mul, neg = R.add_table, R.mul_table, R.neg_table
    s_idx = np.asarray(S.codes)
    killed = (mul[s_idx, :] == 0).any(axis=0)        # z with u*z = 0 for some u in S
    pa = np.repeat(np.arange(R.order), len(s_idx))
    ps = np.tile(s_idx, R.order)                       # pairs sorted by (a, s)
    cls = np.full(pa.size, -1, dtype=np.int64)
    reps = []
    for p in range(pa.size):
        if cls[p] >= 0:
            continue
        a, s = pa[p], ps[p]
        diff = add[mul[a, ps], neg[mul[pa, s]]]
        same = killed[diff] & (cls < 0)
        cls[same] = len(reps)
        reps.append(p)
    reps = np.asarray(reps)
    if reps.size < 2:
        raise ZeroRing("localization collapsed to the zero ring")
    by_pair = cls.reshape(R.order, len(s_idx))
    s_pos = np.full(R.order, -1, dtype=np.int64)
    s_pos[s_idx] = np.arange(len(s_idx))
    ra, rs = pa[reps], ps[reps]
    num_add = add[mul[ra[:, None], rs[None, :]], mul[ra[None, :], rs[:, None]]]
    den = mul[rs[:, None], rs[None, :]]
    add_t = by_pair[num_add, s_pos[den]]
    mul_t = by_pair[mul[ra[:, None], ra[None, :]], s_pos[den]]
    names = [R.names[a] if s == R.one else f"{R.names[a]}/{R.names[s]}" for a, s in zip(ra, rs)]
    spec = None
    if R.spec:
        spec = f"loc({R.spec},{{{','.join(R.names[g] for g in S.gens)}}})"
    one_cls = int(by_pair[R.one, s_pos[R.one]])
    RS = Ring(add_t, mul_t, names, one_cls, kind="localization",
              params={"base": R, "S": S, "pairs": tuple(zip(ra.tolist(), rs.tolist())),
                      "classes": by_pair, "s_pos": s_pos},
              spec=spec, verify=False)
    f = RingHom(R, RS, by_pair[:, s_pos[R.one]], verify=False)

    def transport(I):
        R.check_same(I.ring)
        arr = np.zeros(RS.order, dtype=bool)
        arr[by_pair[list(I.codes)].ravel()] = True
        return Ideal.from_bool(RS, arr)

    return RS, f, transport


def fraction(RS, a, s):
    """Code of ``a/s`` in a localization built by :func:`localize`."""
    R = RS.params["base"]
    a, s = R.element(a), R.element(s)
    pos = RS.params["s_pos"][s]
    if pos < 0:
        raise PreconditionViolation("denominator is not in the multiplicative set")
    return int(RS.params["classes"][a, pos])


def _component_codes(R):
    if R.kind != "product":
        raise RingMismatch(f"{R!r} is not a product ring")
    codes = np.arange(R.order)
    return np.stack([(codes // s) % f.order for f, s in zip(R.factors, R._strides)], axis=1)


def component_ideals(R, I):
    """Factor ideals ``(I_1, ..., I_n)`` with ``I = I_1 x ... x I_n``."""
    R.check_same(I.ring)
    comps = _component_codes(R)
    parts = []
    for k, F in enumerate(R.factors):
        arr = np.zeros(F.order, dtype=bool)
        arr[comps[list(I.codes), k]] = True
        parts.append(Ideal.from_bool(F, arr))
    if product_ideal(R, parts) != I:
        raise PreconditionViolation("ideal does not split as a product of factor ideals")
    return parts


def product_ideal(R, parts):
    """``I_1 x ... x I_n`` as an ideal of the product ring ``R``."""
    comps = _component_codes(R)
    if len(parts) != len(R.factors):
        raise RingMismatch("need one ideal per factor")
    arr = np.ones(R.order, dtype=bool)
    for k, (F, J) in enumerate(zip(R.factors, parts)):
        F.check_same(J.ring)
        arr &= J.array[comps[:, k]]
    return Ideal.from_bool(R, arr)


def isomorphism_to(R, S):
    """An explicit isomorphism ``R -> S`` found by backtracking, or ``None``.

    Used to confirm small constructions; the search assigns images to a
    generating set of the additive group and checks the induced map.
    """
    if R.order != S.order or R.is_boolean != S.is_boolean:
        return None
    n = R.order
    # additive generators of R, greedily
    gens, span = [], {0}
    for x in range(n):
        if x not in span:
            gens.append(x)
            span = _additive_span(R, gens)
    r_add_order = [_additive_order(R, g) for g in gens]
    candidates = [[y for y in range(S.order) if _additive_order(S, y) == o] for o in r_add_order]

    def build(images):
        f = np.full(n, -1, dtype=np.int64)
        f[0] = 0
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g, y in zip(gens, images):
                z = int(R.add_table[x, g])
                w = int(S.add_table[f[x], y])
                if f[z] < 0:
                    f[z] = w
                    frontier.append(z)
                elif f[z] != w:
                    return None
        return f

    def search(i, images):
        if i == len(gens):
            f = build(images)
            if f is None or np.unique(f).size != n:
                return None
            try:
                return RingHom(R, S, f)
            except InvalidHomomorphism:
                return None
        for y in candidates[i]:
            res = search(i + 1, images + [y])
            if res is not None:
                return res
        return None

    return search(0, [])


def _additive_span(R, gens):
    span = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            z = int(R.add_table[x, g])
            if z not in span:
                span.add(z)
                frontier.append(z)
    return span


def _additive_order(R, x):
    k, y = 1, x
    while y != 0:
        y = int(R.add_table[y, x])
        k += 1
    return k


__all__ = [
    "RingHom", "kernel", "image_ideal", "preimage_ideal", "quotient",
    "MultiplicativeSet", "localize", "fraction", "component_ideals",
    "product_ideal", "isomorphism_to",
]
