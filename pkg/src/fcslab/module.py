"""The two-dimensional left module over a finite ring.

Vectors ``(a, b)`` are coded as ``a * n + b`` inside the cached
:class:`Plane`; the public functions take and return :class:`Vector2`.
Every function accepts ``side``: right-module questions are answered by
running the left-module code on the opposite ring.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from .ideals import Side, from_mask, principal_masks, sum_mask, to_mask
from .ring import FiniteRing, check_order_cap, opposite, unit_mask


class Vector2(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


class UnimodularType(enum.Enum):
    TYPE_I = "type-I"
    TYPE_II = "type-II"
    NOT_UNIMODULAR = "not-unimodular"


class VectorClass(enum.Enum):
    UNIMODULAR_TYPE_I = "unimodular-I"
    UNIMODULAR_TYPE_II = "unimodular-II"
    NON_UNIMODULAR_COVERED = "covered"
    OUTLIER_NON_FREE = "outlier-nonfree"
    OUTLIER_FREE = "outlier-free"


@dataclass(frozen=True)
class SubmoduleSet:
    """The cyclic submodule ``R(a, b)``.

    ``unimodular_generated`` is filled in by :func:`fcs_list` only.
    """

    generator: Vector2
    vectors: frozenset[Vector2]
    free: bool
    unimodular_generated: bool | None = None

    def __len__(self) -> int:
        return len(self.vectors)


def _ring_for(R: FiniteRing, side: Side | str) -> FiniteRing:
    side = Side.parse(side)
    if side is Side.RIGHT:
        return opposite(R)
    if side is Side.LEFT:
        return R
    raise ValueError("module analysis needs side 'left' or 'right'")


def _left_annihilator_masks(R: FiniteRing) -> list[int]:
    zero = R.mul == 0
    return [to_mask(np.flatnonzero(zero[:, a])) for a in R.elements]


def left_annihilator(R: FiniteRing, S: Iterable[int]) -> frozenset[int]:
    """``{x : xa = 0 for all a in S}``."""
    S = list(S)
    if not S:
        return frozenset(R.elements)
    kills = (R.mul[:, S] == 0).all(axis=1)
    return frozenset(int(x) for x in np.flatnonzero(kills))


def right_annihilator(R: FiniteRing, S: Iterable[int]) -> frozenset[int]:
    """``{x : ax = 0 for all a in S}``."""
    return left_annihilator(opposite(R), S)


class Plane:
    """Whole-plane arrays for one ring (left module).

    ``orbit[v, alpha]`` is the code of ``alpha * v``.  ``free`` comes from the
    annihilator criterion, ``unimodular`` from sums of principal right ideals,
    and ``covered`` marks vectors lying in some unimodular-generated
    submodule.
    """

    def __init__(self, R: FiniteRing):
        n = R.order
        self.ring = R
        self.n = n
        codes = np.arange(n * n)
        self.a = codes // n
        self.b = codes % n
        mulT = R.mul.T
        self.orbit = mulT[self.a] * n + mulT[self.b]
        self.units = unit_mask(R)

        ann = _left_annihilator_masks(R)
        self.free = np.array([ann[a] & ann[b] == 1 for a, b in zip(self.a, self.b)], dtype=bool)

        pm = principal_masks(R, Side.RIGHT)
        full = (1 << n) - 1
        self.right_sum = [sum_mask(R, pm[a], pm[b]) for a, b in zip(self.a, self.b)]
        self.unimodular = np.array([s == full for s in self.right_sum], dtype=bool)

        self.covered = np.zeros(n * n, dtype=bool)
        self.covered[self.orbit[self.unimodular].ravel()] = True
        self.covered[0] = True

        self._fcs = None

    def code(self, v) -> int:
        a, b = v
        if not (0 <= a < self.n and 0 <= b < self.n):
            raise ValueError(f"vector {tuple(v)} out of range for order {self.n}")
        return int(a) * self.n + int(b)

    def vector(self, code: int) -> Vector2:
        return Vector2(int(code) // self.n, int(code) % self.n)

    @property
    def outlier(self) -> np.ndarray:
        return ~self.covered

    def fcs(self):
        """Distinct free cyclic submodules.

        Returns ``(keys, canon, unimod)``: sorted member codes per submodule
        (rows), the canonical generator code, and whether its generators are
        unimodular; ordered by canonical generator.
        """
        if self._fcs is None:
            gens = np.flatnonzero(self.free)
            rows = np.sort(self.orbit[gens], axis=1)
            keys, first, inverse = np.unique(rows, axis=0, return_index=True, return_inverse=True)
            inverse = np.asarray(inverse).ravel()
            unimod = np.zeros(len(keys), dtype=bool)
            np.logical_or.at(unimod, inverse, self.unimodular[gens])
            canon = gens[first]
            order = np.argsort(canon)
            self._fcs = (keys[order], canon[order], unimod[order])
        return self._fcs


def plane(R: FiniteRing, side: Side = Side.LEFT) -> Plane:
    check_order_cap(R)
    return _plane(R, side)


@lru_cache(maxsize=64)
def _plane(R: FiniteRing, side: Side) -> Plane:
    return Plane(_ring_for(R, side))


def cyclic_submodule(R: FiniteRing, v, side: Side | str = Side.LEFT) -> SubmoduleSet:
    """``R(a, b) = {(alpha a, alpha b)}``, with the freeness flag."""
    S = _ring_for(R, side)
    a, b = v
    vectors = frozenset(Vector2(int(S.mul[x, a]), int(S.mul[x, b])) for x in S.elements)
    return SubmoduleSet(Vector2(int(a), int(b)), vectors, is_free(R, v, side))


def is_free(R: FiniteRing, v, side: Side | str = Side.LEFT) -> bool:
    """Annihilator test: the left annihilators of ``a`` and ``b`` meet only in 0."""
    S = _ring_for(R, side)
    a, b = v
    return left_annihilator(S, [a, b]) == frozenset({0})


def is_unimodular(R: FiniteRing, v, side: Side | str = Side.LEFT) -> bool:
    """Whether ``aR + bR`` is the whole ring (``Ra + Rb`` for the right side)."""
    S = _ring_for(R, side)
    a, b = v
    pm = principal_masks(S, Side.RIGHT)
    return sum_mask(S, pm[a], pm[b]) == (1 << S.order) - 1


def bezout_witness(R: FiniteRing, v, side: Side | str = Side.LEFT) -> tuple[int, int] | None:
    """Some ``(x, y)`` with ``ax + by = 1``, or ``None``."""
    S = _ring_for(R, side)
    a, b = v
    hits = np.argwhere(S.add[S.mul[a][:, None], S.mul[b][None, :]] == S.one)
    if not len(hits):
        return None
    return int(hits[0][0]), int(hits[0][1])


def unimodular_type(R: FiniteRing, v, side: Side | str = Side.LEFT) -> UnimodularType:
    if not is_unimodular(R, v, side):
        return UnimodularType.NOT_UNIMODULAR
    u = unit_mask(R)
    return UnimodularType.TYPE_I if u[v[0]] or u[v[1]] else UnimodularType.TYPE_II


def outliers(R: FiniteRing, side: Side | str = Side.LEFT) -> frozenset[Vector2]:
    P = plane(R, Side.parse(side))
    return frozenset(P.vector(c) for c in np.flatnonzero(P.outlier))


def _classify_code(P: Plane, c: int) -> VectorClass:
    if P.unimodular[c]:
        if P.units[P.a[c]] or P.units[P.b[c]]:
            return VectorClass.UNIMODULAR_TYPE_I
        return VectorClass.UNIMODULAR_TYPE_II
    if P.covered[c]:
        return VectorClass.NON_UNIMODULAR_COVERED
    return VectorClass.OUTLIER_FREE if P.free[c] else VectorClass.OUTLIER_NON_FREE


def classify_vector(R: FiniteRing, v, side: Side | str = Side.LEFT) -> VectorClass:
    P = plane(R, Side.parse(side))
    return _classify_code(P, P.code(v))


def classify_plane(R: FiniteRing, side: Side | str = Side.LEFT) -> list[tuple[Vector2, VectorClass]]:
    """Every vector of the plane with its class, in (a, b) order."""
    P = plane(R, Side.parse(side))
    return [(P.vector(c), _classify_code(P, c)) for c in range(P.n * P.n)]


def class_counts(R: FiniteRing, side: Side | str = Side.LEFT) -> dict[str, int]:
    counts = {cls.value: 0 for cls in VectorClass}
    for _, cls in classify_plane(R, side):
        counts[cls.value] += 1
    return counts


def fcs_list(R: FiniteRing, side: Side | str = Side.LEFT) -> list[SubmoduleSet]:
    """All distinct free cyclic submodules, ordered by canonical generator.

    The canonical generator is the lexicographically smallest ``(a, b)``
    generating the submodule.
    """
    P = plane(R, Side.parse(side))
    keys, canon, unimod = P.fcs()
    return [
        SubmoduleSet(
            generator=P.vector(g),
            vectors=frozenset(P.vector(c) for c in row),
            free=True,
            unimodular_generated=bool(u),
        )
        for row, g, u in zip(keys, canon, unimod)
    ]


def fcs_intersection_matrix(R: FiniteRing, side: Side | str = Side.LEFT) -> np.ndarray:
    """Shared nonzero vectors between every pair of FCSs (``fcs_list`` order)."""
    P = plane(R, Side.parse(side))
    keys, _, _ = P.fcs()
    member = np.zeros((len(keys), P.n * P.n), dtype=np.int64)
    np.put_along_axis(member, keys, 1, axis=1)
    member[:, 0] = 0
    return member @ member.T


def intersection_property(R: FiniteRing, side: Side | str = Side.LEFT) -> tuple[bool | None, tuple | None]:
    """Whether every non-unimodular FCS meets every other FCS outside (0,0).

    Returns ``(None, None)`` when no non-unimodular FCS exists, otherwise the
    verdict and, if false, the canonical generators of a disjoint pair.
    """
    P = plane(R, Side.parse(side))
    _, canon, unimod = P.fcs()
    if unimod.all():
        return None, None
    M = fcs_intersection_matrix(R, side)
    for i in np.flatnonzero(~unimod):
        zeros = np.flatnonzero(M[i] == 0)
        if len(zeros):
            return False, (P.vector(canon[i]), P.vector(canon[zeros[0]]))
    return True, None


def right_sum_members(R: FiniteRing, v) -> list[int]:
    """Members of ``aR + bR``."""
    pm = principal_masks(R, Side.RIGHT)
    return from_mask(sum_mask(R, pm[v[0]], pm[v[1]]))
