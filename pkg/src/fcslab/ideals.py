"""One-sided ideals, the ideal lattice, and the Jacobson radical.

Sets of elements are handled internally as Python ints used as bitmasks
(bit ``x`` set when element ``x`` is a member); the public API returns
:class:`IdealSet` objects carrying frozensets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .ring import FiniteRing, unit_mask


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"

    @classmethod
    def parse(cls, value: "str | Side") -> "Side":
        return value if isinstance(value, Side) else cls(value.lower())


class RadicalCharacterizationMismatch(RuntimeError):
    """The two definitions of the Jacobson radical disagree."""


class NotNilpotent(RuntimeError):
    pass


class LocalSideMismatch(RuntimeError):
    """A ring reports a different number of maximal left and right ideals."""


@dataclass(frozen=True)
class IdealSet:
    side: Side
    members: frozenset[int]
    generators: tuple[int, ...] | None = None
    ring: FiniteRing | None = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True)
class RadicalInfo:
    radical: IdealSet
    nilpotency: int


def to_mask(xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        m |= 1 << int(x)
    return m


def from_mask(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def _full(R: FiniteRing) -> int:
    return (1 << R.order) - 1


def _ideal(R: FiniteRing, side: Side, mask: int, generators=None) -> IdealSet:
    gens = None if generators is None else tuple(int(g) for g in generators)
    return IdealSet(side=side, members=frozenset(from_mask(mask)), generators=gens, ring=R)


def _sort_key(I: IdealSet):
    return (len(I.members), sorted(I.members))


@lru_cache(maxsize=256)
def principal_masks(R: FiniteRing, side: Side) -> tuple[int, ...]:
    """Bitmask of ``aR`` (right) or ``Ra`` (left) for every element ``a``."""
    table = R.mul if side is Side.RIGHT else R.mul.T
    return tuple(to_mask(np.unique(table[a])) for a in R.elements)


def principal_ideal(R: FiniteRing, a: int, side: Side | str = Side.RIGHT) -> IdealSet:
    side = Side.parse(side)
    return _ideal(R, side, principal_masks(R, side)[a], generators=[a])


def _additive_span(R: FiniteRing, xs: np.ndarray) -> np.ndarray:
    S = np.unique(np.append(xs, 0))
    while True:
        T = np.unique(R.add[np.ix_(S, S)])
        if len(T) == len(S):
            return S
        S = T


def sum_mask(R: FiniteRing, I: int, J: int) -> int:
    """Bitmask of ``I + J`` for two additive subgroups given as bitmasks."""
    return _sum_mask(R, I, J) if I <= J else _sum_mask(R, J, I)


@lru_cache(maxsize=65536)
def _sum_mask(R: FiniteRing, I: int, J: int) -> int:
    sums = R.add[np.ix_(from_mask(I), from_mask(J))]
    return to_mask(np.unique(sums))


def ideal_closure(R: FiniteRing, gens: Iterable[int], side: Side | str = Side.RIGHT) -> IdealSet:
    """Smallest ``side``-ideal containing ``gens``, by fixpoint iteration."""
    side = Side.parse(side)
    gens = [int(g) for g in gens]
    S = np.unique(np.array(gens + [0], dtype=np.int64))
    every = np.arange(R.order)
    while True:
        if side is Side.RIGHT:
            prods = R.mul[np.ix_(S, every)]
        elif side is Side.LEFT:
            prods = R.mul[np.ix_(every, S)]
        else:
            prods = np.concatenate([R.mul[np.ix_(S, every)].ravel(), R.mul[np.ix_(every, S)].ravel()])
        T = _additive_span(R, np.unique(np.append(prods, S)))
        if len(T) == len(S):
            break
        S = T
    return _ideal(R, side, to_mask(S), generators=gens)


@lru_cache(maxsize=256)
def ideal_masks(R: FiniteRing, side: Side) -> tuple[int, ...]:
    """Every ``side``-ideal as a bitmask, sorted by (size, members)."""
    found = set(principal_masks(R, side))
    work = list(found)
    while work:
        I = work.pop()
        for J in list(found):
            K = sum_mask(R, I, J)
            if K not in found:
                found.add(K)
                work.append(K)
    return tuple(sorted(found, key=lambda m: (bin(m).count("1"), from_mask(m))))


def all_ideals(R: FiniteRing, side: Side | str = Side.RIGHT) -> list[IdealSet]:
    side = Side.parse(side)
    return [_ideal(R, side, m) for m in ideal_masks(R, side)]


@lru_cache(maxsize=256)
def maximal_masks(R: FiniteRing, side: Side) -> tuple[int, ...]:
    full = _full(R)
    proper = [m for m in ideal_masks(R, side) if m != full]
    return tuple(m for m in proper if not any(o != m and o & m == m for o in proper))


def maximal_ideals(R: FiniteRing, side: Side | str = Side.RIGHT) -> list[IdealSet]:
    side = Side.parse(side)
    return [_ideal(R, side, m) for m in maximal_masks(R, side)]


def principal_generator(R: FiniteRing, I: IdealSet) -> int | None:
    """Smallest ``a`` in ``I`` with ``aR == I`` (or ``Ra``), else ``None``."""
    if I.side is Side.TWO_SIDED:
        raise ValueError("principality is defined here for one-sided ideals only")
    masks = principal_masks(R, I.side)
    target = to_mask(I.members)
    for a in sorted(I.members):
        if masks[a] == target:
            return a
    return None


def is_principal(R: FiniteRing, I: IdealSet) -> bool:
    return principal_generator(R, I) is not None


@lru_cache(maxsize=256)
def nonprincipal_masks(R: FiniteRing, side: Side) -> tuple[int, ...]:
    principal = set(principal_masks(R, side))
    return tuple(m for m in ideal_masks(R, side) if m not in principal)


def is_principal_ideal_ring(R: FiniteRing, side: Side | str = Side.RIGHT) -> bool:
    return not nonprincipal_masks(R, Side.parse(side))


def is_local(R: FiniteRing) -> bool:
    left = len(maximal_masks(R, Side.LEFT))
    right = len(maximal_masks(R, Side.RIGHT))
    if (left == 1) != (right == 1):
        raise LocalSideMismatch(f"{R.name}: {left} maximal left ideals but {right} maximal right ideals")
    return left == 1


def _product_span(R: FiniteRing, J: np.ndarray, K: np.ndarray) -> np.ndarray:
    return _additive_span(R, np.unique(R.mul[np.ix_(J, K)]))


@lru_cache(maxsize=256)
def _radical(R: FiniteRing) -> RadicalInfo:
    full = _full(R)
    J = full
    for m in maximal_masks(R, Side.LEFT):
        J &= m
    members = np.array(from_mask(J), dtype=np.int64)

    # second characterization: 1 + rj is a unit for all r in R, j in J
    is_unit = unit_mask(R)
    shifted = R.add[R.one, R.mul[:, members]]
    if not is_unit[shifted].all():
        raise RadicalCharacterizationMismatch(
            f"{R.name}: 1 + rj is not a unit for some j in the intersection of maximal left ideals"
        )
    for I in ideal_masks(R, Side.LEFT):
        elems = from_mask(I)
        if is_unit[R.add[R.one, elems]].all() and I & J != I:
            raise RadicalCharacterizationMismatch(
                f"{R.name}: left ideal {elems} has 1 + j invertible but is not inside the radical"
            )
    if J not in ideal_masks(R, Side.RIGHT):
        raise RadicalCharacterizationMismatch(f"{R.name}: radical is not a right ideal")

    power = members
    m = 1
    while len(power) > 1:
        if m > R.order:
            raise NotNilpotent(f"{R.name}: radical power still nonzero after {m} steps")
        power = _product_span(R, members, power)
        m += 1
    radical = _ideal(R, Side.TWO_SIDED, J)
    return RadicalInfo(radical=radical, nilpotency=m)


def jacobson_radical(R: FiniteRing) -> RadicalInfo:
    """Intersection of the maximal left ideals, with its nilpotency index.

    The result is cross-checked against the unit characterization (largest
    left ideal with ``1 + j`` invertible) and must be a right ideal too.
    Nilpotency is the least ``m`` with ``J^m = {0}``; ``m = 1`` when the
    radical is zero.
    """
    return _radical(R)


def ideal_invariants_hold(R: FiniteRing, I: IdealSet) -> bool:
    """Additive subgroup that absorbs multiplication on its side."""
    S = np.array(sorted(I.members), dtype=np.int64)
    if 0 not in I.members or not np.isin(R.add[np.ix_(S, S)], S).all():
        return False
    every = np.arange(R.order)
    if I.side in (Side.RIGHT, Side.TWO_SIDED) and not np.isin(R.mul[np.ix_(S, every)], S).all():
        return False
    if I.side in (Side.LEFT, Side.TWO_SIDED) and not np.isin(R.mul[np.ix_(every, S)], S).all():
        return False
    return True
