"""Finite associative unital rings given by operation tables.

Elements are the integers ``0..n-1``; index 0 is always the additive
identity.  A :class:`FiniteRing` is only ever produced by
:func:`validate_ring`, which checks every ring axiom against the tables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 64


class RingFormatError(ValueError):
    """Raw ring data is malformed (shape, range, missing fields)."""


class RingValidationError(ValueError):
    """A ring axiom fails; ``witness`` holds the offending elements."""

    axiom = "ring axiom"

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = tuple(int(w) for w in witness)


class BadZeroIndex(RingValidationError):
    axiom = "index 0 is the additive identity"


class NotAbelianGroup(RingValidationError):
    axiom = "addition forms an abelian group"


class NotAssociative(RingValidationError):
    axiom = "multiplication is associative"


class NotDistributive(RingValidationError):
    axiom = "multiplication distributes over addition"


class NoUnity(RingValidationError):
    axiom = "a two-sided multiplicative identity exists"


class OrderCapExceeded(ValueError):
    """The ring is larger than the configured analysis cap."""


def order_cap() -> int:
    """The order cap for full plane analysis (env ``FCSLAB_ORDER_CAP``)."""
    raw = os.environ.get("FCSLAB_ORDER_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"FCSLAB_ORDER_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"FCSLAB_ORDER_CAP must be positive, got {cap}")
    return cap


def check_order_cap(R: "FiniteRing") -> None:
    cap = order_cap()
    if R.order > cap:
        raise OrderCapExceeded(
            f"ring {R.name!r} has order {R.order} > cap {cap}; "
            "raise FCSLAB_ORDER_CAP to analyze it"
        )


def _frozen(table: np.ndarray) -> np.ndarray:
    table = np.array(table, dtype=np.int64, copy=True)
    table.setflags(write=False)
    return table


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite unital ring as addition and multiplication tables.

    Equality and hashing look at the tables and the unity only; ``name`` and
    ``meta`` are labels.
    """

    name: str
    add: np.ndarray
    mul: np.ndarray
    one: int
    meta: dict = field(default_factory=dict)
    _key: bytes = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "add", _frozen(self.add))
        object.__setattr__(self, "mul", _frozen(self.mul))
        object.__setattr__(self, "one", int(self.one))
        key = (
            self.order.to_bytes(4, "little")
            + self.one.to_bytes(4, "little")
            + self.add.tobytes()
            + self.mul.tobytes()
        )
        object.__setattr__(self, "_key", key)

    @property
    def order(self) -> int:
        return int(self.add.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    def neg(self, x: int) -> int:
        return int(np.flatnonzero(self.add[x] == 0)[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, order={self.order})"


def _first(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) for i in np.argwhere(mask)[0])


def _as_table(raw: Any, n: int | None, label: str) -> np.ndarray:
    try:
        table = np.asarray(raw)
    except Exception as exc:  # ragged nested lists
        raise RingFormatError(f"{label} table is not rectangular: {exc}") from None
    if table.dtype == object or table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise RingFormatError(f"{label} table must be a square n x n array")
    if not np.issubdtype(table.dtype, np.integer):
        if table.size and not np.all(np.equal(np.mod(table, 1), 0)):
            raise RingFormatError(f"{label} table has non-integer entries")
        table = table.astype(np.int64)
    if n is not None and table.shape[0] != n:
        raise RingFormatError(f"{label} table is {table.shape[0]}x{table.shape[0]}, expected {n}x{n}")
    size = table.shape[0]
    if size == 0:
        raise RingFormatError(f"{label} table is empty")
    bad = (table < 0) | (table >= size)
    if bad.any():
        i, j = _first(bad)
        raise RingFormatError(f"{label}[{i}][{j}] = {table[i, j]} is out of range 0..{size - 1}")
    return table.astype(np.int64)


def validate_ring(
    add: Sequence[Sequence[int]] | np.ndarray,
    mul: Sequence[Sequence[int]] | np.ndarray,
    one: int | None = None,
    name: str = "R",
    order: int | None = None,
    meta: dict | None = None,
) -> FiniteRing:
    """Check every ring axiom and return a :class:`FiniteRing`.

    If ``one`` is omitted the unity is searched for.  Raises the subclass of
    :class:`RingValidationError` for the first failing axiom, checked in the
    order zero index, additive group, associativity, distributivity, unity.
    """
    A = _as_table(add, order, "add")
    M = _as_table(mul, A.shape[0], "mul")
    n = A.shape[0]
    idx = np.arange(n)

    if not (np.array_equal(A[0], idx) and np.array_equal(A[:, 0], idx)):
        bad = (A[0] != idx) | (A[:, 0] != idx)
        x = int(np.flatnonzero(bad)[0])
        raise BadZeroIndex(f"0 + {x} or {x} + 0 is not {x}", (0, x))

    noncomm = A != A.T
    if noncomm.any():
        a, b = _first(noncomm)
        raise NotAbelianGroup(f"addition not commutative: {a}+{b} != {b}+{a}", (a, b))
    lhs = A[A, :]  # (a+b)+c indexed [a, b, c]
    rhs = A[idx[:, None, None], A[None, :, :]]
    if not np.array_equal(lhs, rhs):
        w = _first(lhs != rhs)
        raise NotAbelianGroup(f"addition not associative at {w}", w)
    has_inv = (A == 0).any(axis=1)
    if not has_inv.all():
        x = int(np.flatnonzero(~has_inv)[0])
        raise NotAbelianGroup(f"{x} has no additive inverse", (x,))

    lhs = M[M, :]
    rhs = M[idx[:, None, None], M[None, :, :]]
    if not np.array_equal(lhs, rhs):
        w = _first(lhs != rhs)
        raise NotAssociative(f"(ab)c != a(bc) at (a, b, c) = {w}", w)

    # a(b+c) vs ab+ac, indexed [a, b, c]
    lhs = M[idx[:, None, None], A[None, :, :]]
    rhs = A[M[:, :, None], M[:, None, :]]
    if not np.array_equal(lhs, rhs):
        w = _first(lhs != rhs)
        raise NotDistributive(f"a(b+c) != ab+ac at (a, b, c) = {w}", w)
    # (a+b)c vs ac+bc, indexed [a, b, c]
    lhs = M[A, :]
    rhs = A[M[:, None, :], M[None, :, :]]
    if not np.array_equal(lhs, rhs):
        w = _first(lhs != rhs)
        raise NotDistributive(f"(a+b)c != ac+bc at (a, b, c) = {w}", w)

    identity = (M == idx[None, :]).all(axis=1) & (M == idx[:, None]).all(axis=0)
    if one is None:
        found = np.flatnonzero(identity)
        if not len(found):
            raise NoUnity("no element is a two-sided multiplicative identity")
        one = int(found[0])
    else:
        one = int(one)
        if not 0 <= one < n:
            raise RingFormatError(f"one = {one} is out of range 0..{n - 1}")
        if not identity[one]:
            bad = (M[one] != idx) | (M[:, one] != idx)
            x = int(np.flatnonzero(bad)[0])
            raise NoUnity(f"{one} is not a two-sided identity: fails on {x}", (one, x))

    return FiniteRing(name=name, add=A, mul=M, one=one, meta=dict(meta or {}))


def units(R: FiniteRing) -> frozenset[int]:
    """Elements with a two-sided inverse."""
    E = R.mul == R.one
    return frozenset(int(u) for u in np.flatnonzero((E & E.T).any(axis=1)))


def zero_divisors(R: FiniteRing) -> frozenset[int]:
    return frozenset(R.elements) - units(R)


def unit_mask(R: FiniteRing) -> np.ndarray:
    E = R.mul == R.one
    return (E & E.T).any(axis=1)


def is_commutative(R: FiniteRing) -> bool:
    return bool(np.array_equal(R.mul, R.mul.T))


def opposite(R: FiniteRing) -> FiniteRing:
    """Same set and addition, multiplication reversed."""
    name = R.name[:-3] if R.name.endswith("^op") else R.name + "^op"
    return FiniteRing(name=name, add=R.add, mul=R.mul.T, one=R.one, meta=dict(R.meta))
