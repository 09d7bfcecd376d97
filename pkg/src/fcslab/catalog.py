"""Built-in ring families and the canonical JSON ring file format.

Pinned irreducible polynomials for the Galois fields (coefficients listed
from the constant term up):

    GF(4)  x^2 + x + 1       over GF(2)
    GF(8)  x^3 + x + 1       over GF(2)
    GF(9)  x^2 + 1           over GF(3)

Element encodings:

* ``Zn``: residue ``r`` is index ``r``.
* ``GF(p^k)``: polynomial ``c0 + c1 x + ...`` is index ``c0 + c1 p + ...``.
* ``T2(GF(q))`` (upper-triangular ``[[x, y], [0, z]]``): index
  ``x + q*y + q^2*z`` where ``x, y, z`` are GF(q) indices.
* ``Zp[x]/(x^2)``: ``c0 + c1 x`` is index ``c0 + p*c1``.
* ``M2(GF(2))``: ``[[a, b], [c, d]]`` is index ``a + 2b + 4c + 8d``.
* ``R x S``: ``(r, s)`` is index ``r * |S| + s``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .ring import FiniteRing, RingFormatError, order_cap, validate_ring

IRREDUCIBLE = {
    4: (2, (1, 1, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (1, 0, 1)),
}
PRIMES = {2, 3, 5, 7}


def _tables(n: int, add_fn, mul_fn):
    add = np.array([[add_fn(x, y) for y in range(n)] for x in range(n)], dtype=np.int64)
    mul = np.array([[mul_fn(x, y) for y in range(n)] for x in range(n)], dtype=np.int64)
    return add, mul


def ring_zn(n: int) -> FiniteRing:
    if not 2 <= n <= order_cap():
        raise ValueError(f"Zn needs 2 <= n <= {order_cap()}, got {n}")
    add, mul = _tables(n, lambda x, y: (x + y) % n, lambda x, y: (x * y) % n)
    return validate_ring(add, mul, one=1 % n, name=f"Z{n}")


def _gf_tables(q: int):
    if q in PRIMES:
        return _tables(q, lambda x, y: (x + y) % q, lambda x, y: (x * y) % q), None
    if q not in IRREDUCIBLE:
        raise ValueError(f"GF({q}) is not supported: q must be one of 2, 3, 4, 5, 7, 8, 9")
    p, poly = IRREDUCIBLE[q]
    k = len(poly) - 1

    def digits(x):
        return [(x // p**i) % p for i in range(k)]

    def index(cs):
        return sum(c * p**i for i, c in enumerate(cs))

    def add(x, y):
        return index([(s + t) % p for s, t in zip(digits(x), digits(y))])

    def mul(x, y):
        prod = [0] * (2 * k - 1)
        for i, s in enumerate(digits(x)):
            for j, t in enumerate(digits(y)):
                prod[i + j] = (prod[i + j] + s * t) % p
        # poly is monic; reduce x^d for d >= k using x^k = -(lower terms)
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(k):
                    prod[d - k + i] = (prod[d - k + i] - c * poly[i]) % p
        return index(prod[:k])

    return _tables(q, add, mul), poly


def ring_gf(q: int) -> FiniteRing:
    """The Galois field of order ``q``."""
    (add, mul), poly = _gf_tables(q)
    meta = {} if poly is None else {"irreducible": list(poly)}
    return validate_ring(add, mul, one=1, name=f"GF({q})", meta=meta)


def ring_ternions(q: int) -> FiniteRing:
    """Upper-triangular 2x2 matrices over GF(q)."""
    if q not in (2, 3, 4):
        raise ValueError(f"ternions are built for q in 2, 3, 4, got {q}")
    (fa, fm), _ = _gf_tables(q)

    def split(e):
        return e % q, (e // q) % q, e // (q * q)

    def join(x, y, z):
        return x + q * y + q * q * z

    def add(e, f):
        (x, y, z), (u, v, w) = split(e), split(f)
        return join(fa[x, u], fa[y, v], fa[z, w])

    def mul(e, f):
        # [[x, y], [0, z]] [[u, v], [0, w]] = [[xu, xv + yw], [0, zw]]
        (x, y, z), (u, v, w) = split(e), split(f)
        return join(fm[x, u], fa[fm[x, v], fm[y, w]], fm[z, w])

    A, M = _tables(q**3, add, mul)
    return validate_ring(A, M, one=join(1, 0, 1), name=f"T2(GF({q}))", meta={"encoding": "x + q*y + q^2*z"})


def ring_product(R: FiniteRing, S: FiniteRing) -> FiniteRing:
    n, m = R.order, S.order
    if n * m > order_cap():
        raise ValueError(f"{R.name} x {S.name} has order {n * m} > cap {order_cap()}")
    A = (R.add[:, None, :, None] * m + S.add[None, :, None, :]).reshape(n * m, n * m)
    M = (R.mul[:, None, :, None] * m + S.mul[None, :, None, :]).reshape(n * m, n * m)
    return validate_ring(A, M, one=R.one * m + S.one, name=f"{R.name}x{S.name}")


def ring_poly_sq(p: int) -> FiniteRing:
    """``Zp[x]/(x^2)``, a local ring with radical ``(x)``."""
    if p not in (2, 3):
        raise ValueError(f"Zp[x]/(x^2) is built for p in 2, 3, got {p}")

    def add(e, f):
        return (e % p + f % p) % p + p * ((e // p + f // p) % p)

    def mul(e, f):
        a, b, c, d = e % p, e // p, f % p, f // p
        return (a * c) % p + p * ((a * d + b * c) % p)

    A, M = _tables(p * p, add, mul)
    return validate_ring(A, M, one=1, name=f"Z{p}[x]/(x^2)")


def ring_m2_gf2() -> FiniteRing:
    """All 2x2 matrices over GF(2)."""

    def mat(e):
        return np.array([[e & 1, (e >> 1) & 1], [(e >> 2) & 1, (e >> 3) & 1]])

    def idx(m):
        m = m % 2
        return int(m[0, 0] + 2 * m[0, 1] + 4 * m[1, 0] + 8 * m[1, 1])

    A, M = _tables(16, lambda e, f: e ^ f, lambda e, f: idx(mat(e) @ mat(f)))
    return validate_ring(A, M, one=9, name="M2(GF(2))")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], FiniteRing] = field(repr=False, compare=False)
    order: int
    facts: tuple[tuple[str, object], ...] = ()


def _zn_facts(n: int):
    return (("commutative", True), ("principal_right", True), ("nonunimodular_fcs_left", 0))


def _entries() -> list[CatalogEntry]:
    out = []
    for n in range(2, 17):
        out.append(CatalogEntry(f"Z{n}", lambda n=n: ring_zn(n), n, _zn_facts(n)))
    for q in (4, 8, 9):
        facts = (("commutative", True), ("units", q - 1), ("outliers_left", 0))
        out.append(CatalogEntry(f"GF({q})", lambda q=q: ring_gf(q), q, facts))
    out.append(
        CatalogEntry(
            "Z2[x]/(x^2)", lambda: ring_poly_sq(2), 4, (("local", True), ("units", 2), ("nilpotency", 2))
        )
    )
    out.append(
        CatalogEntry(
            "Z3[x]/(x^2)", lambda: ring_poly_sq(3), 9, (("local", True), ("units", 6), ("nilpotency", 2))
        )
    )
    out.append(
        CatalogEntry(
            "Z2xZ2",
            lambda: ring_product(ring_zn(2), ring_zn(2)),
            4,
            (("units", 1), ("maximal_right", 2), ("principal_right", True)),
        )
    )
    out.append(CatalogEntry("Z2xZ4", lambda: ring_product(ring_zn(2), ring_zn(4)), 8, (("commutative", True),)))
    out.append(
        CatalogEntry(
            "Z2xGF(4)", lambda: ring_product(ring_zn(2), ring_gf(4)), 8, (("radical_size", 1), ("units", 3))
        )
    )
    out.append(
        CatalogEntry(
            "Z2xZ2xZ2",
            lambda: ring_product(ring_product(ring_zn(2), ring_zn(2)), ring_zn(2)),
            8,
            (("maximal_right", 3),),
        )
    )
    out.append(CatalogEntry("Z3xZ3", lambda: ring_product(ring_zn(3), ring_zn(3)), 9, (("units", 4),)))
    out.append(CatalogEntry("Z4xZ4", lambda: ring_product(ring_zn(4), ring_zn(4)), 16, (("units", 4),)))
    out.append(
        CatalogEntry(
            "Z2xZ2[x]/(x^2)", lambda: ring_product(ring_zn(2), ring_poly_sq(2)), 8, (("maximal_right", 2),)
        )
    )
    for q in (2, 3, 4):
        facts = (("commutative", False), ("units", q * (q - 1) ** 2), ("maximal_right", 2))
        out.append(CatalogEntry(f"T2(GF({q}))", lambda q=q: ring_ternions(q), q**3, facts))
    out.append(
        CatalogEntry(
            "Z2xT2(GF(2))",
            lambda: ring_product(ring_zn(2), ring_ternions(2)),
            16,
            (("commutative", False), ("units", 2)),
        )
    )
    out.append(
        CatalogEntry(
            "M2(GF(2))", lambda: ring_m2_gf2(), 16, (("units", 6), ("radical_size", 1), ("commutative", False))
        )
    )
    return out


CATALOG: tuple[CatalogEntry, ...] = tuple(_entries())


def catalog_entry(name: str) -> CatalogEntry:
    for entry in CATALOG:
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog ring named {name!r}")


def catalog_ring(name: str) -> FiniteRing:
    return catalog_entry(name).build()


def catalog_rings(max_order: int | None = None) -> list[FiniteRing]:
    return [e.build() for e in CATALOG if max_order is None or e.order <= max_order]


# -- ring files ---------------------------------------------------------------


def _rows(table: np.ndarray) -> str:
    lines = ["    [" + ", ".join(str(int(x)) for x in row) + "]" for row in table]
    return "[\n" + ",\n".join(lines) + "\n  ]"


def dumps_ring(R: FiniteRing) -> str:
    """Canonical text: fixed key order, one table row per line."""
    parts = [
        f"  \"name\": {json.dumps(R.name)}",
        f"  \"order\": {R.order}",
        f"  \"one\": {R.one}",
        f"  \"add\": {_rows(R.add)}",
        f"  \"mul\": {_rows(R.mul)}",
    ]
    if R.meta:
        parts.append(f"  \"meta\": {json.dumps(R.meta, sort_keys=True)}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def loads_ring(text: str) -> FiniteRing:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RingFormatError(f"not valid JSON: {exc}") from None
    return ring_from_dict(data)


def ring_from_dict(data: dict) -> FiniteRing:
    if not isinstance(data, dict):
        raise RingFormatError("ring file must hold a JSON object")
    missing = [k for k in ("name", "order", "one", "add", "mul") if k not in data]
    if missing:
        raise RingFormatError(f"ring file lacks field(s): {', '.join(missing)}")
    order = data["order"]
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise RingFormatError(f"order must be a positive integer, got {order!r}")
    one = data["one"]
    if not isinstance(one, int) or isinstance(one, bool):
        raise RingFormatError(f"one must be an integer, got {one!r}")
    for key in ("add", "mul"):
        table = data[key]
        if not isinstance(table, list) or len(table) != order:
            raise RingFormatError(f"{key} must have {order} rows")
        for row in table:
            if not isinstance(row, list) or len(row) != order:
                raise RingFormatError(f"every {key} row must have {order} entries")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
                raise RingFormatError(f"{key} entries must be integers")
    return validate_ring(
        data["add"], data["mul"], one=one, name=str(data["name"]), order=order, meta=data.get("meta")
    )


def load_ring(path: str | Path) -> FiniteRing:
    return loads_ring(Path(path).read_text())


def save_ring(R: FiniteRing, path: str | Path) -> None:
    Path(path).write_text(dumps_ring(R))


def manifest() -> list[dict]:
    return [{"name": e.name, "order": e.order, "facts": dict(e.facts)} for e in CATALOG]
