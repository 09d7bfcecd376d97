"""Exhaustive checks of the structural results on free cyclic submodules.

Each check takes a validated ring and returns a :class:`CheckResult`.  Checks
always look at the left module; :func:`run_all` with ``side="right"`` runs
them on the opposite ring.  A failing check always carries a witness.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import numpy as np

from .ideals import (
    Side,
    from_mask,
    ideal_masks,
    is_local,
    is_principal_ideal_ring,
    jacobson_radical,
    maximal_masks,
    nonprincipal_masks,
    principal_masks,
    to_mask,
)
from .module import Plane, intersection_property, outliers, plane
from .ring import FiniteRing, check_order_cap, is_commutative, opposite


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "n/a"


@dataclass
class CheckResult:
    check_id: str
    status: Status
    witness: dict | None = None
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out = {"check": self.check_id, "status": self.status.value}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        if timings:
            out["elapsed_s"] = round(self.elapsed, 6)
        return out


def _pass(**details) -> CheckResult:
    return CheckResult("", Status.PASS, details=details)


def _fail(**witness) -> CheckResult:
    return CheckResult("", Status.FAIL, witness=_jsonable(witness))


def _na(reason: str) -> CheckResult:
    return CheckResult("", Status.NOT_APPLICABLE, details={"reason": reason})


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def _vec(P: Plane, code) -> list[int]:
    return list(P.vector(code))


def to_set(xs) -> frozenset[int]:
    return frozenset(int(x) for x in xs)


# -- individual checks --------------------------------------------------------


def check_annihilator_meet(R: FiniteRing) -> CheckResult:
    """Left annihilators are left ideals, right annihilators right ideals,
    and the annihilator of a union is the meet of annihilators (over all
    pairs of singletons and the pairs' union)."""
    zero = R.mul == 0
    left = [to_set(np.flatnonzero(zero[:, a])) for a in R.elements]
    right = [to_set(np.flatnonzero(zero[a, :])) for a in R.elements]
    lefts, rights = set(ideal_masks(R, Side.LEFT)), set(ideal_masks(R, Side.RIGHT))
    for a in R.elements:
        if to_mask(left[a]) not in lefts:
            return _fail(element=a, side="left")
        if to_mask(right[a]) not in rights:
            return _fail(element=a, side="right")
    for a, b in product(R.elements, repeat=2):
        union = to_set(np.flatnonzero(zero[:, a] & zero[:, b]))
        if left[a] & left[b] != union:
            return _fail(P=[a], S=[b])
    return _pass()


def check_bezout(R: FiniteRing) -> CheckResult:
    """``aR + bR = R`` exactly when ``ax + by = 1`` is solvable."""
    P = plane(R)
    A, M = R.add, R.mul
    for a in R.elements:
        # sums[b, x, y] = a x + b y
        sums = A[M[a][None, :, None], M[:, None, :]]
        solvable = (sums == R.one).any(axis=(1, 2))
        codes = a * R.order + np.arange(R.order)
        bad = np.flatnonzero(solvable != P.unimodular[codes])
        if len(bad):
            return _fail(vector=[a, int(bad[0])])
    return _pass()


def check_freeness_criterion(R: FiniteRing) -> CheckResult:
    """Annihilator criterion agrees with ``|R(a,b)| = |R|``."""
    P = plane(R)
    sizes = np.array([len(np.unique(row)) for row in P.orbit])
    bad = np.flatnonzero((sizes == R.order) != P.free)
    if len(bad):
        return _fail(vector=_vec(P, bad[0]), orbit_size=int(sizes[bad[0]]))
    return _pass(free_vectors=int(P.free.sum()))


def check_unimodular_free(R: FiniteRing) -> CheckResult:
    """Every unimodular vector generates a free cyclic submodule."""
    P = plane(R)
    bad = np.flatnonzero(P.unimodular & ~P.free)
    if len(bad):
        return _fail(vector=_vec(P, bad[0]))
    return _pass(unimodular_vectors=int(P.unimodular.sum()))


def check_two_max_ideals(R: FiniteRing) -> CheckResult:
    """For zero-divisor entries: unimodular iff separated by two maximal
    right ideals (``a`` in ``I1 - I2``, ``b`` in ``I2 - I1``).

    The witness names the failing direction and, for a separated pair that is
    not unimodular, a maximal right ideal holding both entries.
    """
    P = plane(R)
    maxes = maximal_masks(R, Side.RIGHT)
    separated = 0
    for c in range(P.n * P.n):
        a, b = int(P.a[c]), int(P.b[c])
        if P.units[a] or P.units[b]:
            continue
        sep = any(
            (I1 >> a) & 1 and not (I2 >> a) & 1 and (I2 >> b) & 1 and not (I1 >> b) & 1
            for I1 in maxes
            for I2 in maxes
        )
        if sep and not P.unimodular[c]:
            common = next(m for m in maxes if (m >> a) & 1 and (m >> b) & 1)
            return _fail(
                vector=[a, b],
                direction="separated but not unimodular",
                common_maximal_ideal=from_mask(common),
                maximal_right_ideals=len(maxes),
            )
        if P.unimodular[c] and not sep:
            return _fail(vector=[a, b], direction="unimodular but not separated")
        separated += sep
    return _pass(maximal_right_ideals=len(maxes), type_ii_vectors=separated)


def check_common_maximal_ideal(R: FiniteRing) -> CheckResult:
    """Unimodular iff no maximal right ideal contains both entries."""
    P = plane(R)
    maxes = maximal_masks(R, Side.RIGHT)
    for c in range(P.n * P.n):
        a, b = int(P.a[c]), int(P.b[c])
        shared = any((m >> a) & 1 and (m >> b) & 1 for m in maxes)
        if shared == bool(P.unimodular[c]):
            return _fail(vector=[a, b], unimodular=bool(P.unimodular[c]), shared=shared)
    return _pass(maximal_right_ideals=len(maxes))


def check_scaling(R: FiniteRing) -> CheckResult:
    """(1) ``R(alpha a, alpha b)`` lies in ``R(a, b)``; (2) for free ``R(a, b)``
    equality holds iff ``alpha`` is a unit; (3) scaling a unimodular vector
    keeps it unimodular iff ``alpha`` is a unit."""
    P = plane(R)
    N = P.n * P.n
    member = np.zeros((N, N), dtype=bool)
    rows = np.arange(N)[:, None]
    member[rows, P.orbit] = True
    size = member.sum(axis=1)
    for alpha in R.elements:
        w = P.orbit[:, alpha]
        inside = member[rows, P.orbit[w]].all(axis=1)
        if not inside.all():
            v = int(np.flatnonzero(~inside)[0])
            return _fail(part=1, alpha=alpha, vector=_vec(P, v))
        equal = size[w] == size
        unit = bool(P.units[alpha])
        bad = np.flatnonzero(P.free & (equal != unit))
        if len(bad):
            return _fail(part=2, alpha=alpha, vector=_vec(P, bad[0]))
        bad = np.flatnonzero(P.unimodular & (P.unimodular[w] != unit))
        if len(bad):
            return _fail(part=3, alpha=alpha, vector=_vec(P, bad[0]))
    return _pass()


def merged_outlier_mask(R: FiniteRing) -> np.ndarray:
    """Outliers by the ideal criterion: no ``alpha`` with ``a, b`` in
    ``alpha R`` and ``aR + bR = alpha R``."""
    P = plane(R)
    pm = principal_masks(R, Side.RIGHT)
    out = np.zeros(P.n * P.n, dtype=bool)
    for c in range(P.n * P.n):
        a, b = int(P.a[c]), int(P.b[c])
        s = P.right_sum[c]
        out[c] = not any((m >> a) & 1 and (m >> b) & 1 and m == s for m in pm)
    return out


def check_outlier_characterization(R: FiniteRing) -> CheckResult:
    P = plane(R)
    merged = merged_outlier_mask(R)
    bad = np.flatnonzero(merged != P.outlier)
    if len(bad):
        return _fail(vector=_vec(P, bad[0]), by_definition=bool(P.outlier[bad[0]]), by_ideals=bool(merged[bad[0]]))
    return _pass(outliers=int(P.outlier.sum()))


def check_duality(R: FiniteRing) -> CheckResult:
    """Pairs in a common non-principal right ideal, in no common proper
    principal right ideal and in no common maximal left ideal are left
    outliers whose transpose is right-unimodular."""
    P = plane(R)
    Q = plane(opposite(R))
    full = (1 << R.order) - 1
    nonprincipal = nonprincipal_masks(R, Side.RIGHT)
    proper_principal = set(principal_masks(R, Side.RIGHT)) - {full}
    max_left = maximal_masks(R, Side.LEFT)

    def together(a, b, masks):
        return any((m >> a) & 1 and (m >> b) & 1 for m in masks)

    hits = 0
    for c in range(P.n * P.n):
        a, b = int(P.a[c]), int(P.b[c])
        if not together(a, b, nonprincipal) or together(a, b, proper_principal) or together(a, b, max_left):
            continue
        hits += 1
        if not P.outlier[c]:
            return _fail(vector=[a, b], left_outlier=False)
        if not Q.unimodular[c]:
            return _fail(vector=[a, b], right_unimodular=False)
    return _pass(pairs=hits)


def check_radical(R: FiniteRing, dim: int = 2) -> CheckResult:
    """No vector with all ``dim`` entries in the radical is free, and the
    radical is nilpotent: all products of ``m`` radical elements vanish while
    some product of ``m - 1`` does not."""
    info = jacobson_radical(R)
    J = sorted(info.radical.members)
    m = info.nilpotency
    prods = {0} if m == 1 else set(J)
    for _ in range(m - 1):
        last = prods
        prods = {int(R.mul[j, p]) for j in J for p in prods}
    if prods != {0} or (m > 1 and last == {0}):
        return _fail(nilpotency=m, products=sorted(prods))
    zero = R.mul == 0
    kills = {j: zero[:, j] for j in J}
    checked = 0
    for vec in product(J, repeat=dim):
        common = np.logical_and.reduce([kills[j] for j in vec])
        if common.sum() <= 1:
            return _fail(vector=list(vec))
        checked += 1
    return _pass(radical=J, nilpotency=m, dim=dim, vectors=checked)


def check_local(R: FiniteRing) -> CheckResult:
    """For local rings: outliers never generate FCSs, outlier iff
    ``a`` not in ``bR`` and ``b`` not in ``aR``, and every free generator is
    unimodular."""
    if not is_local(R):
        return _na("ring is not local")
    P = plane(R)
    pm = principal_masks(R, Side.RIGHT)
    bad = np.flatnonzero(P.outlier & P.free)
    if len(bad):
        return _fail(part=1, vector=_vec(P, bad[0]))
    for c in range(P.n * P.n):
        a, b = int(P.a[c]), int(P.b[c])
        crit = not (pm[b] >> a) & 1 and not (pm[a] >> b) & 1
        if crit != bool(P.outlier[c]):
            return _fail(part=2, vector=[a, b])
    bad = np.flatnonzero(P.free & ~P.unimodular)
    if len(bad):
        return _fail(part=3, vector=_vec(P, bad[0]))
    return _pass(outliers=int(P.outlier.sum()))


def check_principal_necessity(R: FiniteRing) -> CheckResult:
    """Vectors inside one proper principal right ideal are never free; in a
    right principal ideal ring every free generator is unimodular."""
    P = plane(R)
    full = (1 << R.order) - 1
    for m in sorted(set(principal_masks(R, Side.RIGHT)) - {full}):
        members = np.array(from_mask(m))
        codes = (members[:, None] * R.order + members[None, :]).ravel()
        bad = codes[P.free[codes]]
        if len(bad):
            return _fail(part=1, ideal=from_mask(m), vector=_vec(P, bad[0]))
    if not is_principal_ideal_ring(R, Side.RIGHT):
        return _pass(pir="n/a")
    bad = np.flatnonzero(P.free & ~P.unimodular)
    if len(bad):
        return _fail(part=2, vector=_vec(P, bad[0]))
    return _pass(pir="pass")


def check_associative_scaling(R: FiniteRing) -> CheckResult:
    """Scaling a unimodular vector into a non-unimodular one never yields a
    free vector; so every free generator is unimodular or an outlier."""
    P = plane(R)
    w = P.orbit[P.unimodular]
    bad = ~P.unimodular[w] & P.free[w]
    if bad.any():
        i, alpha = np.argwhere(bad)[0]
        v = np.flatnonzero(P.unimodular)[i]
        return _fail(vector=_vec(P, v), alpha=int(alpha))
    bad = np.flatnonzero(P.free & ~P.unimodular & P.covered)
    if len(bad):
        return _fail(vector=_vec(P, bad[0]), covered_free_nonunimodular=True)
    return _pass()


def check_main_condition(R: FiniteRing) -> CheckResult:
    """A non-unimodular FCS forces at least two maximal right ideals and a
    non-principal right ideal.  The converse is recorded, not asserted."""
    P = plane(R)
    _, canon, unimod = P.fcs()
    n_max = len(maximal_masks(R, Side.RIGHT))
    nonprincipal = len(nonprincipal_masks(R, Side.RIGHT))
    condition = n_max >= 2 and nonprincipal >= 1
    exists = bool((~unimod).any())
    details = {
        "maximal_right_ideals": n_max,
        "nonprincipal_right_ideals": nonprincipal,
        "nonunimodular_fcs": int((~unimod).sum()),
        "condition_without_nonunimodular_fcs": condition and not exists,
    }
    if exists and not condition:
        g = canon[np.flatnonzero(~unimod)[0]]
        return CheckResult("", Status.FAIL, witness={"generator": _vec(P, g), **details})
    return _pass(**details)


def check_commutative_symmetry(R: FiniteRing) -> CheckResult:
    """In a commutative ring left and right outliers coincide."""
    if not is_commutative(R):
        return _na("ring is not commutative")
    left, right = outliers(R), outliers(opposite(R))
    if left != right:
        v = sorted(left ^ right)[0]
        return _fail(vector=list(v))
    return _pass()


CHECKS: tuple[tuple[str, Callable[..., CheckResult]], ...] = (
    ("annihilator_meet", check_annihilator_meet),
    ("bezout", check_bezout),
    ("freeness_criterion", check_freeness_criterion),
    ("unimodular_free", check_unimodular_free),
    ("two_max_ideals", check_two_max_ideals),
    ("common_maximal_ideal", check_common_maximal_ideal),
    ("scaling", check_scaling),
    ("outlier_characterization", check_outlier_characterization),
    ("duality", check_duality),
    ("radical", check_radical),
    ("local_ring", check_local),
    ("principal_necessity", check_principal_necessity),
    ("associative_scaling", check_associative_scaling),
    ("main_condition", check_main_condition),
    ("commutative_symmetry", check_commutative_symmetry),
)


@dataclass
class TheoremReport:
    ring: str
    side: str
    checks: list[CheckResult]
    facts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status is not Status.FAIL for c in self.checks)

    def summary(self) -> dict[str, int]:
        counts = {s.value: 0 for s in Status}
        for c in self.checks:
            counts[c.status.value] += 1
        return counts

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "ring": self.ring,
            "side": self.side,
            "summary": self.summary(),
            "facts": self.facts,
            "checks": [c.to_dict(timings) for c in self.checks],
        }

    def to_text(self, timings: bool = False) -> str:
        lines = [f"{self.ring} [{self.side}]"]
        width = max(len(c.check_id) for c in self.checks)
        for c in self.checks:
            line = f"  {c.check_id:<{width}}  {c.status.value:<4}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            if timings:
                line += f"  {c.elapsed * 1000:.1f} ms"
            lines.append(line)
        s = self.summary()
        lines.append(f"  -- pass={s['pass']} fail={s['fail']} n/a={s['n/a']}")
        for key, value in self.facts.items():
            lines.append(f"  {key}: {value}")
        return "\n".join(lines)


def _facts(R: FiniteRing) -> dict:
    P = plane(R)
    _, canon, unimod = P.fcs()
    outl = np.flatnonzero(P.outlier)
    nonuni = canon[~unimod]
    prop, pair = intersection_property(R)
    facts = {
        "outliers": int(len(outl)),
        "free_outliers": int((P.outlier & P.free).sum()),
        "fcs": int(len(canon)),
        "nonunimodular_fcs": int(len(nonuni)),
        "fcs_intersection_property": prop,
    }
    if len(outl):
        facts["outlier_witness"] = _vec(P, outl[0])
    if len(nonuni):
        facts["nonunimodular_fcs_generators"] = [_vec(P, g) for g in nonuni]
    if pair is not None:
        facts["disjoint_fcs_pair"] = [list(pair[0]), list(pair[1])]
    return facts


def run_all(R: FiniteRing, side: Side | str = Side.LEFT, radical_dim: int = 2) -> TheoremReport:
    """Run every registered check, in registration order."""
    side = Side.parse(side)
    check_order_cap(R)
    S = opposite(R) if side is Side.RIGHT else R
    results = []
    for check_id, fn in CHECKS:
        start = time.perf_counter()
        res = fn(S, radical_dim) if fn is check_radical else fn(S)
        res.elapsed = time.perf_counter() - start
        res.check_id = check_id
        results.append(res)
    return TheoremReport(ring=R.name, side=side.value, checks=results, facts=_facts(S))
