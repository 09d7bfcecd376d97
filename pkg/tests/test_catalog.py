import json

import pytest

import oracles
from fcslab import catalog
from fcslab.ideals import Side, is_local, is_principal_ideal_ring, jacobson_radical, maximal_ideals
from fcslab.module import fcs_list, outliers
from fcslab.ring import NotAssociative, RingFormatError, is_commutative, units, validate_ring


def _fact(R, key):
    if key == "commutative":
        return is_commutative(R)
    if key == "units":
        return len(units(R))
    if key == "local":
        return is_local(R)
    if key == "nilpotency":
        return jacobson_radical(R).nilpotency
    if key == "radical_size":
        return len(jacobson_radical(R).radical)
    if key == "maximal_right":
        return len(maximal_ideals(R, Side.RIGHT))
    if key == "principal_right":
        return is_principal_ideal_ring(R, Side.RIGHT)
    if key == "outliers_left":
        return len(outliers(R))
    if key == "nonunimodular_fcs_left":
        return sum(not s.unimodular_generated for s in fcs_list(R))
    raise KeyError(key)


@pytest.mark.parametrize("entry", catalog.CATALOG, ids=lambda e: e.name)
def test_catalog_entry_facts(entry):
    R = entry.build()
    assert R.name == entry.name and R.order == entry.order
    for key, value in entry.facts:
        assert _fact(R, key) == value, key


def test_zn():
    assert is_local(catalog.ring_zn(4))
    assert jacobson_radical(catalog.ring_zn(4)).radical.members == {0, 2}
    assert len(maximal_ideals(catalog.ring_zn(6), Side.RIGHT)) == 2
    assert catalog.ring_zn(2) == catalog.ring_gf(2)
    with pytest.raises(ValueError):
        catalog.ring_zn(1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_gf_is_a_field(q):
    F = catalog.ring_gf(q)
    assert F.order == q and is_commutative(F)
    assert units(F) == set(range(1, q))
    assert [len(I) for I in maximal_ideals(F, Side.RIGHT)] == [1]


def test_gf_rejects_unsupported():
    with pytest.raises(ValueError):
        catalog.ring_gf(6)
    with pytest.raises(ValueError):
        catalog.ring_gf(16)


def test_gf_pinned_polynomials():
    assert catalog.ring_gf(4).meta == {"irreducible": [1, 1, 1]}
    F = catalog.ring_gf(4)
    # x is index 2 and x^2 = x + 1 (index 3)
    assert F.mul[2, 2] == 3
    F9 = catalog.ring_gf(9)
    # x is index 3 and x^2 = -1 = 2
    assert F9.mul[3, 3] == 2


@pytest.mark.parametrize("q", [2, 3, 4])
def test_ternions(q):
    T = catalog.ring_ternions(q)
    assert T.order == q**3
    assert not is_commutative(T)
    # diagonal entries must be units, the corner entry is free
    assert len(units(T)) == q * (q - 1) ** 2
    assert len(maximal_ideals(T, Side.RIGHT)) == 2
    with pytest.raises(ValueError):
        catalog.ring_ternions(5)


def test_products():
    z2, z4, gf4 = catalog.ring_zn(2), catalog.ring_zn(4), catalog.ring_gf(4)
    P = catalog.ring_product(z2, z2)
    assert len(units(P)) == 1 and len(maximal_ideals(P, Side.RIGHT)) == 2
    assert is_principal_ideal_ring(P, Side.RIGHT)
    P = catalog.ring_product(z2, z4)
    assert P.order == 8 and is_commutative(P)
    P = catalog.ring_product(z2, gf4)
    assert jacobson_radical(P).radical.members == {0}
    with pytest.raises(ValueError):
        catalog.ring_product(catalog.ring_ternions(4), z2)


@pytest.mark.parametrize("pair", [("Z2", "Z4"), ("Z3", "GF(4)"), ("Z2", "T2(GF(2))"), ("Z4", "Z4")])
def test_product_units_are_componentwise(pair):
    R, S = (catalog.catalog_ring(n) if n != "Z3" else catalog.ring_zn(3) for n in pair)
    P = catalog.ring_product(R, S)
    m = S.order
    assert units(P) == {r * m + s for r in units(R) for s in units(S)}


def test_poly_sq():
    R = catalog.ring_poly_sq(2)
    assert R.order == 4 and is_local(R)
    assert jacobson_radical(R).radical.members == {0, 2}  # {0, x}
    assert len(units(R)) == 2
    R = catalog.ring_poly_sq(3)
    assert R.order == 9 and len(units(R)) == 6
    assert jacobson_radical(R).nilpotency == 2
    with pytest.raises(ValueError):
        catalog.ring_poly_sq(5)


def test_m2_gf2():
    R = catalog.ring_m2_gf2()
    assert R.order == 16 and len(units(R)) == 6
    assert jacobson_radical(R).radical.members == {0}
    assert len(maximal_ideals(R, Side.RIGHT)) == 3


@pytest.mark.parametrize("entry", catalog.CATALOG, ids=lambda e: e.name)
def test_roundtrip_is_byte_identical(entry, tmp_path):
    R = entry.build()
    path = tmp_path / "ring.json"
    catalog.save_ring(R, path)
    first = path.read_bytes()
    S = catalog.load_ring(path)
    assert S == R and S.name == R.name and S.meta == R.meta
    catalog.save_ring(S, path)
    assert path.read_bytes() == first
    assert json.loads(first)["order"] == R.order


def test_load_rejects_order_mismatch(tmp_path):
    doc = json.loads(catalog.dumps_ring(catalog.ring_zn(3)))
    doc["order"] = 4
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(RingFormatError):
        catalog.load_ring(path)


def test_load_rejects_broken_associativity(tmp_path):
    R = catalog.ring_zn(4)
    mul = R.mul.tolist()
    mul[2][3] = 1
    doc = {"name": "bad", "order": 4, "one": 1, "add": R.add.tolist(), "mul": mul}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(NotAssociative):
        catalog.load_ring(path)


@pytest.mark.parametrize(
    "doc",
    [
        "not json",
        "[]",
        '{"name": "x", "order": 2, "one": 1, "add": [[0, 1], [1, 0]]}',
        '{"name": "x", "order": 2, "one": 1, "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 5]]}',
        '{"name": "x", "order": 2, "one": 1, "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, true]]}',
        '{"name": "x", "order": 2, "one": 1, "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0]]}',
    ],
)
def test_load_rejects_malformed(doc):
    with pytest.raises(RingFormatError):
        catalog.loads_ring(doc)


def test_manifest_lists_every_entry():
    names = [m["name"] for m in catalog.manifest()]
    assert names == [e.name for e in catalog.CATALOG]
    assert len(set(names)) == len(names)
    order4 = sorted(e.name for e in catalog.CATALOG if e.order == 4)
    assert order4 == sorted(["Z4", "Z2xZ2", "GF(4)", "Z2[x]/(x^2)"])


@pytest.mark.parametrize("entry", [e for e in catalog.CATALOG if e.order <= 9], ids=lambda e: e.name)
def test_constructors_pass_brute_axioms(entry):
    R = entry.build()
    assert oracles.axioms_hold(*oracles.tables(R))
    assert validate_ring(R.add, R.mul, one=R.one) == R
