import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynrefl.errors import (
    CapExceeded,
    DuplicateLabel,
    EmptyCarrier,
    NoUnit,
    NotABijection,
    NotAssociative,
    RowNotPermutation,
    ShapeError,
    SizeMismatch,
    UnitLawViolated,
    UnknownLabel,
)
from dynrefl.finite_algebra import (
    Carrier,
    build_named_group,
    compose_perms,
    cyclic_group,
    enumerate_endomorphisms,
    group_from_table,
    left_divide,
    make_paired,
    mu1,
    parse_cycles,
    symmetric_group,
    validate_left_quasigroup,
)
from dynrefl.fixtures import L_LABELS, QUASIGROUP_TABLE
from oracles import PERM, endomorphisms, pmul


@pytest.fixture(scope="module")
def table1():
    return validate_left_quasigroup(L_LABELS, QUASIGROUP_TABLE, "e_L")


def _mul(L, a, b):
    H = L.carrier
    return H.label(L.mul[H.index(a), H.index(b)])


def test_table1_products(table1):
    assert _mul(table1, "l2", "l3") == "l1"
    assert _mul(table1, "l3", "l2") == "e_L"


def test_table1_not_associative(table1):
    assert _mul(table1, _mul(table1, "l1", "l2"), "l3") == "l2"
    assert _mul(table1, "l1", _mul(table1, "l2", "l3")) == "l5"
    a, b, c = table1.associativity_witness()
    m = table1.mul
    assert m[m[a, b], c] != m[a, m[b, c]]
    assert not table1.is_group()


def test_singleton_quasigroup():
    L = validate_left_quasigroup(["e"], [["e"]], "e")
    assert L.order == 1 and L.is_group()


def test_left_division(table1):
    H = table1.carrier
    assert H.label(left_divide(table1, "l1", "l3")) == "l2"
    assert H.label(left_divide(table1, "l1", "e_L")) == "l5"
    for c in L_LABELS:
        assert H.label(left_divide(table1, "e_L", c)) == c


def test_validation_errors():
    with pytest.raises(RowNotPermutation):
        validate_left_quasigroup(["e", "a"], [["e", "a"], ["a", "a"]], "e")
    with pytest.raises(UnitLawViolated):
        validate_left_quasigroup(["e", "a"], [["a", "e"], ["e", "a"]], "e")
    with pytest.raises(ShapeError):
        validate_left_quasigroup(["e", "a"], [["e", "a"]], "e")
    with pytest.raises(UnknownLabel):
        validate_left_quasigroup(["e", "a"], [["e", "a"], ["a", "z"]], "e")
    with pytest.raises(EmptyCarrier):
        Carrier(())
    with pytest.raises(DuplicateLabel):
        Carrier(("a", "a"))


def test_named_groups():
    S3 = symmetric_group(3)
    assert S3.order == 6 and S3.carrier.index("id") == S3.unit
    assert not S3.is_abelian()
    C3 = cyclic_group(3)
    assert C3.order == 3 and C3.is_abelian()
    assert build_named_group("cyclic(4)").order == 4
    assert build_named_group({"product": [{"cyclic": 2}, {"cyclic": 3}]}).is_abelian()
    with pytest.raises(CapExceeded):
        symmetric_group(10)


def test_table1_as_group_reports_associativity():
    with pytest.raises(NotAssociative) as exc:
        group_from_table(L_LABELS, QUASIGROUP_TABLE)
    a, b, c = exc.value.details["witness"]
    L = validate_left_quasigroup(L_LABELS, QUASIGROUP_TABLE, "e_L")
    assert _mul(L, _mul(L, a, b), c) != _mul(L, a, _mul(L, b, c))


def test_group_without_unit():
    with pytest.raises(NoUnit):
        group_from_table(["a", "b"], [["a", "a"], ["a", "a"]])


def test_permutation_convention():
    # (12)(23): apply (23) first, so 1 -> 1 -> 2
    p, q = parse_cycles("(12)", 3), parse_cycles("(23)", 3)
    assert compose_perms(p, q) == (1, 2, 0)
    S3 = symmetric_group(3)
    g = S3.carrier.index
    assert S3.mul[g("(12)"), g("(23)")] == g("(123)")


def test_cycle_parser_matches_oracle():
    for name, img in PERM.items():
        assert parse_cycles(name, 3) == tuple(v - 1 for v in img)


def test_mu1_value():
    G = symmetric_group(3)
    g = G.carrier.index
    assert mu1(G, g("(12)"), g("(123)"), g("(23)")) == g("(132)")
    # oracle: a b^-1 c with right factor first
    want = pmul(pmul(PERM["(12)"], PERM["(132)"]), PERM["(23)"])
    assert want == PERM["(132)"]


@given(st.data())
def test_mu1_cancellation(data):
    G = symmetric_group(3)
    a, b, c = (data.draw(st.integers(0, 5)) for _ in range(3))
    assert mu1(G, a, a, c) == c
    assert mu1(G, a, b, b) == a


def test_endomorphism_counts_match_brute_force():
    S3 = symmetric_group(3)
    perms = list(PERM.values())
    assert len(endomorphisms(perms, pmul)) == 10
    assert len(enumerate_endomorphisms(S3)) == 10
    C3 = cyclic_group(3)
    assert len(endomorphisms([0, 1, 2], lambda a, b: (a + b) % 3)) == 3
    maps = {tuple(e.map.tolist()) for e in enumerate_endomorphisms(C3)}
    assert maps == {(0, 0, 0), (0, 1, 2), (0, 2, 1)}


@pytest.mark.parametrize("desc", ["symmetric(3)", "cyclic(3)", "cyclic(4)", {"product": [{"cyclic": 2}, {"cyclic": 2}]}])
def test_endomorphisms_are_homomorphisms_and_sorted(desc):
    G = build_named_group(desc)
    endos = enumerate_endomorphisms(G)
    assert all(e.homomorphism_witness() is None for e in endos)
    keys = [e.key() for e in endos]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert tuple([G.unit] * G.order) in keys
    brute = endomorphisms(list(range(G.order)), lambda a, b: int(G.mul[a, b]))
    assert len(brute) == len(endos)


def test_pairing_errors():
    L = validate_left_quasigroup(L_LABELS, QUASIGROUP_TABLE, "e_L")
    with pytest.raises(SizeMismatch):
        make_paired(L, cyclic_group(3), ["0", "1", "2"])
    with pytest.raises(NotABijection):
        make_paired(L, symmetric_group(3), {"e_L": "id"})
    with pytest.raises(NotABijection):
        make_paired(L, symmetric_group(3), ["id"] * 6)


@st.composite
def left_quasigroups(draw, max_order=5):
    """Random tables with unit 0 whose rows are permutations fixing column 0 at the row."""
    n = draw(st.integers(1, max_order))
    rows = [list(range(n))]
    for a in range(1, n):
        rest = [v for v in range(n) if v != a]
        perm = draw(st.permutations(rest))
        rows.append([a] + list(perm))
    # unit law needs a * 0 = a, which forces mul[a][0] = a as built
    return n, rows


@settings(max_examples=60, deadline=None)
@given(left_quasigroups())
def test_left_division_inverts_multiplication(case):
    n, rows = case
    labels = [f"q{i}" for i in range(n)]
    L = validate_left_quasigroup(labels, [[labels[v] for v in r] for r in rows], "q0")
    for a, b in itertools.product(range(n), repeat=2):
        assert L.div[a, L.mul[a, b]] == b
        assert L.mul[a, L.div[a, b]] == b
    assert np.array_equal(L.mul[0], np.arange(n))
