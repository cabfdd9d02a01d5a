import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynrefl.correspondence import (
    LAYERS,
    BetaTable,
    PiTable,
    beta_from_bracket,
    beta_from_pi,
    bracket_from_beta,
    bracket_from_family,
    bracket_from_theta,
    check_layer,
    correspondence_chain,
    family_from_bracket,
    family_from_pi,
    layer_name,
    my_from_bracket,
    my_from_family,
    pi_from_beta,
    pi_from_family,
    theta_from_bracket,
)
from dynrefl.errors import AxiomViolated, NotAHomomorphism
from dynrefl.finite_algebra import enumerate_endomorphisms
from dynrefl.module_theory import my_of, theta_of
from dynrefl.reflection import family_builders
from oracles import L, X, pinv

END_S3 = 10


def _family(wb, kind, params=None):
    return family_builders(kind, wb.paired.G, wb.module.X.factors[0], params)


def _explicit(wb, digits):
    G = wb.paired.G
    endos = enumerate_endomorphisms(G)
    maps = {x: [G.carrier.label(v) for v in endos[d].map] for x, d in zip(wb.module.X.factors[0].labels, digits)}
    return _family(wb, "explicit", {"maps": maps})


def test_trivial_family_pi_is_unit(ex89):
    Pt = pi_from_family(ex89.module, _family(ex89, "trivial"))
    assert np.all(Pt.table == ex89.paired.L.unit)


def test_identity_family_pi_formula(ex89, oracle):
    Pt = pi_from_family(ex89.module, _family(ex89, "identity"))
    H = ex89.paired.H
    g = oracle.to_g
    for lam, a in itertools.product(L, L):
        conj = oracle.from_g[oracle.gmul(g[lam], g[oracle.mul(lam, a)], pinv(g[lam]))]
        want = oracle.div(lam, conj)
        for x in range(len(X)):
            assert H.label(Pt.table[H.index(lam), x, H.index(a)]) == want


def test_layers_satisfy_their_axioms(ex89):
    mod, S, F = ex89.module, ex89.sigma, ex89.family
    Pt = pi_from_family(mod, F)
    Bt = beta_from_pi(Pt)
    Br = bracket_from_beta(Bt)
    Th = theta_from_bracket(Br)
    for obj in (Pt, Bt, Br):
        assert check_layer(obj).passed
    assert check_layer(Th, S).passed
    assert [layer_name(o) for o in (F, Pt, Bt, Br, Th)] == list(LAYERS)


def _round_trips(wb, F):
    mod, S = wb.module, wb.sigma
    Pt = pi_from_family(mod, F)
    Bt = beta_from_pi(Pt)
    Br = bracket_from_beta(Bt)
    Th = theta_from_bracket(Br)
    mY = my_of(mod, S, Th.theta)
    assert np.array_equal(family_from_pi(Pt).maps, F.maps)
    assert np.array_equal(pi_from_beta(Bt).table, Pt.table)
    assert np.array_equal(beta_from_bracket(Br).table, Bt.table)
    assert np.array_equal(bracket_from_theta(Th, S).table, Br.table)
    assert np.array_equal(theta_of(mod, S, mY).table, Th.theta.table)
    assert np.array_equal(bracket_from_family(mod, F).table, Br.table)
    assert np.array_equal(family_from_bracket(Br).maps, F.maps)
    assert np.array_equal(my_from_bracket(Br).table, mY.table)
    assert np.array_equal(my_from_family(mod, F).table, mY.table)


def test_round_trips_ex89(ex89):
    _round_trips(ex89, ex89.family)


@pytest.mark.parametrize("kind", ["trivial", "identity"])
def test_round_trips_named_families(ex89, kind):
    _round_trips(ex89, _family(ex89, kind))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, END_S3 - 1), min_size=3, max_size=3))
def test_round_trips_random_families(ex89, digits):
    _round_trips(ex89, _explicit(ex89, digits))


def test_chain_walks_both_directions(ex89):
    mod, S, F = ex89.module, ex89.sigma, ex89.family
    Th = correspondence_chain("theta", F, mod, S)
    assert layer_name(Th) == "theta"
    back = correspondence_chain("family", Th, mod, S)
    assert np.array_equal(back.maps, F.maps)
    with pytest.raises(ValueError):
        correspondence_chain("nowhere", F, mod, S)


def test_corrupted_layers_are_rejected(ex89):
    Pt = pi_from_family(ex89.module, ex89.family)
    t = np.array(Pt.table)
    t[1, 0, 2] = (t[1, 0, 2] + 1) % ex89.paired.n
    bad = PiTable(Pt.mod, t)
    assert not check_layer(bad).passed
    with pytest.raises(AxiomViolated):
        beta_from_pi(bad)
    Bt = beta_from_pi(Pt)
    t = np.array(Bt.table)
    t[2, 1, 3] = (t[2, 1, 3] + 1) % ex89.paired.n
    with pytest.raises(AxiomViolated):
        pi_from_beta(BetaTable(Bt.mod, t))


def test_non_homomorphism_family_rejected(ex89):
    G = ex89.paired.G
    maps = {x: list(G.carrier.labels) for x in X}
    maps["x2"] = [G.carrier.labels[0], *reversed(G.carrier.labels[1:])]
    with pytest.raises(NotAHomomorphism):
        _family(ex89, "explicit", {"maps": maps})


def test_inner_family_members(ex89):
    G = ex89.paired.G
    F = ex89.family
    for x, gname in (("x1", "(132)"), ("x2", "(13)"), ("x3", "(12)")):
        gx = G.carrier.index(gname)
        for a in range(G.order):
            assert F.member(x)(a) == G.mul[G.mul[G.inv[gx], a], gx]
