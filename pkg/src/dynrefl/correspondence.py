"""The chain of equivalent data behind a compatible action ``m_Y``.

Five layers, each a dense table, each with its own axiom set::

    HomFamily   f_x : G -> G                 homomorphism law
    PiTable     Pi^lam_x(a)                  Pi1, Pi2
    BetaTable   beta^lam_x(a)                beta1, beta2
    BracketTable  a []^lam_x b               shikaku1-3, equivbraidcomm
    theta_Y     twisted-monoid action on Y   thetaYaction1/2, thetamodule1/2

Every converter validates its input first and raises :class:`AxiomViolated`
with the failing equation and witness.  ``x`` always ranges over ``X``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AxiomViolated, NotAHomomorphism, ShapeError
from .finite_algebra import Carrier, FiniteGroup, GroupEndomorphism
from .module_theory import LeftModule, check_theta, dot_lambda, rho
from .report import CheckResult, Report, Witness, timed
from .seth import SetHMorphism, identity, morphism_from_table, tensor
from .yang_baxter import DynamicalYBMap


@dataclass(frozen=True)
class _Space:
    """Stand-in for a Set_H object when rendering table witnesses."""

    H: Carrier
    factors: tuple


def _compare(name, lhs, rhs, P, factors, value_factors=None) -> CheckResult:
    """Exhaustive comparison of two arrays indexed ``[lam, *factors]``."""
    with timed() as clock:
        lhs, rhs = np.broadcast_arrays(lhs, rhs)
        bad = np.argwhere(lhs != rhs)
    count = int(lhs.size)
    if len(bad) == 0:
        return CheckResult(name, True, count, clock.seconds)
    idx = tuple(int(v) for v in bad[0])
    space = _Space(P.H, tuple(factors))
    values = None if value_factors is None else _Space(P.H, tuple(value_factors))
    w = Witness(name, idx[0], idx[1:], (int(lhs[idx]),), (int(rhs[idx]),), space, values)
    return CheckResult(name, False, count, clock.seconds, w)


def _raise_first(rep: Report, layer: str):
    bad = rep.failures()
    if bad:
        r = bad[0]
        details = {"layer": layer, "equation": r.name}
        if r.witness is not None:
            details["witness"] = r.witness.to_dict() if hasattr(r.witness, "to_dict") else r.witness
        raise AxiomViolated(f"{layer}: {r.name} fails", **details)


def _x_shift(mod: LeftModule):
    """``x' = m_X(lam0)(lam0 \\ lam, x)`` as a table ``[lam, x]``."""
    P = mod.base
    act = mod.act_table()
    lam = np.arange(P.n)[:, None]
    return act[P.lambda0, P.ldiv(P.lambda0, lam), np.arange(mod.X.size)[None, :]]


def _x_back(mod: LeftModule):
    """``[mu, lam, x] -> m_X(mu)(mu \\ lam, x)``."""
    P = mod.base
    act = mod.act_table()
    mu = np.arange(P.n)[:, None, None]
    lam = np.arange(P.n)[None, :, None]
    return act[mu, P.ldiv(mu, lam), np.arange(mod.X.size)[None, None, :]]


def _grid(P, nx, k):
    """Broadcastable ``lam, x, a1..ak`` index arrays."""
    dims = 2 + k
    shape = lambda ax, size: tuple(size if i == ax else 1 for i in range(dims))
    out = [np.arange(P.n).reshape(shape(0, P.n)), np.arange(nx).reshape(shape(1, nx))]
    out += [np.arange(P.n).reshape(shape(2 + i, P.n)) for i in range(k)]
    return out


# -- layers -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HomFamily:
    """``x -> f_x``, one endomorphism of G per element of X."""

    group: FiniteGroup
    X: Carrier
    maps: np.ndarray  # [x, g]

    def __post_init__(self):
        arr = np.asarray(self.maps, dtype=np.int64)
        if arr.shape != (len(self.X), self.group.order):
            raise ShapeError(f"family must be {len(self.X)}x{self.group.order}")
        arr.flags.writeable = False
        object.__setattr__(self, "maps", arr)

    def member(self, x) -> GroupEndomorphism:
        return GroupEndomorphism(self.group, self.maps[self.X.index(x)])

    def check(self) -> Report:
        G = self.group
        rep = Report("hom family")
        for x in range(len(self.X)):
            w = GroupEndomorphism(G, self.maps[x]).homomorphism_witness()
            name = f"homomorphism[{self.X.label(x)}]"
            if w is None:
                rep.add(CheckResult(name, True, G.order**2))
            else:
                g, h = w
                f = self.maps[x]
                rep.add(CheckResult(name, False, G.order**2, witness={
                    "check": name, "x": self.X.label(x),
                    "inputs": [G.carrier.label(g), G.carrier.label(h)],
                    "lhs": [G.carrier.label(f[G.mul[g, h]])],
                    "rhs": [G.carrier.label(G.mul[f[g], f[h]])],
                }))
        return rep

    def require(self):
        bad = self.check().failures()
        if bad:
            raise NotAHomomorphism(f"{bad[0].name} fails", witness=bad[0].witness)
        return self

    def same_as(self, other: "HomFamily") -> bool:
        return np.array_equal(self.maps, other.maps)


def family_from_members(G: FiniteGroup, X: Carrier, members) -> HomFamily:
    """``members`` maps each x label to an endomorphism, image list or dict."""
    rows = []
    for x in X.labels:
        f = members[x]
        if isinstance(f, GroupEndomorphism):
            rows.append(f.map)
        elif isinstance(f, dict):
            rows.append([G.carrier.index(f[G.carrier.label(g)]) for g in range(G.order)])
        else:
            rows.append([G.carrier.index(v) for v in f])
    return HomFamily(G, X, np.array(rows, dtype=np.int64))


@dataclass(frozen=True, eq=False)
class _Table:
    mod: LeftModule
    table: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.table, dtype=np.int64)
        arr.flags.writeable = False
        object.__setattr__(self, "table", arr)

    @property
    def base(self):
        return self.mod.base

    def same_as(self, other) -> bool:
        return type(self) is type(other) and np.array_equal(self.table, other.table)


class PiTable(_Table):
    """``table[lam, x, a] = Pi^lam_x(a)``."""


class BetaTable(_Table):
    """``table[lam, x, a] = beta^lam_x(a)``."""


class BracketTable(_Table):
    """``table[lam, x, a, b] = a []^lam_x b``."""

    def __call__(self, lam, x, a, b) -> int:
        return int(self.table[lam, x, a, b])


@dataclass(frozen=True, eq=False)
class TwistedAction:
    mod: LeftModule
    theta: SetHMorphism

    @property
    def base(self):
        return self.mod.base

    def same_as(self, other) -> bool:
        return np.array_equal(self.theta.table, other.theta.table)


# -- axiom sets --------------------------------------------------------------

def check_bracket(B: BracketTable) -> Report:
    P, mod = B.base, B.mod
    t, act = B.table, mod.act_table()
    pi, pinv = P.pi, P.pinv
    nx = mod.X.size
    L, X = P.H, mod.X.factors[0]
    lam, x, a, b, c = _grid(P, nx, 3)
    rep = Report("bracket")
    rep.add(_compare("shikaku1", t[lam, x, dot_lambda(P, lam, a, b), c], t[lam, x, a, t[lam, x, b, c]], P, (X, L, L, L)))
    lam2, x2, b2 = _grid(P, nx, 1)
    rep.add(_compare("shikaku2", t[lam2, x2, P.L.unit, b2], b2 + 0 * lam2 + 0 * x2, P, (X, L)))
    lb = P.lmul(lam, b)
    lhs = P.ldiv(lam, P.lmul(lb, t[lb, x, a, c]))
    rhs = t[lam, act[lam, b, x], rho(P, lam, b, a), P.ldiv(lam, P.lmul(lb, c))]
    rep.add(_compare("shikaku3", lhs, rhs, P, (X, L, L, L)))
    la = P.lmul(lam, a)
    lhs = t[lam, x, a, dot_lambda(P, lam, b, c)]
    rhs = P.ldiv(lam, pinv[P.gmul(pi[la], P.ginv(pi[lam]), pi[lb], P.ginv(pi[la]), pi[P.lmul(lam, t[lam, x, a, c])])])
    rep.add(_compare("equivbraidcomm", lhs, rhs, P, (X, L, L, L)))
    return rep


def _beta_rhs(P, lam, a, b, beta_a):
    """``pi^-1(pi(lam a) pi(lam)^-1 pi(lam b) pi(lam a)^-1 pi(lam beta_a))``."""
    pi, pinv = P.pi, P.pinv
    la = P.lmul(lam, a)
    return pinv[P.gmul(pi[la], P.ginv(pi[lam]), pi[P.lmul(lam, b)], P.ginv(pi[la]), pi[P.lmul(lam, beta_a)])]


def check_beta(Bt: BetaTable) -> Report:
    P, mod = Bt.base, Bt.mod
    t = Bt.table
    pi, pinv = P.pi, P.pinv
    L, X = P.H, mod.X.factors[0]
    lam, x, a, b = _grid(P, mod.X.size, 2)
    back = _x_back(mod)
    rep = Report("beta")
    la = P.lmul(lam, a)
    lhs = t[lam, x, dot_lambda(P, lam, a, b)]
    rhs = P.ldiv(lam, pinv[P.gmul(pi[la], P.ginv(pi[lam]), pi[P.lmul(lam, t[lam, x, b])], P.ginv(pi[la]), pi[P.lmul(lam, t[lam, x, a])])])
    rep.add(_compare("beta1", lhs, rhs, P, (X, L, L)))
    lb = P.lmul(lam, b)
    lhs = P.lmul(lb, t[lb, back[lb, lam, x], rho(P, lb, P.ldiv(lb, lam), a)])
    rhs = _beta_rhs(P, lam, a, b, t[lam, x, a])
    rep.add(_compare("beta2", lhs, rhs, P, (X, L, L)))
    return rep


def check_pi(Pt: PiTable) -> Report:
    P, mod = Pt.base, Pt.mod
    t = Pt.table
    pi, pinv = P.pi, P.pinv
    L, X = P.H, mod.X.factors[0]
    lam, x, a, b = _grid(P, mod.X.size, 2)
    back = _x_back(mod)
    rep = Report("Pi")
    lhs = t[lam, x, dot_lambda(P, lam, a, b)]
    rhs = dot_lambda(P, lam, t[lam, x, a], t[lam, x, b])
    rep.add(_compare("Pi1", lhs, rhs, P, (X, L, L)))
    la = P.lmul(lam, a)
    lhs = t[lam, x, P.ldiv(lam, P.lmul(la, b))]
    inner = P.lmul(la, t[la, back[la, lam, x], b])
    rhs = P.ldiv(lam, pinv[P.gmul(pi[lam], P.ginv(pi[la]), pi[inner], P.ginv(pi[lam]), pi[P.lmul(lam, t[lam, x, a])])])
    rep.add(_compare("Pi2", lhs, rhs, P, (X, L, L)))
    return rep


def check_layer(obj, S: DynamicalYBMap | None = None) -> Report:
    if isinstance(obj, HomFamily):
        return obj.check()
    if isinstance(obj, PiTable):
        return check_pi(obj)
    if isinstance(obj, BetaTable):
        return check_beta(obj)
    if isinstance(obj, BracketTable):
        return check_bracket(obj)
    if isinstance(obj, TwistedAction):
        if S is None:
            raise TypeError("checking theta needs the Yang-Baxter map")
        return check_theta(obj.mod, S, obj.theta)
    raise TypeError(f"not a correspondence layer: {type(obj).__name__}")


# -- converters --------------------------------------------------------------

def pi_from_family(mod: LeftModule, F: HomFamily, validate: bool = True) -> PiTable:
    """``Pi^lam_x(a) = lam \\ pi^-1(pi(lam) F(pi(lam a)) F(pi(lam))^-1)``, ``F = f_{x'}``."""
    if validate:
        _raise_first(F.check(), "family")
    P = mod.base
    pi, pinv = P.pi, P.pinv
    lam, x, a = _grid(P, mod.X.size, 1)
    Fx = F.maps[_x_shift(mod)]  # [lam, x, g]
    fa = Fx[lam, x, pi[P.lmul(lam, a)]]
    fl = Fx[lam, x, pi[lam]]
    table = P.ldiv(lam, pinv[P.gmul(pi[lam], fa, P.ginv(fl))])
    return PiTable(mod, np.broadcast_to(table, (P.n, mod.X.size, P.n)))


def family_from_pi(Pt: PiTable, G: FiniteGroup | None = None, validate: bool = True) -> HomFamily:
    """``f_x(g) = pi(lam0 Pi^lam0_x(lam0 \\ pi^-1(g)))``."""
    if validate:
        _raise_first(check_pi(Pt), "Pi")
    P, mod = Pt.base, Pt.mod
    l0 = P.lambda0
    g = np.arange(P.n)[None, :]
    x = np.arange(mod.X.size)[:, None]
    maps = P.pi[P.lmul(l0, Pt.table[l0, x, P.ldiv(l0, P.pinv[g])])]
    return HomFamily(G or P.G, mod.X.factors[0], maps)


def beta_from_pi(Pt: PiTable, validate: bool = True) -> BetaTable:
    """``beta = lam \\ pi^-1(pi(lam a) pi(lam Pi(a))^-1 pi(lam))``."""
    if validate:
        _raise_first(check_pi(Pt), "Pi")
    P = Pt.base
    pi, pinv = P.pi, P.pinv
    lam, x, a = _grid(P, Pt.mod.X.size, 1)
    t = P.ldiv(lam, pinv[P.gmul(pi[P.lmul(lam, a)], P.ginv(pi[P.lmul(lam, Pt.table[lam, x, a])]), pi[lam])])
    return BetaTable(Pt.mod, t)


def pi_from_beta(Bt: BetaTable, validate: bool = True) -> PiTable:
    """``Pi = lam \\ pi^-1(pi(lam) pi(lam beta(a))^-1 pi(lam a))``."""
    if validate:
        _raise_first(check_beta(Bt), "beta")
    P = Bt.base
    pi, pinv = P.pi, P.pinv
    lam, x, a = _grid(P, Bt.mod.X.size, 1)
    t = P.ldiv(lam, pinv[P.gmul(pi[lam], P.ginv(pi[P.lmul(lam, Bt.table[lam, x, a])]), pi[P.lmul(lam, a)])])
    return PiTable(Bt.mod, t)


def bracket_from_beta(Bt: BetaTable, validate: bool = True) -> BracketTable:
    if validate:
        _raise_first(check_beta(Bt), "beta")
    P = Bt.base
    lam, x, a, b = _grid(P, Bt.mod.X.size, 2)
    t = P.ldiv(lam, _beta_rhs(P, lam, a, b, Bt.table[lam, x, a]))
    return BracketTable(Bt.mod, t)


def beta_from_bracket(B: BracketTable, validate: bool = True) -> BetaTable:
    """``beta^lam_x(a) = a []^lam_x e_L``."""
    if validate:
        _raise_first(check_bracket(B), "bracket")
    return BetaTable(B.mod, B.table[:, :, :, B.base.L.unit])


def theta_from_bracket(B: BracketTable, validate: bool = True) -> TwistedAction:
    """``theta(lam)((a,b),(c,x)) = (lam \\ d, m_X(d)(d \\ ((lam a) b), m_X((lam a) b)(c, x)))``."""
    if validate:
        _raise_first(check_bracket(B), "bracket")
    P, mod = B.base, B.mod
    n, nx = P.n, mod.X.size
    act = mod.act_table()
    lam, a, b, c, x = np.ix_(*(np.arange(k) for k in (n, n, n, n, nx)))
    la = P.lmul(lam, a)
    lab = P.lmul(la, b)
    xx = act[lab, c, x]
    d = P.lmul(lab, B.table[lab, xx, P.ldiv(lab, la), c])
    first = P.ldiv(lam, d)
    second = act[d, P.ldiv(d, lab), xx]
    table = (first * nx + second).reshape(n, -1)
    one = identity(mod.M.L)
    src = tensor(one, one, one, identity(mod.X)).source
    theta = morphism_from_table(src, mod.Y, table, name="theta_Y")
    return TwistedAction(mod, theta)


def bracket_from_theta(T: TwistedAction, S: DynamicalYBMap | None = None, validate: bool = True) -> BracketTable:
    """First component of ``theta(lam)(iota^lam(a), (b, m_X(lam b)((lam b) \\ lam, x)))``."""
    if validate and S is not None:
        _raise_first(check_theta(T.mod, S, T.theta), "theta")
    mod = T.mod
    P = mod.base
    n, nx = P.n, mod.X.size
    lam, x, a, b = _grid(P, nx, 2)
    back = _x_back(mod)
    lb = P.lmul(lam, b)
    second_a = P.ldiv(P.lmul(lam, a), lam)
    xb = back[lb, lam, x]
    flat = ((a * n + second_a) * n + b) * nx + xb
    out = T.theta.table[np.broadcast_to(lam, flat.shape), flat] // nx
    return BracketTable(mod, out)


def bracket_from_family(mod: LeftModule, F: HomFamily, validate: bool = True) -> BracketTable:
    """Direct form: ``lam \\ pi^-1(pi(lam a) pi(lam)^-1 pi(lam b) F(pi(lam)) F(pi(lam a))^-1)``."""
    if validate:
        _raise_first(F.check(), "family")
    P = mod.base
    pi, pinv = P.pi, P.pinv
    lam, x, a, b = _grid(P, mod.X.size, 2)
    Fx = F.maps[_x_shift(mod)]  # [lam, x, g]
    la = P.lmul(lam, a)
    f_l = Fx[lam, x, pi[lam]]
    f_la = Fx[lam, x, pi[la]]
    t = P.ldiv(lam, pinv[P.gmul(pi[la], P.ginv(pi[lam]), pi[P.lmul(lam, b)], f_l, P.ginv(f_la))])
    return BracketTable(mod, np.broadcast_to(t, (P.n, mod.X.size, P.n, P.n)))


def family_from_bracket(B: BracketTable, G: FiniteGroup | None = None, validate: bool = True) -> HomFamily:
    """Direct form: ``f_x(g) = pi(lam0) pi(lam0 ((lam0 \\ pi^-1(g)) []^lam0_x e_L))^-1 g``."""
    if validate:
        _raise_first(check_bracket(B), "bracket")
    P, mod = B.base, B.mod
    l0 = P.lambda0
    g = np.arange(P.n)[None, :]
    x = np.arange(mod.X.size)[:, None]
    br = B.table[l0, x, P.ldiv(l0, P.pinv[g]), P.L.unit]
    maps = P.gmul(P.pi[l0], P.ginv(P.pi[P.lmul(l0, br)]), g)
    return HomFamily(G or P.G, mod.X.factors[0], np.broadcast_to(maps, (mod.X.size, P.n)))


def my_from_bracket(B: BracketTable) -> SetHMorphism:
    """``m_Y(lam)(a,(b,x)) = (lam \\ c, m_X(c)(c \\ (lam a), m_X(lam a)(b, x)))``."""
    P, mod = B.base, B.mod
    n, nx = P.n, mod.X.size
    act = mod.act_table()
    lam, a, b, x = np.ix_(*(np.arange(k) for k in (n, n, n, nx)))
    la = P.lmul(lam, a)
    xx = act[la, b, x]
    c = P.lmul(la, B.table[la, xx, P.ldiv(la, lam), b])
    table = (P.ldiv(lam, c) * nx + act[c, P.ldiv(c, la), xx]).reshape(n, -1)
    src = tensor(identity(mod.M.L), identity(mod.Y)).source
    return morphism_from_table(src, mod.Y, table, name="m_Y")


def my_from_family(mod: LeftModule, F: HomFamily, validate: bool = True) -> SetHMorphism:
    return my_from_bracket(bracket_from_family(mod, F, validate))


_CHAIN = {
    ("family", "Pi"): lambda o, **kw: pi_from_family(kw["mod"], o),
    ("Pi", "family"): lambda o, **kw: family_from_pi(o),
    ("Pi", "beta"): lambda o, **kw: beta_from_pi(o),
    ("beta", "Pi"): lambda o, **kw: pi_from_beta(o),
    ("beta", "bracket"): lambda o, **kw: bracket_from_beta(o),
    ("bracket", "beta"): lambda o, **kw: beta_from_bracket(o),
    ("bracket", "theta"): lambda o, **kw: theta_from_bracket(o),
    ("theta", "bracket"): lambda o, **kw: bracket_from_theta(o, kw.get("S")),
}

LAYERS = ("family", "Pi", "beta", "bracket", "theta")


def layer_name(obj) -> str:
    return {HomFamily: "family", PiTable: "Pi", BetaTable: "beta",
            BracketTable: "bracket", TwistedAction: "theta"}[type(obj)]


def correspondence_chain(target: str, obj, mod: LeftModule | None = None, S: DynamicalYBMap | None = None):
    """Walk the chain from ``obj``'s layer to ``target`` one step at a time."""
    if target not in LAYERS:
        raise ValueError(f"unknown layer {target!r}; expected one of {LAYERS}")
    here = LAYERS.index(layer_name(obj))
    there = LAYERS.index(target)
    step = 1 if there > here else -1
    for i in range(here, there, step):
        obj = _CHAIN[(LAYERS[i], LAYERS[i + step])](obj, mod=mod, S=S)
    return obj
