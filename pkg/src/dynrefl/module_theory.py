"""Left modules over ``(L, m, eta)`` in Set_H and the actions built from them.

A module is an object ``X`` with an action ``m_X: L (x) X -> X``.  From it,
with ``Y = L (x) X``::

    m_Y^triv  = m (x) 1_X
    m_Y^sigma = (1_L (x) m_X)(sigma (x) 1_X)
    theta_Y   = m_Y^triv (1_L (x) m_Y)          (an action of L (x)_tw L)

and back ``m_Y = theta_Y ((eta (x) 1_L) (x) 1_Y)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ActionNotDivisible, CarrierTooLarge, HypothesisViolated, ShapeError
from .finite_algebra import Carrier, PairedStructure
from .report import Report
from .seth import (
    SetHMorphism,
    SetHObject,
    check_equation,
    compose,
    identity,
    make_object,
    morphism_from_table,
    tensor,
    validate_morphism,
)
from .yang_baxter import DynamicalYBMap, MonoidStructure

MAP_LL_CAP = 5


# -- derived quasigroup operations (vectorised over index arrays) ----------

def dot_lambda(P: PairedStructure, lam, a, b):
    """``a ._lam b = lam \\ pi^-1(pi(lam a) pi(lam)^-1 pi(lam b))``."""
    pi = P.pi
    return P.ldiv(lam, P.pinv[P.gmul(pi[P.lmul(lam, a)], P.ginv(pi[lam]), pi[P.lmul(lam, b)])])


def dot_lambda_inverse(P: PairedStructure, lam, a):
    """Inverse of ``a`` in the group ``(L, ._lam)``."""
    pi = P.pi
    return P.ldiv(lam, P.pinv[P.gmul(pi[lam], P.ginv(pi[P.lmul(lam, a)]), pi[lam])])


def rho(P: PairedStructure, lam, b, a):
    """``rho^lam_b(a) = lam \\ pi^-1(pi((lam b) a) pi(lam b)^-1 pi(lam))``."""
    pi = P.pi
    lb = P.lmul(lam, b)
    return P.ldiv(lam, P.pinv[P.gmul(pi[P.lmul(lb, a)], P.ginv(pi[lb]), pi[lam])])


def iota(P: PairedStructure, lam, a):
    """``iota^lam(a) = (a, (lam a) \\ lam)``."""
    return a, P.ldiv(P.lmul(lam, a), lam)


# -- modules ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LeftModule:
    M: MonoidStructure
    X: SetHObject
    mX: SetHMorphism
    kind: str = ""

    @property
    def base(self) -> PairedStructure:
        return self.M.base

    @property
    def Y(self) -> SetHObject:
        return tensor(identity(self.M.L), identity(self.X)).source

    def act(self, lam, a, x) -> int:
        return int(self.mX.table[lam, a * self.X.size + x])

    def act_table(self) -> np.ndarray:
        """``mX[lam, a, x]`` as a dense array."""
        n = self.base.n
        return self.mX.table.reshape(n, n, self.X.size)


def _module(M, X, table, kind) -> LeftModule:
    LX = tensor(identity(M.L), identity(X)).source
    mX = morphism_from_table(LX, X, table, name="m_X")
    return LeftModule(M, X, mX, kind)


def module_left_regular(M: MonoidStructure) -> LeftModule:
    return LeftModule(M, M.L, M.m, "left-regular")


def module_one_point(M: MonoidStructure, lambda1) -> LeftModule:
    P = M.base
    l1 = P.H.index(lambda1)
    X = make_object(P.H, Carrier(("x",)), np.full((P.n, 1), l1), name="X")
    return _module(M, X, np.zeros((P.n, P.n), dtype=np.int64), "one-point")


def module_from_action(M: MonoidStructure, carrier: Carrier, action, f) -> LeftModule:
    """Module on ``X`` from a left-divisible map ``L x X -> X`` and ``f: X -> H``.

    ``lam ._X x = f(e_L \\ (lam x))`` and ``m_X(lam)(a, x) = lam \\ ((lam a) x)``.
    """
    P = M.base
    n, nx = P.n, len(carrier)
    act = np.array(
        [[carrier.index(v) for v in row] for row in action], dtype=np.int64
    )
    if act.shape != (n, nx):
        raise ShapeError(f"action table must be {n}x{nx}")
    for a in range(n):
        if len(set(act[a].tolist())) != nx:
            raise ActionNotDivisible(
                f"x -> {P.H.label(a)} x is not a bijection of X", element=P.H.label(a)
            )
    xdiv = np.empty_like(act)
    xdiv[np.arange(n)[:, None], act] = np.arange(nx)[None, :]
    if isinstance(f, dict):
        fv = np.array([P.H.index(f[carrier.label(x)]) for x in range(nx)], dtype=np.int64)
    else:
        fv = np.array([P.H.index(v) for v in f], dtype=np.int64)
    cdot = fv[xdiv[P.L.unit, act]]  # (lam, x)
    X = make_object(P.H, carrier, cdot, name="X")
    lam = np.arange(n)[:, None, None]
    a = np.arange(n)[None, :, None]
    x = np.arange(nx)[None, None, :]
    table = xdiv[lam, act[P.lmul(lam, a), x]]
    return _module(M, X, table.reshape(n, n * nx), "action")


def module_map_ll(M: MonoidStructure, S: DynamicalYBMap, g, cap: int = MAP_LL_CAP) -> LeftModule:
    """Module on ``Map(L, L)``; ``g`` maps an image tuple to an element of H.

    ``lam ._X f = g(alpha_{lam,f})`` and
    ``m_X(lam)(a, f) = phi^lam_a o f o rho^{lam a}_{(lam a) \\ lam}``.
    """
    P = M.base
    n = P.n
    if n > cap:
        raise CarrierTooLarge(f"Map(L, L) needs |L| <= {cap}, got {n}", order=n, cap=cap)
    maps = np.array(list(itertools.product(range(n), repeat=n)), dtype=np.int64)
    radix = n ** np.arange(n - 1, -1, -1)
    labels = tuple("[" + ",".join(P.H.label(v) for v in row) + "]" for row in maps)
    carrier = Carrier(labels)
    cdot = np.empty((n, len(maps)), dtype=np.int64)
    for lam in range(n):
        alpha = alpha_map(P, lam, maps)
        for i, row in enumerate(alpha):
            cdot[lam, i] = _g_value(P, g, tuple(int(v) for v in row))
    X = make_object(P.H, carrier, cdot, name="X")
    table = np.empty((n, n, len(maps)), dtype=np.int64)
    for lam in range(n):
        for a in range(n):
            la = int(P.lmul(lam, a))
            r = rho(P, la, P.ldiv(la, lam), np.arange(n))
            phi = S.xi[lam, a]
            composed = phi[maps[:, r]]
            table[lam, a] = composed @ radix
    return _module(M, X, table.reshape(n, -1), "map-ll")


def alpha_map(P: PairedStructure, lam, maps):
    """``alpha_{lam,f}(a) = pi^-1(pi(lam)^-1 pi(lam f(lam \\ pi^-1(pi(a) pi(lam)))))`` row-wise."""
    pi, pinv = P.pi, P.pinv
    n = P.n
    a = np.arange(n)
    inner = P.ldiv(lam, pinv[P.gmul(pi[a], pi[lam])])
    vals = P.lmul(lam, maps[:, inner])
    return pinv[P.gmul(P.ginv(pi[lam]), pi[vals])]


def _g_value(P, g, image) -> int:
    if callable(g):
        return P.H.index(g(image))
    if isinstance(g, dict):
        if "constant" in g:
            return P.H.index(g["constant"])
        if "evaluate_at" in g:
            return int(image[P.H.index(g["evaluate_at"])])
        if "table" in g:
            key = ",".join(P.H.label(v) for v in image)
            return P.H.index(g["table"][key])
    return P.H.index(g)


# -- module axioms ----------------------------------------------------------

def action_equations(M: MonoidStructure, mV: SetHMorphism, prefix: str) -> dict:
    """Left-module identities for an arbitrary action ``mV: L (x) V -> V``."""
    V = mV.target
    oneL, oneV = identity(M.L), identity(V)
    return {
        f"{prefix}.leftmod2": (compose(mV, tensor(M.unit, oneV)), oneV),
        f"{prefix}.leftmod1": (
            compose(mV, tensor(M.m, oneV)),
            compose(mV, tensor(oneL, mV)),
        ),
    }


def check_action(M: MonoidStructure, mV: SetHMorphism, prefix: str) -> Report:
    rep = Report(prefix)
    rep.add(validate_morphism(mV, f"{prefix}.morphism"))
    for name, sides in action_equations(M, mV, prefix).items():
        rep.add(check_equation(name, *sides))
    return rep


def check_left_module(mod: LeftModule) -> Report:
    return check_action(mod.M, mod.mX, "m_X")


def lift_actions(mod: LeftModule, S: DynamicalYBMap):
    """``(m_Y^triv, m_Y^sigma)`` on ``Y = L (x) X``."""
    oneX = identity(mod.X)
    triv = tensor(mod.M.m, oneX)
    sig = compose(tensor(identity(mod.M.L), mod.mX), tensor(S.morphism, oneX))
    return triv, sig


def braid_commute_sides(mV, mV2, S: DynamicalYBMap):
    """``mV (1 (x) mV') == mV' (1 (x) mV)(sigma (x) 1_V)``."""
    oneL, oneV = identity(S.L), identity(mV.target)
    lhs = compose(mV, tensor(oneL, mV2))
    rhs = compose(mV2, tensor(oneL, mV), tensor(S.morphism, oneV))
    return lhs, rhs


def check_braid_commute(mV, mV2, S: DynamicalYBMap, name: str = "braid-commute"):
    return check_equation(name, *braid_commute_sides(mV, mV2, S))


def mxmy_sides(mod: LeftModule, mY: SetHMorphism):
    """``m_X m_Y == m_X (1_L (x) m_X)``."""
    return compose(mod.mX, mY), compose(mod.mX, tensor(identity(mod.M.L), mod.mX))


def check_my(mod: LeftModule, S: DynamicalYBMap, mY: SetHMorphism) -> Report:
    """Everything required of a compatible ``m_Y``."""
    rep = check_action(mod.M, mY, "m_Y")
    rep.title = "m_Y"
    rep.add(check_equation("mXmY", *mxmy_sides(mod, mY)))
    triv, sig = lift_actions(mod, S)
    rep.add(check_braid_commute(mY, triv, S, "braid-commute(m_Y,m_Y^triv)"))
    rep.add(check_braid_commute(mY, sig, S, "braid-commute(m_Y,m_Y^sigma)"))
    return rep


# -- twisted monoid and theta -----------------------------------------------

@dataclass(frozen=True, eq=False)
class TwistedMonoid:
    m: SetHMorphism
    unit: SetHMorphism


def twisted_monoid(M: MonoidStructure, S: DynamicalYBMap) -> TwistedMonoid:
    one = identity(M.L)
    mAA = compose(tensor(M.m, M.m), tensor(one, S.morphism, one))
    return TwistedMonoid(mAA, tensor(M.unit, M.unit))


def check_twisted_monoid(M: MonoidStructure, T: TwistedMonoid) -> Report:
    one = identity(M.L)
    oneAA = tensor(one, one)
    rep = Report("twisted monoid")
    rep.add(check_equation("mAotimesA", compose(T.m, tensor(T.m, oneAA)), compose(T.m, tensor(oneAA, T.m))))
    rep.add(check_equation("etaAotimesA.left", compose(T.m, tensor(T.unit, oneAA)), oneAA))
    rep.add(check_equation("etaAotimesA.right", compose(T.m, tensor(oneAA, T.unit)), oneAA))
    return rep


def theta_equations(mod: LeftModule, S: DynamicalYBMap, theta: SetHMorphism) -> dict:
    M = mod.M
    oneL, oneX = identity(M.L), identity(mod.X)
    oneY = identity(mod.Y)
    oneAA = tensor(oneL, oneL)
    T = twisted_monoid(M, S)
    return {
        "thetaYaction1": (
            compose(theta, tensor(T.m, oneY)),
            compose(theta, tensor(oneAA, theta)),
        ),
        "thetaYaction2": (compose(theta, tensor(T.unit, oneY)), oneY),
        "thetamodule1": (
            compose(mod.mX, theta),
            compose(mod.mX, tensor(oneL, mod.mX), tensor(oneAA, mod.mX)),
        ),
        "thetamodule2": (
            compose(theta, tensor(oneL, M.unit, oneY)),
            tensor(M.m, oneX),
        ),
    }


def check_theta(mod: LeftModule, S: DynamicalYBMap, theta: SetHMorphism) -> Report:
    rep = Report("theta_Y")
    rep.add(validate_morphism(theta, "theta.morphism"))
    for name, sides in theta_equations(mod, S, theta).items():
        rep.add(check_equation(name, *sides))
    return rep


def require_report(rep: Report):
    bad = rep.failures()
    if bad:
        r = bad[0]
        details = {"equation": r.name}
        if r.witness is not None:
            details["witness"] = r.witness.to_dict()
        raise HypothesisViolated(f"hypothesis {r.name} fails", **details)


def theta_of(mod: LeftModule, S: DynamicalYBMap, mY: SetHMorphism, validate: bool = True) -> SetHMorphism:
    """``theta_Y = m_Y^triv (1_L (x) m_Y)``."""
    if validate:
        rep = check_action(mod.M, mY, "m_Y")
        rep.add(check_equation("mXmY", *mxmy_sides(mod, mY)))
        triv, _ = lift_actions(mod, S)
        rep.add(check_braid_commute(mY, triv, S, "braid-commute(m_Y,m_Y^triv)"))
        require_report(rep)
    triv, _ = lift_actions(mod, S)
    theta = compose(triv, tensor(identity(mod.M.L), mY))
    return theta


def my_of(mod: LeftModule, S: DynamicalYBMap, theta: SetHMorphism, validate: bool = True) -> SetHMorphism:
    """``m_Y = theta_Y ((eta (x) 1_L) (x) 1_Y)``."""
    if validate:
        require_report(check_theta(mod, S, theta))
    M = mod.M
    return compose(theta, tensor(M.unit, identity(M.L), identity(mod.Y)))
