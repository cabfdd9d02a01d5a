"""The dynamical Yang-Baxter map and the braided monoid on a left quasigroup.

Given a :class:`~dynrefl.finite_algebra.PairedStructure` ``(L, G, pi)`` with
``H = L``::

    xi_lam(a, b)  = lam \\ pi^-1( pi(lam) pi(lam a)^-1 pi((lam a) b) )
    eta_lam(a, b) = (lam xi_lam(a, b)) \\ ((lam a) b)
    sigma(lam)(a, b) = (xi_lam(a, b), eta_lam(a, b))
    m(lam)(a, b)  = lam \\ ((lam a) b),     unit(lam)(*) = e_L

All tables are materialised once and every identity is checked as an
equality of Set_H morphisms over the flat carriers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .finite_algebra import PairedStructure, mu1
from .report import CheckResult, Report
from .seth import (
    SetHMorphism,
    SetHObject,
    check_equation,
    compose,
    identity,
    make_object,
    morphism_from_table,
    tensor,
    unit_object,
    validate_morphism,
)


def quasigroup_object(P: PairedStructure) -> SetHObject:
    """``L`` as an object of Set_H with ``lam . a = lam a``."""
    return make_object(P.H, P.H, P.L.mul, name="L")


@dataclass(frozen=True, eq=False)
class DynamicalYBMap:
    base: PairedStructure
    L: SetHObject
    morphism: SetHMorphism
    xi: np.ndarray
    eta: np.ndarray

    def __call__(self, lam, a, b) -> tuple:
        return int(self.xi[lam, a, b]), int(self.eta[lam, a, b])


@dataclass(frozen=True, eq=False)
class MonoidStructure:
    base: PairedStructure
    L: SetHObject
    I: SetHObject
    m: SetHMorphism
    unit: SetHMorphism


def _grid(n):
    lam = np.arange(n)[:, None, None]
    a = np.arange(n)[None, :, None]
    b = np.arange(n)[None, None, :]
    return lam, a, b


def _pair_table(first, second, n) -> np.ndarray:
    return (first * n + second).reshape(n, n * n)


def build_sigma(P: PairedStructure) -> DynamicalYBMap:
    n, pi, pinv = P.n, P.pi, P.pinv
    lam, a, b = _grid(n)
    la = P.lmul(lam, a)
    lab = P.lmul(la, b)
    xi = P.ldiv(lam, pinv[mu1(P.G, pi[lam], pi[la], pi[lab])])
    eta = P.ldiv(P.lmul(lam, xi), lab)
    xi = np.broadcast_to(xi, (n, n, n)).copy()
    eta = np.broadcast_to(eta, (n, n, n)).copy()
    L = quasigroup_object(P)
    LL = tensor(identity(L), identity(L)).source
    sigma = morphism_from_table(LL, LL, _pair_table(xi, eta, n), name="sigma")
    xi.flags.writeable = False
    eta.flags.writeable = False
    return DynamicalYBMap(P, L, sigma, xi, eta)


def sigma_inverse(S: DynamicalYBMap) -> DynamicalYBMap:
    """Closed-form inverse ``(lam \\ c, c \\ ((lam a) b))``."""
    P, n = S.base, S.base.n
    pi, pinv = P.pi, P.pinv
    lam, a, b = _grid(n)
    la = P.lmul(lam, a)
    lab = P.lmul(la, b)
    c = pinv[P.gmul(pi[lab], P.ginv(pi[la]), pi[lam])]
    first = np.broadcast_to(P.ldiv(lam, c), (n, n, n)).copy()
    second = np.broadcast_to(P.ldiv(c, lab), (n, n, n)).copy()
    LL = S.morphism.source
    inv = morphism_from_table(LL, LL, _pair_table(first, second, n), name="sigma^-1")
    return DynamicalYBMap(P, S.L, inv, first, second)


def build_monoid(P: PairedStructure) -> MonoidStructure:
    n = P.n
    lam, a, b = _grid(n)
    table = np.broadcast_to(P.ldiv(lam, P.lmul(P.lmul(lam, a), b)), (n, n, n)).reshape(n, n * n)
    L = quasigroup_object(P)
    LL = tensor(identity(L), identity(L)).source
    m = morphism_from_table(LL, L, table, name="m")
    I = unit_object(P.H)
    unit = morphism_from_table(I, L, np.full((n, 1), P.L.unit), name="eta")
    return MonoidStructure(P, L, I, m, unit)


def braid_sides(S: DynamicalYBMap):
    s, one = S.morphism, identity(S.L)
    lhs = compose(tensor(s, one), tensor(one, s), tensor(s, one))
    rhs = compose(tensor(one, s), tensor(s, one), tensor(one, s))
    return lhs, rhs


def check_braid_relation(S: DynamicalYBMap):
    """``(s x 1)(1 x s)(s x 1) == (1 x s)(s x 1)(1 x s)`` on all ``(lam, a, b, c)``."""
    return check_equation("braid", *braid_sides(S))


def braided_monoid_equations(M: MonoidStructure, S: DynamicalYBMap) -> dict:
    """Both sides of every braided-monoid identity, keyed by equation id."""
    s, m, u, one = S.morphism, M.m, M.unit, identity(M.L)
    eqs = {
        "monoid2.left": (compose(m, tensor(u, one)), one),
        "monoid2.right": (compose(m, tensor(one, u)), one),
        "asslaw": (compose(m, tensor(m, one)), compose(m, tensor(one, m))),
        "braidedmonoid1": (
            compose(tensor(one, m), tensor(s, one), tensor(one, s)),
            compose(s, tensor(m, one)),
        ),
        "braidedmonoid2": (
            compose(tensor(m, one), tensor(one, s), tensor(s, one)),
            compose(s, tensor(one, m)),
        ),
        "braidedmonoid3": (compose(s, tensor(u, one)), tensor(one, u)),
        "braidedmonoid4": (compose(s, tensor(one, u)), tensor(u, one)),
        "m.sigma=m": (compose(m, s), m),
    }
    return eqs


def check_braided_monoid(M: MonoidStructure, S: DynamicalYBMap) -> Report:
    rep = Report("braided monoid")
    rep.add(validate_morphism(S.morphism, "sigma.morphism"))
    rep.add(validate_morphism(M.m, "m.morphism"))
    for name, (lhs, rhs) in braided_monoid_equations(M, S).items():
        rep.add(check_equation(name, lhs, rhs))
    rep.add(check_sigma_bijective(S))
    rep.add(check_m_injective(M))
    return rep


def check_sigma_bijective(S: DynamicalYBMap):
    t = S.morphism.table
    n2 = t.shape[1]
    for lam in range(t.shape[0]):
        if len(np.unique(t[lam])) != n2:
            return CheckResult("sigma.bijective", False, t.size, note=f"sigma({S.base.H.label(lam)}) not bijective")
    return CheckResult("sigma.bijective", True, t.size)


def check_m_injective(M: MonoidStructure):
    """``b -> m(lam)(a, b)`` is injective for every ``lam``, ``a``."""
    n = M.base.n
    t = M.m.table.reshape(n, n, n)
    for lam in range(n):
        for a in range(n):
            if len(np.unique(t[lam, a])) != n:
                H = M.base.H
                return CheckResult("m.injective", False, t.size,
                                   note=f"b -> m({H.label(lam)})({H.label(a)}, b) not injective")
    return CheckResult("m.injective", True, t.size)
