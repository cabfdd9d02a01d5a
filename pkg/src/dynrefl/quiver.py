"""Quivers over H, the functor ``Q: Set_H -> Quiv_H`` and lifted solutions.

Arrows are kept as genuinely nested tuples so that the associator of the
fiber product is a real re-bracketing map, unlike the flat Set_H side.
Fiber products are built from a source-bucketed index, so only composable
pairs are ever visited.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import MismatchedH, NotAMorphism, TypeMismatch
from .finite_algebra import Carrier
from .report import CheckResult, Report, timed
from .seth import SetHMorphism, SetHObject, compose, identity, tensor, unit_object


@dataclass(frozen=True, eq=False)
class Quiver:
    H: Carrier
    arrows: tuple
    src: np.ndarray
    tgt: np.ndarray
    render: Callable = field(repr=False)
    name: str = ""
    _index: dict = field(default=None, repr=False)
    _by_source: dict = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(self.arrows)})
        buckets = defaultdict(list)
        for i, s in enumerate(self.src):
            buckets[int(s)].append(i)
        object.__setattr__(self, "_by_source", dict(buckets))

    def __len__(self):
        return len(self.arrows)

    def index(self, arrow) -> int:
        return self._index[arrow]

    def starting_at(self, lam) -> list:
        return self._by_source.get(int(lam), [])


def make_quiver(H: Carrier, arrows, src, tgt, render=None, name="") -> Quiver:
    arrows = tuple(arrows)
    render = render or (lambda a: a)
    return Quiver(H, arrows, np.asarray(src, dtype=np.int64), np.asarray(tgt, dtype=np.int64), render, name)


def unit_quiver(H: Carrier) -> Quiver:
    """``H`` itself with source and target the identity."""
    ar = np.arange(len(H))
    return make_quiver(H, range(len(H)), ar, ar, lambda a: H.label(a), "H")


@dataclass(frozen=True, eq=False)
class QuiverMorphism:
    source: Quiver
    target: Quiver
    mapping: np.ndarray

    def __call__(self, arrow):
        return self.target.arrows[self.mapping[self.source.index(arrow)]]

    def __matmul__(self, other: "QuiverMorphism") -> "QuiverMorphism":
        return compose_quiver(self, other)


def quiver_morphism(source: Quiver, target: Quiver, fn, check=True) -> QuiverMorphism:
    mapping = np.array([target.index(fn(a)) for a in source.arrows], dtype=np.int64)
    f = QuiverMorphism(source, target, mapping)
    if check:
        require_quiver_morphism(f)
    return f


def check_quiver_morphism(f: QuiverMorphism, name="quiver.morphism") -> CheckResult:
    """``s(f(a)) = s(a)`` and ``t(f(a)) = t(a)`` for every arrow."""
    S, T = f.source, f.target
    bad = np.flatnonzero((T.src[f.mapping] != S.src) | (T.tgt[f.mapping] != S.tgt))
    if len(bad) == 0:
        return CheckResult(name, True, len(S))
    i = int(bad[0])
    return CheckResult(name, False, len(S), witness={
        "check": name, "lambda": S.H.label(S.src[i]), "inputs": S.render(S.arrows[i]),
        "lhs": [S.H.label(T.src[f.mapping[i]]), S.H.label(T.tgt[f.mapping[i]])],
        "rhs": [S.H.label(S.src[i]), S.H.label(S.tgt[i])],
    })


def require_quiver_morphism(f: QuiverMorphism) -> QuiverMorphism:
    res = check_quiver_morphism(f)
    if not res.passed:
        raise NotAMorphism("quiver map does not preserve source/target", witness=res.witness)
    return f


def quiver_identity(Q: Quiver) -> QuiverMorphism:
    return QuiverMorphism(Q, Q, np.arange(len(Q)))


def compose_quiver(g: QuiverMorphism, f: QuiverMorphism) -> QuiverMorphism:
    if len(f.target) != len(g.source):
        raise TypeMismatch("cannot compose quiver morphisms of different shapes")
    return QuiverMorphism(f.source, g.target, g.mapping[f.mapping])


def compose_all(*fs: QuiverMorphism) -> QuiverMorphism:
    """``compose_all(h, g, f) = h o g o f``."""
    out = fs[-1]
    for g in reversed(fs[:-1]):
        out = compose_quiver(g, out)
    return out


def inverse(f: QuiverMorphism) -> QuiverMorphism:
    if len(np.unique(f.mapping)) != len(f.target) or len(f.source) != len(f.target):
        raise TypeMismatch("quiver morphism is not a bijection")
    inv = np.empty_like(f.mapping)
    inv[f.mapping] = np.arange(len(f.mapping))
    return QuiverMorphism(f.target, f.source, inv)


# -- monoidal structure --------------------------------------------------------

def fiber_product(Q: Quiver, R: Quiver) -> Quiver:
    """Pairs ``(a, b)`` with ``t(a) = s(b)``; source from ``a``, target from ``b``."""
    if not Q.H.same_as(R.H):
        raise MismatchedH("quivers live over different H")
    arrows, src, tgt = [], [], []
    for i, a in enumerate(Q.arrows):
        for j in R.starting_at(Q.tgt[i]):
            arrows.append((a, R.arrows[j]))
            src.append(Q.src[i])
            tgt.append(R.tgt[j])
    render = lambda p: [Q.render(p[0]), R.render(p[1])]
    name = f"({Q.name}x{R.name})" if Q.name and R.name else ""
    return make_quiver(Q.H, arrows, src, tgt, render, name)


def fiber_product_morphisms(f: QuiverMorphism, g: QuiverMorphism, source=None, target=None) -> QuiverMorphism:
    source = fiber_product(f.source, g.source) if source is None else source
    target = fiber_product(f.target, g.target) if target is None else target
    return quiver_morphism(source, target, lambda p: (f(p[0]), g(p[1])), check=False)


def associator(Q: Quiver, R: Quiver, S: Quiver) -> QuiverMorphism:
    """``((p, q), r) -> (p, (q, r))``."""
    left = fiber_product(fiber_product(Q, R), S)
    right = fiber_product(Q, fiber_product(R, S))
    return quiver_morphism(left, right, lambda a: (a[0][0], (a[0][1], a[1])), check=False)


def left_unit(Q: Quiver) -> QuiverMorphism:
    """``H x_H Q -> Q``, ``(lam, q) -> q``."""
    return quiver_morphism(fiber_product(unit_quiver(Q.H), Q), Q, lambda a: a[1], check=False)


def right_unit(Q: Quiver) -> QuiverMorphism:
    return quiver_morphism(fiber_product(Q, unit_quiver(Q.H)), Q, lambda a: a[0], check=False)


# -- the functor Q ---------------------------------------------------------------

def q_object(X: SetHObject) -> Quiver:
    """``Q(X) = H x X`` with ``s(lam, x) = lam`` and ``t(lam, x) = lam . x``."""
    nH, size = X.nH, X.size
    arrows = [(lam, i) for lam in range(nH) for i in range(size)]
    src = np.repeat(np.arange(nH), size)
    tgt = X.action.reshape(-1)
    render = lambda a: [X.H.label(a[0]), X.labels_of(a[1])]
    return make_quiver(X.H, arrows, src, tgt, render, f"Q({X.name})" if X.name else "Q")


def q_morphism(f: SetHMorphism, source: Quiver | None = None, target: Quiver | None = None) -> QuiverMorphism:
    """``Q(f)(lam, x) = (lam, f(lam)(x))``."""
    source = q_object(f.source) if source is None else source
    target = q_object(f.target) if target is None else target
    return quiver_morphism(source, target, lambda a: (a[0], int(f.table[a[0], a[1]])))


def phi2(X: SetHObject, Y: SetHObject) -> QuiverMorphism:
    """``Q(X) x_H Q(Y) -> Q(X (x) Y)``, ``((lam, x), (kappa, y)) -> (lam, (x, y))``."""
    source = fiber_product(q_object(X), q_object(Y))
    target = q_object(tensor(identity(X), identity(Y)).source)
    return quiver_morphism(source, target, lambda a: (a[0][0], a[0][1] * Y.size + a[1][1]))


def phi0(H: Carrier) -> QuiverMorphism:
    """``H -> Q(I)``, ``lam -> (lam, *)``."""
    return quiver_morphism(unit_quiver(H), q_object(unit_object(H)), lambda lam: (lam, 0))


def lift_solution(f: SetHMorphism, X: SetHObject, Y: SetHObject) -> QuiverMorphism:
    """``phi2(X, Y)^-1 Q(f) phi2(X, Y)`` for an endomorphism ``f`` of ``X (x) Y``."""
    p = phi2(X, Y)
    Qf = q_morphism(f, p.target, p.target)
    return compose_all(inverse(p), Qf, p)


# -- verification -------------------------------------------------------------

def quiver_equal(name: str, f: QuiverMorphism, g: QuiverMorphism) -> CheckResult:
    if len(f.source) != len(g.source) or len(f.target) != len(g.target):
        raise TypeMismatch(f"{name}: quiver morphisms of different shapes")
    with timed() as clock:
        bad = np.flatnonzero(f.mapping != g.mapping)
    if len(bad) == 0:
        return CheckResult(name, True, len(f.source), clock.seconds)
    i = int(bad[0])
    S, T = f.source, f.target
    w = {
        "check": name,
        "lambda": S.H.label(S.src[i]),
        "inputs": S.render(S.arrows[i]),
        "lhs": T.render(T.arrows[f.mapping[i]]),
        "rhs": g.target.render(g.target.arrows[g.mapping[i]]),
    }
    return CheckResult(name, False, len(f.source), clock.seconds, w)


def quiver_braid_sides(st: QuiverMorphism, QL: Quiver):
    """On ``(Q x Q) x Q``: ``(s x 1) a^-1 (1 x s) a (s x 1)`` vs ``a^-1 (1 x s) a (s x 1) a^-1 (1 x s) a``."""
    one = quiver_identity(QL)
    a = associator(QL, QL, QL)
    ai = inverse(a)
    s1 = fiber_product_morphisms(st, one, a.source, a.source)
    one_s = fiber_product_morphisms(one, st, a.target, a.target)
    lhs = compose_all(s1, ai, one_s, a, s1)
    rhs = compose_all(ai, one_s, a, s1, ai, one_s, a)
    return lhs, rhs


def quiver_reflection_sides(st: QuiverMorphism, kt: QuiverMorphism, QL: Quiver, QX: Quiver):
    """Both sides of the quiver reflection equation on ``Q(L) x (Q(L) x Q(X))``."""
    a = associator(QL, QL, QX)
    ai = inverse(a)
    oneL, oneX = quiver_identity(QL), quiver_identity(QX)
    ik = fiber_product_morphisms(oneL, kt, a.target, a.target)
    so = fiber_product_morphisms(st, oneX, a.source, a.source)
    lhs = compose_all(ai, ik, a, so, ai, ik, a, so, ai)
    rhs = compose_all(so, ai, ik, a, so, ai, ik)
    return lhs, rhs


def check_quiver_equations(sigma: SetHMorphism, k: SetHMorphism | None, L: SetHObject, X: SetHObject | None = None) -> Report:
    """Functoriality, phi2 naturality and coherence, the braid relation for the
    lift of ``sigma`` and, if ``k`` is given, the quiver reflection equation."""
    rep = Report("quiver")
    QL = q_object(L)
    oneL = identity(L)
    # functoriality
    QLL = q_object(sigma.source)
    rep.add(quiver_equal("Q.identity", q_morphism(identity(sigma.source), QLL, QLL), quiver_identity(QLL)))
    rep.add(quiver_equal("Q.composition", q_morphism(compose(sigma, sigma), QLL, QLL),
                         compose_quiver(q_morphism(sigma, QLL, QLL), q_morphism(sigma, QLL, QLL))))
    st = lift_solution(sigma, L, L)
    rep.add(check_quiver_morphism(st, "sigma~.morphism"))
    # naturality of phi2 in each slot
    rep.add(_phi2_natural("phi2.natural[sigma,1]", sigma, oneL))
    rep.add(_phi2_natural("phi2.natural[1,sigma]", oneL, sigma))
    # coherence with the unit and associativity constraints
    rep.add(_unit_coherence(L))
    rep.add(_assoc_coherence(L, L, L))
    rep.add(quiver_equal("quiver.braid", *quiver_braid_sides(st, QL)))
    if k is not None:
        if X is None:
            raise TypeMismatch("the reflection check needs the module object X")
        QX = q_object(X)
        kt = lift_solution(k, L, X)
        rep.add(check_quiver_morphism(kt, "k~.morphism"))
        rep.add(_phi2_natural("phi2.natural[1,k]", oneL, k))
        rep.add(_unit_coherence(X))
        rep.add(_assoc_coherence(L, L, X))
        lhs, rhs = quiver_reflection_sides(st, kt, QL, QX)
        rep.add(quiver_equal("quiverthRE", lhs, rhs))
    return rep


def _phi2_natural(name: str, f: SetHMorphism, g: SetHMorphism) -> CheckResult:
    """``phi2(X', Y') (Q(f) x Q(g)) = Q(f (x) g) phi2(X, Y)``."""
    p_src = phi2(f.source, g.source)
    p_tgt = phi2(f.target, g.target)
    Qf = q_morphism(f)
    Qg = q_morphism(g)
    fg = fiber_product_morphisms(Qf, Qg, p_src.source, p_tgt.source)
    lhs = compose_quiver(p_tgt, fg)
    rhs = compose_quiver(q_morphism(tensor(f, g), p_src.target, p_tgt.target), p_src)
    return quiver_equal(name, lhs, rhs)


def _unit_coherence(X: SetHObject) -> CheckResult:
    """``l_{Q(X)} = Q(l_X) phi2(I, X) (phi0 x 1)``; ``Q(l_X)`` is the identity on flat arrows."""
    QX = q_object(X)
    p = phi2(unit_object(X.H), X)
    l = left_unit(QX)
    phi0_x1 = fiber_product_morphisms(phi0(X.H), quiver_identity(QX), l.source, p.source)
    Ql = quiver_morphism(p.target, QX, lambda a: a)
    return quiver_equal(f"coherence.unit[{X.name or 'X'}]", l, compose_all(Ql, p, phi0_x1))


def _assoc_coherence(X: SetHObject, Y: SetHObject, Z: SetHObject) -> CheckResult:
    """``phi2(X, YZ)(1 x phi2(Y, Z)) a = Q(a) phi2(XY, Z)(phi2(X, Y) x 1)``."""
    QX, QY, QZ = q_object(X), q_object(Y), q_object(Z)
    YZ = tensor(identity(Y), identity(Z)).source
    XY = tensor(identity(X), identity(Y)).source
    a = associator(QX, QY, QZ)
    p_yz, p_x_yz = phi2(Y, Z), phi2(X, YZ)
    p_xy, p_xy_z = phi2(X, Y), phi2(XY, Z)
    left = compose_all(
        p_x_yz,
        fiber_product_morphisms(quiver_identity(QX), p_yz, a.target, p_x_yz.source),
        a,
    )
    Qa = quiver_morphism(p_xy_z.target, p_x_yz.target, lambda arr: arr)
    right = compose_all(
        Qa,
        p_xy_z,
        fiber_product_morphisms(p_xy, quiver_identity(QZ), a.source, p_xy_z.source),
    )
    name = f"coherence.assoc[{X.name or 'X'}{Y.name or 'Y'}{Z.name or 'Z'}]"
    return quiver_equal(name, left, right)
