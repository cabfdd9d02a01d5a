"""The tensor category Set_H realised on finite tables.

Objects are iterated tensor products stored *flat*: an object records the
tuple of factor carriers and an action table ``action[lam, i] = lam . x``,
where ``i`` is the mixed-radix index of the flat tuple ``x``.  Because the
flattening forgets bracketing, the associativity constraint and the unit
constraints are identities on indices; :func:`rebracket` exists only to make
that explicit where an equation mentions them.

Morphisms are tables ``table[lam, i] = index of f(lam)(x)``.  Composition is
pointwise in ``lam`` and the tensor product shifts the parameter fed to the
right factor by the action of the left factor's input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MismatchedH, NotAMorphism, TypeMismatch
from .finite_algebra import Carrier
from .report import CheckResult, Witness, timed


def _ro(arr) -> np.ndarray:
    out = np.ascontiguousarray(arr, dtype=np.int64)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class SetHObject:
    H: Carrier
    factors: tuple
    action: np.ndarray
    name: str = ""

    @property
    def shape(self) -> tuple:
        return tuple(len(c) for c in self.factors)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape, dtype=np.int64)) if self.factors else 1

    @property
    def nH(self) -> int:
        return len(self.H)

    def flatten(self, elem) -> int:
        elem = tuple(elem)
        if len(elem) != len(self.factors):
            raise TypeMismatch(f"expected {len(self.factors)} components, got {len(elem)}")
        if not self.factors:
            return 0
        return int(np.ravel_multi_index(elem, self.shape))

    def unflatten(self, i) -> tuple:
        if not self.factors:
            return ()
        return tuple(int(v) for v in np.unravel_index(int(i), self.shape))

    def labels_of(self, i) -> list:
        return [c.label(v) for c, v in zip(self.factors, self.unflatten(i))]

    def parse(self, labels) -> int:
        return self.flatten(c.index(v) for c, v in zip(self.factors, labels))

    def act(self, lam, elem) -> int:
        return int(self.action[lam, self.flatten(elem)])

    def same_as(self, other: "SetHObject") -> bool:
        return (
            self is other
            or (
                self.H.same_as(other.H)
                and self.shape == other.shape
                and all(a.same_as(b) for a, b in zip(self.factors, other.factors))
                and np.array_equal(self.action, other.action)
            )
        )

    def __matmul__(self, other):
        return tensor_objects(self, other)


def make_object(H: Carrier, carrier: Carrier, action, name="") -> SetHObject:
    action = np.asarray(action, dtype=np.int64).reshape(len(H), len(carrier))
    if action.min() < 0 or action.max() >= len(H):
        raise TypeMismatch("action values must lie in H")
    return SetHObject(H, (carrier,), _ro(action), name)


def unit_object(H: Carrier) -> SetHObject:
    """The one-point object I with ``lam . * = lam``."""
    return SetHObject(H, (), _ro(np.arange(len(H))[:, None]), "I")


def tensor_objects(X: SetHObject, Y: SetHObject) -> SetHObject:
    if not X.H.same_as(Y.H):
        raise MismatchedH("objects live over different H")
    # lam . (x, y) = (lam . x) . y
    action = Y.action[X.action[:, :, None], np.arange(Y.size)[None, None, :]]
    name = f"{X.name}{Y.name}" if X.name and Y.name else ""
    return SetHObject(X.H, X.factors + Y.factors, _ro(action.reshape(X.nH, -1)), name)


@dataclass(frozen=True, eq=False)
class SetHMorphism:
    source: SetHObject
    target: SetHObject
    table: np.ndarray
    name: str = field(default="", compare=False)

    def __call__(self, lam, elem) -> tuple:
        """Evaluate ``f(lam)(elem)`` on flat index tuples."""
        return self.target.unflatten(self.table[lam, self.source.flatten(elem)])

    def __matmul__(self, other: "SetHMorphism") -> "SetHMorphism":
        return compose_morphisms(self, other)

    def tensor(self, other: "SetHMorphism") -> "SetHMorphism":
        return tensor_morphisms(self, other)


def morphism_from_function(source, target, fn, name="", check=True) -> SetHMorphism:
    """Tabulate ``fn(lam, elem) -> elem`` over every ``lam`` and flat element."""
    table = np.empty((source.nH, source.size), dtype=np.int64)
    for lam in range(source.nH):
        for i in range(source.size):
            table[lam, i] = target.flatten(fn(lam, source.unflatten(i)))
    f = SetHMorphism(source, target, _ro(table), name)
    if check:
        require_morphism(f)
    return f


def morphism_from_table(source, target, table, name="", check=True) -> SetHMorphism:
    table = np.asarray(table, dtype=np.int64).reshape(source.nH, source.size)
    if table.size and (table.min() < 0 or table.max() >= target.size):
        raise TypeMismatch("morphism table values out of range")
    f = SetHMorphism(source, target, _ro(table), name)
    if check:
        require_morphism(f)
    return f


def identity(X: SetHObject) -> SetHMorphism:
    table = np.broadcast_to(np.arange(X.size), (X.nH, X.size))
    return SetHMorphism(X, X, _ro(table), f"1_{X.name}" if X.name else "1")


def tensor_morphisms(f: SetHMorphism, g: SetHMorphism) -> SetHMorphism:
    """``(f (x) g)(lam)(x, y) = (f(lam)(x), g(lam . x)(y))``."""
    if not f.source.H.same_as(g.source.H):
        raise MismatchedH("morphisms live over different H")
    X = f.source
    shifted = g.table[X.action]  # (nH, |X|, |X'|)
    table = f.table[:, :, None] * g.target.size + shifted
    return SetHMorphism(
        tensor_objects(f.source, g.source),
        tensor_objects(f.target, g.target),
        _ro(table.reshape(X.nH, -1)),
    )


def tensor(*fs: SetHMorphism) -> SetHMorphism:
    out = fs[0]
    for g in fs[1:]:
        out = tensor_morphisms(out, g)
    return out


def compose_morphisms(g: SetHMorphism, f: SetHMorphism) -> SetHMorphism:
    """``(g o f)(lam) = g(lam) o f(lam)``."""
    if f.target.shape != g.source.shape or not f.target.H.same_as(g.source.H):
        raise TypeMismatch(
            f"cannot compose: target shape {f.target.shape} vs source shape {g.source.shape}"
        )
    table = np.take_along_axis(g.table, f.table, axis=1)
    return SetHMorphism(f.source, g.target, _ro(table))


def compose(*fs: SetHMorphism) -> SetHMorphism:
    """``compose(h, g, f) = h o g o f``."""
    out = fs[-1]
    for g in reversed(fs[:-1]):
        out = compose_morphisms(g, out)
    return out


def rebracket(X: SetHObject, Y: SetHObject) -> SetHMorphism:
    """A re-bracketing constraint between two flat presentations of one object.

    Under flat storage ``a``, ``l`` and ``r`` all reduce to this identity; it
    raises if the two objects do not actually agree.
    """
    if not X.same_as(Y):
        raise TypeMismatch("re-bracketing between different objects")
    return SetHMorphism(X, Y, identity(X).table)


def validate_morphism(f: SetHMorphism, check: str = "morphism") -> CheckResult:
    """Check ``lam . f(lam)(x) == lam . x`` everywhere; report the first failure."""
    with timed() as clock:
        lhs = np.take_along_axis(f.target.action, f.table, axis=1)
        rhs = f.source.action
        bad = np.argwhere(lhs != rhs)
    count = int(f.table.size)
    if len(bad) == 0:
        return CheckResult(check, True, count, clock.seconds)
    lam, i = (int(v) for v in bad[0])
    w = Witness(
        check=check,
        lam=lam,
        inputs=f.source.unflatten(i),
        lhs=(int(lhs[lam, i]),),
        rhs=(int(rhs[lam, i]),),
        source=f.source,
        value_space=None,
    )
    return CheckResult(check, False, count, clock.seconds, w)


def require_morphism(f: SetHMorphism) -> SetHMorphism:
    res = validate_morphism(f)
    if not res.passed:
        w = res.witness
        raise NotAMorphism(
            f"compatibility law fails at lambda={f.source.H.label(w.lam)}, "
            f"input={f.source.labels_of(f.source.flatten(w.inputs))}",
            lam=w.lam,
            inputs=list(w.inputs),
        )
    return f


def morphisms_equal(f: SetHMorphism, g: SetHMorphism, check: str = "equal") -> CheckResult:
    """Extensional equality; the witness is the least differing ``(lam, x)``."""
    if f.source.shape != g.source.shape or f.target.shape != g.target.shape:
        raise TypeMismatch(
            f"{check}: shapes differ ({f.source.shape}->{f.target.shape} vs "
            f"{g.source.shape}->{g.target.shape})"
        )
    with timed() as clock:
        bad = np.argwhere(f.table != g.table)
    count = int(f.table.size)
    if len(bad) == 0:
        return CheckResult(check, True, count, clock.seconds)
    lam, i = (int(v) for v in bad[0])
    w = Witness(
        check=check,
        lam=lam,
        inputs=f.source.unflatten(i),
        lhs=f.target.unflatten(f.table[lam, i]),
        rhs=g.target.unflatten(g.table[lam, i]),
        source=f.source,
        value_space=f.target,
    )
    return CheckResult(check, False, count, clock.seconds, w)


def with_override(f: SetHMorphism, lam: int, inputs, outputs) -> SetHMorphism:
    """Copy of ``f`` with one entry replaced; no validation (negative controls)."""
    table = np.array(f.table)
    table[lam, f.source.flatten(inputs)] = f.target.flatten(outputs)
    return SetHMorphism(f.source, f.target, _ro(table), f.name)


def check_equation(name: str, lhs: SetHMorphism, rhs: SetHMorphism) -> CheckResult:
    """Verify ``lhs == rhs`` as Set_H morphisms on flat tuples."""
    return morphisms_equal(lhs, rhs, check=name)


def replay(witness: Witness, lhs: SetHMorphism, rhs: SetHMorphism) -> bool:
    """True if the two sides still disagree at the witness point."""
    return lhs(witness.lam, witness.inputs) != rhs(witness.lam, witness.inputs)
