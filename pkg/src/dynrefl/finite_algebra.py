"""Finite carriers, left quasigroups with unit, finite groups and bijections.

Elements are dense 0-based indices into a :class:`Carrier`; labels only
matter for input and output.  Every structure is validated on construction
and its tables are stored as read-only ``numpy`` arrays so that the
exhaustive verifiers can use fancy indexing directly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CapExceeded,
    DuplicateLabel,
    EmptyCarrier,
    NoInverse,
    NotABijection,
    NotAssociative,
    NoUnit,
    RowNotPermutation,
    ShapeError,
    SizeMismatch,
    UnitLawViolated,
    UnknownLabel,
)

ENDOMORPHISM_CAP = 12


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=np.int64)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class Carrier:
    """An ordered list of distinct element names."""

    labels: tuple
    aliases: dict = field(default_factory=dict, repr=False)
    resolver: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise EmptyCarrier("carrier must be nonempty")
        seen = {}
        for i, lab in enumerate(labels):
            if lab in seen:
                raise DuplicateLabel(f"label {lab!r} appears twice", label=lab, first=seen[lab], second=i)
            seen[lab] = i
        object.__setattr__(self, "_index", seen)

    def __len__(self):
        return len(self.labels)

    def index(self, label) -> int:
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < len(self.labels):
                return int(label)
            raise UnknownLabel(f"index {label} out of range", label=int(label))
        key = str(label)
        if key in self._index:
            return self._index[key]
        if key in self.aliases:
            return self.aliases[key]
        if self.resolver is not None:
            hit = self.resolver(key)
            if hit is not None:
                return hit
        raise UnknownLabel(f"unknown element {key!r}", label=key)

    def label(self, i) -> str:
        return self.labels[int(i)]

    def same_as(self, other: "Carrier") -> bool:
        return self is other or self.labels == other.labels


def _resolve_table(carrier: Carrier, table) -> np.ndarray:
    n = len(carrier)
    rows = list(table)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ShapeError(f"table must be {n}x{n}", expected=n)
    return np.array([[carrier.index(v) for v in row] for row in rows], dtype=np.int64)


@dataclass(frozen=True, eq=False)
class LeftQuasigroup:
    """A left quasigroup with two-sided unit.

    ``mul[a, b]`` is ``a*b`` and ``div[a, c]`` is the left quotient ``a\\c``.
    """

    carrier: Carrier
    mul: np.ndarray
    unit: int
    div: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.carrier)

    def left_divide(self, a, c) -> int:
        return int(self.div[a, c])

    def associativity_witness(self):
        """First ``(a, b, c)`` with ``(ab)c != a(bc)``, or ``None``."""
        m = self.mul
        lhs = m[m[:, :, None], np.arange(self.order)[None, None, :]]
        rhs = m[np.arange(self.order)[:, None, None], m[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad) == 0:
            return None
        return tuple(int(v) for v in bad[0])

    def is_group(self) -> bool:
        return self.associativity_witness() is None


def validate_left_quasigroup(labels, table, unit) -> LeftQuasigroup:
    """Validate a multiplication table as a left quasigroup with unit.

    Raises on the first violated axiom, scanning rows in index order.
    """
    carrier = labels if isinstance(labels, Carrier) else Carrier(tuple(labels))
    mul = _resolve_table(carrier, table)
    n = len(carrier)
    u = carrier.index(unit)
    for a in range(n):
        if len(set(mul[a].tolist())) != n:
            counts = np.bincount(mul[a], minlength=n)
            raise RowNotPermutation(
                f"row {carrier.label(a)} is not a permutation",
                row=a, missing=int(np.flatnonzero(counts == 0)[0]),
            )
    for a in range(n):
        if mul[u, a] != a or mul[a, u] != a:
            raise UnitLawViolated(f"unit law fails at {carrier.label(a)}", element=a)
    div = np.empty_like(mul)
    rows = np.arange(n)[:, None]
    div[rows, mul] = np.arange(n)[None, :]
    return LeftQuasigroup(carrier, _frozen(mul), u, _frozen(div))


def left_divide(L: LeftQuasigroup, a, c) -> int:
    return L.left_divide(L.carrier.index(a), L.carrier.index(c))


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    carrier: Carrier
    mul: np.ndarray
    unit: int
    inv: np.ndarray

    @property
    def order(self) -> int:
        return len(self.carrier)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def as_quasigroup(self) -> LeftQuasigroup:
        return validate_left_quasigroup(self.carrier, self.mul.tolist(), self.unit)


def group_from_table(labels, table) -> FiniteGroup:
    """Validate a Cayley table; the unit and inverses are discovered."""
    carrier = labels if isinstance(labels, Carrier) else Carrier(tuple(labels))
    mul = _resolve_table(carrier, table)
    n = len(carrier)
    ar = np.arange(n)
    units = [e for e in range(n) if np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)]
    if not units:
        raise NoUnit("no two-sided unit")
    e = units[0]
    lhs = mul[mul[:, :, None], ar[None, None, :]]
    rhs = mul[ar[:, None, None], mul[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise NotAssociative(
            f"({carrier.label(a)}{carrier.label(b)}){carrier.label(c)} != "
            f"{carrier.label(a)}({carrier.label(b)}{carrier.label(c)})",
            witness=[carrier.label(a), carrier.label(b), carrier.label(c)],
        )
    inv = np.full(n, -1, dtype=np.int64)
    for a in range(n):
        hits = np.flatnonzero((mul[a] == e) & (mul[:, a] == e))
        if len(hits) == 0:
            raise NoInverse(f"{carrier.label(a)} has no inverse", element=a)
        inv[a] = hits[0]
    return FiniteGroup(carrier, _frozen(mul), e, _frozen(inv))


# -- permutations -----------------------------------------------------------

def _perm_word(p) -> str:
    return "".join(str(v + 1) for v in p)


def parse_cycles(text: str, n: int) -> tuple:
    """Parse cycle notation such as ``(123)`` or ``(1 2)(3 4)`` into an image tuple."""
    text = text.strip()
    img = list(range(n))
    if text in ("", "()", "id", "e"):
        return tuple(img)
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups or re.sub(r"\([^()]*\)", "", text).strip():
        raise UnknownLabel(f"cannot parse cycle {text!r}", label=text)
    # product of cycles is read right to left, matching the composition convention
    for grp in reversed(groups):
        pts = grp.replace(",", " ").split() if (" " in grp or "," in grp) else list(grp)
        pts = [int(p) - 1 for p in pts]
        if any(not 0 <= p < n for p in pts) or len(set(pts)) != len(pts):
            raise UnknownLabel(f"bad cycle {text!r}", label=text)
        step = {pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))}
        img = [step.get(v, v) for v in img]
    return tuple(img)


def compose_perms(p, q) -> tuple:
    """``pq`` with the right factor applied first: ``(pq)(i) = p(q(i))``."""
    return tuple(p[q[i]] for i in range(len(p)))


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 9:
        raise CapExceeded("symmetric(n) supports 1 <= n <= 9", n=n)
    perms = sorted(itertools.permutations(range(n)))
    where = {p: i for i, p in enumerate(perms)}
    table = [[where[compose_perms(p, q)] for q in perms] for p in perms]
    aliases = {_cycle_string(p): i for i, p in enumerate(perms)}

    def resolve(text):
        try:
            return where[parse_cycles(text, n)]
        except (UnknownLabel, ValueError):
            return None

    carrier = Carrier(tuple(_perm_word(p) for p in perms), aliases, resolve)
    return group_from_table(carrier, table)


def _cycle_string(p) -> str:
    seen, parts = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            seen.add(s)
            continue
        cyc, v = [], s
        while v not in seen:
            seen.add(v)
            cyc.append(str(v + 1))
            v = p[v]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "id"


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise EmptyCarrier("cyclic(n) needs n >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(Carrier(tuple(str(i) for i in range(n))), table)


def direct_product(G: FiniteGroup, K: FiniteGroup) -> FiniteGroup:
    pairs = [(a, b) for a in range(G.order) for b in range(K.order)]
    labels = tuple(f"({G.carrier.label(a)},{K.carrier.label(b)})" for a, b in pairs)
    m = K.order
    table = [
        [int(G.mul[a, c]) * m + int(K.mul[b, d]) for (c, d) in pairs]
        for (a, b) in pairs
    ]
    return group_from_table(Carrier(labels), table)


def build_named_group(desc) -> FiniteGroup:
    """Build a group from a short description.

    Accepted forms: ``{"symmetric": n}``, ``{"cyclic": n}``,
    ``{"product": [desc, desc, ...]}``, ``{"labels": [...], "table": [[...]]}``
    and the strings ``"symmetric(n)"`` / ``"cyclic(n)"``.
    """
    if isinstance(desc, FiniteGroup):
        return desc
    if isinstance(desc, str):
        m = re.fullmatch(r"\s*(symmetric|cyclic)\((\d+)\)\s*", desc)
        if not m:
            raise ShapeError(f"unknown group description {desc!r}")
        desc = {m.group(1): int(m.group(2))}
    if "symmetric" in desc:
        return symmetric_group(int(desc["symmetric"]))
    if "cyclic" in desc:
        return cyclic_group(int(desc["cyclic"]))
    if "product" in desc:
        parts = [build_named_group(s) for s in desc["product"]]
        if not parts:
            raise ShapeError("empty product")
        out = parts[0]
        for g in parts[1:]:
            out = direct_product(out, g)
        return out
    if "table" in desc:
        return group_from_table(desc["labels"], desc["table"])
    raise ShapeError(f"unknown group description {desc!r}")


def mu1(G: FiniteGroup, a, b, c):
    """The heap operation ``a b^{-1} c``; works elementwise on index arrays."""
    return G.mul[G.mul[a, G.inv[b]], c]


# -- pairing ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PairedStructure:
    """A left quasigroup ``L`` with a group ``G`` and a bijection ``pi: L -> G``."""

    L: LeftQuasigroup
    G: FiniteGroup
    pi: np.ndarray
    pinv: np.ndarray = field(repr=False)
    lambda0: int = 0

    @property
    def n(self) -> int:
        return self.L.order

    @property
    def H(self) -> Carrier:
        return self.L.carrier

    # vectorised helpers; every argument may be an int or an index array
    def lmul(self, a, b):
        return self.L.mul[a, b]

    def ldiv(self, a, c):
        return self.L.div[a, c]

    def gmul(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.G.mul[out, x]
        return out

    def ginv(self, a):
        return self.G.inv[a]


def make_paired(L: LeftQuasigroup, G: FiniteGroup, pi) -> PairedStructure:
    """``pi`` maps L-elements to G-elements (labels, indices, or a dict)."""
    if L.order != G.order:
        raise SizeMismatch(f"|L|={L.order} but |G|={G.order}", L=L.order, G=G.order)
    if isinstance(pi, dict):
        arr = [None] * L.order
        for k, v in pi.items():
            arr[L.carrier.index(k)] = G.carrier.index(v)
        if any(v is None for v in arr):
            missing = [L.carrier.label(i) for i, v in enumerate(arr) if v is None]
            raise NotABijection(f"pi undefined on {missing}", missing=missing)
    else:
        arr = [G.carrier.index(v) for v in pi]
        if len(arr) != L.order:
            raise NotABijection("pi has wrong length")
    arr = np.array(arr, dtype=np.int64)
    if len(set(arr.tolist())) != L.order:
        raise NotABijection("pi is not injective")
    pinv = np.empty_like(arr)
    pinv[arr] = np.arange(L.order)
    lambda0 = int(pinv[G.unit])
    return PairedStructure(L, G, _frozen(arr), _frozen(pinv), lambda0)


# -- endomorphisms ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GroupEndomorphism:
    group: FiniteGroup
    map: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "map", _frozen(self.map))

    def __call__(self, a):
        return self.map[a]

    def key(self) -> tuple:
        return tuple(int(v) for v in self.map)

    def homomorphism_witness(self):
        G, f = self.group, self.map
        bad = np.argwhere(f[G.mul] != G.mul[f[:, None], f[None, :]])
        return None if len(bad) == 0 else (int(bad[0][0]), int(bad[0][1]))


def _generators(G: FiniteGroup) -> list:
    gens, span = [], {G.unit}
    for g in range(G.order):
        if g in span:
            continue
        gens.append(g)
        frontier = list(span)
        while frontier:
            h = frontier.pop()
            for s in gens:
                v = int(G.mul[h, s])
                if v not in span:
                    span.add(v)
                    frontier.append(v)
        if len(span) == G.order:
            break
    return gens


def enumerate_endomorphisms(G: FiniteGroup, cap: int = ENDOMORPHISM_CAP) -> list:
    """All endomorphisms of ``G``, sorted by image tuple."""
    if G.order > cap:
        raise CapExceeded(f"|G|={G.order} exceeds cap {cap}", order=G.order, cap=cap)
    gens = _generators(G)
    found = []
    for images in itertools.product(range(G.order), repeat=len(gens)):
        f = [-1] * G.order
        f[G.unit] = G.unit
        queue, ok = [G.unit], True
        while queue and ok:
            h = queue.pop()
            for s, img in zip(gens, images):
                v, w = int(G.mul[h, s]), int(G.mul[f[h], img])
                if f[v] == -1:
                    f[v] = w
                    queue.append(v)
                elif f[v] != w:
                    ok = False
                    break
        if ok:
            endo = GroupEndomorphism(G, f)
            if endo.homomorphism_witness() is None:
                found.append(endo)
    found.sort(key=GroupEndomorphism.key)
    return found
