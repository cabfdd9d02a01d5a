"""Independent brute-force evaluators working on labels with plain Python.

Nothing here imports the package: these are the reference values the
vectorised tables are compared against.
"""

from __future__ import annotations

import itertools

L = ["e_L", "l1", "l2", "l3", "l4", "l5"]
QUASIGROUP_TABLE = {
    "e_L": ["e_L", "l1", "l2", "l3", "l4", "l5"],
    "l1": ["l1", "l5", "l3", "l4", "l2", "e_L"],
    "l2": ["l2", "l3", "l5", "l1", "e_L", "l4"],
    "l3": ["l3", "l4", "e_L", "l2", "l5", "l1"],
    "l4": ["l4", "e_L", "l1", "l5", "l3", "l2"],
    "l5": ["l5", "l2", "l4", "e_L", "l1", "l3"],
}
X = ["x1", "x2", "x3"]
ACTION_TABLE = {
    "e_L": ["x1", "x2", "x3"],
    "l1": ["x2", "x1", "x3"],
    "l2": ["x3", "x2", "x1"],
    "l3": ["x1", "x3", "x2"],
    "l4": ["x2", "x3", "x1"],
    "l5": ["x3", "x1", "x2"],
}
F = {"x1": "l2", "x2": "l4", "x3": "l3"}

# permutations of {1,2,3} as image tuples; product pq applies q first
PERM = {
    "id": (1, 2, 3),
    "(123)": (2, 3, 1),
    "(132)": (3, 1, 2),
    "(12)": (2, 1, 3),
    "(13)": (3, 2, 1),
    "(23)": (1, 3, 2),
}
PI = {"e_L": "id", "l1": "(123)", "l2": "(132)", "l3": "(12)", "l4": "(13)", "l5": "(23)"}
G_INNER = {"x1": "(132)", "x2": "(13)", "x3": "(12)"}


def pmul(p, q):
    return tuple(p[q[i] - 1] for i in range(len(q)))


def pinv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


class Ex53:
    """The six-element quasigroup with S3 through ``PI``, everything on labels."""

    def __init__(self):
        self.L = L
        self.e = "e_L"
        self.to_g = {a: PERM[PI[a]] for a in L}
        self.from_g = {v: k for k, v in self.to_g.items()}

    def mul(self, a, b):
        return QUASIGROUP_TABLE[a][L.index(b)]

    def div(self, a, c):
        (b,) = [b for b in L if self.mul(a, b) == c]
        return b

    def gmul(self, *ps):
        out = ps[0]
        for p in ps[1:]:
            out = pmul(out, p)
        return out

    def sigma(self, lam, a, b):
        pi, inv = self.to_g, self.from_g
        la = self.mul(lam, a)
        lab = self.mul(la, b)
        xi = self.div(lam, inv[self.gmul(pi[lam], pinv(pi[la]), pi[lab])])
        eta = self.div(self.mul(lam, xi), lab)
        return xi, eta

    def m(self, lam, a, b):
        return self.div(lam, self.mul(self.mul(lam, a), b))

    # L acting on X by the action table; a\y is the x with a x = y
    def xact(self, a, x):
        return ACTION_TABLE[a][X.index(x)]

    def xdiv(self, a, y):
        (x,) = [x for x in X if self.xact(a, x) == y]
        return x

    def dot_x(self, lam, x):
        return F[self.xdiv(self.e, self.xact(lam, x))]

    def mX(self, lam, a, x):
        return self.xdiv(lam, self.xact(self.mul(lam, a), x))

    def k_inner(self, lam, a, x, g=G_INNER, lam0="e_L"):
        pi, inv = self.to_g, self.from_g
        la = self.mul(lam, a)
        gx = PERM[g[self.mX(lam0, self.div(lam0, la), x)]]
        b = inv[self.gmul(pi[lam], pinv(gx), pi[la], pinv(pi[lam]), gx)]
        return self.div(lam, b), self.mX(b, self.div(b, la), x)


def braid_violations(sigma, L, mul):
    bad = []
    for lam, a, b, c in itertools.product(L, repeat=4):
        a1, b1 = sigma(lam, a, b)
        b2, c2 = sigma(mul(lam, a1), b1, c)
        lhs = sigma(lam, a1, b2) + (c2,)
        b1, c1 = sigma(mul(lam, a), b, c)
        a2, b2 = sigma(lam, a, b1)
        b3, c3 = sigma(mul(lam, a2), b2, c1)
        rhs = (a2, b3, c3)
        if lhs != rhs:
            bad.append((lam, a, b, c))
    return bad


def reflection_violations(sigma, k, L, X, mul):
    """Pointwise reflection equation with Set_H associators as identities."""
    bad = []
    for lam, a, b, x in itertools.product(L, L, L, X):
        a1, b1 = sigma(lam, a, b)
        b2, x2 = k(mul(lam, a1), b1, x)
        a3, b3 = sigma(lam, a1, b2)
        b4, x4 = k(mul(lam, a3), b3, x2)
        lhs = (a3, b4, x4)
        b1, x1 = k(mul(lam, a), b, x)
        a2, b2 = sigma(lam, a, b1)
        b3, x3 = k(mul(lam, a2), b2, x1)
        a4, b4 = sigma(lam, a2, b3)
        rhs = (a4, b4, x3)
        if lhs != rhs:
            bad.append((lam, a, b, x))
    return bad


def endomorphisms(elements, mul):
    """Every map ``f`` on ``elements`` with ``f(ab) = f(a) f(b)``."""
    found = []
    for images in itertools.product(elements, repeat=len(elements)):
        f = dict(zip(elements, images))
        if all(f[mul(a, b)] == mul(f[a], f[b]) for a in elements for b in elements):
            found.append(f)
    return found
