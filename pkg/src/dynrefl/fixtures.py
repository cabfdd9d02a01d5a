"""Built-in worked examples.

``EX53``: the six-element non-associative left quasigroup paired with S3.
``EX89``: ``EX53`` with a three-point set acted on by L, the induced module
and the inner-automorphism family.  ``ZN3``: the cyclic group of order 3
paired with itself.
"""

from __future__ import annotations

import copy

L_LABELS = ["e_L", "l1", "l2", "l3", "l4", "l5"]

QUASIGROUP_TABLE = [
    ["e_L", "l1", "l2", "l3", "l4", "l5"],
    ["l1", "l5", "l3", "l4", "l2", "e_L"],
    ["l2", "l3", "l5", "l1", "e_L", "l4"],
    ["l3", "l4", "e_L", "l2", "l5", "l1"],
    ["l4", "e_L", "l1", "l5", "l3", "l2"],
    ["l5", "l2", "l4", "e_L", "l1", "l3"],
]

PI_EX89 = {
    "e_L": "id",
    "l1": "(123)",
    "l2": "(132)",
    "l3": "(12)",
    "l4": "(13)",
    "l5": "(23)",
}

X_LABELS = ["x1", "x2", "x3"]

# a x for a in L (rows) and x in X (columns)
ACTION_TABLE = [
    ["x1", "x2", "x3"],
    ["x2", "x1", "x3"],
    ["x3", "x2", "x1"],
    ["x1", "x3", "x2"],
    ["x2", "x3", "x1"],
    ["x3", "x1", "x2"],
]

F_EX89 = {"x1": "l2", "x2": "l4", "x3": "l3"}

# lam ._X x
DOT_TABLE = [
    ["l2", "l4", "l3"],
    ["l4", "l2", "l3"],
    ["l3", "l4", "l2"],
    ["l2", "l3", "l4"],
    ["l4", "l3", "l2"],
    ["l3", "l2", "l4"],
]

G_EX89 = {"x1": "(132)", "x2": "(13)", "x3": "(12)"}


def ex53_document() -> dict:
    return copy.deepcopy({
        "name": "EX53",
        "quasigroup": {"labels": L_LABELS, "table": QUASIGROUP_TABLE, "unit": "e_L"},
        "group": {"symmetric": 3},
        "pi": dict(PI_EX89),
        "module": {"kind": "left-regular"},
        "family": {"kind": "trivial"},
    })


def ex89_document() -> dict:
    return copy.deepcopy({
        "name": "EX89",
        "quasigroup": {"labels": L_LABELS, "table": QUASIGROUP_TABLE, "unit": "e_L"},
        "group": {"symmetric": 3},
        "pi": dict(PI_EX89),
        "module": {
            "kind": "action",
            "labels": X_LABELS,
            "table": ACTION_TABLE,
            "f": dict(F_EX89),
        },
        "family": {"kind": "inner", "g": dict(G_EX89)},
    })


def zn3_document() -> dict:
    labels = ["0", "1", "2"]
    table = [[str((a + b) % 3) for b in range(3)] for a in range(3)]
    return {
        "name": "ZN3",
        "quasigroup": {"labels": labels, "table": table, "unit": "0"},
        "group": {"cyclic": 3},
        "pi": {s: s for s in labels},
        "module": {
            "kind": "action",
            "labels": ["y0", "y1", "y2"],
            "table": [[f"y{(a + x) % 3}" for x in range(3)] for a in range(3)],
            "f": {"y0": "0", "y1": "1", "y2": "2"},
        },
        "family": {"kind": "identity"},
    }


FIXTURES = {
    "EX53": ex53_document,
    "EX89": ex89_document,
    "ZN3": zn3_document,
}
