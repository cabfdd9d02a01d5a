"""Enumerate homomorphism families ``X -> End(G)`` and census their reflection maps."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .correspondence import HomFamily
from .finite_algebra import enumerate_endomorphisms
from .reflection import check_reflection_equation, k_from_family, k_is_constant

DEFAULT_CAP = 10**6
WORKERS_ENV = "DYNREFL_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _decode(index: int, base: int, width: int) -> tuple:
    """Mixed-radix digits of ``index``, most significant first (lexicographic order)."""
    digits = []
    for _ in range(width):
        index, d = divmod(index, base)
        digits.append(d)
    return tuple(reversed(digits))


def family_indices(total: int, limit=None, sample=None, seed: int = 0) -> list:
    if sample is not None:
        rng = np.random.default_rng(seed)
        k = min(int(sample), total)
        return sorted(int(i) for i in rng.choice(total, size=k, replace=False))
    stop = total if limit is None else min(total, int(limit))
    return list(range(stop))


def _census_one(wb, endos, idx: int) -> dict:
    mod = wb.module
    X = mod.X.factors[0]
    digits = _decode(idx, len(endos), len(X))
    F = HomFamily(wb.paired.G, X, np.array([endos[d].map for d in digits]))
    k = k_from_family(mod, F, validate=False)
    rep = check_reflection_equation(k, wb.sigma)
    res = rep["RE"]
    out = {
        "index": idx,
        "family": [int(d) for d in digits],
        "reflection": res.passed,
        "k_constant": k_is_constant(k) is None,
    }
    if not res.passed and res.witness is not None:
        out["witness"] = res.witness.to_dict()
    return out


_WORKER = {}


def _init_worker(doc):
    from .document import open_workbench

    wb = open_workbench(doc)
    _WORKER["wb"] = wb
    _WORKER["endos"] = enumerate_endomorphisms(wb.paired.G)


def _run_chunk(indices):
    return [_census_one(_WORKER["wb"], _WORKER["endos"], i) for i in indices]


def run_census(wb, limit=None, cap: int = DEFAULT_CAP, sample=None, seed: int = 0, workers: int = 1) -> dict:
    """Build ``k`` for each family and check the reflection equation.

    Families are ordered lexicographically by endomorphism index (endomorphisms
    sorted by image tuple).  If more than ``cap`` families would be visited the
    run stops at ``cap`` and reports ``cap_exceeded``.
    """
    G = wb.paired.G
    X = wb.module.X.factors[0]
    endos = enumerate_endomorphisms(G)
    total = len(endos) ** len(X)
    indices = family_indices(total, limit, sample, seed)
    cap_exceeded = len(indices) > cap
    indices = indices[:cap]
    if workers > 1 and len(indices) > 1:
        chunks = [indices[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(wb.doc,)) as pool:
            rows = [r for part in pool.map(_run_chunk, chunks) for r in part]
        rows.sort(key=lambda r: r["index"])
    else:
        rows = [_census_one(wb, endos, i) for i in indices]
    labels = [[G.carrier.label(v) for v in e.map] for e in endos]
    return {
        "group_order": G.order,
        "endomorphisms": len(endos),
        "endomorphism_images": labels,
        "X": list(X.labels),
        "total_families": total,
        "visited": len(rows),
        "cap_exceeded": cap_exceeded,
        "reflection_pass": sum(r["reflection"] for r in rows),
        "reflection_fail": sum(not r["reflection"] for r in rows),
        "k_constant": sum(r["k_constant"] for r in rows),
        "families": rows,
    }


def family_from_census_row(wb, row) -> HomFamily:
    endos = enumerate_endomorphisms(wb.paired.G)
    X = wb.module.X.factors[0]
    return HomFamily(wb.paired.G, X, np.array([endos[d].map for d in row["family"]]))


def iter_all_families(G, X):
    """Every family in lexicographic order (small cases and tests)."""
    endos = enumerate_endomorphisms(G)
    for digits in itertools.product(range(len(endos)), repeat=len(X)):
        yield HomFamily(G, X, np.array([endos[d].map for d in digits]))
