"""Label-level table dumps for ``build`` and their inverse."""

from __future__ import annotations

import numpy as np

from .correspondence import my_from_family
from .module_theory import lift_actions
from .quiver import QuiverMorphism, lift_solution
from .seth import SetHMorphism

WHAT = {
    "sigma": ("sigma",),
    "k": ("k",),
    "lifts": ("m_Y^triv", "m_Y^sigma", "m_Y"),
    "quiver": ("sigma~", "k~"),
}


def _morphisms(wb, what: str) -> dict:
    if what == "sigma":
        return {"sigma": wb.sigma.morphism}
    if what == "k":
        return {"k": wb.k.morphism}
    if what == "lifts":
        triv, sig = lift_actions(wb.module, wb.sigma)
        return {"m_Y^triv": triv, "m_Y^sigma": sig, "m_Y": my_from_family(wb.module, wb.family, validate=False)}
    if what == "quiver":
        L, X = wb.sigma.L, wb.module.X
        return {"sigma~": lift_solution(wb.sigma.morphism, L, L), "k~": lift_solution(wb.k.morphism, L, X)}
    raise ValueError(f"cannot build {what!r}; expected one of {sorted(WHAT)}")


def _dump_seth(name: str, f: SetHMorphism) -> dict:
    src, tgt, H = f.source, f.target, f.source.H
    blocks = []
    for lam in range(src.nH):
        rows = [[src.labels_of(i), tgt.labels_of(f.table[lam, i])] for i in range(src.size)]
        blocks.append({"lambda": H.label(lam), "rows": rows})
    return {"name": name, "kind": "set_h", "arity": [len(src.factors), len(tgt.factors)], "blocks": blocks}


def _dump_quiver(name: str, f: QuiverMorphism) -> dict:
    S, T, H = f.source, f.target, f.source.H
    blocks = []
    for lam in range(len(H)):
        rows = [[S.render(S.arrows[i]), T.render(T.arrows[f.mapping[i]])] for i in S.starting_at(lam)]
        blocks.append({"lambda": H.label(lam), "rows": rows})
    return {"name": name, "kind": "quiver", "blocks": blocks}


def dump_tables(wb, what: str) -> dict:
    tables = []
    for name, f in _morphisms(wb, what).items():
        tables.append(_dump_quiver(name, f) if isinstance(f, QuiverMorphism) else _dump_seth(name, f))
    return {"document": wb.name, "what": what, "tables": tables}


def _fmt(v) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    return str(v)


def render_dump(dump: dict) -> str:
    lines = []
    for t in dump["tables"]:
        lines.append(f"== {t['name']} ==")
        for block in t["blocks"]:
            lines.append(f"lambda = {block['lambda']}")
            for inp, out in block["rows"]:
                lines.append(f"  {_fmt(inp)} -> {_fmt(out)}")
    return "\n".join(lines)


def tables_from_dump(wb, dump: dict) -> dict:
    """Re-read a ``set_h`` dump into index tables shaped like the in-memory ones."""
    morphs = _morphisms(wb, dump["what"])
    out = {}
    for t in dump["tables"]:
        f = morphs[t["name"]]
        if t["kind"] == "quiver":
            S, T = f.source, f.target
            mapping = np.full(len(S), -1, dtype=np.int64)
            lookup_s = {repr(S.render(a)): i for i, a in enumerate(S.arrows)}
            lookup_t = {repr(T.render(a)): i for i, a in enumerate(T.arrows)}
            for block in t["blocks"]:
                for inp, res in block["rows"]:
                    mapping[lookup_s[repr(inp)]] = lookup_t[repr(res)]
            out[t["name"]] = mapping
            continue
        table = np.full(f.table.shape, -1, dtype=np.int64)
        H = f.source.H
        for block in t["blocks"]:
            lam = H.index(block["lambda"])
            for inp, res in block["rows"]:
                table[lam, f.source.parse(inp)] = f.target.parse(res)
        out[t["name"]] = table
    return out
