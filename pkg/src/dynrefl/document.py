"""Workbench documents: JSON in, fully built structures out.

A document names a left quasigroup, a group, the bijection ``pi``, a module
and a homomorphism family.  An optional ``overrides`` block replaces single
entries of ``sigma``, ``k`` or ``m_X`` after construction; it exists to
produce negative controls and is never validated as a morphism.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .correspondence import HomFamily
from .errors import SchemaError
from .finite_algebra import (
    Carrier,
    FiniteGroup,
    PairedStructure,
    build_named_group,
    group_from_table,
    make_paired,
    validate_left_quasigroup,
)
from .module_theory import (
    LeftModule,
    module_from_action,
    module_left_regular,
    module_map_ll,
    module_one_point,
)
from .reflection import ReflectionMap, family_builders, k_from_family
from .seth import SetHMorphism, with_override
from .yang_baxter import DynamicalYBMap, MonoidStructure, build_monoid, build_sigma

MODULE_KINDS = ("left-regular", "one-point", "map-ll", "action")
OVERRIDE_TARGETS = ("sigma", "k", "m_X")
REQUIRED = ("quasigroup", "group", "pi", "module", "family")


def load_document(source) -> dict:
    """Read a document from a path, a JSON string or an already-parsed dict."""
    if isinstance(source, dict):
        return source
    text = source
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise SchemaError(f"cannot read {source}: {exc}", path=str(source)) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} at line {exc.lineno}", line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    return doc


def check_schema(doc: dict) -> None:
    missing = [k for k in REQUIRED if k not in doc]
    if missing:
        raise SchemaError(f"missing fields {missing}", missing=missing)
    q = doc["quasigroup"]
    if not isinstance(q, dict) or not {"labels", "table", "unit"} <= set(q):
        raise SchemaError("quasigroup needs labels, table and unit")
    mod = doc["module"]
    if not isinstance(mod, dict) or mod.get("kind") not in MODULE_KINDS:
        raise SchemaError(f"module.kind must be one of {MODULE_KINDS}", got=mod.get("kind") if isinstance(mod, dict) else None)
    fam = doc["family"]
    if not isinstance(fam, dict) or "kind" not in fam:
        raise SchemaError("family needs a kind")
    for key in doc.get("overrides", {}) or {}:
        if key not in OVERRIDE_TARGETS:
            raise SchemaError(f"cannot override {key!r}; expected one of {OVERRIDE_TARGETS}")


def _group(desc) -> FiniteGroup:
    if isinstance(desc, dict) and "table" in desc and "labels" in desc:
        return group_from_table(desc["labels"], desc["table"])
    return build_named_group(desc)


def _override(f: SetHMorphism, entries) -> SetHMorphism:
    for e in entries:
        try:
            lam = f.source.H.index(e["lambda"])
            inputs = [c.index(v) for c, v in zip(f.source.factors, e["inputs"])]
            outputs = [c.index(v) for c, v in zip(f.target.factors, e["outputs"])]
        except KeyError as exc:
            raise SchemaError(f"override entry missing {exc}") from exc
        f = with_override(f, lam, inputs, outputs)
    return f


@dataclass(eq=False)
class Workbench:
    """Lazily built structures for one document."""

    doc: dict
    name: str = ""
    overrides: dict = field(default_factory=dict)

    @cached_property
    def paired(self) -> PairedStructure:
        q = self.doc["quasigroup"]
        L = validate_left_quasigroup(q["labels"], q["table"], q["unit"])
        G = _group(self.doc["group"])
        return make_paired(L, G, self.doc["pi"])

    @cached_property
    def sigma(self) -> DynamicalYBMap:
        S = build_sigma(self.paired)
        if "sigma" in self.overrides:
            m = _override(S.morphism, self.overrides["sigma"])
            n = self.paired.n
            t = m.table.reshape(n, n, n)
            S = DynamicalYBMap(S.base, S.L, m, t // n, t % n)
        return S

    @cached_property
    def clean_sigma(self) -> DynamicalYBMap:
        return build_sigma(self.paired) if "sigma" in self.overrides else self.sigma

    @cached_property
    def monoid(self) -> MonoidStructure:
        return build_monoid(self.paired)

    @cached_property
    def module(self) -> LeftModule:
        desc = self.doc["module"]
        M = self.monoid
        kind = desc["kind"]
        if kind == "left-regular":
            mod = module_left_regular(M)
        elif kind == "one-point":
            mod = module_one_point(M, desc.get("lambda1", self.paired.H.label(self.paired.L.unit)))
        elif kind == "map-ll":
            mod = module_map_ll(M, self.clean_sigma, desc.get("g", {"constant": self.paired.H.label(self.paired.L.unit)}))
        else:
            X = Carrier(tuple(desc["labels"]))
            mod = module_from_action(M, X, desc["table"], desc["f"])
        if "m_X" in self.overrides:
            mod = LeftModule(mod.M, mod.X, _override(mod.mX, self.overrides["m_X"]), mod.kind)
        return mod

    @cached_property
    def family(self) -> HomFamily:
        desc = dict(self.doc["family"])
        kind = desc.pop("kind")
        return family_builders(kind, self.paired.G, self.module.X.factors[0], desc)

    @cached_property
    def k(self) -> ReflectionMap:
        k = k_from_family(self.module, self.family, validate=False)
        if "k" in self.overrides:
            k = ReflectionMap(k.mod, _override(k.morphism, self.overrides["k"]))
        return k

    def build_all(self) -> "Workbench":
        """Force every structural validation; raises on the first failure."""
        _ = self.paired, self.sigma, self.monoid, self.module, self.family, self.k
        return self


def open_workbench(source) -> Workbench:
    doc = load_document(source)
    check_schema(doc)
    return Workbench(doc, doc.get("name", ""), dict(doc.get("overrides") or {}))


def validate_document(source) -> dict:
    """Run all structural validations; returns a summary dict or raises."""
    wb = open_workbench(source).build_all()
    P, mod = wb.paired, wb.module
    return {
        "name": wb.name,
        "order": P.n,
        "lambda0": P.H.label(P.lambda0),
        "quasigroup_is_group": P.L.is_group(),
        "module": mod.kind,
        "X_size": mod.X.size,
        "family": wb.doc["family"]["kind"],
        "overrides": sorted(wb.overrides),
    }

