"""Verdicts, counterexample witnesses and report rendering."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field


class _Clock:
    seconds = 0.0


@contextmanager
def timed():
    clock = _Clock()
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock.seconds = time.perf_counter() - start


@dataclass
class Witness:
    """The least ``(lam, inputs)`` at which the two sides of ``check`` differ.

    ``source`` renders ``inputs``; ``value_space`` renders ``lhs``/``rhs``
    (``None`` means the values are elements of H itself).
    """

    check: str
    lam: int
    inputs: tuple
    lhs: tuple
    rhs: tuple
    source: object = field(default=None, repr=False)
    value_space: object = field(default=None, repr=False)

    def _render_values(self, vals):
        if self.value_space is None:
            H = self.source.H
            return [H.label(v) for v in vals]
        sp = self.value_space
        return [c.label(v) for c, v in zip(sp.factors, vals)]

    def to_dict(self) -> dict:
        src = self.source
        return {
            "check": self.check,
            "lambda": src.H.label(self.lam),
            "inputs": [c.label(v) for c, v in zip(src.factors, self.inputs)],
            "lhs": self._render_values(self.lhs),
            "rhs": self._render_values(self.rhs),
        }


@dataclass
class CheckResult:
    name: str
    passed: bool
    count: int = 0
    seconds: float = 0.0
    witness: Witness | None = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {
            "check": self.name,
            "passed": self.passed,
            "tuples": self.count,
            "seconds": round(self.seconds, 6),
        }
        if self.note:
            out["note"] = self.note
        if self.witness is not None:
            w = self.witness
            out["witness"] = w.to_dict() if hasattr(w, "to_dict") else w
        return out

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        s = f"[{mark}] {self.name}"
        if self.count:
            s += f" ({self.count} tuple{'' if self.count == 1 else 's'})"
        if self.note:
            s += f": {self.note}"
        if self.witness is not None:
            d = self.witness.to_dict() if hasattr(self.witness, "to_dict") else self.witness
            if isinstance(d, dict) and "lhs" in d:
                s += f"\n       witness: lambda={d.get('lambda', d.get('x'))} inputs={d['inputs']} lhs={d['lhs']} rhs={d['rhs']}"
        return s


@dataclass
class Report:
    title: str = ""
    results: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, result):
        if isinstance(result, Report):
            self.results.extend(result.results)
            self.info.update(result.info)
        elif isinstance(result, (list, tuple)):
            self.results.extend(result)
        else:
            self.results.append(result)
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def first_witness(self):
        for r in self.results:
            if not r.passed and r.witness is not None:
                return r.witness
        return None

    def __getitem__(self, name) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def names(self) -> list:
        return [r.name for r in self.results]

    def to_dict(self, timings: bool = True) -> dict:
        results = [r.to_dict() for r in self.results]
        if not timings:
            for r in results:
                r.pop("seconds", None)
        out = {"title": self.title, "passed": self.passed, "results": results}
        if self.info:
            out["info"] = self.info
        w = self.first_witness()
        if w is not None:
            out["witness"] = w.to_dict() if hasattr(w, "to_dict") else w
        return out

    def summary(self) -> str:
        lines = [self.title] if self.title else []
        lines += [r.line() for r in self.results]
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        n_ok = sum(r.passed for r in self.results)
        lines.append(f"{n_ok}/{len(self.results)} checks passed")
        return "\n".join(lines)
