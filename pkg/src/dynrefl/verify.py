"""Check groups run by ``verify`` and replay of reported witnesses."""

from __future__ import annotations

import numpy as np

from .correspondence import (
    beta_from_bracket,
    beta_from_pi,
    bracket_from_beta,
    bracket_from_theta,
    check_layer,
    family_from_bracket,
    family_from_pi,
    my_from_family,
    pi_from_beta,
    pi_from_family,
    theta_from_bracket,
)
from .errors import DynReflError
from .module_theory import (
    action_equations,
    braid_commute_sides,
    check_action,
    check_braid_commute,
    check_left_module,
    check_my,
    check_theta,
    check_twisted_monoid,
    lift_actions,
    mxmy_sides,
    my_of,
    theta_equations,
    theta_of,
    twisted_monoid,
)
from .quiver import check_quiver_equations
from .reflection import (
    analyze_brace,
    boundary_equations,
    check_boundary_relations,
    check_k_constant,
    check_reflection_equation,
    k_from_my,
    k_is_constant,
    reflection_sides,
)
from .report import CheckResult, Report
from .seth import validate_morphism
from .yang_baxter import braid_sides, braided_monoid_equations, check_braid_relation, check_braided_monoid, check_sigma_bijective

CHECK_GROUPS = ("braid", "monoid", "module", "correspondence", "boundary", "reflection", "brace", "quiver")


def _error_result(group: str, exc: DynReflError) -> CheckResult:
    d = exc.to_dict()
    return CheckResult(f"{group}.{d['error']}", False, note=str(exc), witness=d.get("witness"))


def check_braid_group(wb) -> Report:
    S = wb.sigma
    rep = Report("braid")
    rep.add(validate_morphism(S.morphism, "sigma.morphism"))
    rep.add(check_sigma_bijective(S))
    rep.add(check_braid_relation(S))
    return rep


def check_monoid_group(wb) -> Report:
    return check_braided_monoid(wb.monoid, wb.sigma)


def check_module_group(wb) -> Report:
    mod, S, M = wb.module, wb.sigma, wb.monoid
    rep = Report("module")
    rep.add(check_left_module(mod))
    triv, sig = lift_actions(mod, S)
    rep.add(check_action(M, triv, "m_Y^triv"))
    rep.add(check_action(M, sig, "m_Y^sigma"))
    mY = my_from_family(mod, wb.family, validate=False)
    rep.add(check_my(mod, S, mY))
    rep.add(check_twisted_monoid(M, twisted_monoid(M, S)))
    rep.add(check_theta(mod, S, theta_of(mod, S, mY, validate=False)))
    # recorded, not asserted
    tt = check_braid_commute(triv, triv, S, "braid-commute(m_Y^triv,m_Y^triv)")
    rep.info["braid-commute(m_Y^triv,m_Y^triv)"] = tt.passed
    return rep


def _same(name, a, b) -> CheckResult:
    ok = bool(np.array_equal(np.asarray(a), np.asarray(b)))
    return CheckResult(name, ok, int(np.asarray(a).size), note="" if ok else "tables differ")


def check_correspondence_group(wb) -> Report:
    """Layer axioms along f -> Pi -> beta -> bracket -> theta -> m_Y and every way back."""
    mod, S, F = wb.module, wb.sigma, wb.family
    rep = Report("correspondence")
    rep.add(F.check())
    Pi = pi_from_family(mod, F, validate=False)
    rep.add(check_layer(Pi))
    beta = beta_from_pi(Pi, validate=False)
    rep.add(check_layer(beta))
    br = bracket_from_beta(beta, validate=False)
    rep.add(check_layer(br))
    th = theta_from_bracket(br, validate=False)
    rep.add(check_layer(th, S))
    mY = my_of(mod, S, th.theta, validate=False)
    rep.add(_same("roundtrip.Pi->family", family_from_pi(Pi, validate=False).maps, F.maps))
    rep.add(_same("roundtrip.beta->Pi", pi_from_beta(beta, validate=False).table, Pi.table))
    rep.add(_same("roundtrip.bracket->beta", beta_from_bracket(br, validate=False).table, beta.table))
    rep.add(_same("roundtrip.theta->bracket", bracket_from_theta(th, validate=False).table, br.table))
    rep.add(_same("roundtrip.m_Y->theta", theta_of(mod, S, mY, validate=False).table, th.theta.table))
    rep.add(_same("bracket.direct", my_from_family(mod, F, validate=False).table, mY.table))
    rep.add(_same("family.direct", family_from_bracket(br, validate=False).maps, F.maps))
    rep.add(_same("k.my-route", k_from_my(mod, S, mY, validate=False).table, wb.k.table))
    return rep


def check_boundary_group(wb) -> Report:
    return check_boundary_relations(wb.k, wb.sigma)


def check_reflection_group(wb) -> Report:
    return check_reflection_equation(wb.k, wb.sigma)


def check_brace_group(wb) -> Report:
    P, S = wb.paired, wb.sigma
    analysis = analyze_brace(P, S)
    rep = analysis.report()
    const = k_is_constant(wb.k)
    rep.info["k_constant"] = const is None
    if analysis.is_brace:
        rep.add(check_k_constant(wb.k, wb.family, S))
    return rep


def check_quiver_group(wb) -> Report:
    return check_quiver_equations(wb.sigma.morphism, wb.k.morphism, wb.sigma.L, wb.module.X)


_RUNNERS = {
    "braid": check_braid_group,
    "monoid": check_monoid_group,
    "module": check_module_group,
    "correspondence": check_correspondence_group,
    "boundary": check_boundary_group,
    "reflection": check_reflection_group,
    "brace": check_brace_group,
    "quiver": check_quiver_group,
}


def parse_checks(wanted) -> list:
    if wanted is None:
        return list(CHECK_GROUPS)
    names = wanted if isinstance(wanted, (list, tuple)) else [s.strip() for s in str(wanted).split(",")]
    out = []
    for n in names:
        if n == "all":
            return list(CHECK_GROUPS)
        if n not in _RUNNERS:
            raise ValueError(f"unknown check {n!r}; expected {', '.join(CHECK_GROUPS)} or all")
        out.append(n)
    return out


def run_checks(wb, checks=None) -> Report:
    rep = Report(f"verify {wb.name}".strip())
    for group in parse_checks(checks):
        try:
            sub = _RUNNERS[group](wb)
        except DynReflError as exc:
            rep.add(_error_result(group, exc))
            continue
        rep.add(sub.results)
        for key, val in sub.info.items():
            rep.info[f"{group}.{key}"] = val
    return rep


# -- replay -------------------------------------------------------------------

def _equation_groups(wb):
    """Builders for the named Set_H equations, cheapest and least dependent first."""
    S, M, mod = wb.sigma, wb.monoid, wb.module

    def my():
        return my_from_family(mod, wb.family, validate=False)

    def lifted():
        triv, sig = lift_actions(mod, S)
        eqs = action_equations(M, triv, "m_Y^triv")
        eqs.update(action_equations(M, sig, "m_Y^sigma"))
        mY = my()
        eqs.update(action_equations(M, mY, "m_Y"))
        eqs["mXmY"] = mxmy_sides(mod, mY)
        eqs["braid-commute(m_Y,m_Y^triv)"] = braid_commute_sides(mY, triv, S)
        eqs["braid-commute(m_Y,m_Y^sigma)"] = braid_commute_sides(mY, sig, S)
        return eqs

    return [
        lambda: {"braid": braid_sides(S)},
        lambda: braided_monoid_equations(M, S),
        lambda: action_equations(M, mod.mX, "m_X"),
        lambda: boundary_equations(wb.k, S),
        lambda: {"RE": reflection_sides(wb.k, S)},
        lifted,
        lambda: theta_equations(mod, S, theta_of(mod, S, my(), validate=False)),
    ]


def equation_sides(wb, wanted=None) -> dict:
    """Named Set_H equations as ``name -> (lhs, rhs)``.

    Groups whose inputs are themselves broken (for example ``m_Y`` built from a
    corrupted ``m_X``) are skipped.  With ``wanted`` set, stops once it is found.
    """
    eqs = {}
    for build in _equation_groups(wb):
        try:
            eqs.update(build())
        except DynReflError:
            continue
        if wanted is not None and wanted in eqs:
            break
    return eqs


def _morphisms(wb) -> dict:
    return {"sigma.morphism": wb.sigma.morphism, "m.morphism": wb.monoid.m,
            "m_X.morphism": wb.module.mX, "k.morphism": wb.k.morphism}


def replay_witness(wb, witness: dict) -> bool:
    """True if the named check still fails at the witness point."""
    name = witness["check"]
    morphs = _morphisms(wb)
    if name in morphs:
        f = morphs[name]
        lam = f.source.H.index(witness["lambda"])
        i = f.source.parse(witness["inputs"])
        return int(f.target.action[lam, f.table[lam, i]]) != int(f.source.action[lam, i])
    eqs = equation_sides(wb, wanted=name)
    if name not in eqs:
        raise KeyError(f"no replayable equation named {name!r}")
    lhs, rhs = eqs[name]
    lam = lhs.source.H.index(witness["lambda"])
    i = lhs.source.parse(witness["inputs"])
    return int(lhs.table[lam, i]) != int(rhs.table[lam, i])
