"""Periodicity checkers and the structural predicates they rely on.

Every checker returns a :class:`CheckReport`.  Verdicts are one-sided except
for :func:`check_abelian_criterion`: ``fails`` means the sufficient condition
does not apply, not that the group has an element of infinite order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .dynsys import (
    LAMBDA,
    LAMBDA_MAP,
    SIGMA,
    Sigma_image,
    build_step_graph,
    frak_C,
    frak_X,
    is_eventually_trivial,
    lambda_b,
    zero_orbit,
)
from .permcore import Perm, compose, perm_order
from .selfsim import CSGroup, CSGroupError, DirectedElem, GroupWord, canonicalize, validate_cs

HOLDS = "holds"
FAILS = "fails"
INAPPLICABLE = "inapplicable"


class SNotGenerating(CSGroupError):
    """The proposed generating set does not generate the directed group."""


@dataclass
class CheckReport:
    name: str
    verdict: str
    witness: Any = None
    details: dict[str, Any] = field(default_factory=dict)
    message: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict == FAILS

    def __str__(self) -> str:
        text = f"{self.name}: {self.verdict}"
        return f"{text} ({self.message})" if self.message else text


def _verdict(ok: bool) -> str:
    return HOLDS if ok else FAILS


def _noncommuting_pair(elems: Sequence[Perm]) -> tuple[Perm, Perm] | None:
    elems = sorted(set(elems))
    for i, p in enumerate(elems):
        for q in elems[i + 1:]:
            if compose(p, q) != compose(q, p):
                return p, q
    return None


def _generator_sections(group: CSGroup, letters) -> list[Perm]:
    # Sections of a product are products of sections, so the subgroup
    # generated by all of B at these letters is generated by the generators'.
    return [b.sections[y] for b in group.directed_generators.values() for y in letters]


def is_orbitwise_abelian(group: CSGroup) -> CheckReport:
    """Sections of B along each 0-orbit generate an abelian subgroup."""
    seen: dict[frozenset[int], tuple[Perm, Perm] | None] = {}
    for a in group.A.elements:
        pts = frozenset(zero_orbit(a))
        if pts not in seen:
            seen[pts] = _noncommuting_pair(_generator_sections(group, sorted(pts)))
        bad = seen[pts]
        if bad:
            return CheckReport("orbitwise-abelian", FAILS, witness={"a": a, "pair": bad},
                               message=f"a = {group.name_of(a)}: {group.name_of(bad[0])} and {group.name_of(bad[1])} do not commute")
    return CheckReport("orbitwise-abelian", HOLDS)


def is_strongly_orbitwise_abelian(group: CSGroup) -> CheckReport:
    """Sections of B over every frak_X(a, x) generate an abelian subgroup."""
    seen: dict[frozenset[int], tuple[Perm, Perm] | None] = {}
    for a in group.A.elements:
        for x in range(group.alphabet_size):
            pts = frak_X(group, a, x)
            if pts not in seen:
                seen[pts] = _noncommuting_pair(_generator_sections(group, sorted(pts)))
            bad = seen[pts]
            if bad:
                return CheckReport("strongly orbitwise-abelian", FAILS,
                                   witness={"a": a, "x": x, "letters": sorted(pts), "pair": bad},
                                   message=f"a = {group.name_of(a)}, x = {x}: {group.name_of(bad[0])} and {group.name_of(bad[1])} do not commute")
    return CheckReport("strongly orbitwise-abelian", HOLDS)


def is_stable(group: CSGroup) -> CheckReport:
    """lambda_b is constant on every frak_C(a, x), for every b in B."""
    seen: set[tuple[Perm, ...]] = set()
    for a in group.A.elements:
        for x in range(group.alphabet_size):
            conj = frak_C(group, a, x)
            if len(conj) < 2 or conj in seen:
                continue
            seen.add(conj)
            for b in group.B:
                first = lambda_b(b, conj[0])
                for c in conj[1:]:
                    if lambda_b(b, c) != first:
                        return CheckReport("stable", FAILS,
                                           witness={"a": a, "x": x, "b": b, "c1": conj[0], "c2": c},
                                           message=f"lambda_b differs on {conj[0]} and {c} in C({a}, {x})")
    return CheckReport("stable", HOLDS)


def _lambda_triviality(group: CSGroup, kind: str):
    """First b in B whose lambda system is not eventually trivial, else None."""
    for b in group.B:
        res = is_eventually_trivial(build_step_graph(group, kind, b))
        if not res.trivial:
            return b, res
    return None


def check_theorem_A(group: CSGroup) -> CheckReport:
    """B abelian, G stable and strongly orbitwise-abelian, all Lambda_b eventually trivial."""
    details: dict[str, Any] = {
        "A periodic": True,
        "condition (i) or (ii)": True,
        "B periodic": True,
    }
    details["B abelian"] = group.is_B_abelian()
    stable = is_stable(group)
    strong = is_strongly_orbitwise_abelian(group)
    details["stable"] = stable.holds
    details["strongly orbitwise-abelian"] = strong.holds
    bad = _lambda_triviality(group, LAMBDA)
    details["Lambda_b eventually trivial for all b"] = bad is None
    ok = all(details.values())
    if ok:
        return CheckReport("Theorem A", HOLDS, details=details, message="periodic")
    if not details["B abelian"]:
        witness, msg = None, "directed group is not abelian"
    elif not stable.holds:
        witness, msg = stable.witness, "not stable"
    elif not strong.holds:
        witness, msg = strong.witness, "not strongly orbitwise-abelian"
    else:
        b, res = bad
        witness, msg = {"b": b, "cycle": res.cycle}, "Lambda_b has a non-trivial cycle"
    return CheckReport("Theorem A", FAILS, witness=witness, details=details, message=msg)


def check_theorem_B(group: CSGroup, S: Sequence[DirectedElem]) -> CheckReport:
    """Sigma_S eventually trivial for a generating set S of B."""
    S = list(S)
    if not S:
        raise SNotGenerating("empty generating set")
    if not group.generates_B(S):
        raise SNotGenerating("the given elements do not generate the directed group")
    res = is_eventually_trivial(build_step_graph(group, SIGMA, S))
    details = {
        "A periodic": True,
        "condition (i) or (ii)": True,
        "Sigma_S eventually trivial": res.trivial,
        "steps": res.steps,
    }
    if res.trivial:
        return CheckReport("Theorem B", HOLDS, details=details, message=f"periodic; trivial after {res.steps} step(s)")
    cycles = [" -> ".join(group.name_of(p) for p in cyc + cyc[:1]) for cyc in res.cycles]
    return CheckReport("Theorem B", FAILS, witness={"cycles": res.cycles}, details=details,
                       message="cycle: " + "; ".join(cycles))


def check_abelian_criterion(group: CSGroup) -> CheckReport:
    """Abelian A: periodic iff every map a -> lambda_b(a) is eventually trivial.

    On failure the witness is the word b a for a on a non-trivial cycle of
    lambda_b; that element has infinite order.
    """
    if not group.A.is_abelian():
        return CheckReport("abelian criterion", INAPPLICABLE, message="rooted group is not abelian")
    bad = _lambda_triviality(group, LAMBDA_MAP)
    if bad is None:
        return CheckReport("abelian criterion", HOLDS, message="periodic")
    b, res = bad
    a = res.cycle[0]
    word = canonicalize([b, a], group.alphabet_size)
    expr = f"{group.directed_name(b)} {group.name_of(a)}"
    return CheckReport("abelian criterion", FAILS,
                       witness={"b": b, "a": a, "word": word, "expr": expr, "cycle": res.cycle},
                       message=f"{expr} has infinite order")


def check_gs_conditions(group: CSGroup) -> CheckReport:
    """The five Gupta-Sidki conditions for a regular rooted group and one directed generator.

    Letters are identified with A via x <-> the element mapping 0 to x, so
    the product over <a> minus 1 of delta at a' is lambda_delta(a).
    """
    A = group.A
    if not A.is_regular():
        return CheckReport("Gupta-Sidki", INAPPLICABLE, message="rooted group does not act regularly")
    if len(group.directed_generators) != 1:
        return CheckReport("Gupta-Sidki", INAPPLICABLE, message="needs exactly one directed generator")
    (delta,) = group.directed_generators.values()
    try:
        validate_cs(group)
        is_cs = True
    except CSGroupError:
        is_cs = False
    oa = is_orbitwise_abelian(group)
    bad5 = [a for a in A.elements if not a.is_identity() and not lambda_b(delta, a).is_identity()]
    details: dict[str, Any] = {
        "(1) delta directed": True,
        "(2) CS group": is_cs,
        "(3) finite support": True,
        "(4) orbitwise-abelian": oa.holds,
        "(5) orbit products trivial": not bad5,
    }
    ok = all(details.values())
    if ok:
        e = A.identity
        details["Sigma immediately trivial"] = all(Sigma_image(group, [delta], a) == (e,) for a in A.elements)
        return CheckReport("Gupta-Sidki", HOLDS, details=details)
    if bad5:
        witness, msg = {"a": bad5[0]}, f"condition (5) fails at a = {group.name_of(bad5[0])}"
    elif not oa.holds:
        witness, msg = oa.witness, "condition (4) fails"
    else:
        witness, msg = None, "condition (2) fails"
    return CheckReport("Gupta-Sidki", FAILS, witness=witness, details=details, message=msg)


def perfect_cycle_obstruction(group: CSGroup, cross_check: bool = False) -> CheckReport:
    """A perfect and containing a full cycle: neither theorem can apply.

    ``holds`` means the obstruction is present.  With ``cross_check`` both
    theorem checkers are run (Theorem B on the directed generators) and
    recorded in the details.
    """
    A = group.A
    m = group.alphabet_size
    perfect = A.is_perfect()
    full = next((a for a in A.elements if len(a.cycles()) == 1 and perm_order(a) == m), None)
    details: dict[str, Any] = {"perfect": perfect, "contains full cycle": full is not None}
    present = perfect and full is not None
    if present and cross_check:
        details["Theorem A fails"] = not check_theorem_A(group).holds
        details["Theorem B fails"] = not check_theorem_B(group, list(group.directed_generators.values())).holds
    return CheckReport("perfect-cycle obstruction", _verdict(present), witness=full if present else None,
                       details=details,
                       message="obstruction present" if present else "no obstruction")
