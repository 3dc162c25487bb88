"""Families of CS groups: GGS groups and groups with regular rooted action."""

from __future__ import annotations

from math import gcd
from typing import Mapping, Sequence

from .permcore import Perm, compose, enumerate_group, inverse, perm_order, subgroup_generated
from .selfsim import CSGroup, CSGroupError


class DegenerateVector(CSGroupError):
    pass


class SemidirectHypothesisError(CSGroupError):
    pass


class BetaHypothesisError(CSGroupError):
    pass


def build_ggs(m: int, e: Sequence[int], name: str = "") -> CSGroup:
    """GGS group on m letters with defining vector e = (e_1, ..., e_{m-1}).

    Rooted generator ``a`` is the m-cycle (0 1 ... m-1); ``b|_i = a^{e_i}``.
    """
    e = [int(x) % m for x in e]
    if len(e) != m - 1:
        raise DegenerateVector(f"defining vector needs {m - 1} entries, got {len(e)}")
    g = 0
    for x in e:
        g = gcd(g, x)
    if gcd(g, m) != 1:
        raise DegenerateVector(f"entries of {tuple(e)} do not generate Z/{m}Z")
    a = Perm([(x + 1) % m for x in range(m)])
    sections = {i: (f"a^{k}" if k != 1 else "a",) for i, k in enumerate(e, start=1) if k}
    return CSGroup(m, {"a": a}, {"b": sections}, name=name or f"GGS(m={m}, e={tuple(e)})")


class RegularAction:
    """Right regular representation of a finite permutation group.

    Letter ``i`` is the i-th element in :func:`enumerate_group` order, so the
    identity is letter 0 and ``0.rho(h) = letter(h)``.
    """

    def __init__(self, gens: Mapping[str, Perm]):
        self.gens = dict(gens)
        self.elements = enumerate_group(self.gens.values())
        self.index = {p: i for i, p in enumerate(self.elements)}

    @property
    def degree(self) -> int:
        return len(self.elements)

    def letter(self, p: Perm) -> int:
        return self.index[p]

    def rho(self, h: Perm) -> Perm:
        return Perm(self.index[compose(x, h)] for x in self.elements)


def build_semidirect(n_gens: Mapping[str, Perm], g: tuple[str, Perm], name: str = "") -> CSGroup:
    """Periodic CS group generated by two copies of A = N x| <g>.

    A = <n_gens, g> acts regularly on itself.  For every s in S = n_gens + {g}
    the directed generator ``b_<s>`` has section s at the letter g, section
    g^-1 at g^-1 if s = g (trivial otherwise), and trivial sections elsewhere.
    """
    g_name, g_perm = g
    if g_name in n_gens:
        raise SemidirectHypothesisError(f"{g_name!r} named twice")
    if perm_order(g_perm) <= 2:
        raise SemidirectHypothesisError("the cyclic quotient must have order greater than two")
    degree = len(g_perm)
    N = subgroup_generated(n_gens.values(), degree)
    A = subgroup_generated(list(n_gens.values()) + [g_perm], degree)
    for a in A:
        for n in N:
            if compose(compose(inverse(a), n), a) not in N:
                raise SemidirectHypothesisError("<n_gens> is not normal in A")
    if N & subgroup_generated([g_perm]) != {Perm.identity(degree)}:
        raise SemidirectHypothesisError("<n_gens> and <g> intersect nontrivially")

    reg = RegularAction({**n_gens, g_name: g_perm})
    rooted = {k: reg.rho(v) for k, v in reg.gens.items()}
    at_g = reg.letter(g_perm)
    at_g_inv = reg.letter(inverse(g_perm))
    directed: dict[str, dict[int, tuple[str, ...]]] = {}
    for s_name in sorted(reg.gens):
        secs = {at_g: (s_name,)}
        if s_name == g_name:
            secs[at_g_inv] = (f"{g_name}^-1",)
        directed[f"b_{s_name}"] = secs
    return CSGroup(reg.degree, rooted, directed, name=name or "semidirect")


def build_gs_beta(gens: Mapping[str, Perm], symmetric: bool = True, name: str = "") -> CSGroup:
    """Regular CS group with one directed generator ``delta`` given by beta.

    ``delta|_x = x`` for x in S and trivial otherwise, with A = <gens> acting
    regularly on itself.  With ``symmetric`` (the default) S is gens together
    with their inverses; the bare generating set generally violates the fifth
    Gupta-Sidki condition (e.g. for C3 = <a> the product over <a> \\ 1 is a).
    """
    for n, p in gens.items():
        if perm_order(p) <= 2:
            raise BetaHypothesisError(f"generator {n!r} has order {perm_order(p)}; need non-involutions")
    reg = RegularAction(gens)
    rooted = {k: reg.rho(v) for k, v in gens.items()}
    secs: dict[int, tuple[str, ...]] = {}
    for n in sorted(gens):
        p = gens[n]
        secs[reg.letter(p)] = (n,)
        if symmetric:
            secs[reg.letter(inverse(p))] = (f"{n}^-1",)
    if "delta" in rooted:
        raise BetaHypothesisError("'delta' is reserved for the directed generator")
    return CSGroup(reg.degree, rooted, {"delta": secs}, name=name or "beta")
