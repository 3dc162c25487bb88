"""The worked examples of constant spinal groups used throughout the tests.

Each builder returns a fresh :class:`CSGroup`; the JSON files shipped in
``spinal/data`` are serialisations of these.
"""

from __future__ import annotations

from itertools import combinations

from .constructions import build_ggs, build_gs_beta
from .permcore import Perm, inverse
from .selfsim import CSGroup


def gs3() -> CSGroup:
    """Gupta-Sidki 3-group: b = (b, a, a^2)."""
    return build_ggs(3, (1, 2), name="gs3")


def gs3_e11() -> CSGroup:
    """GGS group with e = (1, 1); not periodic."""
    return build_ggs(3, (1, 1), name="gs3-e11")


def a4() -> CSGroup:
    """A4 acting naturally on 4 letters with b = (b, s1, s2, s3)."""
    s1 = Perm.from_cycles(4, (0, 3, 2))
    s2 = Perm.from_cycles(4, (0, 1, 3))
    s3 = inverse(s2)
    return CSGroup(
        4,
        {"s1": s1, "s2": s2, "s3": s3},
        {"b": {1: ("s1",), 2: ("s2",), 3: ("s3",)}},
        name="a4",
    )


# Transpositions of {1,2,3,4}; A4 acts on them by conjugation.  (1 2) is
# the distinguished letter 0 and (3 4) is letter 1.
FIG2_LETTERS = ((1, 2), (3, 4), (1, 3), (1, 4), (2, 3), (2, 4))


def _on_transpositions(images: dict[int, int]) -> Perm:
    idx = {frozenset(t): i for i, t in enumerate(FIG2_LETTERS)}
    return Perm(idx[frozenset((images[i], images[j]))] for i, j in FIG2_LETTERS)


def fig2_point_perm(*cycles: tuple[int, ...]) -> Perm:
    """Element of Sym(4) on points 1..4, induced on the six transpositions."""
    images = {i: i for i in range(1, 5)}
    for cyc in cycles:
        for k, x in enumerate(cyc):
            images[x] = cyc[(k + 1) % len(cyc)]
    return _on_transpositions(images)


def fig2() -> CSGroup:
    """A4 on the faces of a cube; b|(3 4) = (1 2 3), b|x = (1 2)(3 4) elsewhere."""
    t = fig2_point_perm((1, 2, 3))
    v = fig2_point_perm((1, 2), (3, 4))
    sections = {x: ("v",) for x in range(2, 6)}
    sections[1] = ("t",)
    return CSGroup(6, {"t": t, "v": v}, {"b": sections}, name="fig2")


def hexagon(p: int = 3) -> CSGroup:
    """Dihedral group of the regular 2p-gon with the generator b of the hexagon example."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    m = 2 * p
    r = Perm([(x + 1) % m for x in range(m)])
    s = Perm([(-x) % m for x in range(m)])
    sections: dict[int, tuple[str, ...]] = {}
    for x in range(1, m):
        if x == p:
            continue
        sections[x] = ("r",) if x % 2 else ("s",)
    return CSGroup(m, {"r": r, "s": s}, {"b": sections}, name=f"hexagon(p={p})" if p != 3 else "hexagon")


def d4() -> CSGroup:
    """D4 acting on a square, b = (b, s, s, sr)."""
    s = Perm.from_cycles(4, (1, 3))
    r = Perm.from_cycles(4, (0, 1, 2, 3))
    return CSGroup(4, {"s": s, "r": r}, {"b": {1: ("s",), 2: ("s",), 3: ("s", "r")}}, name="d4")


_Q8_UNITS = ("1", "i", "j", "k")
_Q8_TABLE = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def q8_generators() -> dict[str, Perm]:
    """i and j as permutations of the eight quaternion units (right multiplication)."""
    elems = [(sg, u) for sg in (1, -1) for u in _Q8_UNITS]
    idx = {x: n for n, x in enumerate(elems)}

    def right_mult(h):
        out = []
        for sg, u in elems:
            t_sg, t_u = _Q8_TABLE[(u, h[1])]
            out.append(idx[(sg * h[0] * t_sg, t_u)])
        return Perm(out)

    return {"i": right_mult((1, "i")), "j": right_mult((1, "j"))}


def q8beta() -> CSGroup:
    return build_gs_beta(q8_generators(), name="q8beta")


def a5_cycle() -> CSGroup:
    """A5 on 5 letters, b = (b, (0 1 2 3 4), (0 1 2), 1, 1); perfect with a 5-cycle."""
    c5 = Perm.from_cycles(5, (0, 1, 2, 3, 4))
    c3 = Perm.from_cycles(5, (0, 1, 2))
    return CSGroup(5, {"c": c5, "t": c3}, {"b": {1: ("c",), 2: ("t",)}}, name="a5")


SHIPPED = {
    "gs3": gs3,
    "gs3-e11": gs3_e11,
    "a4": a4,
    "fig2": fig2,
    "hexagon": hexagon,
    "d4": d4,
    "q8beta": q8beta,
}


def all_fixtures() -> dict[str, CSGroup]:
    return {name: build() for name, build in SHIPPED.items()}


def klein_elements() -> list[Perm]:
    """The three double transpositions in the rooted group of :func:`fig2`."""
    pts = (1, 2, 3, 4)
    out = []
    for pair in combinations(pts, 2):
        rest = tuple(x for x in pts if x not in pair)
        if pair[0] == 1:
            out.append(fig2_point_perm(pair, rest))
    return out
