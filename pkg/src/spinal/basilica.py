"""The s-th Basilica operation on CS groups.

The new alphabet is Y^s, a depth-s tree over the old alphabet Y, coded
mixed-radix with y_0 most significant so that (0, ..., 0) is letter 0.  The
rooted generator a_i applies a to coordinate i at the vertex 0^i of this
small tree (that is, only when y_0 = ... = y_{i-1} = 0); together these
generate the iterated wreath product A^{wr s}.  The directed generator b_i
has section (b|_y)_i at the letter 0^i y 0^{s-1-i} for every y != 0.

With ``rooted="direct"`` the a_i act on coordinate i unconditionally, so the
rooted group is only the direct product A^s.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Sequence

from .dynsys import SIGMA, build_step_graph
from .permcore import Perm
from .selfsim import CSGroup, DirectedElem, InvalidDefinition, parse_token


@dataclass(frozen=True)
class LetterCode:
    """Bijection between Y^s and {0, ..., q^s - 1}."""

    q: int
    s: int

    @property
    def size(self) -> int:
        return self.q ** self.s

    def encode(self, ys: Sequence[int]) -> int:
        if len(ys) != self.s:
            raise ValueError(f"expected {self.s} coordinates, got {len(ys)}")
        x = 0
        for y in ys:
            if not 0 <= y < self.q:
                raise ValueError(f"coordinate {y} outside 0..{self.q - 1}")
            x = x * self.q + y
        return x

    def decode(self, x: int) -> tuple[int, ...]:
        if not 0 <= x < self.size:
            raise ValueError(f"letter {x} outside 0..{self.size - 1}")
        ys = []
        for _ in range(self.s):
            x, y = divmod(x, self.q)
            ys.append(y)
        return tuple(reversed(ys))

    def letters(self) -> Iterable[tuple[int, ...]]:
        return cartesian(range(self.q), repeat=self.s)


def lifted_name(name: str, i: int) -> str:
    return f"{name}_{i}"


def _lift_word(word: Sequence[str], i: int) -> tuple[str, ...]:
    out = []
    for tok in word:
        name, k = parse_token(tok)
        lifted = lifted_name(name, i)
        out.append(lifted if k == 1 else f"{lifted}^{k}")
    return tuple(out)


ROOTED_MODES = ("wreath", "direct")


def _coordinate_action(code: LetterCode, a: Perm, i: int, nested: bool = True) -> Perm:
    images = []
    for ys in code.letters():
        if nested and any(ys[:i]):
            images.append(code.encode(ys))
        else:
            zs = list(ys)
            zs[i] = a[ys[i]]
            images.append(code.encode(zs))
    return Perm(images)


def basilica(group: CSGroup, s: int, rooted: str = "wreath") -> CSGroup:
    if s < 1:
        raise InvalidDefinition("the Basilica operation needs s >= 1")
    if rooted not in ROOTED_MODES:
        raise InvalidDefinition(f"rooted must be one of {ROOTED_MODES}, got {rooted!r}")
    q = group.alphabet_size
    code = LetterCode(q, s)
    gens: dict[str, Perm] = {}
    for name in sorted(group.rooted_generators):
        a = group.rooted_generators[name]
        for i in range(s):
            gens[lifted_name(name, i)] = _coordinate_action(code, a, i, nested=rooted == "wreath")
    directed: dict[str, dict[int, tuple[str, ...]]] = {}
    for name in sorted(group.directed_words):
        words = group.directed_words[name]
        for i in range(s):
            secs = {}
            for y, word in words.items():
                ys = [0] * s
                ys[i] = y
                secs[code.encode(ys)] = _lift_word(word, i)
            directed[lifted_name(name, i)] = secs
    label = group.name or "G"
    suffix = "" if rooted == "wreath" else ", direct"
    return CSGroup(code.size, gens, directed, name=f"Bas_{s}({label}{suffix})")


def lifted_set(group: CSGroup, bas: CSGroup, names: Iterable[str], s: int) -> list[DirectedElem]:
    """The directed elements t_i of ``bas`` for t in ``names`` and i < s."""
    return [bas.directed_word(lifted_name(n, i)) for n in names for i in range(s)]


def level_stabilizer(bas: CSGroup, code: LetterCode, level: int) -> frozenset[Perm]:
    """Elements of the rooted group of ``bas`` fixing the first ``level`` coordinates of every letter."""
    prefixes = [code.decode(x)[:level] for x in range(code.size)]
    return frozenset(
        p for p in bas.A.elements
        if all(prefixes[p[x]] == prefixes[x] for x in range(code.size))
    )


def check_descent(bas: CSGroup, code: LetterCode, T: Sequence[DirectedElem], k: int, level: int) -> bool:
    """Sigma_T applied k times maps the level stabilizer S(level) into S(level + 1)."""
    graph = build_step_graph(bas, SIGMA, list(T))
    current = set(level_stabilizer(bas, code, level))
    for _ in range(k):
        current = set(graph.image(current))
    return current <= level_stabilizer(bas, code, level + 1)
