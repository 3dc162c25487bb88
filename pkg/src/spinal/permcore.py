"""Finite permutation groups on the alphabet {0, ..., m-1}.

Permutations act on the right: ``x.(pq) = (x.p).q``, so ``p * q`` means
"apply p, then q".  Conjugation is written on the left, ``^p a = p a p^-1``.
Groups are small enough to be stored fully enumerated.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Iterable, Mapping


class Perm(tuple):
    """A bijection of {0, ..., m-1}; position x holds the image x.p."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> "Perm":
        # Skip validation for images built from existing permutations.
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, m: int) -> "Perm":
        return cls._raw(range(m))

    @classmethod
    def from_cycles(cls, m: int, *cycles: Iterable[int]) -> "Perm":
        """Build a permutation from disjoint cycles, e.g. ``from_cycles(4, (0, 1, 2))``."""
        images = list(range(m))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            for i, x in enumerate(cyc):
                if x in seen or not 0 <= x < m:
                    raise ValueError(f"bad cycle {cyc} for degree {m}")
                seen.add(x)
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def act(self, x: int) -> int:
        return self[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __invert__(self) -> "Perm":
        return inverse(self)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return inverse(self) ** (-k)
        result = Perm.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def conjugate_by(self, p: "Perm") -> "Perm":
        """Left conjugate ``^p self = p self p^-1``."""
        return compose(compose(p, self), inverse(p))

    def cycles(self) -> list[tuple[int, ...]]:
        out = []
        seen = set()
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Perm({list(self)})"

    def __reduce__(self):
        return (Perm, (tuple(self),))


def compose(p: Perm, q: Perm) -> Perm:
    """``x.(pq) = (x.p).q``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return Perm._raw(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return Perm._raw(out)


def act(x: int, p: Perm) -> int:
    return p[x]


def perm_order(p: Perm) -> int:
    return lcm(1, *(len(c) for c in p.cycles()))


def enumerate_group(gens: Iterable[Perm]) -> tuple[Perm, ...]:
    """The subgroup generated by ``gens``.

    Elements come in breadth-first order by word length, each layer sorted
    lexicographically, so the result is deterministic.
    """
    gens = sorted(set(gens))
    if not gens:
        raise ValueError("need at least one generator")
    e = Perm.identity(len(gens[0]))
    seen = {e}
    out = [e]
    layer = [e]
    while layer:
        nxt = set()
        for x in layer:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        layer = sorted(nxt)
        out.extend(layer)
    return tuple(out)


def subgroup_generated(elems: Iterable[Perm], degree: int | None = None) -> frozenset[Perm]:
    elems = list(elems)
    if not elems:
        if degree is None:
            raise ValueError("degree needed for the trivial subgroup")
        return frozenset([Perm.identity(degree)])
    return frozenset(enumerate_group(elems))


def orbit(x: int, gens: Iterable[Perm]) -> frozenset[int]:
    gens = list(gens)
    seen = {x}
    todo = [x]
    while todo:
        y = todo.pop()
        for g in gens:
            z = g[y]
            if z not in seen:
                seen.add(z)
                todo.append(z)
    return frozenset(seen)


def is_transitive(gens: Iterable[Perm], degree: int) -> bool:
    return len(orbit(0, gens)) == degree


def is_abelian(elems: Iterable[Perm]) -> bool:
    elems = list(elems)
    for i, p in enumerate(elems):
        for q in elems[i + 1:]:
            if compose(p, q) != compose(q, p):
                return False
    return True


def commutator(p: Perm, q: Perm) -> Perm:
    return compose(compose(inverse(p), inverse(q)), compose(p, q))


def derived_subgroup(elems: Iterable[Perm]) -> frozenset[Perm]:
    """Commutator subgroup of the group generated by ``elems``.

    Commutators of a generating set generate the derived subgroup only up to
    normal closure, so the commutators of all elements are used.
    """
    elems = list(elems)
    if not elems:
        raise ValueError("empty element set")
    group = subgroup_generated(elems)
    e = Perm.identity(len(elems[0]))
    comms = {commutator(p, q) for p in group for q in group} - {e}
    return subgroup_generated(comms, len(e))


def is_perfect(elems: Iterable[Perm]) -> bool:
    group = subgroup_generated(elems)
    return derived_subgroup(group) == group


def exponent(elems: Iterable[Perm]) -> int:
    return lcm(1, *(perm_order(p) for p in elems))


def product(perms: Iterable[Perm], degree: int) -> Perm:
    """Ordered left-to-right product; the empty product is the identity."""
    result = Perm.identity(degree)
    for p in perms:
        result = compose(result, p)
    return result


@dataclass(frozen=True)
class PermGroup:
    """A transitive-or-not permutation group given by named generators.

    ``transversal[x]`` is a fixed element mapping 0 to x, found by a BFS over
    the generators in name order; ``transversal[0]`` is the identity.
    """

    degree: int
    gens: Mapping[str, Perm] = field(default_factory=dict)

    def __post_init__(self):
        for name, g in self.gens.items():
            if len(g) != self.degree:
                raise ValueError(f"generator {name!r} has degree {len(g)}, expected {self.degree}")

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        if not self.gens:
            return (Perm.identity(self.degree),)
        return enumerate_group(self.gens.values())

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.element_set

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def transversal(self) -> dict[int, Perm]:
        named = [self.gens[k] for k in sorted(self.gens)]
        tr = {0: self.identity}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in named:
                y = g[x]
                if y not in tr:
                    tr[y] = compose(tr[x], g)
                    queue.append(y)
        return tr

    def is_transitive(self) -> bool:
        return len(self.transversal) == self.degree

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order == self.degree

    def point_stabilizer(self, x: int) -> frozenset[Perm]:
        return frozenset(p for p in self.elements if p[x] == x)

    def mp_set(self, x: int, y: int) -> frozenset[Perm]:
        """All elements mapping x to y."""
        if not self.is_transitive():
            raise ValueError("mp_set needs a transitive group")
        return frozenset(p for p in self.elements if p[x] == y)

    @cached_property
    def _mp_from_zero(self) -> dict[int, tuple[Perm, ...]]:
        out: dict[int, list[Perm]] = {x: [] for x in range(self.degree)}
        for p in self.elements:
            out[p[0]].append(p)
        return {x: tuple(sorted(v)) for x, v in out.items()}

    def mp_from_zero(self, x: int) -> tuple[Perm, ...]:
        """Sorted elements mapping 0 to x (cached; used heavily by dynsys)."""
        if not self.is_transitive():
            raise ValueError("mp_set needs a transitive group")
        return self._mp_from_zero[x]

    def is_abelian(self) -> bool:
        return is_abelian(self.gens.values())

    def derived_subgroup(self) -> frozenset[Perm]:
        return derived_subgroup(self.elements)

    def is_perfect(self) -> bool:
        return self.derived_subgroup() == self.element_set

    def exponent(self) -> int:
        return exponent(self.elements)

    @cached_property
    def words(self) -> dict[Perm, tuple[str, ...]]:
        """A shortest word in generator names for every element (BFS, name order)."""
        named = sorted(self.gens.items())
        words = {self.identity: ()}
        queue = deque([self.identity])
        while queue:
            p = queue.popleft()
            for name, g in named:
                q = compose(p, g)
                if q not in words:
                    words[q] = words[p] + (name,)
                    queue.append(q)
        return words

    def name_of(self, p: Perm) -> str:
        """Readable name for an element, e.g. ``s r^3``; ``1`` for the identity."""
        word = self.words[p]
        return collapse_word(word) if word else "1"


def collapse_word(word) -> str:
    """``["s", "r", "r"]`` -> ``"s r^2"``."""
    out: list[list] = []
    for name in word:
        if out and out[-1][0] == name:
            out[-1][1] += 1
        else:
            out.append([name, 1])
    return " ".join(n if k == 1 else f"{n}^{k}" for n, k in out)
