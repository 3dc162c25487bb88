"""Constant spinal groups and the section calculus on their elements.

A directed element ``b`` is stored as the tuple of its first-level sections;
``b|0 = b`` is implicit.  A group element is kept in syllable normal form

    g = (^a0 b0)(^a1 b1) ... (^a_{n-1} b_{n-1}) a_n

with rooted conjugators ``a_i``, directed cores ``b_i`` and rooted tail
``a_n``.  Folding a factor sequence into this form is exactly free-product
reduction in A * B, so two words are syntactically equal iff they are equal
in A * B.  Equality in G itself is decided by :meth:`GroupWord.is_trivial`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from math import lcm

from .permcore import Perm, PermGroup, collapse_word, compose, inverse, perm_order, subgroup_generated


class CSGroupError(ValueError):
    """Base class for invalid group definitions."""


class AlphabetTooSmall(CSGroupError):
    pass


class NotTransitive(CSGroupError):
    pass


class SectionsDoNotGenerate(CSGroupError):
    pass


class InvalidDefinition(CSGroupError):
    pass


@dataclass(frozen=True)
class DirectedElem:
    """Directed automorphism ``(b, b|1, ..., b|_{m-1})``.

    ``sections[x]`` is the rooted section at letter x for x >= 1; slot 0 holds
    the identity as a placeholder and is never read.
    """

    sections: tuple[Perm, ...]

    @classmethod
    def identity(cls, m: int) -> "DirectedElem":
        e = Perm.identity(m)
        return cls((e,) * m)

    @classmethod
    def from_mapping(cls, m: int, sections: Mapping[int, Perm]) -> "DirectedElem":
        e = Perm.identity(m)
        secs = [e] * m
        for x, p in sections.items():
            if not 1 <= x < m:
                raise InvalidDefinition(f"section letter {x} outside 1..{m - 1}")
            secs[x] = p
        return cls(tuple(secs))

    @property
    def degree(self) -> int:
        return len(self.sections)

    def section(self, x: int) -> Perm:
        if x == 0:
            raise ValueError("the section at 0 is the element itself")
        return self.sections[x]

    def is_identity(self) -> bool:
        return all(p.is_identity() for p in self.sections[1:])

    def __mul__(self, other: "DirectedElem") -> "DirectedElem":
        return directed_mul(self, other)

    def __invert__(self) -> "DirectedElem":
        return DirectedElem(tuple(inverse(p) for p in self.sections))

    def __pow__(self, k: int) -> "DirectedElem":
        return DirectedElem(tuple(p ** k for p in self.sections))

    def order(self) -> int:
        return directed_order(self)

    def __str__(self) -> str:
        inner = ", ".join(f"{x}: {p}" for x, p in enumerate(self.sections) if x and not p.is_identity())
        return "<" + inner + ">"


def directed_mul(b: DirectedElem, c: DirectedElem) -> DirectedElem:
    return DirectedElem(tuple(compose(p, q) for p, q in zip(b.sections, c.sections)))


def directed_order(b: DirectedElem) -> int:
    return lcm(1, *(perm_order(p) for p in b.sections[1:]))


Factor = Union[Perm, DirectedElem]


def canonicalize(factors: Iterable[Factor], degree: int) -> "GroupWord":
    """Fold a left-to-right product of rooted and directed factors.

    Rooted factors accumulate into a pending conjugator; a directed factor
    becomes the syllable ``^p b`` and is merged into the previous syllable
    when the conjugators agree.  Identity cores are dropped.
    """
    syllables: list[tuple[Perm, DirectedElem]] = []
    pending = Perm.identity(degree)
    for f in factors:
        if isinstance(f, DirectedElem):
            if f.is_identity():
                continue
            if syllables and syllables[-1][0] == pending:
                core = directed_mul(syllables[-1][1], f)
                if core.is_identity():
                    syllables.pop()
                else:
                    syllables[-1] = (pending, core)
            else:
                syllables.append((pending, f))
        else:
            pending = compose(pending, f)
    return GroupWord(tuple(syllables), pending)


@dataclass(frozen=True)
class GroupWord:
    """An element of a CS group in syllable normal form."""

    syllables: tuple[tuple[Perm, DirectedElem], ...]
    tail: Perm

    @classmethod
    def identity(cls, m: int) -> "GroupWord":
        return cls((), Perm.identity(m))

    @classmethod
    def rooted(cls, a: Perm) -> "GroupWord":
        return cls((), a)

    @classmethod
    def directed(cls, b: DirectedElem) -> "GroupWord":
        return canonicalize([b], b.degree)

    @property
    def degree(self) -> int:
        return len(self.tail)

    def factors(self) -> list[Factor]:
        out: list[Factor] = []
        for a, b in self.syllables:
            out.extend((a, b, inverse(a)))
        out.append(self.tail)
        return out

    def syllable_count(self) -> int:
        return len(self.syllables)

    def in_layer1_stabilizer(self) -> bool:
        return self.tail.is_identity()

    def is_identity_word(self) -> bool:
        """Syntactic test: the canonical form is empty."""
        return not self.syllables and self.tail.is_identity()

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return multiply(self, other)

    def __invert__(self) -> "GroupWord":
        return invert(self)

    def __pow__(self, k: int) -> "GroupWord":
        return power(self, k)

    def act_letter(self, x: int) -> int:
        return self.tail[x]

    def section(self, x: int) -> "GroupWord":
        return section(self, x)

    def section_at(self, v: Sequence[int]) -> "GroupWord":
        return section_at(self, v)

    def act(self, v: Sequence[int]) -> tuple[int, ...]:
        return act_word(self, v)

    def orbit_length(self, v: Sequence[int]) -> int:
        return orbit_length(self, v)

    def stab_section(self, v: Sequence[int]) -> "GroupWord":
        return stab_section(self, v)

    def is_trivial(self) -> bool:
        return is_trivial(self)

    def equals(self, other: "GroupWord") -> bool:
        """Equality as tree automorphisms (not just as words)."""
        return is_trivial(multiply(self, invert(other)))

    def __str__(self) -> str:
        parts = []
        for a, b in self.syllables:
            parts.append(f"^{a}{b}" if not a.is_identity() else str(b))
        if not self.tail.is_identity() or not parts:
            parts.append(str(self.tail))
        return " ".join(parts)


def multiply(g: GroupWord, h: GroupWord) -> GroupWord:
    if g.degree != h.degree:
        raise ValueError("words over different alphabets")
    return canonicalize(g.factors() + h.factors(), g.degree)


def invert(g: GroupWord) -> GroupWord:
    out: list[Factor] = [inverse(g.tail)]
    for a, b in reversed(g.syllables):
        out.extend((a, ~b, inverse(a)))
    return canonicalize(out, g.degree)


def power(g: GroupWord, k: int) -> GroupWord:
    if k < 0:
        return power(invert(g), -k)
    result = GroupWord.identity(g.degree)
    base = g
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def _section_factors(g: GroupWord, x: int) -> list[Factor]:
    # (^a b)|_x = b|_{x.a}; the tail contributes nothing.
    out: list[Factor] = []
    for a, b in g.syllables:
        y = a[x]
        out.append(b if y == 0 else b.sections[y])
    return out


def section(g: GroupWord, x: int) -> GroupWord:
    if not 0 <= x < g.degree:
        raise ValueError(f"letter {x} outside alphabet of size {g.degree}")
    return canonicalize(_section_factors(g, x), g.degree)


def section_at(g: GroupWord, v: Sequence[int]) -> GroupWord:
    for x in v:
        g = section(g, x)
    return g


def act_word(g: GroupWord, v: Sequence[int]) -> tuple[int, ...]:
    out = []
    for x in v:
        out.append(g.tail[x])
        g = section(g, x)
    return tuple(out)


def orbit_length(g: GroupWord, v: Sequence[int]) -> int:
    v = tuple(v)
    if not v:
        return 1
    if len(v) == 1:
        return _letter_orbit_length(g.tail, v[0])
    k = 1
    w = act_word(g, v)
    while w != v:
        w = act_word(g, w)
        k += 1
    return k


def _letter_orbit_length(p: Perm, x: int) -> int:
    k = 1
    y = p[x]
    while y != x:
        y = p[y]
        k += 1
    return k


def stab_section(g: GroupWord, v: Sequence[int]) -> GroupWord:
    """``g^l|_v`` with l the length of the g-orbit of v."""
    return section_at(power(g, orbit_length(g, v)), v)


def stab_section_letter(g: GroupWord, x: int) -> tuple[GroupWord, int]:
    """Stabilised section at a single letter, with the orbit length.

    Uses ``g^l|_x = g|_x g|_{x.g} ... g|_{x.g^(l-1)}`` instead of forming the
    power, which is what the order engine needs on its hot path.
    """
    factors: list[Factor] = []
    y = x
    length = 0
    while True:
        factors.extend(_section_factors(g, y))
        length += 1
        y = g.tail[y]
        if y == x:
            break
    return canonicalize(factors, g.degree), length


_TRIVIAL_MEMO_LIMIT = 200_000


def is_trivial(g: GroupWord, _memo: dict | None = None) -> bool:
    """Decide whether ``g`` is the identity automorphism.

    A word with trivial tail is the identity iff all its first-level sections
    are.  Sections of a word with n >= 2 syllables have at most (n+1)/2
    syllables, and a single syllable ^a b with b != 1 is never trivial, so
    the recursion terminates.
    """
    if not g.tail.is_identity():
        return False
    n = len(g.syllables)
    if n == 0:
        return True
    if n == 1:
        return False
    if _memo is None:
        _memo = {}
    hit = _memo.get(g)
    if hit is not None:
        return hit
    result = all(is_trivial(section(g, x), _memo) for x in range(g.degree))
    if len(_memo) < _TRIVIAL_MEMO_LIMIT:
        _memo[g] = result
    return result


def parse_token(token: str) -> tuple[str, int]:
    """``name`` or ``name^k`` (k a signed integer) -> (name, k)."""
    if "^" in token:
        name, _, exp = token.rpartition("^")
        try:
            k = int(exp)
        except ValueError:
            raise InvalidDefinition(f"bad exponent in token {token!r}") from None
    else:
        name, k = token, 1
    if not name:
        raise InvalidDefinition(f"empty generator name in token {token!r}")
    return name, k


def tokenize(expr: str | Sequence[str]) -> list[str]:
    """Split a word into tokens; ``1`` stands for the identity and is dropped."""
    tokens = expr.split() if isinstance(expr, str) else list(expr)
    return [t for t in tokens if t != "1"]


@dataclass(frozen=True)
class ValidationReport:
    alphabet_size: int
    rooted_order: int
    directed_order: int
    transitive: bool = True
    sections_generate: bool = True

    def __str__(self) -> str:
        return f"valid CS group: m={self.alphabet_size} |A|={self.rooted_order} |B|={self.directed_order}"


@dataclass(eq=False)
class CSGroup:
    """Defining data of a constant spinal group.

    ``directed_words[name][x]`` is the section of directed generator ``name``
    at letter x >= 1, written as a word in rooted generator tokens.  Letters
    without an entry have trivial section.
    """

    alphabet_size: int
    rooted_generators: dict[str, Perm]
    directed_words: dict[str, dict[int, tuple[str, ...]]]
    name: str = ""

    def __post_init__(self):
        m = self.alphabet_size
        if m < 2:
            raise AlphabetTooSmall(f"alphabet size {m} < 2")
        if not self.rooted_generators:
            raise InvalidDefinition("no rooted generators")
        if not self.directed_words:
            raise InvalidDefinition("no directed generators")
        if "1" in self.rooted_generators or "1" in self.directed_words:
            raise InvalidDefinition("'1' is reserved for the identity")
        clash = set(self.rooted_generators) & set(self.directed_words)
        if clash:
            raise InvalidDefinition(f"names used twice: {sorted(clash)}")
        for name, p in self.rooted_generators.items():
            if not isinstance(p, Perm):
                p = Perm(p)
                self.rooted_generators[name] = p
            if len(p) != m:
                raise InvalidDefinition(f"rooted generator {name!r} has degree {len(p)}, expected {m}")
        for name, secs in self.directed_words.items():
            for x, word in secs.items():
                if not isinstance(x, int) or not 1 <= x < m:
                    raise InvalidDefinition(f"directed generator {name!r}: section letter {x!r} outside 1..{m - 1}")
                self.rooted_word(word)

    # -- evaluation -----------------------------------------------------

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.alphabet_size)

    def rooted_word(self, word: str | Sequence[str]) -> Perm:
        result = self.identity
        for tok in tokenize(word):
            name, k = parse_token(tok)
            if name not in self.rooted_generators:
                raise InvalidDefinition(f"unknown rooted generator {name!r}")
            result = compose(result, self.rooted_generators[name] ** k)
        return result

    def directed_word(self, word: str | Sequence[str]) -> DirectedElem:
        result = DirectedElem.identity(self.alphabet_size)
        for tok in tokenize(word):
            name, k = parse_token(tok)
            if name not in self.directed_generators:
                raise InvalidDefinition(f"unknown directed generator {name!r}")
            result = directed_mul(result, self.directed_generators[name] ** k)
        return result

    def element(self, expr: str | Sequence[str]) -> GroupWord:
        """Parse a space-separated word like ``"s3 s1 b s3 b"`` or ``"b^-1 a^2"``."""
        factors: list[Factor] = []
        for tok in tokenize(expr):
            name, k = parse_token(tok)
            if name in self.rooted_generators:
                factors.append(self.rooted_generators[name] ** k)
            elif name in self.directed_generators:
                factors.append(self.directed_generators[name] ** k)
            else:
                raise InvalidDefinition(f"unknown generator {name!r}")
        return canonicalize(factors, self.alphabet_size)

    # -- caches ---------------------------------------------------------

    @cached_property
    def directed_generators(self) -> dict[str, DirectedElem]:
        m = self.alphabet_size
        return {
            name: DirectedElem.from_mapping(m, {x: self.rooted_word(w) for x, w in secs.items()})
            for name, secs in self.directed_words.items()
        }

    @cached_property
    def rooted_group(self) -> PermGroup:
        return PermGroup(self.alphabet_size, dict(self.rooted_generators))

    @property
    def A(self) -> PermGroup:
        return self.rooted_group

    @cached_property
    def directed_elements(self) -> tuple[DirectedElem, ...]:
        """Closure of the directed generators, BFS order, identity first."""
        gens = [self.directed_generators[k] for k in sorted(self.directed_generators)]
        e = DirectedElem.identity(self.alphabet_size)
        seen = {e}
        out = [e]
        layer = [e]
        while layer:
            nxt = []
            for x in layer:
                for g in gens:
                    y = directed_mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            layer = nxt
            out.extend(layer)
        return tuple(out)

    @property
    def B(self) -> tuple[DirectedElem, ...]:
        return self.directed_elements

    @cached_property
    def transversal(self) -> dict[int, Perm]:
        return self.rooted_group.transversal

    def section_group(self) -> frozenset[Perm]:
        secs = [p for b in self.directed_generators.values() for p in b.sections[1:]]
        return subgroup_generated(secs, self.alphabet_size)

    def directed_subgroup(self, gens: Iterable[DirectedElem]) -> frozenset[DirectedElem]:
        gens = list(gens)
        e = DirectedElem.identity(self.alphabet_size)
        seen = {e}
        todo = [e]
        while todo:
            x = todo.pop()
            for g in gens:
                y = directed_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)

    def generates_B(self, gens: Iterable[DirectedElem]) -> bool:
        return self.directed_subgroup(gens) == frozenset(self.directed_elements)

    def is_B_abelian(self) -> bool:
        gens = list(self.directed_generators.values())
        return all(directed_mul(b, c) == directed_mul(c, b) for b in gens for c in gens)

    def name_of(self, p: Perm) -> str:
        return self.rooted_group.name_of(p)

    @cached_property
    def _directed_names(self) -> dict[DirectedElem, str]:
        gens = sorted(self.directed_generators.items())
        e = DirectedElem.identity(self.alphabet_size)
        names = {e: "1"}
        layer = [(e, [])]
        while layer:
            nxt = []
            for x, word in layer:
                for name, g in gens:
                    y = directed_mul(x, g)
                    if y not in names:
                        w = word + [name]
                        names[y] = collapse_word(w)
                        nxt.append((y, w))
            layer = nxt
        return names

    def directed_name(self, b: DirectedElem) -> str:
        """Shortest word in the directed generators, e.g. ``b^2``."""
        return self._directed_names[b]

    def format_word(self, g: "GroupWord") -> str:
        """Expression for g in generator names that :meth:`element` parses back."""
        # a1 b1 a1^-1 a2 b2 a2^-1 ... t, with adjacent rooted letters merged
        parts = []
        prev = self.identity
        for a, b in g.syllables:
            between = compose(inverse(prev), a)
            if not between.is_identity():
                parts.append(self.name_of(between))
            parts.append(self.directed_name(b))
            prev = a
        last = compose(inverse(prev), g.tail)
        if not last.is_identity() or not parts:
            parts.append(self.name_of(last))
        return " ".join(parts)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<CSGroup{label} m={self.alphabet_size} rooted={sorted(self.rooted_generators)} directed={sorted(self.directed_words)}>"


def validate_cs(group: CSGroup) -> ValidationReport:
    """Check the defining requirements; raise a :class:`CSGroupError` subclass on failure."""
    m = group.alphabet_size
    if m < 2:
        raise AlphabetTooSmall(f"alphabet size {m} < 2")
    A = group.rooted_group
    if not A.is_transitive():
        raise NotTransitive(f"rooted group is not transitive on {m} letters")
    if group.section_group() != A.element_set:
        raise SectionsDoNotGenerate(
            f"first-level sections generate a subgroup of order {len(group.section_group())}, |A| = {A.order}"
        )
    return ValidationReport(m, A.order, len(group.directed_elements))
