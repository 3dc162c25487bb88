"""Element orders via stabilised sections.

For a word g with tail t,

    ord(g) = lcm over t-orbit representatives x of  l_g(x) * ord(g||_x),

where l_g(x) is the orbit length and g||_x the stabilised section.  The
engine unfolds this recursion depth first.  Stabilised sections never have
more syllables than g, so only finitely many words occur; a word that
reappears below itself with orbit-length product greater than 1 cannot have
finite order, which gives the infinite-order certificate.  Recurrences with
product 1 carry no information and are skipped (a level-1 stabilising
element whose only non-trivial section is itself is trivial).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Union

from sympy import primefactors

from .permcore import perm_order
from .selfsim import GroupWord, directed_order, is_trivial, power, stab_section_letter

DEFAULT_DEPTH = 64
DEFAULT_MEMO = 10 ** 6
# Skip the power check when g^N would be too long to test cheaply.
VERIFY_SYLLABLE_LIMIT = 4096


def _fmt_path(path: tuple[int, ...]) -> str:
    if all(x < 10 for x in path):
        return "".join(map(str, path))
    return ".".join(map(str, path))


@dataclass(frozen=True)
class Finite:
    n: int
    verified: bool = False

    def __str__(self) -> str:
        return f"Finite({self.n})"


@dataclass(frozen=True)
class InfiniteCertified:
    """``prefix`` leads from g to a word R with R||_cycle = R.

    ``length_product`` is the product of orbit lengths along ``cycle``; it
    exceeds 1, which rules out finite order for R and hence for g.
    """

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]
    length_product: int

    @property
    def path(self) -> tuple[int, ...]:
        return self.prefix + self.cycle

    def __str__(self) -> str:
        if self.prefix:
            return f"Infinite(prefix={_fmt_path(self.prefix)}, path={_fmt_path(self.cycle)})"
        return f"Infinite(path={_fmt_path(self.cycle)})"


@dataclass(frozen=True)
class Unknown:
    reason: str

    def __str__(self) -> str:
        return f"Unknown({self.reason})"


OrderResult = Union[Finite, InfiniteCertified, Unknown]


def orbit_reps_level1(g: GroupWord) -> list[int]:
    """Smallest letter of every orbit of the tail on the alphabet."""
    t = g.tail
    seen: set[int] = set()
    reps = []
    for x in range(len(t)):
        if x in seen:
            continue
        reps.append(x)
        y = x
        while y not in seen:
            seen.add(y)
            y = t[y]
    return reps


class _Infinite(Exception):
    def __init__(self, prefix, cycle, product):
        self.result = InfiniteCertified(tuple(prefix), tuple(cycle), product)


class _Budget(Exception):
    pass


def _base_order(g: GroupWord) -> int | None:
    if not g.syllables:
        return perm_order(g.tail)
    if len(g.syllables) == 1 and g.tail.is_identity():
        return directed_order(g.syllables[0][1])
    return None


def order_of(
    g: GroupWord,
    max_depth: int = DEFAULT_DEPTH,
    memo_limit: int = DEFAULT_MEMO,
    verify: bool = True,
) -> OrderResult:
    """Order of g, a certificate of infinite order, or Unknown on budget overflow."""
    memo: dict[GroupWord, int] = {}
    stack_pos: dict[GroupWord, int] = {}
    products: list[int] = []   # orbit-length product from the root to each stack entry
    path: list[int] = []

    def visit(w: GroupWord, prod: int) -> tuple[int, int]:
        """Returns (order contribution, lowest stack index referenced)."""
        base = _base_order(w)
        if base is not None:
            return base, len(products)
        hit = memo.get(w)
        if hit is not None:
            return hit, len(products)
        if w in stack_pos:
            j = stack_pos[w]
            ratio = prod // products[j]
            if ratio > 1:
                raise _Infinite(path[:j], path[j:], ratio)
            return 1, j
        if len(products) >= max_depth:
            raise _Budget(f"depth {max_depth} exceeded")
        if len(memo) >= memo_limit:
            raise _Budget(f"memo limit {memo_limit} exceeded")
        me = len(products)
        stack_pos[w] = me
        products.append(prod)
        acc = 1
        low = me
        for x in orbit_reps_level1(w):
            sec, length = stab_section_letter(w, x)
            path.append(x)
            val, sub_low = visit(sec, prod * length)
            path.pop()
            acc = lcm(acc, length * val)
            low = min(low, sub_low)
        products.pop()
        del stack_pos[w]
        # Values inside an unfinished ratio-1 loop are partial; keep them out of the memo.
        if low >= me:
            memo[w] = acc
        return acc, low

    try:
        n, _ = visit(g, 1)
    except _Infinite as exc:
        return exc.result
    except _Budget as exc:
        return Unknown(str(exc))
    except RecursionError:
        return Unknown("recursion limit")
    verified = False
    if verify and n * max(1, len(g.syllables)) <= VERIFY_SYLLABLE_LIMIT:
        if not is_trivial(power(g, n)):
            raise AssertionError(f"order engine bug: g^{n} is not trivial for g = {g}")
        for p in primefactors(n):
            if is_trivial(power(g, n // p)):
                raise AssertionError(f"order engine bug: g^{n // p} is trivial for g = {g}")
        verified = True
    return Finite(n, verified)


def check_infinite_certificate(g: GroupWord, cert: InfiniteCertified) -> bool:
    """Re-derive the certificate: follow the prefix, then the cycle must return."""
    w = g
    for x in cert.prefix:
        w, _ = stab_section_letter(w, x)
    start = w
    prod = 1
    for x in cert.cycle:
        w, length = stab_section_letter(w, x)
        prod *= length
    return w == start and prod == cert.length_product and prod > 1
