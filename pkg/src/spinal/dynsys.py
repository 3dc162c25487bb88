"""Atomic dynamical systems on subsets of the rooted group.

Both systems are determined by their values on singletons, so they are
stored as an element graph ``a -> image({a})``.  Subsets are represented as
sorted tuples of permutations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import networkx as nx

from .permcore import Perm, compose, derived_subgroup, product, subgroup_generated
from .selfsim import CSGroup, DirectedElem

SubsetOfA = tuple[Perm, ...]


def subset(elems: Iterable[Perm]) -> SubsetOfA:
    return tuple(sorted(set(elems)))


# -- the lambda system ----------------------------------------------------


def zero_orbit(a: Perm) -> list[int]:
    """Letters 0.a, 0.a^2, ... before returning to 0."""
    out = []
    y = a[0]
    while y != 0:
        out.append(y)
        y = a[y]
    return out


def lambda_b(b: DirectedElem, a: Perm) -> Perm:
    """Product of the sections of b along the <a>-orbit of 0, left to right."""
    return product((b.sections[y] for y in zero_orbit(a)), len(a))


def lambda_b_at(group: CSGroup, b: DirectedElem, a: Perm, x: int) -> Perm:
    """lambda_b of the conjugate of a by the fixed transversal element e_{0->x}."""
    return lambda_b(b, a.conjugate_by(group.transversal[x]))


def frak_C(group: CSGroup, a: Perm, x: int) -> SubsetOfA:
    """Conjugates ^p a for every p in A with 0.p = x."""
    return subset(a.conjugate_by(p) for p in group.A.mp_from_zero(x))


def frak_X(group: CSGroup, a: Perm, x: int) -> frozenset[int]:
    out: set[int] = set()
    for c in frak_C(group, a, x):
        out.update(zero_orbit(c))
    return frozenset(out)


def conjugacy_class(group: CSGroup, a: Perm) -> SubsetOfA:
    # Every p in A maps 0 somewhere, so the union of the frak_C sets over all
    # letters is the full conjugacy class.
    return subset(a.conjugate_by(p) for p in group.A.elements)


def Lambda_image(group: CSGroup, b: DirectedElem, a: Perm) -> SubsetOfA:
    """{lambda_b(c) : c conjugate to a}; independent of any transversal."""
    return subset(lambda_b(b, c) for c in conjugacy_class(group, a))


def Lambda_image_transversal(group: CSGroup, b: DirectedElem, a: Perm) -> SubsetOfA:
    """{lambda_b(a, x) : x in X} using the fixed BFS transversal."""
    return subset(lambda_b_at(group, b, a, x) for x in range(group.alphabet_size))


# -- the sigma system -----------------------------------------------------


@lru_cache(maxsize=4096)
def _generated(gens: frozenset[Perm], degree: int) -> frozenset[Perm]:
    return subgroup_generated(gens, degree)


@lru_cache(maxsize=4096)
def _derived(gens: frozenset[Perm], degree: int) -> frozenset[Perm]:
    if not gens:
        return frozenset([Perm.identity(degree)])
    return derived_subgroup(gens)


def sigma(group: CSGroup, S: Sequence[DirectedElem], a: Perm, x: int) -> SubsetOfA:
    """H * K with H generated by orbit products and K a derived subgroup.

    For each c in frak_C(a, x) and b in S, H gets the product of
    b|_{0.c}, b|_{0.c^2}, ... over the non-trivial part of the 0-orbit of c.
    K is the derived subgroup of <b|_y : y in frak_X(a, x), b in S>.
    """
    if not S:
        raise ValueError("S must be nonempty")
    m = group.alphabet_size
    h_gens: set[Perm] = set()
    k_gens: set[Perm] = set()
    for c in frak_C(group, a, x):
        pts = zero_orbit(c)
        for b in S:
            secs = [b.sections[y] for y in pts]
            h_gens.add(product(secs, m))
            k_gens.update(secs)
    e = Perm.identity(m)
    H = _generated(frozenset(h_gens - {e}), m)
    K = _derived(frozenset(k_gens - {e}), m)
    return subset(compose(h, k) for h in H for k in K)


def Sigma_image(group: CSGroup, S: Sequence[DirectedElem], a: Perm) -> SubsetOfA:
    out: set[Perm] = set()
    for x in range(group.alphabet_size):
        out.update(sigma(group, S, a, x))
    return subset(out)


# -- step graphs ----------------------------------------------------------

LAMBDA = "lambda"            # Lambda_b over conjugacy classes
LAMBDA_TRANSVERSAL = "lambda-transversal"
LAMBDA_MAP = "lambda-map"    # the plain map a -> lambda_b(a)
SIGMA = "sigma"
KINDS = (LAMBDA, LAMBDA_TRANSVERSAL, LAMBDA_MAP, SIGMA)


@dataclass(frozen=True)
class StepGraph:
    """Element graph of an atomic system: ``edges[a]`` is the image of {a}."""

    kind: str
    label: str
    degree: int
    edges: dict[Perm, SubsetOfA] = field(compare=False)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def image(self, subset_: Iterable[Perm]) -> SubsetOfA:
        out: set[Perm] = set()
        for a in subset_:
            out.update(self.edges[a])
        return subset(out)

    def nodes(self) -> list[Perm]:
        return sorted(self.edges)


def build_step_graph(
    group: CSGroup,
    kind: str,
    param: DirectedElem | Sequence[DirectedElem],
    label: str = "",
) -> StepGraph:
    """Step graph over all of A.

    ``param`` is a directed element for the lambda kinds and a nonempty
    sequence of directed elements for ``sigma``.
    """
    elems = group.A.elements
    if kind == SIGMA:
        S = list(param) if not isinstance(param, DirectedElem) else [param]
        edges = {a: Sigma_image(group, S, a) for a in elems}
    elif kind == LAMBDA:
        edges = {a: Lambda_image(group, param, a) for a in elems}
    elif kind == LAMBDA_TRANSVERSAL:
        edges = {a: Lambda_image_transversal(group, param, a) for a in elems}
    elif kind == LAMBDA_MAP:
        edges = {a: (lambda_b(param, a),) for a in elems}
    else:
        raise ValueError(f"unknown step graph kind {kind!r}; expected one of {KINDS}")
    return StepGraph(kind, label or kind, group.alphabet_size, edges)


@dataclass(frozen=True)
class TrivialityResult:
    """Outcome of the eventual-triviality test.

    ``steps`` is the least k with image^k({a}) <= {1} for every a (only when
    trivial).  Otherwise ``cycles`` holds one shortest cycle per strongly
    connected component that carries a cycle, each listed from its smallest
    element.
    """

    trivial: bool
    steps: int | None = None
    cycles: tuple[tuple[Perm, ...], ...] = ()

    @property
    def cycle(self) -> tuple[Perm, ...] | None:
        return self.cycles[0] if self.cycles else None

    def __bool__(self) -> bool:
        return self.trivial


def _digraph(graph: StepGraph) -> nx.DiGraph:
    """The element graph with the identity (and edges into it) removed."""
    e = graph.identity
    G = nx.DiGraph()
    for a in graph.nodes():
        if a == e:
            continue
        G.add_node(a)
        G.add_edges_from((a, v) for v in graph.edges[a] if v != e)
    return G


def cyclic_components(graph: StepGraph) -> list[list[Perm]]:
    """Strongly connected components (identity excluded) that contain a cycle."""
    G = _digraph(graph)
    comps = []
    for comp in nx.strongly_connected_components(G):
        node = next(iter(comp))
        if len(comp) > 1 or G.has_edge(node, node):
            comps.append(sorted(comp))
    return sorted(comps)


def _shortest_cycle_in(G: nx.DiGraph, comp: list[Perm]) -> tuple[Perm, ...]:
    best = None
    for a in comp:
        if G.has_edge(a, a):
            return (a,)
        paths = nx.single_source_shortest_path(G.subgraph(comp), a)
        for u, p in paths.items():
            if G.has_edge(u, a) and (best is None or len(p) < len(best)):
                best = p
    return tuple(best)


def is_eventually_trivial(graph: StepGraph) -> TrivialityResult:
    """Every trajectory of a singleton ends inside {1}.

    Equivalent to the element graph having no cycle apart from the loop at
    the identity.  Images that are empty count as trivial.
    """
    G = _digraph(graph)
    comps = cyclic_components(graph)
    if comps:
        return TrivialityResult(False, cycles=tuple(_shortest_cycle_in(G, c) for c in comps))
    depth: dict[Perm, int] = {}
    for u in reversed(list(nx.topological_sort(G))):
        depth[u] = 1 + max((depth[v] for v in G.successors(u)), default=0)
    return TrivialityResult(True, steps=max(depth.values(), default=0))


def trajectory(graph: StepGraph, start: Iterable[Perm]) -> list[SubsetOfA]:
    """Iterates of a subset until one repeats (the repeated one is not re-listed)."""
    cur = subset(start)
    seen = {cur}
    out = [cur]
    while True:
        cur = graph.image(cur)
        if cur in seen:
            return out
        seen.add(cur)
        out.append(cur)


# -- DOT export -----------------------------------------------------------

Namer = Callable[[Perm], str]


def _is_subgroup(s: SubsetOfA) -> bool:
    members = set(s)
    return all(compose(p, q) in members for p in s for q in s)


def format_subset(s: SubsetOfA, namer: Namer = str) -> str:
    """Brace notation, or <g> for a cyclic subgroup of order at least 2."""
    if not s:
        return "{}"
    e = Perm.identity(len(s[0]))
    if len(s) > 1 and _is_subgroup(s):
        for g in s:
            if g != e and len(subgroup_generated([g])) == len(s):
                return "⟨" + namer(g) + "⟩"
    return "{" + ", ".join("1_A" if p == e else namer(p) for p in s) + "}"


_EDGE_STYLES = ("", 'style=dashed, color=red', 'style=dotted, color=blue', 'style=bold, color=darkgreen')


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(
    graphs: StepGraph | Sequence[StepGraph],
    mode: str = "element",
    starts: Iterable[Perm] | None = None,
    namer: Namer = str,
    name: str = "G",
) -> str:
    """Render one or more step graphs over the same group as a DOT digraph.

    Element mode draws ``a -> v`` for every v in ``edges[a]``.  Subset mode
    draws the trajectories of the singletons {a} for a in ``starts`` (default:
    every element), with nodes labelled by subsets.  Several graphs are
    overlaid; the second one uses dashed red edges.
    """
    if isinstance(graphs, StepGraph):
        graphs = [graphs]
    graphs = list(graphs)
    if not graphs:
        raise ValueError("no graphs to export")
    if mode not in ("element", "subset"):
        raise ValueError(f"unknown mode {mode!r}")
    start_list = sorted(set(starts)) if starts is not None else graphs[0].nodes()

    node_keys: set = set()
    edge_list: list[tuple[object, object, int]] = []
    for gi, g in enumerate(graphs):
        if mode == "element":
            for a in start_list:
                node_keys.add(a)
                for v in g.edges[a]:
                    node_keys.add(v)
                    edge_list.append((a, v, gi))
            # close under reachability so every drawn node has its out-edges
            todo = [v for v in node_keys if v not in start_list]
            done = set(start_list)
            while todo:
                u = todo.pop()
                if u in done:
                    continue
                done.add(u)
                for v in g.edges[u]:
                    edge_list.append((u, v, gi))
                    if v not in node_keys:
                        node_keys.add(v)
                    todo.append(v)
        else:
            for a in start_list:
                cur = (a,)
                while True:
                    node_keys.add(cur)
                    nxt = g.image(cur)
                    edge_list.append((cur, nxt, gi))
                    if nxt in node_keys:
                        node_keys.add(nxt)
                        break
                    cur = nxt

    if mode == "element":
        ordered = sorted(node_keys)
        labels = {a: namer(a) for a in ordered}
    else:
        ordered = sorted(node_keys, key=lambda s: (len(s), s))
        labels = {s: format_subset(s, namer) for s in ordered}
    ids = {k: f"n{i}" for i, k in enumerate(ordered)}

    lines = [f"digraph {_quote(name)} {{"]
    for k in ordered:
        lines.append(f"  {ids[k]} [label={_quote(labels[k])}];")
    pos = {k: i for i, k in enumerate(ordered)}
    for u, v, gi in sorted(set(edge_list), key=lambda t: (t[2], pos[t[0]], pos[t[1]])):
        style = _EDGE_STYLES[gi % len(_EDGE_STYLES)]
        attr = f" [{style}]" if style else ""
        lines.append(f"  {ids[u]} -> {ids[v]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
