import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinal import dynsys as D
from spinal.criteria import is_orbitwise_abelian
from spinal.fixtures import a4, d4, fig2, gs3, gs3_e11, hexagon
from spinal.permcore import Perm

from .conftest import FIXTURES, FIXTURE_NAMES


def test_zero_orbit():
    assert D.zero_orbit(Perm.from_cycles(4, (0, 2, 1))) == [2, 1]
    assert D.zero_orbit(Perm.from_cycles(4, (1, 2))) == []


def test_frak_sets_d4():
    G = d4()
    s, r = G.rooted_generators["s"], G.rooted_generators["r"]
    assert set(D.frak_C(G, s * r, 0)) == {s * r, r * s}
    for x in range(4):
        C = D.frak_C(G, r, x)
        assert set(C) <= set(D.conjugacy_class(G, r))
    assert D.frak_X(G, r, 0) == {1, 2, 3}


def test_d4_lambda_and_sigma():
    G = d4()
    s, r = G.rooted_generators["s"], G.rooted_generators["r"]
    b = G.directed_generators["b"]
    assert D.lambda_b(b, r) == s * r
    expected = {Perm.identity(4), s * r, r ** 2, s * r ** 3}
    for x in range(4):
        assert set(D.sigma(G, [b], r, x)) == expected
    assert set(D.Sigma_image(G, [b], r)) == expected
    assert s * r in D.Sigma_image(G, [b], s * r)


def test_sigma_needs_generators():
    G = gs3()
    with pytest.raises(ValueError):
        D.sigma(G, [], G.rooted_generators["a"], 0)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixed_point_and_atomicity(name):
    G = FIXTURES[name]
    e = G.A.identity
    b = G.B[1]
    for kind in (D.LAMBDA, D.LAMBDA_TRANSVERSAL, D.LAMBDA_MAP):
        g = D.build_step_graph(G, kind, b)
        assert g.edges[e] == (e,)
        elems = G.A.elements[:4]
        assert g.image(elems) == D.subset(x for a in elems for x in g.edges[a])
    sg = D.build_step_graph(G, D.SIGMA, list(G.directed_generators.values()))
    assert sg.edges[e] == (e,)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_sigma_is_class_function(name):
    G = FIXTURES[name]
    S = list(G.directed_generators.values())
    for a in G.A.elements:
        img = D.Sigma_image(G, S, a)
        for c in D.conjugacy_class(G, a):
            assert D.Sigma_image(G, S, c) == img


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_lambda_class_contains_transversal_image(name):
    G = FIXTURES[name]
    for b in G.B:
        for a in G.A.elements:
            assert set(D.Lambda_image_transversal(G, b, a)) <= set(D.Lambda_image(G, b, a))


def test_transversal_independence_on_stable_groups():
    # In a stable group lambda_b is constant on each frak_C(a, x), so any
    # transversal gives the same Lambda image.
    for G in (fig2(), gs3()):
        for b in G.B:
            for a in G.A.elements:
                assert D.Lambda_image_transversal(G, b, a) == D.Lambda_image(G, b, a)


@pytest.mark.parametrize("name", [n for n in FIXTURE_NAMES if is_orbitwise_abelian(FIXTURES[n]).holds])
def test_lambda_homomorphism(name):
    G = FIXTURES[name]
    for a in G.A.elements:
        for b1 in G.B:
            for b2 in G.B:
                assert D.lambda_b(b1 * b2, a) == D.lambda_b(b1, a) * D.lambda_b(b2, a)


def test_eventual_triviality_and_depth():
    G = a4()
    b = G.directed_generators["b"]
    res = D.is_eventually_trivial(D.build_step_graph(G, D.LAMBDA_MAP, b))
    assert res and res.steps >= 1 and res.cycle is None
    G = gs3_e11()
    res = D.is_eventually_trivial(D.build_step_graph(G, D.LAMBDA_MAP, G.directed_generators["b"]))
    assert not res and res.cycle is not None


def test_d4_cycles_cover_each_component():
    G = d4()
    g = D.build_step_graph(G, D.SIGMA, [G.directed_generators["b"]])
    res = D.is_eventually_trivial(g)
    assert not res.trivial
    assert len(res.cycles) == len(D.cyclic_components(g))
    flat = {p for c in res.cycles for p in c}
    s, r = G.rooted_generators["s"], G.rooted_generators["r"]
    assert s * r in flat


def test_trajectory_hexagon():
    G = hexagon()
    s, r = G.rooted_generators["s"], G.rooted_generators["r"]
    g = D.build_step_graph(G, D.SIGMA, [G.directed_generators["b"]])
    traj = D.trajectory(g, [s * r])
    names = [D.format_subset(t, G.name_of) for t in traj]
    assert names == ["{s r}", "⟨r⟩", "⟨r^2⟩", "{1_A}"]


def test_format_subset():
    G = d4()
    s, r = G.rooted_generators["s"], G.rooted_generators["r"]
    e = G.A.identity
    assert D.format_subset((e,), G.name_of) == "{1_A}"
    assert D.format_subset(D.subset([e, r, r ** 2, r ** 3]), G.name_of) == "⟨r⟩"
    assert D.format_subset(D.subset([e, s]), G.name_of) == "⟨s⟩"
    assert D.format_subset(D.subset([s]), G.name_of) == "{s}"
    assert D.format_subset(()) == "{}"


def test_export_dot_deterministic_and_overlay():
    G = a4()
    b = G.directed_generators["b"]
    g1 = D.build_step_graph(G, D.LAMBDA, b, label="L_b")
    g2 = D.build_step_graph(G, D.LAMBDA, b * b, label="L_b2")
    text = D.export_dot([g1, g2], namer=G.name_of)
    assert text == D.export_dot([g1, g2], namer=G.name_of)
    assert text.startswith("digraph")
    assert "style=dashed, color=red" in text
    sub = D.export_dot(g1, mode="subset", namer=G.name_of)
    assert "{1_A}" in sub
    with pytest.raises(ValueError):
        D.export_dot([], namer=G.name_of)
    with pytest.raises(ValueError):
        D.export_dot(g1, mode="nope")


@given(st.sampled_from(FIXTURE_NAMES), st.data())
def test_trajectory_images_follow_edges(name, data):
    G = FIXTURES[name]
    g = D.build_step_graph(G, D.SIGMA, list(G.directed_generators.values()))
    a = data.draw(st.sampled_from(G.A.elements))
    traj = D.trajectory(g, [a])
    for prev, nxt in zip(traj, traj[1:]):
        assert g.image(prev) == nxt
    assert g.image(traj[-1]) in traj
