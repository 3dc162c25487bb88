import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinal.fixtures import a4, d4, gs3
from spinal.permcore import Perm
from spinal.selfsim import (
    AlphabetTooSmall,
    CSGroup,
    DirectedElem,
    GroupWord,
    InvalidDefinition,
    NotTransitive,
    SectionsDoNotGenerate,
    canonicalize,
    invert,
    is_trivial,
    multiply,
    orbit_length,
    power,
    section,
    section_at,
    stab_section,
    stab_section_letter,
    validate_cs,
)

from .conftest import group_and_word, words


# -- definitions and validation ------------------------------------------


def test_gs3_validates():
    rep = validate_cs(gs3())
    assert (rep.alphabet_size, rep.rooted_order, rep.directed_order) == (3, 3, 3)
    assert "|A|=3 |B|=3" in str(rep)


def test_d4_validates():
    assert validate_cs(d4()).rooted_order == 8


def test_sections_must_generate():
    g = CSGroup(3, {"a": Perm.from_cycles(3, (0, 1, 2))}, {"b": {1: (), 2: ()}})
    with pytest.raises(SectionsDoNotGenerate):
        validate_cs(g)


def test_not_transitive():
    g = CSGroup(4, {"a": Perm.from_cycles(4, (0, 1))}, {"b": {1: ("a",)}})
    with pytest.raises(NotTransitive):
        validate_cs(g)


def test_alphabet_too_small():
    with pytest.raises(AlphabetTooSmall):
        CSGroup(1, {"a": Perm([0])}, {"b": {}})


def test_bad_section_letter_and_names():
    a = Perm.from_cycles(3, (0, 1, 2))
    with pytest.raises(InvalidDefinition):
        CSGroup(3, {"a": a}, {"b": {0: ("a",)}})
    with pytest.raises(InvalidDefinition):
        CSGroup(3, {"a": a}, {"b": {1: ("c",)}})
    with pytest.raises(InvalidDefinition):
        CSGroup(3, {"a": a}, {"a": {1: ("a",)}})


# -- directed elements ----------------------------------------------------


def test_directed_arithmetic():
    g = gs3()
    b = g.directed_generators["b"]
    assert (b * b * b).is_identity()
    assert (b * ~b).is_identity()
    assert b * DirectedElem.identity(3) == b
    assert b.order() == 3
    assert DirectedElem.identity(3).order() == 1
    assert a4().directed_generators["b"].order() == 3


# -- canonical words ------------------------------------------------------


def test_canonicalize_basics():
    g = gs3()
    a = g.rooted_generators["a"]
    b = g.directed_generators["b"]
    w = canonicalize([a], 3)
    assert w.syllable_count() == 0 and w.tail == a
    assert canonicalize([b, ~b], 3).is_identity_word()
    assert g.element("b").in_layer1_stabilizer()
    assert not g.element("a").in_layer1_stabilizer()


def test_example_a4_fold():
    G = a4()
    s1, s3 = G.rooted_generators["s1"], G.rooted_generators["s3"]
    b = G.directed_generators["b"]
    g = G.element("s3 s1 b s3 b")
    assert g.syllable_count() == 2
    assert g.syllables[0] == (s3 * s1, b)
    assert g.syllables[1] == (s3 * s1 * s3, b)
    assert g.tail == s3 * s1 * s3
    assert not g.in_layer1_stabilizer()
    assert orbit_length(g, [0]) == 3


def test_example_a4_stabilised_sections():
    G = a4()
    g = G.element("s3 s1 b s3 b")
    assert stab_section(g, [0]) == G.element("s3 b s3 s1 b")
    assert stab_section(g, [0, 0]) == g


def test_d4_square_sections():
    G = d4()
    r = G.rooted_generators["r"]
    bs2 = G.element("b s b s")
    expected = [Perm.identity(4), r, Perm.identity(4), r ** 3]
    for x in range(4):
        sec = section(bs2, x)
        assert sec.syllable_count() == 0
        assert sec.tail == expected[x]
    assert section_at(bs2, [1]).tail == r


def test_d4_bsr_square_sections():
    G = d4()
    g = G.element("b s r b s r")
    bs = G.element("b s")
    expected = [bs, ~bs, G.element("r"), G.element("r^3")]
    for x in range(4):
        assert section(g, x) == expected[x]


def test_gs3_sections():
    G = gs3()
    b = G.element("b")
    assert section(b, 0) == b
    assert section(b, 1) == G.element("a")
    assert section_at(b, [0, 0, 0]) == b
    assert section_at(b, []) == b
    assert stab_section(b, [0]) == b
    assert orbit_length(b, [0]) == 1
    assert orbit_length(G.element("a"), [0]) == 3


def test_semantic_identity():
    G = d4()
    g = G.element("b s") ** 8
    assert not g.is_identity_word()
    assert is_trivial(g)
    assert not is_trivial(G.element("b s") ** 4)
    assert G.element("b s").equals(G.element("s^-1 b^-1") ** -1)


def test_parse_errors():
    G = gs3()
    with pytest.raises(InvalidDefinition):
        G.element("c")
    with pytest.raises(InvalidDefinition):
        G.element("a^x")
    assert G.element("").is_identity_word()
    assert G.element("1 a 1") == G.element("a")
    assert G.element("a^-1") == G.element("a^2")


# -- section calculus properties -----------------------------------------


@given(group_and_word(), st.data())
def test_section_cocycle(gw, data):
    group, g = gw
    h = data.draw(words(group))
    x = data.draw(st.integers(0, group.alphabet_size - 1))
    assert section(multiply(g, h), x) == multiply(section(g, x), section(h, g.tail[x]))
    x_inv = (~g.tail)[x]
    assert section(invert(g), x) == invert(section(g, x_inv))


@given(group_and_word(), st.data())
def test_power_section_is_power_of_stabilised_section(gw, data):
    group, g = gw
    m = group.alphabet_size
    v = data.draw(st.lists(st.integers(0, m - 1), min_size=1, max_size=2))
    k = data.draw(st.integers(1, 2))
    n = orbit_length(g, v) * k
    assert section_at(power(g, n), v) == power(stab_section(g, v), k)


@given(group_and_word(), st.data())
def test_orbit_length_multiplicative(gw, data):
    group, g = gw
    m = group.alphabet_size
    u = data.draw(st.lists(st.integers(0, m - 1), min_size=0, max_size=2))
    v = data.draw(st.lists(st.integers(0, m - 1), min_size=0, max_size=2))
    assert orbit_length(g, u + v) == orbit_length(g, u) * orbit_length(stab_section(g, u), v)


@given(group_and_word(), st.data())
def test_stab_section_composes(gw, data):
    group, g = gw
    m = group.alphabet_size
    u = data.draw(st.lists(st.integers(0, m - 1), min_size=0, max_size=2))
    v = data.draw(st.lists(st.integers(0, m - 1), min_size=0, max_size=2))
    assert stab_section(g, u + v) == stab_section(stab_section(g, u), v)


@given(group_and_word())
def test_syllable_bounds(gw):
    group, g = gw
    n = g.syllable_count()
    total = 0
    for x in range(group.alphabet_size):
        k = section(g, x).syllable_count()
        assert 2 * k <= n + 1
        total += k
        assert stab_section(g, [x]).syllable_count() <= n
    assert total <= n


@given(group_and_word())
def test_stab_section_fast_path(gw):
    group, g = gw
    for x in range(group.alphabet_size):
        w, length = stab_section_letter(g, x)
        assert w == stab_section(g, [x])
        assert length == orbit_length(g, [x])


@given(group_and_word())
def test_canonicalize_idempotent(gw):
    group, g = gw
    assert canonicalize(g.factors(), group.alphabet_size) == g
    assert multiply(g, invert(g)).is_identity_word()
    assert multiply(g, GroupWord.identity(group.alphabet_size)) == g


@given(group_and_word())
def test_format_word_roundtrip(gw):
    group, g = gw
    assert group.element(group.format_word(g)) == g
