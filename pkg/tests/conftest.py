import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spinal.fixtures import all_fixtures
from spinal.selfsim import CSGroup, GroupWord, canonicalize

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = all_fixtures()
FIXTURE_NAMES = sorted(FIXTURES)


@pytest.fixture(params=FIXTURE_NAMES)
def any_group(request) -> CSGroup:
    return FIXTURES[request.param]


def word_factors(group: CSGroup, conjugators, cores, tail):
    factors = []
    for a, b in zip(conjugators, cores):
        factors.extend([a, b, ~a])
    factors.append(tail)
    return factors


@st.composite
def words(draw, group: CSGroup, max_syllables: int = 5) -> GroupWord:
    """Random element with at most ``max_syllables`` syllables."""
    A = group.A.elements
    B = group.B[1:]
    n = draw(st.integers(0, max_syllables))
    conj = [draw(st.sampled_from(A)) for _ in range(n)]
    cores = [draw(st.sampled_from(B)) for _ in range(n)]
    tail = draw(st.sampled_from(A))
    return canonicalize(word_factors(group, conj, cores, tail), group.alphabet_size)


@st.composite
def group_and_word(draw, max_syllables: int = 5):
    name = draw(st.sampled_from(FIXTURE_NAMES))
    group = FIXTURES[name]
    return group, draw(words(group, max_syllables))


def random_word(group: CSGroup, rng: random.Random, max_syllables: int = 5) -> GroupWord:
    A = group.A.elements
    B = group.B[1:]
    n = rng.randint(0, max_syllables)
    conj = [rng.choice(A) for _ in range(n)]
    cores = [rng.choice(B) for _ in range(n)]
    return canonicalize(word_factors(group, conj, cores, rng.choice(A)), group.alphabet_size)


# -- acceptance bookkeeping ---------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
