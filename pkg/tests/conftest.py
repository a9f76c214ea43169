import random

import pytest
from hypothesis import settings, strategies as st

from monideal import MonomialIdeal
from monideal.harness import random_ideal

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def primary_ideals(draw, dims=(1, 2, 3), max_exp=6, extra=4):
    n = draw(st.sampled_from(dims))
    pure = [draw(st.integers(1, max_exp)) for _ in range(n)]
    gens = [tuple(p if i == j else 0 for j in range(n)) for i, p in enumerate(pure)]
    for _ in range(draw(st.integers(0, extra))):
        v = tuple(draw(st.integers(0, max(p - 1, 0))) for p in pure)
        if any(v):
            gens.append(v)
    return MonomialIdeal(n, gens)


@pytest.fixture
def example_ideal():
    return MonomialIdeal(3, [(5, 0, 0), (0, 4, 0), (0, 0, 2)])


@pytest.fixture
def seeded_ideals():
    def make(n, count, seed=0, max_exp=6):
        rng = random.Random(seed)
        return [random_ideal(n, rng, max_exp) for _ in range(count)]

    return make
