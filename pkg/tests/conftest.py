import random

import pytest

from hecke5 import build_quotient, ideal_from_generator
from hecke5.golden import GoldenInt


@pytest.fixture(scope="session")
def quotient_cache():
    """Shared cache of built quotients; several test modules and the
    acceptance suite reuse the same levels."""
    cache = {}

    def get(gen, cap=5_000_000):
        ideal = gen if not isinstance(gen, (int, GoldenInt)) else ideal_from_generator(gen)
        if ideal not in cache:
            cache[ideal] = build_quotient(ideal, cap)
        return cache[ideal]

    return get


def random_golden(rng: random.Random, bound: int = 10**6) -> GoldenInt:
    return GoldenInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_word(rng: random.Random, max_len: int = 40) -> str:
    return "".join(rng.choice("SsTt") for _ in range(rng.randint(0, max_len)))
