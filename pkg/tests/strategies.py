"""Hypothesis strategies for algebras built from the seeded recipe generator."""

from hypothesis import strategies as st

from amenability.harness import Generator


def algebras(max_dim: int = 6):
    return st.integers(0, 2**32 - 1).map(lambda seed: Generator(seed, max_dim).algebra()[0])


def invertible_matrices(n: int):
    return st.integers(0, 2**32 - 1).map(lambda seed: Generator(seed, max(n, 1)).invertible(n))
