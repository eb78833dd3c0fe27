import random

import pytest

from graphforms import CliqueComplex, Graph

# Graphs every identity is exercised on.  Mirrors the selftest corpus.
CORPUS = ("K3", "K4", "K5", "C4", "C5", "C6", "petersen", "octahedron")


@pytest.fixture(scope="session")
def complexes():
    """Memoized builtin-name -> fully enumerated CliqueComplex."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = CliqueComplex.full(Graph.builtin(name))
        return cache[name]

    return get


@pytest.fixture
def rng():
    return random.Random(0)
