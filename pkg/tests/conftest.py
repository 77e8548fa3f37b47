from pathlib import Path

import pytest

from tbnet import GenSpec, GenerationError, generate, parse_edgelist

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str):
    return parse_edgelist((FIXTURES / f"{name}.edges").read_text())


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture(scope="session")
def diamond():
    return load_fixture("diamond")


@pytest.fixture(scope="session")
def deviation_one():
    return load_fixture("deviation_one")


@pytest.fixture(scope="session")
def killer():
    return load_fixture("killer")


@pytest.fixture(scope="session")
def temporal_nontb():
    return load_fixture("temporal_nontb")


def corpus(count: int, max_leaves: int = 6, max_retics: int = 4,
           seed_base: int = 0, temporal_only: bool = False,
           max_vertices: int | None = None):
    """Deterministic stream of generated networks for property suites.

    Cycles through (leaves, reticulations) shapes within the given bounds,
    skipping the impossible (1, 1) shape and, for temporal_only, any shape
    the rejection budget gives up on.
    """
    shapes = [
        (L, r)
        for L in range(1, max_leaves + 1)
        for r in range(0, max_retics + 1)
        if (L, r) != (1, 1)
        and (max_vertices is None or 2 * L + 2 * r - 1 <= max_vertices)
    ]
    out = []
    seed = seed_base
    while len(out) < count:
        L, r = shapes[(seed - seed_base) % len(shapes)]
        try:
            out.append(generate(GenSpec(L, r, seed=seed, temporal_only=temporal_only)))
        except GenerationError:
            pass
        seed += 1
        if seed - seed_base > 50 * count:
            raise RuntimeError("corpus generation is rejecting too much")
    return out
