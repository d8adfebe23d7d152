import pytest

from spsurf.macdonald import build


@pytest.fixture(scope="session")
def rings():
    """Session-wide cache of built rings keyed by (n, g)."""
    cache = {}

    def get(n, g):
        if (n, g) not in cache:
            cache[(n, g)] = build(n, g)
        return cache[(n, g)]

    return get
