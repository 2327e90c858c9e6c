import pytest

from conich1.enumeration import enumerate_wdn

_guided_cache = {}


@pytest.fixture(scope="session")
def guided_enumeration():
    """Memoized generator-guided enumeration; the rank 6/7 searches take
    minutes to an hour, so the heavy tests share one run per rank."""

    def run(n):
        if n not in _guided_cache:
            _guided_cache[n] = enumerate_wdn(n, "generator_guided")
        return _guided_cache[n]

    return run
