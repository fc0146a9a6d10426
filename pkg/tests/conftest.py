import pytest

from pigraphs import families


@pytest.fixture(scope="session")
def isn():
    """Symmetric inverse semigroups for n = 1..4, built once."""
    return {n: families.symmetric_inverse(n) for n in range(1, 5)}
