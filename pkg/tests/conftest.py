import numpy as np
import pytest

from agbench.synthetic import synthetic_mnist, synthetic_silhouettes


@pytest.fixture(scope="session")
def digits_small():
    """40 synthetic digit images (4 per class), MNIST-shaped."""
    return synthetic_mnist(40, seed=11)


@pytest.fixture(scope="session")
def digits_sampling():
    """400 synthetic digits, enough for two disjoint 10-per-class draws."""
    return synthetic_mnist(400, seed=5)


@pytest.fixture(scope="session")
def silhouettes_small():
    """32 synthetic silhouettes (2 per category) at a small size."""
    return synthetic_silhouettes(per_class=2, seed=3, size=64)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
