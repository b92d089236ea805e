import numpy as np
import pytest

from fairsdp import erdos_renyi


def random_psd(rng, n, rank=None):
    """Random PSD matrix of the given size (and optional rank)."""
    rank = n if rank is None else rank
    b = rng.standard_normal((n, rank))
    return b @ b.T


def connected_er(n, r, seed, max_tries=200):
    """First connected ER(n, r) draw from seed, seed+1, ..."""
    for s in range(seed, seed + max_tries):
        g = erdos_renyi(n, r, s)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected ER({n},{r}) draw in {max_tries} tries")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
