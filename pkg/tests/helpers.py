"""Shared builders for the test modules."""

import numpy as np
from hypothesis import strategies as st

from oacm import CycleDecomposition, TilingParams, build_oacm_permutation, square_locations


def single_square(n):
    """Tiling of an n x n image by one square."""
    return square_locations(TilingParams(n, n, n, 0))


def oacm_perm(h, w, s, o, p=1, q=1, **kw):
    return build_oacm_permutation(square_locations(TilingParams(h, w, s, o)), p, q, **kw)


def synthetic_cycles(lengths):
    """A decomposition with the given cycle lengths on a 1-wide image."""
    n = sum(lengths)
    starts = np.cumsum([0] + list(lengths))
    return CycleDecomposition(n, 1, np.arange(n, dtype=np.int64), starts.astype(np.int64))


@st.composite
def small_configs(draw, max_pixels=1024):
    height = draw(st.integers(1, 32))
    width = draw(st.integers(1, max(1, max_pixels // height)))
    size = draw(st.integers(1, min(height, width)))
    overlap = draw(st.integers(0, size - 1))
    p = draw(st.integers(0, 5))
    q = draw(st.integers(0, 5))
    return height, width, size, overlap, p, q
