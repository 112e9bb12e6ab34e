"""Shared corpus of unimodular test matrices (and one non-unimodular)."""

import pytest

from zonoq import from_matrix

# name -> matrix.  Covers Boolean ranks 1-3, uniform U_{1,2} / U_{2,3},
# a graphic K_3 with a doubled edge, a matroid with a loop, direct sums of
# circuits, and several non-Gorenstein shapes.  All unimodular, n <= 6, d <= 3.
CORPUS_MATRICES = {
    "boolean1": [[1]],
    "boolean2": [[1, 0], [0, 1]],
    "boolean3": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "u12": [[1, 1]],
    "hexagon": [[1, 0, 1], [0, 1, 1]],
    "k3_doubled": [[1, 1, 0, 1], [-1, 0, 1, -1]],
    "loop_parallel": [[1, 0, 1]],
    "two_circuits": [[1, 1, 0, 0, 0], [0, 0, 1, 0, 1], [0, 0, 0, 1, 1]],
    "coloop_digon": [[1, 1, 0], [0, 0, 1]],
    "u13": [[1, 1, 1]],
    "path_plus": [[1, 0, 1, 1], [0, 1, 1, 0]],
    "two_digons": [[1, 1, 0, 0], [0, 0, 1, 1]],
}

# the non-unimodular diamond (det 2); negative example only
DIAMOND = [[1, 1], [-1, 1]]

EXPECTED_VERDICT = {
    "boolean1": "boolean",
    "boolean2": "boolean",
    "boolean3": "boolean",
    "u12": "circuit-components",
    "hexagon": "circuit-components",
    "k3_doubled": "not-gorenstein",
    "loop_parallel": "circuit-components",
    "two_circuits": "circuit-components",
    "coloop_digon": "not-gorenstein",
    "u13": "not-gorenstein",
    "path_plus": "not-gorenstein",
    "two_digons": "circuit-components",
}


@pytest.fixture(scope="session")
def corpus():
    return {name: from_matrix(mat) for name, mat in CORPUS_MATRICES.items()}


@pytest.fixture(scope="session")
def hexagon(corpus):
    return corpus["hexagon"]
