"""Exhaustive-oracle equivalence on every subset, for small ground sets."""

import pytest

from pairideal.fixtures import get_fixture
from pairideal.matroid import Realization
from pairideal.linalg import ExactMatrix
from pairideal.scalars import QQ

from test_matroid import brute_structures


CASES = {
    "u:2:4": None,
    "fail_A": None,
    "a3": None,
    "rank2-parallel": [[1, 2, 2, 0, 1], [0, 0, 0, 1, 1]],
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_structures_match_brute_force(name):
    if CASES[name] is None:
        re = get_fixture(name)
        rows = [[int(x) for x in row] for row in re.matrix.entries]
    else:
        rows = CASES[name]
        re = Realization(name, QQ, ExactMatrix(QQ, rows))
    M = re.matroid()
    ranks, circuits, flats, cyclic = brute_structures(rows)
    for s, r in ranks.items():
        assert M.rank_of(s) == r
    assert M.circuits() == circuits
    assert set(M.flats()) == flats
    assert M.cyclic_flats() == cyclic
