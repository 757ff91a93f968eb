import pytest

from pairideal.linalg import ExactMatrix
from pairideal.matroid import LoopError, Realization
from pairideal.pairs import PairsIdeal
from pairideal.scalars import QQ


def test_u12_pinned_forms(u12):
    pairs = u12.pairs
    assert [str(f) for f in pairs.f] == ["x1", "x1"]
    # D = [-M'^T | I] pins g1 = -y1, g2 = y1
    assert [str(g) for g in pairs.g] == ["-y1", "y1"]
    assert {str(g) for g in pairs.generators} == {"-x1*y1", "x1*y1"}
    assert pairs.euler_vectors() == [(1, 1)]
    assert pairs.euler_relation_holds()


def test_boolean_all_zero_generators(boolean3):
    pairs = boolean3.pairs
    assert all(g.is_zero() for g in pairs.generators)
    assert pairs.zero_generator_indices == [0, 1, 2]
    assert pairs.euler_vectors() == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_a3_generators(a3):
    pairs = a3.pairs
    assert len(pairs.nonzero_generators()) == 6
    assert all(g.grade() == (1, 1) for _, g in pairs.nonzero_generators())
    # the six products span a 5-dimensional space
    assert a3.engine.ideal_dim((1, 1)) == 5
    assert pairs.euler_vectors() == [(1,) * 6]


def test_fail_euler_vectors(fail_a):
    pairs = fail_a.pairs
    vectors = {v for v in pairs.euler_vectors()}
    by_support = {tuple(sorted(pairs.to_original(i) for i, b in enumerate(v) if b)) for v in vectors}
    assert by_support == {(4,), (1, 2, 3, 5)}
    assert pairs.euler_relation_holds()
    assert [pairs.to_original(i) for i in pairs.coloops] == [4]


def test_orthogonality_invariant(a3, seven):
    for bench in (a3, seven):
        pairs = bench.pairs
        m = pairs.realization.basis_matrix
        d = ExactMatrix(pairs.field, list(pairs.dual_normal.entries), ncols=pairs.n)
        assert m.matmul(d.transpose()).is_zero()


def test_swap_roles_u12(u12):
    sw = u12.pairs.swap_roles()
    assert {str(g) for g in sw.generators} == {"x1*y1", "-x1*y1"}


def test_swap_roles_hilbert_transpose(a3, bracelet):
    for bench in (a3, bracelet):
        eng = bench.engine
        from pairideal.graded import GradedEngine

        sw = GradedEngine(bench.pairs.swap_roles())
        for i in range(4):
            for j in range(4):
                assert eng.quotient_dim((i, j)) == sw.quotient_dim((j, i))


def test_loops_rejected_and_droppable():
    rows = [[1, 0, 0], [0, 1, 0]]  # third column zero: a loop
    re = Realization("loopy", QQ, ExactMatrix(QQ, rows))
    with pytest.raises(LoopError):
        PairsIdeal(re)
    pi = PairsIdeal(re, drop_loops=True)
    assert pi.n == 2
    assert pi.dropped_loops == [2]
    assert pi.to_original(0) == 1


def test_generators_vanish_on_component_subspaces(a3):
    # each generator vanishes identically on the product subspace of any
    # cyclic flat and its complement; checked on a spanning sample
    pairs = a3.pairs
    M = pairs.matroid
    F = next(F for F in M.cyclic_flats() if len(F) == 3)
    field = pairs.field
    from pairideal.linalg import ExactMatrix, kernel_basis

    fmat = ExactMatrix(
        field,
        [[p.terms.get(_unit(pairs.ring.nvars, t), field.zero) for t in range(pairs.r)] for p in (pairs.f[i] for i in sorted(F))],
    )
    gmat = ExactMatrix(
        field,
        [
            [p.terms.get(_unit(pairs.ring.nvars, pairs.r + u), field.zero) for u in range(pairs.s)]
            for p in (pairs.g[j] for j in sorted(frozenset(range(pairs.n)) - F))
        ],
    )
    for xv in kernel_basis(fmat).entries or [tuple([field.zero] * pairs.r)]:
        for yv in kernel_basis(gmat).entries or [tuple([field.zero] * pairs.s)]:
            point = list(xv) + list(yv)
            for _, g in pairs.nonzero_generators():
                assert field.is_zero(g.evaluate(point))


def _unit(n, k):
    return tuple(1 if i == k else 0 for i in range(n))


def test_generator_count_minus_minimal_equals_kappa(a3, seven, u24, fail_a):
    for bench in (a3, seven, u24, fail_a):
        pairs = bench.pairs
        if pairs.coloops:
            continue  # zero generators change the count
        nonzero = len(pairs.nonzero_generators())
        minimal = bench.engine.ideal_dim((1, 1))
        assert nonzero - minimal == pairs.kappa


def test_permutation_reported_in_original_labels():
    # a matrix whose leftmost column is dependent: the pinned basis permutes
    rows = [[0, 1, 0], [0, 0, 1]]
    re = Realization("perm", QQ, ExactMatrix(QQ, rows))
    pi = PairsIdeal(re, drop_loops=True)
    assert sorted(pi.to_original(i) for i in range(pi.n)) == [2, 3]
