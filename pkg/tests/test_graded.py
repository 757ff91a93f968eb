"""Degreewise engine: pieces, Hilbert data, Koszul homology, slices."""

from math import comb

import pytest

from pairideal.ring import RingError


# the worked braid-arrangement table, pinned by three independent methods
# (Koszul homology, the exact induced-order complex, and the minimal
# resolution); the top corner is 3, forced by the Euler characteristic of
# the Koszul complex at (3,3)
A3_IDEAL_BETTI = {
    (0, (1, 1)): 5,
    (1, (2, 1)): 1,
    (1, (1, 2)): 1,
    (1, (2, 2)): 7,
    (1, (3, 1)): 1,
    (1, (1, 3)): 1,
    (2, (3, 2)): 5,
    (2, (2, 3)): 5,
    (3, (3, 3)): 3,
}


def test_ideal_pieces_vanish_on_axes(a3, u24):
    for bench in (a3, u24):
        eng = bench.engine
        for i in range(4):
            assert eng.ideal_dim((i, 0)) == 0
            assert eng.ideal_dim((0, i)) == 0


def test_u12_piece_dims(u12):
    assert u12.engine.ideal_dim((1, 1)) == 1
    assert u12.engine.quotient_dim((2, 2)) == 0
    assert u12.engine.quotient_dim((3, 0)) == 1
    assert u12.engine.quotient_dim((0, 2)) == 1


def test_boolean_hilbert(boolean3):
    eng = boolean3.engine
    for i in range(3):
        for j in range(3):
            assert eng.quotient_dim((i, j)) == eng.ring.monomial_count((i, j))


def test_hilbert_additivity(a3, seven):
    for bench in (a3, seven):
        eng = bench.engine
        for i in range(4):
            for j in range(4):
                assert eng.ideal_dim((i, j)) + eng.quotient_dim((i, j)) == eng.ring.monomial_count((i, j))


def test_a3_koszul_table(a3):
    table = a3.koszul_betti(target="ideal")
    assert table.entries == A3_IDEAL_BETTI
    assert table.certified_window
    assert table.max_p() == 3  # projective dimension of the ideal


def test_u12_principal_ideal_betti(u12):
    table = u12.koszul_betti(target="ideal")
    assert table.entries == {(0, (1, 1)): 1}


def test_seven_koszul_totals(seven):
    table = seven.koszul_betti(target="quotient")
    totals = table.total_by_p()
    assert totals == {0: 1, 1: 6, 2: 23, 3: 40, 4: 37, 5: 21, 6: 7, 7: 1}
    assert table.certified_window


def test_koszul_euler_characteristic(a3):
    # alternating Tor sums equal the alternating Koszul chain sums
    eng = a3.engine
    r, s = a3.pairs.r, a3.pairs.s
    table = a3.koszul_betti(target="quotient")
    for (i, j) in [(2, 2), (3, 3), (2, 1)]:
        chi_tor = sum(
            (-1) ** p * table.get(p, (i, j)) for p in range(0, 8)
        )
        chi_chain = sum(
            (-1) ** (a + b)
            * comb(r, a)
            * comb(s, b)
            * eng.quotient_dim((i - a, j - b))
            for a in range(r + 1)
            for b in range(s + 1)
            if i - a >= 0 and j - b >= 0
        )
        assert chi_tor == chi_chain


def test_derivation_slices(a3, boolean3, seven):
    assert a3.engine.derivation_slice_dim(1) == 1
    assert boolean3.engine.derivation_slice_dim(1) == 3
    assert seven.engine.derivation_slice_dim(1) == 1
    # free model for the braid arrangement: degrees 0,1,2
    R = 3
    for d in (1, 2, 3, 4):
        expected = sum(
            comb(d - 1 - e + R - 1, R - 1) for e in (0, 1, 2) if d - 1 - e >= 0
        )
        assert a3.engine.derivation_slice_dim(d) == expected


def test_derivation_new_generators(a3, bracelet):
    assert [a3.engine.derivation_new_generator_count(d) for d in (1, 2, 3, 4)] == [1, 1, 1, 0]
    # bracelet: Euler in degree 1 and four generators one degree higher
    assert [bracelet.engine.derivation_new_generator_count(d) for d in (1, 2, 3)] == [1, 0, 4]


def test_theta_from_syzygy(a3, u12):
    eng = a3.engine
    euler = {(k, (0,) * 6): 1 for k in range(6)}
    theta = eng.theta_from_syzygy(euler)
    assert [str(t) for t in theta] == ["x1", "x2", "x3"]
    # degree-2 slice elements define derivations with exact divisibility
    for c in eng.derivation_slice(2):
        eng.theta_from_syzygy(c)  # raises on failure
    bad = {(0, (0,) * 6): 1}
    with pytest.raises(RingError):
        eng.theta_from_syzygy(bad)
    tu = u12.engine.theta_from_syzygy({(0, (0, 0)): 1, (1, (0, 0)): 1})
    assert str(tu[0]) == "x1"


def test_ix_slices(a3, bracelet):
    for bench in (a3, bracelet):
        eng = bench.engine
        assert eng.ix_slice(2, 0) == []
        for i in range(3):
            assert eng.ix_dim(i, 1) == eng.derivation_slice_dim(i + 1)
    assert bracelet.engine.ix_dim(2, 2) == 123
    assert bracelet.engine.ix_new_generators(2, 2) == 1


def test_ilog_slices(a3, bracelet):
    dm = a3.derivations
    eng = a3.engine
    for (i, j) in [(0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2)]:
        assert eng.ilog_dim(dm.c_vectors, i, j) == eng.ix_dim(i, j)
        assert eng.ilog_contained_in_ix(dm.c_vectors, i, j)
    dmb = bracelet.derivations
    engb = bracelet.engine
    assert engb.ilog_dim(dmb.c_vectors, 2, 2) == 122
    assert engb.ilog_contained_in_ix(dmb.c_vectors, 2, 2)


def test_linear_type(u12, a3, bracelet):
    ok, records = u12.engine.linear_type_check(4)
    assert ok
    ok3, _ = a3.engine.linear_type_check(3)
    assert ok3
    okb, recs = bracelet.engine.linear_type_check(2)
    assert not okb
    fails = [r for r in recs if not r["equal"]]
    assert {"x": 2, "y": 0, "a": 2, "rees": 123, "sym": 122, "equal": False} in fails
    assert all(r["sym"] <= r["rees"] for r in recs)


def test_membership_degreewise(a3):
    eng = a3.engine
    pairs = a3.pairs
    gens = [g for _, g in pairs.nonzero_generators()]
    member = gens[0] * pairs.ring.var(0) + gens[3] * pairs.ring.var(4)
    assert eng.member(member)
    assert not eng.member(pairs.ring.var(0))
