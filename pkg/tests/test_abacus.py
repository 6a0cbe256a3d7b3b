import random

import pytest
from hypothesis import given, strategies as st

from akb.abacus import (
    Abacus,
    OpPosition,
    abacus_from,
    abacus_to,
    applicable_ops,
    charged_core,
    core_abacus,
    elementary_op,
    find_r_cycle,
    reduce_to_core,
    render,
    sort_for_core,
    uglov_abacus,
    uglov_tau,
)
from akb.lattice import Context, Multicharge, RootVector, WeightVector, charge_data, root_as_weight
from akb.young import (
    ChargedMultipartition,
    Multipartition,
    Partition,
    enumerate_multipartitions,
    is_multicore,
    omega_weight,
    removes_rim_hook,
    residue_vector,
)

E = Partition(())


def P(*parts):
    return Partition(parts)


def beads(A, j, lo, hi):
    return set(A.beads_in(j, lo, hi))


@st.composite
def charged(draw, max_n=6, ells=(2, 3, 4), max_r=3):
    ell = draw(st.sampled_from(ells))
    r = draw(st.integers(1, max_r))
    n = draw(st.integers(0, max_n))
    mp = draw(st.sampled_from(list(enumerate_multipartitions(n, r))))
    s = draw(st.lists(st.integers(0, ell - 1), min_size=r, max_size=r))
    return Context(ell, r), ChargedMultipartition(mp, Multicharge(tuple(s), ell))


# --- bead sets ---


def test_bead_sets():
    A = abacus_from(Context(2, 1), Multipartition((P(3),)), [-1])
    assert beads(A, 1, -6, 6) == {2, -2, -3, -4, -5, -6}
    B = abacus_from(Context(3, 1), Multipartition((E,)), [4])
    assert beads(B, 1, -2, 8) == set(range(-2, 5))


@given(charged(), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_abacus_round_trip(data, lifts):
    ctx, x = data
    lifts = lifts[: x.r]
    A = abacus_from(ctx, x.mp, lifts)
    assert abacus_to(A) == (x.mp, tuple(lifts))
    assert Abacus.from_json(A.to_json()) == A


def test_sort_for_core():
    a, b, c = P(1), P(2), P(3)
    x = ChargedMultipartition(Multipartition((a, b, c)), Multicharge((2, 0, 1), 4))
    mp, lifts, perm = sort_for_core(Context(4, 3), x)
    assert mp.components == (b, c, a) and lifts == (0, 1, 2) and perm == (1, 2, 0)
    y = ChargedMultipartition(Multipartition((a, b, c)), Multicharge((0, 1, 1), 4))
    assert sort_for_core(Context(4, 3), y)[2] == (0, 1, 2)
    z = ChargedMultipartition(Multipartition((a, b, c)), Multicharge((1, 1, 0), 4))
    assert sort_for_core(Context(4, 3), z)[0].components == (c, a, b)


# --- elementary operations ---


def test_elementary_op_examples():
    A = Abacus(4, ((0, E), (-1, P(3)), (1, E)))
    assert elementary_op(A, OpPosition(2, 2)) == Abacus(4, ((0, E), (-2, E), (2, E)))
    assert elementary_op(A, OpPosition(1, 2)) is None
    B = Abacus(2, ((0, P(3)),))
    assert elementary_op(B, OpPosition(3, 1)) == Abacus(2, ((0, P(1)),))


def test_reduce_examples():
    assert reduce_to_core(Abacus(2, ((0, P(3)),))) == (Abacus(2, ((0, P(1)),)), 1)
    A = Abacus(2, ((0, P(2)), (0, E)))
    assert reduce_to_core(A) == (Abacus(2, ((0, E), (0, E))), 2)
    core = Abacus(2, ((0, P(1)), (0, P(1))))
    assert reduce_to_core(core) == (core, 0)


def test_charged_core_examples():
    c = charged_core(Context(2, 2), ChargedMultipartition(Multipartition((P(2), E)), Multicharge((0, 0), 2)))
    assert (c.mp, c.charge, c.omega) == (Multipartition((E, E)), Multicharge((0, 0), 2), 2)
    x = ChargedMultipartition(Multipartition((E, E, P(2))), Multicharge((0, 1, 2), 4))
    c = charged_core(Context(4, 3), x)
    assert (c.mp, c.charge, c.omega) == (x.mp, x.charge, 0)
    c = charged_core(Context(2, 1), ChargedMultipartition(Multipartition((P(3),)), Multicharge((0,), 2)))
    assert (c.mp, c.charge, c.omega) == (Multipartition((P(1),)), Multicharge((0,), 2), 1)


@given(charged())
def test_op_preserves_charge_sum_and_moves_one_bead(data):
    ctx, x = data
    A = core_abacus(ctx, x)
    for p in applicable_ops(A):
        B = elementary_op(A, p)
        assert B is not None
        assert sum(B.charges) == sum(A.charges)
        lo, hi = min(A.sea(j) for j in range(1, A.r + 1)) - 2 * ctx.ell, max(A.top(j) for j in range(1, A.r + 1)) + 1
        moved = [(j, beads(A, j, lo, hi) ^ beads(B, j, lo, hi)) for j in range(1, A.r + 1)]
        changed = [(j, d) for j, d in moved if d]
        if p.j < A.r:
            assert changed == [(p.j, {p.i}), (p.j + 1, {p.i})]
        elif A.r == 1:
            assert changed == [(1, {p.i, p.i - ctx.ell})]
        else:
            assert changed == [(1, {p.i - ctx.ell}), (A.r, {p.i})]


@given(charged())
def test_op_count_is_omega(data):
    ctx, x = data
    assert charged_core(ctx, x).omega == omega_weight(ctx, x)


@given(charged(), st.integers(0, 2**32 - 1))
def test_reduction_order_independent(data, seed):
    ctx, x = data
    A = core_abacus(ctx, x)
    ref = reduce_to_core(A)
    rng = random.Random(seed)
    for _ in range(10):
        assert reduce_to_core(A, random.Random(rng.getrandbits(32))) == ref


@given(charged())
def test_core_is_fixed_point_and_multicore(data):
    ctx, x = data
    core, _ = reduce_to_core(core_abacus(ctx, x))
    assert reduce_to_core(core) == (core, 0)
    mp, _ = abacus_to(core)
    assert is_multicore(ctx, mp)


def test_multicore_need_not_be_charged_core():
    x = ChargedMultipartition(Multipartition((E, P(1))), Multicharge((0, 0), 2))
    assert is_multicore(Context(2, 2), x.mp)
    assert charged_core(Context(2, 2), x).omega > 0


# --- Uglov's map ---


def test_uglov_examples():
    c4 = Context(4, 3)
    assert uglov_tau(c4, Multipartition((E, E, P(2))), (0, 1, 2)) == (P(2, 2), 3)
    assert uglov_tau(c4, Multipartition((E, E, E)), (0, 1, 2)) == (P(2), 3)
    c3 = Context(3, 1)
    for lam in (E, P(3, 1), P(2, 2, 1)):
        for s in range(3):
            assert uglov_tau(c3, Multipartition((lam,)), (s,)) == (lam, s)


def test_uglov_rejects_unsorted_lifts():
    with pytest.raises(ValueError):
        uglov_tau(Context(4, 3), Multipartition((E, E, E)), (2, 1, 0))
    with pytest.raises(ValueError):
        uglov_tau(Context(4, 2), Multipartition((E, E)), (0, 4))


def _tau_empty_oracle(lifts, ell):
    """Closed form for tau of the empty multipartition with sorted lifts.

    Part ``i`` (1-based) lying in the ``p``-th run of length ``t_p`` equals
    ``sum_{j > p} (ell - t_j)``; the charge is ``sum t``.
    """
    parts = []
    for p, t in enumerate(lifts):
        parts += [sum(ell - u for u in lifts[p + 1 :])] * t
    return Partition(tuple(parts)), sum(lifts)


@pytest.mark.parametrize("ell,lifts", [(2, (0, 1)), (2, (1, 1)), (3, (0, 0, 2)), (3, (1, 2, 2)), (4, (0, 1, 2)), (4, (1, 3)), (4, (2, 3, 3)), (3, (2,))])
def test_uglov_empty_matches_bead_oracle(ell, lifts):
    got = uglov_tau(Context(ell, len(lifts)), Multipartition.empty(len(lifts)), lifts)
    assert got == _tau_empty_oracle(lifts, ell)


@given(charged())
def test_uglov_charge_additive_and_ops_remove_hooks(data):
    ctx, x = data
    mp, lifts, _ = sort_for_core(ctx, x)
    tau, S = uglov_tau(ctx, mp, lifts)
    assert S == sum(lifts)
    A = abacus_from(ctx, mp, lifts)
    for p in applicable_ops(A):
        small, S2 = uglov_abacus(elementary_op(A, p))
        assert S2 == S
        assert tau.size - small.size == ctx.ell
        assert removes_rim_hook(tau, small, ctx.ell)


@given(charged())
def test_uglov_residue_identities(data):
    ctx, x = data
    ell, r = ctx.ell, x.r
    one = Context(ell, 1)
    mp, lifts, _ = sort_for_core(ctx, x)
    tau, S = uglov_tau(ctx, mp, lifts)
    tau0, _ = uglov_tau(ctx, Multipartition.empty(r), lifts)
    sS = Multicharge((S,), ell)
    rt = residue_vector(one, ChargedMultipartition(Multipartition((tau,)), sS))
    r0 = residue_vector(one, ChargedMultipartition(Multipartition((tau0,)), sS))
    diff = (residue_vector(ctx, x) - (rt - r0)).coeffs
    assert len(set(diff)) == 1
    ls, _ = charge_data(ctx, x.charge)
    expected = WeightVector.fundamental(ell, 0) * (r - 1) + WeightVector.fundamental(ell, S)
    assert (ls + root_as_weight(ctx, r0)).lam == expected.lam


# --- r-cycles ---


def test_find_r_cycle_examples():
    A = Abacus(2, ((0, P(2)), (0, E)))
    found = find_r_cycle(A, 2)
    assert found is not None and found.prefix == ()
    assert found.cycle == (OpPosition(2, 1), OpPosition(2, 2))
    B = Abacus(2, ((0, P(1)), (0, P(1))))
    assert applicable_ops(B) == []
    assert find_r_cycle(B, 50) is None
    assert find_r_cycle(Abacus(3, ((0, E), (0, E))), 5) is None


# --- rendering ---


def test_render_examples():
    assert render(Abacus(2, ((0, E),)), -2, 2) == "oo|o.."
    assert render(Abacus(2, ((-1, P(3)),)), -3, 3) == "oo.|..o."
    assert render(Abacus(2, ((-1, E),)), 0, 0) == "|."
    assert render(Abacus(2, ((0, E),)), -2, -1) == "oo|"
    two = render(Abacus(2, ((0, E), (1, E))), -1, 1)
    assert two.split("\n") == ["o|oo", "o|o."]
    with pytest.raises(ValueError):
        render(Abacus(2, ((0, E),)), 1, 0)


def test_rejects_small_ell():
    with pytest.raises(ValueError):
        Abacus(1, ((0, E),))
    with pytest.raises(ValueError):
        abacus_from(Context(2, 2), Multipartition((E, E)), [0])


def test_residue_key_matches_root():
    x = ChargedMultipartition(Multipartition((E, E, P(2))), Multicharge((0, 1, 2), 4))
    assert residue_vector(Context(4, 3), x) == RootVector((0, 0, 1, 1))
