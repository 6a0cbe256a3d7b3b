import pytest
from hypothesis import given, strategies as st

from akb.lattice import (
    Context,
    DimensionError,
    Multicharge,
    RootVector,
    WeightVector,
    apply_word,
    block_invariants,
    c_gamma,
    cartan_pair,
    charge_data,
    congruent_mod_delta,
    dominant_reduce,
    dot_reflect,
    reflect,
    root_as_weight,
    root_size,
)


def L(ell, *coeffs, delta=0):
    """Weight from (i, coefficient) pairs."""
    lam = [0] * ell
    for i, c in coeffs:
        lam[i] += c
    return WeightVector(lam, delta)


def alpha(ell, *idx):
    v = [0] * ell
    for i in idx:
        v[i] += 1
    return RootVector(v)


@st.composite
def ctx_and_roots(draw, n=2, lo=-6, hi=6):
    ell = draw(st.integers(2, 6))
    vecs = [RootVector(draw(st.lists(st.integers(lo, hi), min_size=ell, max_size=ell))) for _ in range(n)]
    return Context(ell, 1), vecs


@st.composite
def ctx_and_charge(draw, max_r=4):
    ell = draw(st.integers(2, 5))
    r = draw(st.integers(1, max_r))
    s = Multicharge(tuple(draw(st.lists(st.integers(-10, 10), min_size=r, max_size=r))), ell)
    return Context(ell, r), s


# --- construction ---


def test_context_rejects_degenerate():
    with pytest.raises(ValueError):
        Context(1, 1)
    with pytest.raises(ValueError):
        Context(3, 0)


def test_multicharge_reduces_mod_ell():
    assert Multicharge((5, -1, 2), 3).residues == (2, 2, 2)


def test_mismatched_ell_is_dimension_error():
    ctx = Context(3, 1)
    with pytest.raises(DimensionError):
        cartan_pair(ctx, RootVector((1, 0)), RootVector((1, 0, 0)))
    with pytest.raises(DimensionError):
        RootVector((1, 0)) + RootVector((1, 0, 0))


# --- worked values ---


def test_cartan_pair_examples():
    c2 = Context(2, 1)
    assert cartan_pair(c2, alpha(2, 0), alpha(2, 0)) == 2
    assert cartan_pair(c2, alpha(2, 0), alpha(2, 1)) == -2
    for ell in (2, 3, 4, 7):
        d = RootVector.null(ell)
        assert cartan_pair(Context(ell, 1), d, d) == 0


def test_root_size_examples():
    c4 = Context(4, 1)
    assert root_size(c4, RootVector.null(4)) == 4
    assert root_size(c4, RootVector.zero(4)) == 0
    assert root_size(c4, alpha(4, 2, 3)) == 2


def test_root_as_weight_examples():
    assert root_as_weight(Context(3, 1), RootVector.null(3)) == WeightVector((0, 0, 0), 1)
    assert root_as_weight(Context(2, 1), alpha(2, 0)) == WeightVector((2, -2), 1)
    assert root_as_weight(Context(4, 1), alpha(4, 2)) == WeightVector((0, -1, 2, -1), 0)


def test_charge_data_examples():
    assert charge_data(Context(2, 2), Multicharge((0, 0), 2)) == (L(2, (0, 2)), RootVector((2, 0)))
    assert charge_data(Context(4, 3), Multicharge((0, 1, 2), 4)) == (
        WeightVector((1, 1, 1, 0)),
        RootVector((1, 1, 1, 0)),
    )
    assert charge_data(Context(2, 1), Multicharge((0,), 2)) == (L(2, (0, 1)), RootVector((1, 0)))


def test_reflect_examples():
    c2 = Context(2, 1)
    mu = WeightVector((-1, 2), -2)
    assert reflect(c2, mu, 0) == WeightVector((1, 0), -1)
    nu = WeightVector((0, 5), 3)
    assert reflect(c2, nu, 0) == nu


def test_dominant_reduce_examples():
    c2 = Context(2, 1)
    assert dominant_reduce(c2, WeightVector((-1, 2), -2)) == (WeightVector((1, 0), -1), (0,))
    dom = WeightVector((1, 1, 0))
    assert dominant_reduce(Context(3, 2), dom) == (dom, ())
    c4 = Context(4, 3)
    assert dominant_reduce(c4, WeightVector((2, 2, 0, -1))) == (WeightVector((1, 1, 1, 0)), (3, 2))


def test_dominant_reduce_needs_positive_level():
    with pytest.raises(ValueError):
        dominant_reduce(Context(2, 1), WeightVector((1, -1)))


def test_block_invariants_examples():
    inv = block_invariants(Context(2, 1), RootVector((2, 1)), Multicharge((0,), 2))
    assert (inv.alpha, inv.k, inv.lambda_plus) == (RootVector((0, 0)), 1, WeightVector((1, 0)))
    inv = block_invariants(Context(2, 2), RootVector((2, 0)), Multicharge((0, 0), 2))
    assert (inv.alpha, inv.k, inv.lambda_plus) == (RootVector((0, 0)), 0, WeightVector((2, 0)))
    assert block_invariants(Context(2, 1), RootVector((0, 1)), Multicharge((0,), 2)) is None


def test_dot_reflect_examples():
    c2 = Context(2, 1)
    s = Multicharge((0,), 2)
    assert dot_reflect(c2, 0, RootVector((1, 0)), s) == RootVector((0, 0))
    assert dot_reflect(c2, 1, RootVector((1, 0)), s) == RootVector((1, 2))


def test_c_gamma_examples():
    assert c_gamma(Context(2, 1), alpha(2, 0)) == WeightVector((2, -2))
    assert c_gamma(Context(5, 1), RootVector.null(5)) == WeightVector((0,) * 5)
    assert c_gamma(Context(4, 1), alpha(4, 1, 2)) == WeightVector((-1, 1, 1, -1))


def test_congruent_mod_delta_examples():
    assert congruent_mod_delta(WeightVector((1, 0), -1), WeightVector((1, 0)))
    assert not congruent_mod_delta(WeightVector((1, 0)), WeightVector((0, 1)))
    mu = WeightVector((3, -1, 2), 4)
    assert congruent_mod_delta(mu, mu + WeightVector.null(3) * 3)


def test_json_round_trip():
    x = RootVector((3, -1, 0))
    assert RootVector.from_json(x.to_json()) == x
    mu = WeightVector((1, -2, 3), 5)
    assert WeightVector.from_json(mu.to_json()) == mu


# --- properties ---


@given(ctx_and_roots(n=1))
def test_self_pairing_is_sum_of_squared_differences(data):
    ctx, (d,) = data
    ell = ctx.ell
    assert cartan_pair(ctx, d, d) == sum((d[i] - d[i + 1]) ** 2 for i in range(ell))


@given(ctx_and_roots(n=3))
def test_pairing_symmetric_bilinear(data):
    ctx, (x, y, z) = data
    assert cartan_pair(ctx, x, y) == cartan_pair(ctx, y, x)
    assert cartan_pair(ctx, x + y, z) == cartan_pair(ctx, x, z) + cartan_pair(ctx, y, z)
    assert cartan_pair(ctx, 3 * x, y) == 3 * cartan_pair(ctx, x, y)


@given(ctx_and_roots(n=1))
def test_delta_is_isotropic(data):
    ctx, (x,) = data
    delta = RootVector.null(ctx.ell)
    assert cartan_pair(ctx, delta, x) == 0
    assert root_as_weight(ctx, delta).lam == (0,) * ctx.ell


@given(st.integers(2, 6), st.data())
def test_reflect_is_level_preserving_involution(ell, data):
    ctx = Context(ell, 1)
    lam = data.draw(st.lists(st.integers(-8, 8), min_size=ell, max_size=ell))
    mu = WeightVector(lam, data.draw(st.integers(-5, 5)))
    i = data.draw(st.integers(0, ell - 1))
    nu = reflect(ctx, mu, i)
    assert nu.level == mu.level
    assert reflect(ctx, nu, i) == mu


@given(st.integers(2, 5), st.data())
def test_dominant_reduce_is_dominant_and_replays(ell, data):
    ctx = Context(ell, 1)
    lam = data.draw(st.lists(st.integers(-4, 6), min_size=ell, max_size=ell).filter(lambda v: sum(v) > 0))
    mu = WeightVector(lam, data.draw(st.integers(-3, 3)))
    plus, word = dominant_reduce(ctx, mu)
    assert plus.is_dominant
    assert plus.level == mu.level
    assert apply_word(ctx, mu, word) == plus


@given(ctx_and_charge(), st.data())
def test_block_invariants_shape(data, draw):
    ctx, s = data
    ell = ctx.ell
    d = RootVector(draw.draw(st.lists(st.integers(0, 6), min_size=ell, max_size=ell)))
    inv = block_invariants(ctx, d, s)
    if inv is None:
        return
    ls, _ = charge_data(ctx, s)
    assert min(inv.alpha) == 0
    assert inv.k >= 0
    assert inv.lambda_plus.is_dominant
    assert inv.lambda_plus.level == s.r
    # the word carries Lambda^s - d to Lambda^s - (alpha + k delta), delta term included
    target = ls - root_as_weight(ctx, inv.alpha + RootVector.null(ell) * inv.k)
    assert apply_word(ctx, ls - root_as_weight(ctx, d), inv.word) == target


@given(ctx_and_charge(), st.data())
def test_dot_reflect_tracks_weight_reflection(data, draw):
    ctx, s = data
    ell = ctx.ell
    ls, _ = charge_data(ctx, s)
    d = RootVector(draw.draw(st.lists(st.integers(-4, 6), min_size=ell, max_size=ell)))
    word = draw.draw(st.lists(st.integers(0, ell - 1), max_size=6))
    e = d
    for i in word:
        e = dot_reflect(ctx, i, e, s)
    lhs = ls - root_as_weight(ctx, e)
    rhs = apply_word(ctx, ls - root_as_weight(ctx, d), word)
    assert congruent_mod_delta(lhs, rhs)
    i = draw.draw(st.integers(0, ell - 1))
    assert dot_reflect(ctx, i, dot_reflect(ctx, i, d, s), s) == d
