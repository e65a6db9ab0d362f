import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from langdualkit.oracles import hull_weight_set, kostant_multiplicity, weyl_dimension
from langdualkit.root_datum import (
    CartanType,
    dominant_rep,
    dualize,
    highest_short_coroot,
    longest_element,
    minuscule_coweights,
    named_datum,
    weyl_orbit,
)
from langdualkit.weight_mult import (
    FundamentalCoweightError,
    MultTable,
    WeightError,
    dominance_leq,
    dominant_weights_below,
    dominant_weights_up_to_level,
    filtration_dims,
    filtration_layers,
    fundamental_like,
    level,
    wakimoto_grading,
    weight_set,
    weyl_character,
    weyl_multiplicity,
    zero_weight_dim_qmin,
)

from .strategies import RANK3_LABELS, root_data, weights

SL2 = named_datum("SL(2)")
PGL2 = named_datum("PGL(2)")
A2 = named_datum("adjoint:A2")


def theta(d):
    return highest_short_coroot(d, d.components[0])


# --- examples -------------------------------------------------------------------------


def test_dominance_examples():
    assert dominance_leq(A2, (1, 1), (1, 1))
    assert dominance_leq(SL2, (0,), (1,))
    assert not dominance_leq(SL2, (1,), (0,))
    # different cosets of the coroot lattice are incomparable
    assert not dominance_leq(PGL2, (1,), (0,)) and not dominance_leq(PGL2, (0,), (1,))


def test_weight_set_examples():
    assert weight_set(SL2, (1,)) == {(-1,), (0,), (1,)}
    assert weight_set(SL2, (-1,)) == weight_set(SL2, (1,))
    assert weight_set(PGL2, (3,)) == {(3,), (1,), (-1,), (-3,)}


@pytest.mark.parametrize("label", RANK3_LABELS + ["adjoint:E6", "adjoint:D4", "GL(3)"])
def test_minuscule_weight_sets_are_orbits(label):
    d = named_datum(label)
    for lam in minuscule_coweights(d):
        assert weight_set(d, lam) == weyl_orbit(d, lam)


@pytest.mark.parametrize("label", RANK3_LABELS + ["adjoint:F4", "simply-connected:D4"])
def test_quasi_minuscule_weight_set(label):
    d = named_datum(label)
    for comp in d.components:
        th = highest_short_coroot(d, comp)
        assert weight_set(d, th) == weyl_orbit(d, th) | {(0,) * d.rank}


def test_multiplicity_examples():
    tbl = weyl_character(A2, theta(A2))
    assert theta(A2) == (1, 1)
    assert tbl[(0, 0)] == 2 and tbl.total == 8
    assert weyl_multiplicity(A2, (2, 1), (2, 1)) == 1
    for label in ["adjoint:B2", "Sp(4)"]:
        d = named_datum(label)
        tbl = weyl_character(d, theta(d))
        assert tbl[(0, 0)] == 1 and tbl.total == 5
    assert weyl_multiplicity(A2, (1, 1), (5, 5)) == 0


def test_non_dominant_highest_weight():
    with pytest.raises(WeightError):
        weyl_character(SL2, (-1,))


@pytest.mark.parametrize(
    "family,n,expected",
    [("B", 2, 1), ("B", 3, 1), ("B", 5, 1), ("C", 3, 2), ("C", 4, 3), ("D", 4, 4), ("A", 3, 3), ("G", 2, 1), ("F", 4, 2), ("E", 8, 8)],
)
def test_zero_weight_dim_qmin(family, n, expected):
    assert zero_weight_dim_qmin(CartanType(family, n)) == expected


def test_level_examples():
    assert level(A2, (0, 0)) == 0
    assert level(A2, theta(A2)) == 4
    assert level(A2, fundamental_like(A2, 0)) == 2


def test_fundamental_like_examples():
    assert fundamental_like(PGL2, 0) == (1,)
    assert SL2.simple_coroots[0] == (1,) and PGL2.simple_coroots[0] == (2,)
    with pytest.raises(FundamentalCoweightError, match=r"\[2\]"):
        fundamental_like(SL2, 0)
    for a in range(2):
        varpi = fundamental_like(A2, a)
        assert A2.simple_pairings(varpi) == tuple(int(i == a) for i in range(2))
    with pytest.raises(IndexError):
        fundamental_like(A2, 2)


def test_fundamental_like_on_gl():
    d = named_datum("GL(3)")
    for a in range(2):
        varpi = fundamental_like(d, a)
        assert d.simple_pairings(varpi) == tuple(int(i == a) for i in range(2))
    assert fundamental_like(d, 0) == fundamental_like(d, 0)


def test_wakimoto_examples():
    tbl = weyl_character(A2, (1, 1))
    assert wakimoto_grading(tbl) == tbl
    w0 = longest_element(A2)
    single = MultTable(A2, {(2, -1): 1})
    assert wakimoto_grading(single).nonzero() == {w0((2, -1)): 1}
    nat = weyl_character(A2, (1, 0))
    grad = wakimoto_grading(nat)
    assert grad.total == nat.total == 3
    assert all(grad[mu] == nat[w0(mu)] for mu in weyl_orbit(A2, (1, 0)))


def test_layers_example():
    layers = filtration_layers(weyl_character(A2, (1, 1)))
    assert sorted(layers) == [-4, -2, 0, 2, 4]
    assert layers[0].nonzero() == {(0, 0): 2}
    assert filtration_dims(weyl_character(A2, (1, 1))) == {-4: 1, -2: 3, 0: 5, 2: 7, 4: 8}


def test_dominant_weights_up_to_level():
    got = dominant_weights_up_to_level(A2, 4)
    assert got == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert all(level(A2, lam) <= 4 and A2.is_dominant(lam) for lam in got)
    with pytest.raises(WeightError):
        dominant_weights_up_to_level(named_datum("GL(2)"), 3)


# --- multiplicity table plumbing -----------------------------------------------------------


def test_mult_table_json_round_trip():
    tbl = weyl_character(A2, (2, 1))
    doc = tbl.to_json()
    assert doc == sorted(doc, key=lambda e: e["weight"])
    assert set(doc[0]) == {"weight", "mult"}
    assert MultTable.from_json(A2, doc) == tbl
    with pytest.raises(WeightError):
        MultTable.from_json(A2, [{"weight": [1], "mult": 1}])
    with pytest.raises(WeightError):
        MultTable.from_json(A2, [{"weight": [1, 0], "mult": -1}])


def test_mult_table_check():
    weyl_character(A2, (2, 1)).check()
    with pytest.raises(WeightError, match="cosets"):
        MultTable(A2, {(1, 0): 1, (0, 0): 1}).check()
    with pytest.raises(WeightError, match="invariant"):
        MultTable(A2, {(1, 1): 1}, is_character=True).check()
    MultTable(A2, {(1, 1): 1}).check()


# --- properties ---------------------------------------------------------------------------


@pytest.mark.parametrize("label", RANK3_LABELS)
def test_weight_set_is_hull_of_orbit(label):
    d = named_datum(label)
    for lam in dominant_weights_up_to_level(d, 8):
        ws = weight_set(d, lam)
        assert ws == hull_weight_set(d, lam)
        assert all(x in ws for mu in ws for x in weyl_orbit(d, mu))


@pytest.mark.parametrize("label", RANK3_LABELS)
def test_characters_on_grid(label):
    d = named_datum(label)
    for lam in dominant_weights_up_to_level(d, 8):
        tbl = weyl_character(d, lam)
        tbl.check()
        assert tbl.total == weyl_dimension(d, lam)
        assert tbl.support == weight_set(d, lam)
        assert tbl[lam] == 1


@pytest.mark.parametrize("label", ["adjoint:A2", "simply-connected:B2", "adjoint:G2", "adjoint:A3", "simply-connected:C3"])
def test_dominant_multiplicities_match_kostant(label):
    d = named_datum(label)
    for lam in dominant_weights_up_to_level(d, 8):
        tbl = weyl_character(d, lam)
        for mu in dominant_weights_below(d, lam):
            assert tbl[mu] == kostant_multiplicity(d, lam, mu)


@pytest.mark.parametrize("label", RANK3_LABELS + ["adjoint:F4", "adjoint:D4", "simply-connected:C4"])
def test_quasi_minuscule_zero_weight(label):
    d = named_datum(label)
    for comp, dual_comp in zip(d.components, dualize(d).components):
        th = highest_short_coroot(d, comp)
        tbl = weyl_character(d, th)
        # the characters belong to the dual group, so its short roots count
        assert tbl[(0,) * d.rank] == zero_weight_dim_qmin(dual_comp)
        assert all(tbl[mu] == 1 for mu in weyl_orbit(d, th))


@st.composite
def characters(draw, max_level=8):
    d = draw(root_data(max_factors=2, types=[("A", 1), ("A", 2), ("B", 2), ("G", 2)]))
    lam, _ = dominant_rep(d, draw(weights(d, 3)))
    assume(level(d, lam) <= max_level)
    return d, lam


@given(characters())
def test_character_properties_in_random_bases(case):
    d, lam = case
    tbl = weyl_character(d, lam)
    for mu in tbl.support:
        assert all(tbl[x] == tbl[mu] for x in weyl_orbit(d, mu))
    assert tbl.total == weyl_dimension(d, lam)
    assert tbl.support == weight_set(d, lam)


@given(characters())
def test_layer_properties(case):
    d, lam = case
    tbl = weyl_character(d, lam)
    layers = filtration_layers(tbl)
    top = level(d, lam)
    assert sum(layer.total for layer in layers.values()) == tbl.total
    assert all(n <= top and (top - n) % 2 == 0 for n in layers)
    assert layers[top].nonzero() == {lam: 1}
    dims = filtration_dims(tbl)
    assert dims[max(dims)] == tbl.total
    assert list(dims.values()) == sorted(dims.values())


@given(characters())
def test_wakimoto_grading_properties(case):
    d, lam = case
    tbl = weyl_character(d, lam)
    grad = wakimoto_grading(tbl)
    w0 = longest_element(d)
    assert grad.total == tbl.total
    assert all(grad[mu] == tbl[w0(mu)] for mu in tbl.support)
    assert wakimoto_grading(MultTable(d, {lam: 1})).nonzero() == {w0(lam): 1}


@given(root_data(max_factors=2, types=[("A", 2), ("B", 2), ("G", 2)]), st.data())
def test_dominance_is_a_partial_order(d, data):
    mu, nu, lam = (data.draw(weights(d, 2)) for _ in range(3))
    assert dominance_leq(d, mu, mu)
    if dominance_leq(d, mu, nu) and dominance_leq(d, nu, mu):
        assert mu == nu
    if dominance_leq(d, mu, nu) and dominance_leq(d, nu, lam):
        assert dominance_leq(d, mu, lam)
