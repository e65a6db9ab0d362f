import pytest

from langdualkit import affine_weyl as aw
from langdualkit.central_books import (
    QminRefused,
    delta_multiplicities,
    qmin_verification,
    support_orbits,
    theorem_report,
    two_step_check,
)
from langdualkit.root_datum import (
    bound_on_ell,
    dominant_rep,
    highest_short_coroot,
    is_prime,
    longest_element,
    minuscule_coweights,
    named_datum,
    torsion_invariants,
    weyl_orbit,
)
from langdualkit.weight_mult import (
    MultTable,
    WeightError,
    dominance_leq,
    dominant_weights_up_to_level,
    fundamental_like,
    wakimoto_grading,
    weight_set,
    weyl_multiplicity,
    zero_weight_dim_qmin,
)

from .strategies import RANK3_LABELS

A2 = named_datum("adjoint:A2")
B2 = named_datum("adjoint:B2")

ADJOINT_RANK4 = [
    f"adjoint:{t}" for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]
] + ["PGL(2)xPGL(2)", "adjoint:A2xadjoint:G2", "PGL(2)xadjoint:B3", "PGL(2)xPGL(2)xPGL(2)xPGL(2)"]


def theta(d):
    return highest_short_coroot(d, d.components[0])


# --- multiplicity tables -------------------------------------------------------------


def test_delta_examples():
    lam = (1, 0)
    assert lam in minuscule_coweights(A2)
    assert delta_multiplicities(A2, lam).nonzero() == {mu: 1 for mu in weyl_orbit(A2, lam)}
    assert len(weyl_orbit(A2, lam)) == 3
    tbl = delta_multiplicities(B2, theta(B2))
    assert tbl[(0, 0)] == 1 == zero_weight_dim_qmin(B2.components[0])
    assert all(tbl[mu] == 1 for mu in weyl_orbit(B2, theta(B2)))
    assert delta_multiplicities(A2, (0, 0)).nonzero() == {(0, 0): 1}


def test_support_orbit_examples():
    assert support_orbits(A2, (1, 0)) == {(1, 0)}
    assert support_orbits(A2, theta(A2)) == {theta(A2), (0, 0)}
    two = tuple(2 * x for x in theta(A2))
    expected = {
        lam
        for lam in dominant_weights_up_to_level(A2, 8)
        if dominance_leq(A2, lam, two)
    }
    assert support_orbits(A2, two) == expected == {(2, 2), (3, 0), (0, 3), (1, 1), (0, 0)}
    with pytest.raises(WeightError):
        support_orbits(A2, (-1, 0))


@pytest.mark.parametrize("label", RANK3_LABELS)
def test_consistency_triangle(label):
    d = named_datum(label)
    for lam in dominant_weights_up_to_level(d, 8):
        tbl = delta_multiplicities(d, lam)
        orbits = support_orbits(d, lam)
        assert tbl.support <= weight_set(d, lam)
        for mu in tbl.support:
            plus = dominant_rep(d, mu)[0]
            assert plus in orbits
            assert aw.iw_closure_leq(d, mu, plus)


@pytest.mark.parametrize("label", RANK3_LABELS)
def test_wakimoto_grading_of_central_tables(label):
    d = named_datum(label)
    w0 = longest_element(d)
    for lam in dominant_weights_up_to_level(d, 8):
        tbl = delta_multiplicities(d, lam)
        grad = wakimoto_grading(tbl)
        assert grad.total == tbl.total
        assert all(grad[mu] == weyl_multiplicity(d, lam, w0(mu)) for mu in tbl.support)


# --- two-step quotient ---------------------------------------------------------------------


def test_two_step_examples():
    r = two_step_check(A2, 0)
    varpi = fundamental_like(A2, 0)
    assert r.r == 2 and r.ok
    assert r.top_layer == MultTable(A2, {varpi: 1})
    assert r.next_layer == MultTable(A2, {(varpi[0] - 2, varpi[1] + 1): 1})
    pgl = named_datum("PGL(2)")
    r = two_step_check(pgl, 0)
    assert (r.varpi, r.r, r.ok) == ((1,), 1, True)
    assert r.next_layer.nonzero() == {(-1,): 1}
    short = B2.short_simple_roots(B2.components[0])[0]
    assert two_step_check(B2, short).ok
    doc = two_step_check(B2, short).to_json()
    assert set(doc) == {"alpha", "varpi", "r", "top_layer", "next_layer", "ok"}


def test_two_step_needs_a_fundamental_coweight():
    with pytest.raises(WeightError):
        two_step_check(named_datum("SL(2)"), 0)


@pytest.mark.parametrize("label", ADJOINT_RANK4)
def test_two_step_on_adjoint_data(label):
    d = named_datum(label)
    assert d.rank <= 4
    for a in range(d.semisimple_rank):
        assert two_step_check(d, a).ok


# --- the hypothesis report ---------------------------------------------------------------------


@pytest.mark.parametrize("label", ["GL(1)xPGL(2)", "GL(2)", "GL(2)xPGL(3)"])
def test_report_freeness_branch(label):
    d = named_datum(label)
    assert not any(torsion_invariants(d, "roots"))
    rep = theorem_report(d, {"GL(2)": 2, "GL(1)xPGL(2)": 3}.get(label, 5))
    assert rep.hypothesis_1 and rep.theorem_main_ok
    assert "free" in rep.notes[0]


def test_report_coroot_torsion_blocks_freeness():
    rep = theorem_report(named_datum("GL(2)xPGL(3)"), 3)
    assert rep.torsion_coroots[-1] % 3 == 0
    assert not rep.hypothesis_1
    assert "3-torsion" in rep.notes[0]


def test_report_torus_times_sl2_has_torsion():
    # GL(1) x SL(2): the SL(2) factor keeps its 2-torsion
    rep = theorem_report(named_datum("GL(1)xSL(2)"), 3)
    assert rep.torsion_roots == (2, 0)
    assert rep.hypothesis_1  # 3 is very good for A1


def test_report_examples():
    rep = theorem_report(named_datum("adjoint:E7"), 19)
    assert not rep.hypothesis_2 and not rep.theorem_main_ok
    assert theorem_report(named_datum("adjoint:E7"), 23).theorem_main_ok
    rep = theorem_report(named_datum("adjoint:G2"), 5)
    assert rep.theorem_main_ok and rep.hypothesis_1 and rep.hypothesis_2
    assert rep.torsion_roots == () or not any(rep.torsion_roots)
    assert not theorem_report(named_datum("adjoint:G2"), 3).theorem_main_ok


def test_report_hypothesis_one_failure_reasons():
    rep = theorem_report(named_datum("SL(3)"), 3)
    assert not rep.hypothesis_1 and not rep.theorem_main_ok
    assert any("hypothesis 1 fails" in n for n in rep.notes)
    assert not rep.center_smooth
    with pytest.raises(ValueError):
        theorem_report(named_datum("SL(3)"), 9)


def test_report_json_fields():
    doc = theorem_report(named_datum("adjoint:B3"), 7).to_json()
    assert set(doc) == {
        "datum", "l", "components", "torsion", "center_smooth", "centralizer_smooth",
        "smoothness_reason", "hypothesis_1", "hypothesis_2", "theorem_main_ok", "notes",
    }
    assert set(doc["torsion"]) == {"roots", "coroots"}
    assert doc["components"][0]["type"] == "B3"


@pytest.mark.parametrize(
    "label", ["adjoint:A2", "SL(3)", "Sp(4)", "adjoint:G2", "adjoint:E6", "simply-connected:E7", "adjoint:F4", "GL(3)xSp(6)", "adjoint:D4"]
)
def test_report_invariant_and_monotone(label):
    d = named_datum(label)
    primes = [p for p in range(2, 80) if is_prime(p)]
    reports = {p: theorem_report(d, p) for p in primes}
    for p, rep in reports.items():
        assert rep.theorem_main_ok == (rep.hypothesis_1 and rep.hypothesis_2)
    torsion = [f for f in torsion_invariants(d, "roots") + torsion_invariants(d, "coroots") if f]
    past = max([bound_on_ell(c) for c in d.components] + torsion + [5])
    tail = [reports[p].theorem_main_ok for p in primes if p > past]
    assert tail and all(tail)


# --- quasi-minuscule fixed points ---------------------------------------------------------------


def test_qmin_examples():
    r = qmin_verification("B", 2, 3)
    assert (r.dim_Vu, r.dim_V0, r.ok) == (1, 1, True)
    r = qmin_verification("C", 3, 5)
    assert (r.dim_Vu, r.dim_V0, r.ok) == (2, 2, True)
    assert r.to_json()["module"] == "wedge2_kernel"
    with pytest.raises(QminRefused, match="divides"):
        qmin_verification("C", 3, 3)


@pytest.mark.parametrize(
    "args", [("A", 3, 5), ("B", 1, 3), ("D", 3, 5), ("B", 3, 2), ("B", 3, 9), ("C", 4, 2)]
)
def test_qmin_refusals(args):
    with pytest.raises(QminRefused):
        qmin_verification(*args)


GRID = (
    [("B", n, p) for n in (2, 3, 4) for p in (3, 5, 7)]
    + [("C", n, p) for n in (2, 3, 4) for p in (3, 5, 7) if n % p]
    + [("D", 4, 3), ("D", 4, 5)]
)


@pytest.mark.parametrize("family,n,ell", GRID)
def test_qmin_grid(family, n, ell):
    r = qmin_verification(family, n, ell)
    assert r.ok and r.dim_Vu == r.dim_V0
    expected = {"B": 1, "C": n - 1, "D": n}[family]
    assert r.dim_V0 == expected
