"""Numerical bookkeeping for central sheaves and the main hypothesis report.

Standard and costandard multiplicities of a central sheaf attached to a
dual-group representation are read off its weight multiplicities. The
report gathers all the prime-dependent hypotheses in one place.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cache import CharacterCache
from .root_datum import (
    CartanType,
    PrimeVerdict,
    RootDatum,
    dualize,
    is_prime,
    prime_tables,
    torsion_invariants,
)
from .unipotent_lab import (
    MatrixGroupModel,
    fixed_dim,
    lie_centralizer_dim,
    module_action,
    regular_unipotent,
    smoothness_verdict,
)
from .weight_mult import (
    MultTable,
    WeightError,
    dominant_weights_below,
    filtration_layers,
    fundamental_like,
    level,
    weyl_character,
    zero_weight_dim_qmin,
)


def delta_multiplicities(d: RootDatum, lam_high, cache: CharacterCache | None = None) -> MultTable:
    """``mu -> (Z(V) : Delta_mu)``, equal to the ``nabla`` counts and to ``dim V_mu``."""
    return weyl_character(d, lam_high, cache)


def support_orbits(d: RootDatum, lam_high) -> set:
    lam_high = tuple(lam_high)
    if not d.is_dominant(lam_high):
        raise WeightError(f"{list(lam_high)} is not dominant")
    return set(dominant_weights_below(d, lam_high))


@dataclass(frozen=True)
class TwoStepResult:
    alpha: int
    varpi: tuple
    r: int
    top_layer: MultTable
    next_layer: MultTable
    ok: bool

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "varpi": list(self.varpi),
            "r": self.r,
            "top_layer": self.top_layer.to_json(),
            "next_layer": self.next_layer.to_json(),
            "ok": self.ok,
        }


def two_step_check(d: RootDatum, alpha: int, cache: CharacterCache | None = None) -> TwoStepResult:
    varpi = fundamental_like(d, alpha)
    char = weyl_character(d, varpi, cache)
    r = level(d, varpi)
    layers = filtration_layers(char)
    empty = MultTable(d, {})
    top = layers.get(r, empty)
    nxt = layers.get(r - 2, empty)
    below = tuple(a - b for a, b in zip(varpi, d.simple_coroots[alpha]))
    ok = top.nonzero() == {varpi: 1} and nxt.nonzero() == {below: 1}
    return TwoStepResult(alpha, varpi, r, top, nxt, ok)


@dataclass(frozen=True)
class PrimeReport:
    datum: dict
    ell: int
    components: tuple[PrimeVerdict, ...]
    torsion_roots: tuple[int, ...]
    torsion_coroots: tuple[int, ...]
    center_smooth: bool
    centralizer_smooth: bool
    smoothness_reason: str
    hypothesis_1: bool
    hypothesis_2: bool
    theorem_main_ok: bool
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "datum": self.datum,
            "l": self.ell,
            "components": [c.to_json() for c in self.components],
            "torsion": {"roots": list(self.torsion_roots), "coroots": list(self.torsion_coroots)},
            "center_smooth": self.center_smooth,
            "centralizer_smooth": self.centralizer_smooth,
            "smoothness_reason": self.smoothness_reason,
            "hypothesis_1": self.hypothesis_1,
            "hypothesis_2": self.hypothesis_2,
            "theorem_main_ok": self.theorem_main_ok,
            "notes": list(self.notes),
        }


def _has_ell_torsion(factors, ell):
    return any(f and f % ell == 0 for f in factors)


def theorem_report(d: RootDatum, ell: int) -> PrimeReport:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    verdicts = tuple(prime_tables(c, ell) for c in d.components)
    tr = torsion_invariants(d, "roots")
    tc = torsion_invariants(d, "coroots")
    smooth = smoothness_verdict(d, ell)
    free = not any(tr)
    freeness = free and not _has_ell_torsion(tc, ell)
    very_good = all(v.very_good for v in verdicts)
    hyp1 = freeness or very_good
    hyp2 = all(v.bound_ok for v in verdicts)
    notes = []
    if freeness:
        notes.append("hypothesis 1 holds: X^*/ZR is free and X_*/ZR^vee has no l-torsion")
    elif very_good:
        notes.append("hypothesis 1 holds: l is very good for every component")
    else:
        why = [] if free else [f"X^*/ZR has invariant factors {[f for f in tr if f]}"]
        if _has_ell_torsion(tc, ell):
            why.append(f"X_*/ZR^vee has {ell}-torsion")
        bad = [v.type for v in verdicts if not v.very_good]
        why.append(f"l is not very good for {bad}")
        notes.append("hypothesis 1 fails: " + "; ".join(why))
    too_small = [f"{v.type} (needs l > {v.bound})" for v in verdicts if not v.bound_ok]
    if too_small:
        notes.append("hypothesis 2 fails for " + ", ".join(too_small))
    else:
        notes.append("hypothesis 2 holds: l exceeds every component bound")
    dual = smoothness_verdict(dualize(d), ell)
    if dual.centralizer_smooth:
        notes.append(
            "dual group: the centralizer of a regular unipotent is smooth,"
            f" of dimension equal to the rank ({d.rank})"
        )
    else:
        notes.append(f"dual group: centralizer of a regular unipotent not smooth ({dual.reason})")
    for v in verdicts:
        if v.qmin_caveat:
            notes.append(f"{v.type}: {v.qmin_caveat}")
    summary = {
        "name": d.name or None,
        "rank": d.rank,
        "semisimple_rank": d.semisimple_rank,
        "hash": d.content_hash,
    }
    return PrimeReport(
        datum=summary,
        ell=ell,
        components=verdicts,
        torsion_roots=tuple(tr),
        torsion_coroots=tuple(tc),
        center_smooth=smooth.center_smooth,
        centralizer_smooth=smooth.centralizer_smooth,
        smoothness_reason=smooth.reason,
        hypothesis_1=hyp1,
        hypothesis_2=hyp2,
        theorem_main_ok=hyp1 and hyp2,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class QminResult:
    family: str
    n: int
    ell: int
    module: str
    dim_Vu: int
    dim_V0: int
    ok: bool

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "l": self.ell,
            "module": self.module,
            "dim_Vu": self.dim_Vu,
            "dim_V0": self.dim_V0,
            "ok": self.ok,
        }


class QminRefused(ValueError):
    pass


_MIN_N = {"B": 2, "C": 2, "D": 4}


def qmin_verification(family: str, n: int, ell: int) -> QminResult:
    """Compare ``dim V^u`` with ``dim V_0`` for the quasi-minuscule module."""
    if family not in _MIN_N:
        raise QminRefused(f"family must be B, C or D, got {family!r}")
    if n < _MIN_N[family]:
        raise QminRefused(f"{family}{n} is outside the rank range (n >= {_MIN_N[family]})")
    if not is_prime(ell):
        raise QminRefused(f"{ell} is not prime")
    if ell == 2:
        raise QminRefused("l = 2 is excluded")
    # C2 is the same diagram as B2; both have one short simple root
    t = CartanType("B", 2) if (family, n) == ("C", 2) else CartanType(family, n)
    if family == "C" and n % ell == 0:
        raise QminRefused(f"the condition on l fails for C{n}: l={ell} divides n")
    if family == "B":
        g = MatrixGroupModel("SO", 2 * n + 1, ell)
        module = "natural"
        dim_vu = fixed_dim(regular_unipotent(g))
    elif family == "C":
        g = MatrixGroupModel("Sp", 2 * n, ell)
        module = "wedge2_kernel"
        dim_vu = fixed_dim(module_action(g, regular_unipotent(g), module))
    else:
        g = MatrixGroupModel("SO", 2 * n, ell)
        module = "adjoint"
        dim_vu = lie_centralizer_dim(g, regular_unipotent(g), "so")
    dim_v0 = zero_weight_dim_qmin(t)
    return QminResult(family, n, ell, module, dim_vu, dim_v0, dim_vu == dim_v0)
