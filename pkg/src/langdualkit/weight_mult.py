"""Weights of ``X^vee``: dominance, weight sets, characters and levels.

Characters are those of the Langlands dual group, whose roots are the
coroots of the datum. They are computed in characteristic zero with
Freudenthal's recursion, using the invariant form
``B(x, y) = sum over positive roots a of <x, a><y, a>``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .cache import CharacterCache
from .root_datum import (
    CartanType,
    RootDatum,
    Weight,
    coweight_with_pairings,
    dominant_rep,
    longest_element,
    simply_connected,
    torsion_invariants,
    weyl_orbit,
)


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class MultTable:
    datum: RootDatum
    entries: dict = field(hash=False)
    highest: Weight | None = None
    is_character: bool = False

    def __getitem__(self, mu) -> int:
        return self.entries.get(tuple(mu), 0)

    def __eq__(self, other):
        return isinstance(other, MultTable) and self.datum == other.datum and self.nonzero() == other.nonzero()

    def nonzero(self) -> dict:
        return {k: v for k, v in self.entries.items() if v}

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def support(self) -> set[Weight]:
        return {k for k, v in self.entries.items() if v}

    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "mult": m} for w, m in sorted(self.nonzero().items())]

    @classmethod
    def from_json(cls, datum: RootDatum, doc, highest=None) -> MultTable:
        entries = {}
        for e in doc:
            w = tuple(e["weight"])
            if len(w) != datum.rank or int(e["mult"]) < 0:
                raise WeightError(f"bad table entry {e!r}")
            entries[w] = entries.get(w, 0) + int(e["mult"])
        return cls(datum, entries, None if highest is None else tuple(highest))

    def check(self) -> None:
        """Raise if keys span several cosets, or a character is not ``W_f``-stable."""
        keys = list(self.support)
        if keys:
            base = keys[0]
            for k in keys[1:]:
                diff = tuple(a - b for a, b in zip(k, base))
                if coroot_coordinates(self.datum, diff) is None:
                    raise WeightError("table entries lie in different cosets of the coroot lattice")
        if self.is_character:
            for k in keys:
                for x in weyl_orbit(self.datum, k):
                    if self[x] != self[k]:
                        raise WeightError("character is not W_f-invariant")


def coroot_coordinates(d: RootDatum, lam):
    """Integer coordinates of ``lam`` in the simple coroots, or ``None``."""
    if not d.simple_coroots:
        return [] if not any(lam) else None
    cols = linalg.transpose([list(c) for c in d.simple_coroots])
    sol = linalg.solve(cols, list(lam))
    if sol is None or any(c.denominator != 1 for c in sol):
        return None
    return [int(c) for c in sol]


def dominance_leq(d: RootDatum, mu, lam) -> bool:
    """``mu <= lam``: ``lam - mu`` is a non-negative sum of simple coroots."""
    coords = coroot_coordinates(d, tuple(a - b for a, b in zip(lam, mu)))
    return coords is not None and all(c >= 0 for c in coords)


def level(d: RootDatum, lam) -> int:
    return linalg.dot(lam, d.two_rho)


def dominant_weights_below(d: RootDatum, lam_plus) -> list[Weight]:
    """Dominant ``mu`` with ``mu <= lam_plus``, highest level first.

    Work queue from ``lam_plus`` subtracting positive coroots and keeping
    the dominant results. This reaches every dominant weight below
    ``lam_plus``, since any two comparable dominant weights are joined by
    a chain of such steps (Stembridge).
    """
    lam_plus = tuple(lam_plus)
    steps = [(a.coroot, tuple(d.simple_pairings(a.coroot))) for a in d.positive]
    start = (lam_plus, tuple(d.simple_pairings(lam_plus)))
    seen = {lam_plus}
    queue = deque([start])
    found = []
    while queue:
        mu, pairs = queue.popleft()
        found.append(mu)
        for beta, bp in steps:
            np_ = tuple(x - y for x, y in zip(pairs, bp))
            if min(np_, default=0) < 0:
                continue
            nu = tuple(x - y for x, y in zip(mu, beta))
            if nu not in seen:
                seen.add(nu)
                queue.append((nu, np_))
    found.sort(key=lambda mu: (-level(d, mu), mu))
    return found


def weight_set(d: RootDatum, lam) -> set[Weight]:
    """All weights of the Weyl module of highest weight ``lam^+``."""
    lam_plus, _ = dominant_rep(d, lam)
    out = set()
    for mu in dominant_weights_below(d, lam_plus):
        out |= weyl_orbit(d, mu)
    return out


def _form(d: RootDatum, x, y) -> int:
    return sum(linalg.dot(x, a.vector) * linalg.dot(y, a.vector) for a in d.positive)


@lru_cache(maxsize=4096)
def _freudenthal(d: RootDatum, lam: Weight) -> tuple:
    dom = dominant_weights_below(d, lam)
    top = level(d, lam)
    mult = {lam: 1}
    rho2 = d.two_rho_check
    lam_sq = _form(d, lam, lam)

    def m(nu):
        return mult.get(dominant_rep(d, nu)[0], 0)

    for mu in dom:
        if mu == lam:
            continue
        num = 0
        for a in d.positive:
            beta = a.coroot
            k = 1
            while True:
                nu = tuple(x + k * b for x, b in zip(mu, beta))
                if level(d, nu) > top:
                    break
                mn = m(nu)
                if mn:
                    num += mn * _form(d, nu, beta)
                k += 1
        diff = tuple(x - y for x, y in zip(lam, mu))
        den = lam_sq - _form(d, mu, mu) + _form(d, diff, rho2)
        value = Fraction(2 * num, den)
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"Freudenthal produced {value} at {mu}")  # sanity check
        mult[mu] = int(value)
    return tuple(sorted((mu, v) for mu, v in mult.items() if v))


def weyl_character(d: RootDatum, lam, cache: CharacterCache | None = None) -> MultTable:
    """Character of the Weyl (equivalently dual Weyl) module ``V(lam)``."""
    lam = tuple(lam)
    if not d.is_dominant(lam):
        raise WeightError(f"{list(lam)} is not dominant")
    dominant = None
    if cache is not None:
        dominant = cache.get(d.content_hash, lam)
    if dominant is None:
        dominant = list(_freudenthal(d, lam))
        if cache is not None:
            cache.put(d.content_hash, lam, dominant)
    entries = {}
    for mu, v in dominant:
        for nu in weyl_orbit(d, mu):
            entries[nu] = v
    return MultTable(d, entries, lam, is_character=True)


def weyl_multiplicity(d: RootDatum, lam_high, mu, cache: CharacterCache | None = None) -> int:
    return weyl_character(d, lam_high, cache)[mu]


def zero_weight_dim_qmin(component: CartanType) -> int:
    """Number of short simple roots (every root is short when simply laced)."""
    model = simply_connected(component.family, component.n)
    return len(model.short_simple_roots(model.components[0]))


def filtration_layers(tbl: MultTable) -> dict[int, MultTable]:
    layers: dict[int, dict] = {}
    for mu, v in tbl.nonzero().items():
        layers.setdefault(level(tbl.datum, mu), {})[mu] = v
    return {n: MultTable(tbl.datum, e) for n, e in sorted(layers.items())}


def filtration_dims(tbl: MultTable) -> dict[int, int]:
    """``n -> dim F^n`` at every level where the filtration jumps."""
    out = {}
    running = 0
    for n, layer in filtration_layers(tbl).items():
        running += layer.total
        out[n] = running
    return out


class FundamentalCoweightError(WeightError):
    pass


def fundamental_like(d: RootDatum, alpha: int) -> Weight:
    """A coweight pairing to 1 with simple root ``alpha`` and 0 with the others."""
    if not 0 <= alpha < d.semisimple_rank:
        raise IndexError(f"no simple root with index {alpha}")
    target = [int(i == alpha) for i in range(d.semisimple_rank)]
    lam = coweight_with_pairings(d, target)
    if lam is None:
        tors = torsion_invariants(d, "roots")
        raise FundamentalCoweightError(
            f"no integral coweight pairs to 1 with simple root {alpha}; "
            f"X^*/ZR has invariant factors {tors}"
        )
    return lam


def wakimoto_grading(tbl: MultTable) -> MultTable:
    """The table ``lam -> tbl(w_0(lam))``."""
    w0 = longest_element(tbl.datum)
    entries = {w0(mu): v for mu, v in tbl.nonzero().items()}
    return MultTable(tbl.datum, entries, tbl.highest, tbl.is_character)


def dominant_weights_up_to_level(d: RootDatum, max_level: int) -> list[Weight]:
    """Dominant coweights of level at most ``max_level`` (semisimple data)."""
    if not d.is_semisimple:
        raise WeightError("the dominant cone has a central direction; use a semisimple datum")
    # 2rho = sum c_i alpha_i with every c_i >= 1, so level = sum c_i <lam, alpha_i>
    coeffs = [sum(a.coeffs[i] for a in d.positive) for i in range(d.semisimple_rank)]
    out = []

    def rec(i, pairs, budget):
        if i == len(coeffs):
            lam = coweight_with_pairings(d, pairs)
            if lam is not None:
                out.append(lam)
            return
        k = 0
        while k * coeffs[i] <= budget:
            rec(i + 1, pairs + [k], budget - k * coeffs[i])
            k += 1

    rec(0, [], max_level)
    out.sort(key=lambda lam: (level(d, lam), lam))
    return out
