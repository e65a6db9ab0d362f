"""The extended affine Weyl group ``W = W_f x| X^vee``.

Elements are stored translation-first as ``t(lam) x``. Generator indices
follow the serialization convention: ``0 .. r-1`` are the finite simple
reflections and ``rank + c`` is the affine reflection of component ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from . import linalg
from .root_datum import FiniteWeylElt, RootDatum


class AffineWeylError(ValueError):
    pass


class AffineWeylElt:
    __slots__ = ("datum", "translation", "finite", "_hash", "_length")

    def __init__(self, datum: RootDatum, translation, finite: FiniteWeylElt):
        self.datum = datum
        self.translation = tuple(translation)
        self.finite = finite
        self._hash = hash((self.translation, finite.mat))
        self._length = None

    def __eq__(self, other):
        return (
            isinstance(other, AffineWeylElt)
            and self.translation == other.translation
            and self.finite == other.finite
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"t{list(self.translation)}*{self.finite.word}"

    def __mul__(self, other: AffineWeylElt) -> AffineWeylElt:
        if other.datum != self.datum:
            raise AffineWeylError("elements live over different root data")
        lam = tuple(a + b for a, b in zip(self.translation, self.finite(other.translation)))
        return AffineWeylElt(self.datum, lam, self.finite * other.finite)

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = length(self)
        return self._length

    def to_json(self) -> dict:
        return {"t": list(self.translation), "x": self.finite.word}


def translation(d: RootDatum, lam) -> AffineWeylElt:
    return AffineWeylElt(d, lam, FiniteWeylElt.identity(d))


def from_finite(x: FiniteWeylElt) -> AffineWeylElt:
    return AffineWeylElt(x.datum, (0,) * x.datum.rank, x)


def identity(d: RootDatum) -> AffineWeylElt:
    return translation(d, (0,) * d.rank)


def multiply(v: AffineWeylElt, w: AffineWeylElt) -> AffineWeylElt:
    return v * w


def inverse(w: AffineWeylElt) -> AffineWeylElt:
    xinv = w.finite.inverse()
    return AffineWeylElt(w.datum, tuple(-c for c in xinv(w.translation)), xinv)


def from_json(d: RootDatum, doc) -> AffineWeylElt:
    if not isinstance(doc, dict) or "t" not in doc:
        raise AffineWeylError('element must look like {"t": [...], "x": [...]}')
    t = doc["t"]
    if not isinstance(t, list) or len(t) != d.rank or not all(isinstance(c, int) for c in t):
        raise AffineWeylError(f"translation must be an integer array of length {d.rank}")
    try:
        x = FiniteWeylElt.from_word(d, doc.get("x", []))
    except (IndexError, TypeError) as exc:
        raise AffineWeylError(str(exc)) from exc
    return AffineWeylElt(d, t, x)


def length(w: AffineWeylElt) -> int:
    """Iwahori-Matsumoto length.

    The formula is stated for ``x t(mu)``; for ``t(lam) x`` we use
    ``mu = x^{-1}(lam)``.
    """
    d = w.datum
    x = w.finite
    mu = x.inverse()(w.translation)
    total = 0
    for a in d.positive:
        p = linalg.dot(mu, a.vector)
        total += abs(p) if x.sends_positive(a.vector) else abs(p + 1)
    return total


# --- Coxeter generators -----------------------------------------------------


def generator_indices(d: RootDatum) -> list[int]:
    return list(range(d.semisimple_rank)) + [d.rank + c for c in range(len(d.components))]


def simple_reflection(d: RootDatum, index: int) -> AffineWeylElt:
    return _generators(d)[index]


@lru_cache(maxsize=None)
def _generators(d: RootDatum) -> dict[int, AffineWeylElt]:
    gens = {i: from_finite(FiniteWeylElt.simple(d, i)) for i in range(d.semisimple_rank)}
    for c, comp in enumerate(d.components):
        theta = d.highest_root(comp)
        gens[d.rank + c] = AffineWeylElt(d, theta.coroot, FiniteWeylElt.reflection(d, theta))
    for i, s in gens.items():
        if s.length != 1:
            raise AffineWeylError(f"generator {i} has length {s.length}")  # sanity check
    return gens


def simple_reflections(d: RootDatum) -> list[AffineWeylElt]:
    gens = _generators(d)
    return [gens[i] for i in generator_indices(d)]


def in_coxeter_part(w: AffineWeylElt) -> bool:
    """Whether the translation part lies in the coroot lattice."""
    return _coroot_coordinates(w.datum, w.translation) is not None


def _coroot_coordinates(d: RootDatum, lam):
    if not d.simple_coroots:
        return [] if not any(lam) else None
    cols = linalg.transpose([list(c) for c in d.simple_coroots])
    sol = linalg.solve(cols, list(lam))
    if sol is None or any(Fraction(c).denominator != 1 for c in sol):
        return None
    return [int(c) for c in sol]


def right_descent(w: AffineWeylElt) -> int | None:
    """Smallest generator index ``i`` with ``l(w s_i) < l(w)``."""
    d = w.datum
    gens = _generators(d)
    n = w.length
    for i in generator_indices(d):
        if (w * gens[i]).length < n:
            return i
    return None


def left_descent(w: AffineWeylElt, finite_only: bool = False) -> int | None:
    d = w.datum
    gens = _generators(d)
    n = w.length
    idx = range(d.semisimple_rank) if finite_only else generator_indices(d)
    for i in idx:
        if (gens[i] * w).length < n:
            return i
    return None


@dataclass(frozen=True)
class OmegaDecomp:
    omega: AffineWeylElt
    cox: AffineWeylElt
    cox_word: tuple[int, ...]


@lru_cache(maxsize=200_000)
def omega_decompose(w: AffineWeylElt) -> OmegaDecomp:
    """Factor ``w = omega * y`` with ``l(omega) = 0`` and ``y`` in ``W^Cox``."""
    gens = _generators(w.datum)
    word = []
    cur = w
    while True:
        i = right_descent(cur)
        if i is None:
            break
        word.append(i)
        cur = cur * gens[i]
    word.reverse()
    y = identity(w.datum)
    for i in word:
        y = y * gens[i]
    return OmegaDecomp(cur, y, tuple(word))


def reduced_word(w: AffineWeylElt) -> list[int]:
    if not in_coxeter_part(w):
        raise AffineWeylError("element is not in W^Cox; apply omega_decompose first")
    return list(omega_decompose(w).cox_word)


def word_to_element(d: RootDatum, word) -> AffineWeylElt:
    gens = _generators(d)
    w = identity(d)
    for i in word:
        if i not in gens:
            raise AffineWeylError(f"no generator with index {i}")
        w = w * gens[i]
    return w


# --- Bruhat order ------------------------------------------------------------


def bruhat_leq(v: AffineWeylElt, w: AffineWeylElt) -> bool:
    if v.datum != w.datum:
        raise AffineWeylError("elements live over different root data")
    dv, dw = omega_decompose(v), omega_decompose(w)
    if dv.omega != dw.omega:
        return False
    return _cox_leq(dv.cox, dw.cox)


@lru_cache(maxsize=200_000)
def _cox_leq(v: AffineWeylElt, w: AffineWeylElt) -> bool:
    lv, lw = v.length, w.length
    if lv > lw:
        return False
    if lw == 0:
        return v == w
    if lv == lw:
        return v == w
    i = right_descent(w)
    s = _generators(w.datum)[i]
    vs = v * s
    if vs.length < lv:
        return _cox_leq(vs, w * s)
    return _cox_leq(v, w * s)


# --- Iwahori-Whittaker combinatorics -----------------------------------------


def min_coset_rep(d: RootDatum, lam) -> AffineWeylElt:
    """The minimal length element of ``W_f t(lam)``."""
    gens = _generators(d)
    w = translation(d, lam)
    while True:
        i = left_descent(w, finite_only=True)
        if i is None:
            return w
        w = gens[i] * w


def is_antispherical(w: AffineWeylElt) -> bool:
    return left_descent(w, finite_only=True) is None


def iw_closure_leq(d: RootDatum, lam, mu) -> bool:
    """The closure order on Iwahori-Whittaker orbit labels."""
    return bruhat_leq(min_coset_rep(d, lam), min_coset_rep(d, mu))


def rank_one_length_identities(d: RootDatum, alpha: int, varpi) -> bool:
    """Check ``l(t(v) s) = l(t(v)) - 1`` and ``l(t(2v - a^v)) = l(t(2v)) - 2``."""
    varpi = tuple(varpi)
    if d.pair(varpi, d.simple_roots[alpha]) != 1 or not d.is_dominant(varpi):
        raise AffineWeylError("need a dominant coweight pairing to 1 with the simple root")
    s = _generators(d)[alpha]
    tv = translation(d, varpi)
    twice = tuple(2 * c for c in varpi)
    shifted = tuple(a - b for a, b in zip(twice, d.simple_coroots[alpha]))
    return (tv * s).length == tv.length - 1 and (
        translation(d, shifted).length == translation(d, twice).length - 2
    )


# --- Omega ----------------------------------------------------------------------


class _OmegaTable:
    def __init__(self, d: RootDatum):
        self.d = d

    @cached_property
    def elements(self) -> list[AffineWeylElt]:
        """All length-zero elements (semisimple data only)."""
        d = self.d
        if not d.is_semisimple:
            raise AffineWeylError("Omega is infinite for non-semisimple data")
        cols = linalg.transpose([list(c) for c in d.simple_coroots])
        diag, u, _ = linalg.smith_normal_form(cols)
        uinv = _unimodular_inverse(u)
        reps = [()]
        for di in diag:
            reps = [r + (k,) for r in reps for k in range(di)]
        out = []
        for y in reps:
            lam = linalg.matvec(uinv, list(y))
            out.append(omega_decompose(translation(d, lam)).omega)
        out.sort(key=lambda w: (w.translation, w.finite.word))
        return out


def _unimodular_inverse(u):
    inv = linalg.inverse(u)
    return [[int(x) for x in row] for row in inv]


@lru_cache(maxsize=None)
def _omega_table(d: RootDatum) -> _OmegaTable:
    return _OmegaTable(d)


def omega_elements(d: RootDatum) -> list[AffineWeylElt]:
    return list(_omega_table(d).elements)

