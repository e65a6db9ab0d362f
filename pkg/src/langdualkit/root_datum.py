"""Root data, their finite Weyl groups, Dynkin classification and prime tables.

Both lattices are ``ZZ^rank`` and the pairing between cocharacters
``X_*`` and characters ``X^*`` is the dot product of coordinate vectors.
Weights (elements of ``X^vee = X_*``) are plain integer tuples.
"""

from __future__ import annotations

import hashlib
import json
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import NamedTuple

from . import linalg

Weight = tuple[int, ...]


class DatumError(ValueError):
    """Raised for malformed or invalid root-datum input."""


# --- Dynkin diagrams (Bourbaki numbering, 0-based) ------------------------

FAMILIES = "ABCDEFG"


def _diagram(family: str, n: int):
    """Edges ``(i, j, bond)`` and the set of short nodes of a Dynkin diagram."""
    chain = [(i, i + 1, 1) for i in range(n - 1)]
    if family == "A":
        return chain, set()
    if family == "B":
        return chain[:-1] + [(n - 2, n - 1, 2)], {n - 1}
    if family == "C":
        return chain[:-1] + [(n - 2, n - 1, 2)], set(range(n - 1))
    if family == "D":
        if n == 2:
            return [], set()
        return chain[:-1] + [(n - 3, n - 1, 1)], set()
    if family == "E":
        return [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, n - 1)], set()
    if family == "F":
        return [(0, 1, 1), (1, 2, 2), (2, 3, 1)], {2, 3}
    if family == "G":
        return [(0, 1, 3)], {0}
    raise DatumError(f"unknown family {family!r}")


def pairing_matrix_of_type(family: str, n: int) -> list[list[int]]:
    """``A[i][j] = <alpha_i^vee, alpha_j>`` for the given Dynkin type."""
    edges, short = _diagram(family, n)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, bond in edges:
        for x, y in ((i, j), (j, i)):
            if bond == 1 or x not in short:
                a[x][y] = -1
            else:
                a[x][y] = -bond
    return a


def _valid_type(family: str, n: int) -> bool:
    return (
        (family == "A" and n >= 1)
        or (family == "B" and n >= 2)
        or (family == "C" and n >= 3)
        or (family == "D" and n >= 4)
        or (family == "E" and n in (6, 7, 8))
        or (family == "F" and n == 4)
        or (family == "G" and n == 2)
    )


@dataclass(frozen=True)
class CartanType:
    """An irreducible finite Cartan type attached to a set of simple-root indices.

    ``indices`` is sorted; ``labeling[k]`` is the datum index of the
    Bourbaki node ``k``.
    """

    family: str
    n: int
    indices: tuple[int, ...] = ()
    labeling: tuple[int, ...] = ()

    def __post_init__(self):
        if not _valid_type(self.family, self.n):
            raise DatumError(f"{self.family}{self.n} is not a finite Cartan type label")
        if self.indices and len(self.indices) != self.n:
            raise DatumError("index set size differs from the rank of the type")

    @property
    def label(self) -> str:
        return f"{self.family}{self.n}"

    def __str__(self):
        return self.label


def parse_cartan_type(label: str) -> CartanType:
    m = re.fullmatch(r"\s*([A-G])\s*(\d+)\s*", label)
    if not m:
        raise DatumError(f"bad Cartan type label {label!r}")
    return CartanType(m.group(1), int(m.group(2)))


# --- the datum -------------------------------------------------------------


class Root(NamedTuple):
    coeffs: tuple[int, ...]  # in the basis of simple roots
    vector: tuple[int, ...]  # in X^*
    coroot_coeffs: tuple[int, ...]
    coroot: tuple[int, ...]  # in X_*


def _root_lengths(a, nodes):
    """Squared lengths (normalized so the shortest is 1) on one component."""
    lengths = {nodes[0]: Fraction(1)}
    queue = deque([nodes[0]])
    while queue:
        i = queue.popleft()
        for j in nodes:
            if j not in lengths and a[i][j]:
                # <a_i^v, a_j> / <a_j^v, a_i> = |a_j|^2 / |a_i|^2
                lengths[j] = lengths[i] * Fraction(a[i][j], a[j][i])
                queue.append(j)
    low = min(lengths.values())
    return {i: v / low for i, v in lengths.items()}


@dataclass(frozen=True)
class RootDatum:
    rank: int
    simple_roots: tuple[tuple[int, ...], ...]
    simple_coroots: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        roots = tuple(tuple(r) for r in self.simple_roots)
        coroots = tuple(tuple(r) for r in self.simple_coroots)
        object.__setattr__(self, "simple_roots", roots)
        object.__setattr__(self, "simple_coroots", coroots)
        if not isinstance(self.rank, int) or isinstance(self.rank, bool) or self.rank < 0:
            raise DatumError("rank must be a non-negative integer")
        if len(roots) != len(coroots):
            raise DatumError("different numbers of simple roots and simple coroots")
        for v in roots + coroots:
            if len(v) != self.rank:
                raise DatumError(f"vector {list(v)} does not have length {self.rank}")
            if any(not isinstance(x, int) or isinstance(x, bool) for x in v):
                raise DatumError(f"vector {list(v)} is not integral")
        if len(roots) > self.rank:
            raise DatumError("more simple roots than the rank")
        a = self.pairings
        for i in range(len(roots)):
            if a[i][i] != 2:
                raise DatumError(f"<alpha_{i}^vee, alpha_{i}> = {a[i][i]}, expected 2")
        if linalg.rank(roots) != len(roots) or linalg.rank(coroots) != len(coroots):
            raise DatumError("simple roots or simple coroots are linearly dependent")
        self._check_finite_type()

    def _check_finite_type(self):
        a = self.pairings
        r = len(a)
        for i in range(r):
            for j in range(r):
                if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                    raise DatumError("pairing matrix is not a generalized Cartan matrix")
        for comp in self._graph_components():
            lengths = _root_lengths(a, comp)
            for i in comp:
                for j in comp:
                    if a[i][j] * lengths[i] != a[j][i] * lengths[j]:
                        raise DatumError("Cartan matrix is not symmetrizable")
            # Gram matrix (alpha_i, alpha_j) = A[i][j] |alpha_i|^2 / 2 must be positive definite
            gram = [[a[i][j] * lengths[i] / 2 for j in comp] for i in comp]
            if not _positive_definite(gram):
                raise DatumError("Cartan matrix is not of finite type")

    # -- pairings -------------------------------------------------------

    @cached_property
    def pairings(self) -> list[list[int]]:
        """``A[i][j] = <alpha_i^vee, alpha_j>``."""
        return [[linalg.dot(c, r) for r in self.simple_roots] for c in self.simple_coroots]

    @property
    def cartan_matrix(self) -> list[list[int]]:
        """``C[i][j] = <alpha_j^vee, alpha_i>``."""
        return linalg.transpose(self.pairings)

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def is_semisimple(self) -> bool:
        return self.semisimple_rank == self.rank

    def _graph_components(self):
        a = self.pairings
        r = len(a)
        seen = set()
        comps = []
        for s in range(r):
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                i = queue.popleft()
                comp.append(i)
                for j in range(r):
                    if j not in seen and a[i][j]:
                        seen.add(j)
                        queue.append(j)
            comps.append(sorted(comp))
        return comps

    # -- roots ----------------------------------------------------------

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """All roots, positive ones first, each block sorted by height."""
        a = self.pairings
        r = len(a)
        unit = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        seen = {}
        queue = deque()
        for i in range(r):
            for sign in (1, -1):
                c = tuple(sign * x for x in unit[i])
                seen[c] = c
                queue.append(c)
        while queue:
            c = queue.popleft()
            cv = seen[c]
            for j in range(r):
                k = sum(c[i] * a[j][i] for i in range(r))  # <alpha_j^v, alpha>
                kv = sum(cv[i] * a[i][j] for i in range(r))  # <alpha^v, alpha_j>
                c2 = tuple(x - k * (i == j) for i, x in enumerate(c))
                if c2 not in seen:
                    seen[c2] = tuple(x - kv * (i == j) for i, x in enumerate(cv))
                    queue.append(c2)

        def vec(coeffs, basis):
            return tuple(sum(cf * b[t] for cf, b in zip(coeffs, basis)) for t in range(self.rank))

        out = [
            Root(c, vec(c, self.simple_roots), cv, vec(cv, self.simple_coroots))
            for c, cv in seen.items()
        ]
        out.sort(key=lambda x: (min(x.coeffs) < 0, abs(sum(x.coeffs)), x.coeffs))
        return tuple(out)

    @cached_property
    def positive(self) -> tuple[Root, ...]:
        return tuple(x for x in self.roots if min(x.coeffs) >= 0)

    @cached_property
    def positive_root_set(self) -> frozenset:
        return frozenset(x.vector for x in self.positive)

    def positive_roots(self) -> list[tuple[int, ...]]:
        return [x.vector for x in self.positive]

    @cached_property
    def two_rho(self) -> tuple[int, ...]:
        """Sum of the positive roots, an element of ``X^*``."""
        return tuple(sum(x.vector[t] for x in self.positive) for t in range(self.rank))

    @cached_property
    def two_rho_check(self) -> tuple[int, ...]:
        """Sum of the positive coroots, an element of ``X^vee``."""
        return tuple(sum(x.coroot[t] for x in self.positive) for t in range(self.rank))

    def pair(self, lam, root_vector) -> int:
        return linalg.dot(lam, root_vector)

    def simple_pairings(self, lam) -> tuple[int, ...]:
        return tuple(linalg.dot(lam, a) for a in self.simple_roots)

    def is_dominant(self, lam) -> bool:
        return all(p >= 0 for p in self.simple_pairings(lam))

    # -- components -----------------------------------------------------

    @cached_property
    def components(self) -> tuple[CartanType, ...]:
        return tuple(self._classify(comp) for comp in self._graph_components())

    def _classify(self, comp) -> CartanType:
        a = self.pairings
        k = len(comp)
        sub = [[a[i][j] for j in comp] for i in comp]
        for family in FAMILIES:
            if not _valid_type(family, k):
                continue
            model = pairing_matrix_of_type(family, k)
            perm = _find_isomorphism(model, sub)
            if perm is not None:
                return CartanType(family, k, tuple(comp), tuple(comp[p] for p in perm))
        raise DatumError("component does not match any finite Cartan type")  # unreachable

    def root_lengths(self) -> dict[int, Fraction]:
        out = {}
        for comp in self._graph_components():
            out.update(_root_lengths(self.pairings, comp))
        return out

    def short_simple_roots(self, component: CartanType) -> list[int]:
        lengths = self.root_lengths()
        low = min(lengths[i] for i in component.indices)
        return [i for i in component.indices if lengths[i] == low]

    def highest_root(self, component: CartanType) -> Root:
        support = set(component.indices)
        cands = [
            x for x in self.positive if all(c == 0 or i in support for i, c in enumerate(x.coeffs))
        ]
        return max(cands, key=lambda x: sum(x.coeffs))

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "simple_roots": [list(r) for r in self.simple_roots],
            "simple_coroots": [list(r) for r in self.simple_coroots],
        }

    @cached_property
    def content_hash(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _positive_definite(gram) -> bool:
    m = [[Fraction(x) for x in row] for row in gram]
    n = len(m)
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


def _find_isomorphism(model, target):
    """Permutation ``p`` with ``target[p[i]][p[j]] == model[i][j]``, or ``None``."""
    n = len(model)
    # assign model nodes in BFS order so each new node is adjacent to an assigned one
    order = []
    for s in range(n):
        if s in order:
            continue
        queue = deque([s])
        order.append(s)
        while queue:
            i = queue.popleft()
            for j in range(n):
                if model[i][j] and j not in order:
                    order.append(j)
                    queue.append(j)
    perm = [None] * n
    used = set()

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for t in range(n):
            if t in used:
                continue
            if all(
                target[t][perm[j]] == model[i][j] and target[perm[j]][t] == model[j][i]
                for j in order[:k]
            ):
                perm[i] = t
                used.add(t)
                if extend(k + 1):
                    return True
                used.discard(t)
                perm[i] = None
        return False

    return list(perm) if extend(0) else None


# --- construction ----------------------------------------------------------


def load_datum(document) -> RootDatum:
    """Validate a root-datum document (a mapping, JSON text or a path)."""
    if isinstance(document, Path):
        document = document.read_text()
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise DatumError(f"malformed datum document: {exc}") from exc
    if not isinstance(document, dict):
        raise DatumError("datum document must be an object")
    missing = {"rank", "simple_roots", "simple_coroots"} - set(document)
    if missing:
        raise DatumError(f"datum document is missing {sorted(missing)}")
    roots, coroots = document["simple_roots"], document["simple_coroots"]
    if not isinstance(roots, list) or not isinstance(coroots, list):
        raise DatumError("simple_roots and simple_coroots must be arrays")
    for v in roots + coroots:
        if not isinstance(v, list):
            raise DatumError("every simple (co)root must be an integer array")
    return RootDatum(document["rank"], roots, coroots)


def _canonical_small(family, n):
    return ("A", 1) if family in "BC" and n == 1 else (family, n)


def simply_connected(family: str, n: int) -> RootDatum:
    family, n = _canonical_small(family, n)
    a = pairing_matrix_of_type(family, n)
    coroots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = [tuple(a[i][j] for i in range(n)) for j in range(n)]
    return RootDatum(n, roots, coroots, name=f"simply-connected:{family}{n}")


def adjoint(family: str, n: int) -> RootDatum:
    family, n = _canonical_small(family, n)
    a = pairing_matrix_of_type(family, n)
    roots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    coroots = [tuple(a[i]) for i in range(n)]
    return RootDatum(n, roots, coroots, name=f"adjoint:{family}{n}")


def general_linear(n: int) -> RootDatum:
    vecs = [tuple((t == i) - (t == i + 1) for t in range(n)) for i in range(n - 1)]
    return RootDatum(n, vecs, vecs, name=f"GL({n})")


def product(*data: RootDatum) -> RootDatum:
    rank = sum(d.rank for d in data)
    roots, coroots = [], []
    offset = 0
    for d in data:
        pad = lambda v: (0,) * offset + tuple(v) + (0,) * (rank - offset - d.rank)  # noqa: E731
        roots += [pad(v) for v in d.simple_roots]
        coroots += [pad(v) for v in d.simple_coroots]
        offset += d.rank
    return RootDatum(rank, roots, coroots, name="x".join(d.name for d in data))


def _named_factor(label: str) -> RootDatum:
    s = label.strip()
    patterns = [
        (r"SL\((\d+)\)", lambda k: simply_connected("A", k - 1), 2),
        (r"PGL\((\d+)\)", lambda k: adjoint("A", k - 1), 2),
        (r"GL\((\d+)\)", general_linear, 1),
        (r"Sp\((\d+)\)", lambda k: simply_connected("C", k // 2), 2),
        (r"Spin\((\d+)\)", lambda k: simply_connected("B", k // 2), 3),
        (r"SO\((\d+)\)-adjoint", lambda k: adjoint("B", k // 2), 3),
    ]
    for pat, build, low in patterns:
        m = re.fullmatch(pat, s)
        if m:
            k = int(m.group(1))
            if k < low:
                raise DatumError(f"{s}: size too small")
            if pat.startswith(r"Sp\(") and k % 2:
                raise DatumError(f"{s}: symplectic groups need even size")
            if (pat.startswith("Spin") or pat.startswith("SO")) and k % 2 == 0:
                raise DatumError(f"{s}: only odd orthogonal groups are built in")
            d = build(k)
            return RootDatum(d.rank, d.simple_roots, d.simple_coroots, name=s)
    m = re.fullmatch(r"(adjoint|simply-connected):([A-G])(\d+)", s)
    if m:
        family, n = m.group(2), int(m.group(3))
        if n < 1 or (family in "EFG" and not _valid_type(family, n)) or (family == "D" and n < 2):
            raise DatumError(f"{s}: no such Cartan type")
        return (adjoint if m.group(1) == "adjoint" else simply_connected)(family, n)
    raise DatumError(f"unknown datum label {label!r}")


def named_datum(label: str) -> RootDatum:
    """Build a datum from a label such as ``SL(3)`` or ``adjoint:B2xPGL(2)``."""
    factors = [_named_factor(part) for part in label.split("x")]
    if len(factors) == 1:
        return factors[0]
    d = product(*factors)
    return RootDatum(d.rank, d.simple_roots, d.simple_coroots, name=label)


def resolve_datum(source: str) -> RootDatum:
    """``@path`` loads a JSON document, anything else is a named label."""
    if source.startswith("@"):
        path = Path(source[1:])
        try:
            text = path.read_text()
        except OSError as exc:
            raise DatumError(f"cannot read datum file {path}: {exc}") from exc
        return load_datum(text)
    return named_datum(source)


def dualize(d: RootDatum) -> RootDatum:
    return RootDatum(d.rank, d.simple_coroots, d.simple_roots, name=f"dual({d.name})" if d.name else "")


# --- torsion ---------------------------------------------------------------


def torsion_invariants(d: RootDatum, side: str = "roots") -> list[int]:
    """Invariant factors of ``X^*/ZR`` (roots) or ``X_*/ZR^vee`` (coroots).

    Factors bigger than one come first in divisibility order, then one ``0``
    per free factor.
    """
    if side not in ("roots", "coroots"):
        raise ValueError(f"side must be 'roots' or 'coroots', not {side!r}")
    vecs = d.simple_roots if side == "roots" else d.simple_coroots
    if not vecs:
        return [0] * d.rank
    torsion, free = linalg.invariant_factors(linalg.transpose([list(v) for v in vecs]))
    return torsion + [0] * free


def has_torsion(invariants, ell: int) -> bool:
    return any(f and f % ell == 0 for f in invariants)


def is_free(invariants) -> bool:
    return all(f == 0 for f in invariants)


# --- finite Weyl group -----------------------------------------------------


def _reflection_mats(root, coroot, rank):
    mat = tuple(tuple(int(i == j) - coroot[i] * root[j] for j in range(rank)) for i in range(rank))
    comat = tuple(tuple(int(i == j) - root[i] * coroot[j] for j in range(rank)) for i in range(rank))
    return mat, comat


def _mul(a, b):
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in zip(*b)) for row in a)


def _apply(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


class FiniteWeylElt:
    """An element of ``W_f`` stored by its matrices on ``X^vee`` and on ``X^*``."""

    __slots__ = ("datum", "mat", "comat", "_length", "_word", "_hash")

    def __init__(self, datum: RootDatum, mat, comat):
        self.datum = datum
        self.mat = mat
        self.comat = comat
        self._length = None
        self._word = None
        self._hash = hash(mat)

    @classmethod
    def identity(cls, d: RootDatum) -> FiniteWeylElt:
        ident = tuple(tuple(int(i == j) for j in range(d.rank)) for i in range(d.rank))
        return cls(d, ident, ident)

    @classmethod
    def simple(cls, d: RootDatum, i: int) -> FiniteWeylElt:
        return cls(d, *_reflection_mats(d.simple_roots[i], d.simple_coroots[i], d.rank))

    @classmethod
    def reflection(cls, d: RootDatum, root: Root) -> FiniteWeylElt:
        return cls(d, *_reflection_mats(root.vector, root.coroot, d.rank))

    @classmethod
    def from_word(cls, d: RootDatum, word) -> FiniteWeylElt:
        x = cls.identity(d)
        for i in word:
            if not 0 <= i < d.semisimple_rank:
                raise IndexError(f"no simple reflection with index {i}")
            x = x * cls.simple(d, i)
        return x

    def __mul__(self, other: FiniteWeylElt) -> FiniteWeylElt:
        return FiniteWeylElt(self.datum, _mul(self.mat, other.mat), _mul(self.comat, other.comat))

    def __eq__(self, other):
        return isinstance(other, FiniteWeylElt) and self.mat == other.mat and self.datum == other.datum

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteWeylElt(word={self.word})"

    def __call__(self, lam) -> Weight:
        """Action on ``X^vee``."""
        return _apply(self.mat, lam)

    def act_on_character(self, mu) -> tuple[int, ...]:
        """Action on ``X^*``."""
        return _apply(self.comat, mu)

    def sends_positive(self, root_vector) -> bool:
        return self.act_on_character(root_vector) in self.datum.positive_root_set

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = sum(1 for a in self.datum.positive if not self.sends_positive(a.vector))
        return self._length

    def inverse(self) -> FiniteWeylElt:
        # the pairing is preserved, so the inverse on X^vee is the transpose of the X^* action
        return FiniteWeylElt(self.datum, tuple(zip(*self.comat)), tuple(zip(*self.mat)))

    @property
    def word(self) -> list[int]:
        """Reduced word built from right descents, smallest index first."""
        if self._word is None:
            word = []
            x = self
            d = self.datum
            while x.length:
                i = next(i for i in range(d.semisimple_rank) if not x.sends_positive(d.simple_roots[i]))
                word.insert(0, i)
                x = x * FiniteWeylElt.simple(d, i)
            self._word = word
        return list(self._word)

    def is_identity(self) -> bool:
        return self.length == 0


def weyl_act(x: FiniteWeylElt, lam) -> Weight:
    return x(lam)


def dominant_rep(d: RootDatum, lam) -> tuple[Weight, FiniteWeylElt]:
    """The dominant conjugate of ``lam`` and a minimal ``x`` with ``x(lam)`` dominant."""
    lam = tuple(lam)
    x = FiniteWeylElt.identity(d)
    while True:
        p = d.simple_pairings(lam)
        i = next((i for i, v in enumerate(p) if v < 0), None)
        if i is None:
            return lam, x
        s = FiniteWeylElt.simple(d, i)
        lam = s(lam)
        x = s * x


def longest_element(d: RootDatum) -> FiniteWeylElt:
    x = FiniteWeylElt.identity(d)
    while True:
        i = next((i for i in range(d.semisimple_rank) if x.sends_positive(d.simple_roots[i])), None)
        if i is None:
            return x
        x = x * FiniteWeylElt.simple(d, i)


def weyl_orbit(d: RootDatum, lam) -> set[Weight]:
    lam = tuple(lam)
    seen = {lam}
    queue = deque([lam])
    gens = [FiniteWeylElt.simple(d, i) for i in range(d.semisimple_rank)]
    while queue:
        v = queue.popleft()
        for s in gens:
            w = s(v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def weyl_group_elements(d: RootDatum) -> list[FiniteWeylElt]:
    """All of ``W_f`` by breadth-first search (only for small groups)."""
    e = FiniteWeylElt.identity(d)
    gens = [FiniteWeylElt.simple(d, i) for i in range(d.semisimple_rank)]
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = x * s
            if y not in seen:
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out


def coweight_with_pairings(d: RootDatum, pairings) -> Weight | None:
    """An integral ``lam`` with ``<lam, alpha_i> = pairings[i]``, or ``None``."""
    if not d.simple_roots:
        return (0,) * d.rank
    sol = linalg.solve_integer([list(a) for a in d.simple_roots], list(pairings))
    return None if sol is None else tuple(sol)


def minuscule_coweights(d: RootDatum) -> list[Weight]:
    """Nonzero dominant minuscule coweights, one per pairing pattern.

    For non-semisimple data a coweight is only determined up to the
    centre; one deterministic representative is returned per pattern.
    """
    r = d.semisimple_rank
    out = []
    for mask in range(1, 2**r):
        p = [(mask >> i) & 1 for i in range(r)]
        if any(sum(c * v for c, v in zip(a.coeffs, p)) > 1 for a in d.positive):
            continue
        lam = coweight_with_pairings(d, p)
        if lam is not None:
            out.append(lam)
    return sorted(out, key=lambda lam: (linalg.dot(lam, d.two_rho), lam))


def highest_short_coroot(d: RootDatum, component: CartanType) -> Weight:
    """Coroot of the highest root of ``component`` (its quasi-minuscule coweight)."""
    return d.highest_root(component).coroot


# --- prime tables ----------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


_BOUNDS = {"A": lambda n: 1, "B": lambda n: n, "C": lambda n: 2, "D": lambda n: 2,
           "E6": 3, "E7": 19, "E8": 31, "F": lambda n: 3, "G": lambda n: 3}  # fmt: skip


def bound_on_ell(t: CartanType) -> int:
    key = t.label if t.family == "E" else t.family
    b = _BOUNDS[key]
    return b if isinstance(b, int) else b(t.n)


def qmin_condition(t: CartanType, ell: int) -> bool:
    f = t.family
    if f in "BDG":
        return ell != 2
    if f == "C":
        return t.n % ell != 0
    if f == "E":
        return {6: ell != 3, 7: ell != 2, 8: True}[t.n]
    if f == "F":
        return ell != 3
    return True  # type A carries no condition, see the caveat


_BAD = {"A": (), "B": (2,), "C": (2,), "D": (2,), "E6": (2, 3), "E7": (2, 3), "E8": (2, 3, 5),
        "F": (2, 3), "G": (2, 3)}  # fmt: skip


def is_good(t: CartanType, ell: int) -> bool:
    return ell not in _BAD[t.label if t.family == "E" else t.family]


def is_very_good(t: CartanType, ell: int) -> bool:
    return is_good(t, ell) and not (t.family == "A" and (t.n + 1) % ell == 0)


@dataclass(frozen=True)
class PrimeVerdict:
    type: str
    bound: int
    bound_ok: bool
    qmin_ok: bool
    good: bool
    very_good: bool
    qmin_caveat: str | None = None

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "bound": self.bound,
            "bound_ok": self.bound_ok,
            "qmin_ok": self.qmin_ok,
            "qmin_caveat": self.qmin_caveat,
            "good": self.good,
            "very_good": self.very_good,
        }


def prime_tables(t: CartanType, ell: int) -> PrimeVerdict:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    bound = bound_on_ell(t)
    caveat = None
    if t.family == "A":
        caveat = "no condition is tabulated for type A; qmin_ok reported true by convention"
    return PrimeVerdict(
        type=t.label,
        bound=bound,
        bound_ok=ell > bound,
        qmin_ok=qmin_condition(t, ell),
        good=is_good(t, ell),
        very_good=is_very_good(t, ell),
        qmin_caveat=caveat,
    )


def classify_components(d: RootDatum) -> list[CartanType]:
    return list(d.components)
