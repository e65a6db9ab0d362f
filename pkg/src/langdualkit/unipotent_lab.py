"""Matrix models of classical groups over QQ and finite prime fields.

Regular unipotent elements are products of root-group elements
``exp(e_i)`` for the simple root vectors of an upper-triangular Borel.
Jordan types come from the rank sequence of ``u - 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .root_datum import RootDatum, is_prime, torsion_invariants


class UnipotentError(ValueError):
    pass


@dataclass(frozen=True)
class FieldMatrix:
    rows: tuple
    p: int = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def to_json(self) -> dict:
        return {
            "q": self.p if self.p else "char0",
            "rows": [[_plain(x) for x in row] for row in self.rows],
        }


def _plain(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _fm(rows, p) -> FieldMatrix:
    return FieldMatrix(tuple(tuple(r) for r in rows), p)


@dataclass(frozen=True)
class JordanType:
    partition: tuple[int, ...]

    @property
    def dim(self) -> int:
        return sum(self.partition)

    @property
    def parts(self) -> int:
        return len(self.partition)

    def to_json(self) -> list[int]:
        return list(self.partition)


_LABEL = re.compile(r"^(SL|Sp|SO|PGL)\((\d+)\)$")


@dataclass(frozen=True)
class MatrixGroupModel:
    kind: str
    size: int
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("SL", "Sp", "SO", "PGL"):
            raise UnipotentError(f"unknown group kind {self.kind!r}")
        if self.p and not is_prime(self.p):
            raise UnipotentError(f"field characteristic must be 0 or a prime, got {self.p}")
        if self.size < 1:
            raise UnipotentError("matrix size must be positive")
        if self.kind == "Sp" and self.size % 2:
            raise UnipotentError("Sp(m) needs even m")
        if self.kind == "SO":
            if self.p == 2:
                raise UnipotentError("orthogonal models in characteristic 2 are not supported")
            if self.size < 3:
                raise UnipotentError("SO(m) needs m >= 3")

    @property
    def label(self) -> str:
        return f"{self.kind}({self.size})"

    @property
    def rank(self) -> int:
        return {"SL": self.size - 1, "PGL": self.size - 1}.get(self.kind, self.size // 2)

    @property
    def form(self):
        m = self.size
        if self.kind == "Sp":
            h = m // 2
            return [[(1 if i < h else -1) if j == m - 1 - i else 0 for j in range(m)] for i in range(m)]
        if self.kind == "SO":
            return [[int(j == m - 1 - i) for j in range(m)] for i in range(m)]
        return None


def parse_group(label: str, p: int = 0) -> MatrixGroupModel:
    m = _LABEL.match(label.strip())
    if not m:
        raise UnipotentError(f"unknown group label {label!r}; expected SL(n), Sp(2n), SO(m) or PGL(n)")
    return MatrixGroupModel(m.group(1), int(m.group(2)), p)


# --- helpers over QQ ------------------------------------------------------


def _unit(m, a, b):
    return [[Fraction(int(i == a and j == b)) for j in range(m)] for i in range(m)]


def _add(x, y, k=1):
    return [[a + k * b for a, b in zip(r, s)] for r, s in zip(x, y)]


def _lie_projection(g: MatrixGroupModel, a: int, b: int):
    """``E - J^{-1} E^T J`` scaled so its ``(a, b)`` entry is 1."""
    e = _unit(g.size, a, b)
    j = [[Fraction(x) for x in row] for row in g.form]
    jinv = linalg.inverse(j)
    x = _add(e, linalg.matmul(linalg.matmul(jinv, linalg.transpose(e)), j), -1)
    c = x[a][b]
    if not c:
        raise UnipotentError(f"({a},{b}) is not a root position")  # sanity check
    return [[v / c for v in row] for row in x]


def simple_root_vectors(g: MatrixGroupModel):
    m = g.size
    if g.kind in ("SL", "PGL"):
        return [_unit(m, i, i + 1) for i in range(m - 1)]
    n = m // 2
    if g.kind == "Sp" or m % 2:
        return [_lie_projection(g, i, i + 1) for i in range(n)]
    return [_lie_projection(g, i, i + 1) for i in range(n - 1)] + [_lie_projection(g, n - 2, n)]


def _exp_nilpotent(x):
    m = len(x)
    out = linalg.identity(m)
    out = [[Fraction(v) for v in row] for row in out]
    term = out
    for k in range(1, m + 1):
        term = [[v / k for v in row] for row in linalg.matmul(term, x)]
        if not any(any(row) for row in term):
            break
        out = _add(out, term)
    return out


def regular_unipotent(g: MatrixGroupModel) -> FieldMatrix:
    """``prod exp(e_i)`` over the simple root vectors, last index first."""
    if g.kind in ("Sp", "SO") and g.p == 2:
        raise UnipotentError(f"{g.label}: regular unipotent construction needs characteristic != 2")
    u = [[Fraction(int(i == j)) for j in range(g.size)] for i in range(g.size)]
    for e in reversed(simple_root_vectors(g)):
        u = linalg.matmul(u, _exp_nilpotent(e))
    u = linalg.reduce_mod(u, g.p)
    # postconditions
    if not _is_unipotent(u, g.p):
        raise UnipotentError("constructed element is not unipotent")  # sanity check
    if g.form is not None:
        j = linalg.reduce_mod(g.form, g.p)
        lhs = linalg.matmul(linalg.matmul(linalg.transpose(u), j), u)
        lhs = linalg.reduce_mod(lhs, g.p)
        if lhs != j:
            raise UnipotentError("constructed element does not preserve the form")  # sanity check
    return _fm(u, g.p)


def _minus_identity(rows, p):
    out = [list(r) for r in rows]
    for i in range(len(out)):
        out[i][i] -= 1
    return linalg.reduce_mod(out, p) if p else [[Fraction(x) for x in r] for r in out]


def _is_unipotent(rows, p) -> bool:
    n = len(rows)
    nil = _minus_identity(rows, p)
    power = nil
    for _ in range(n - 1):
        power = linalg.field_matmul(power, nil, p)
    return not any(any(r) for r in power)


# --- modules ---------------------------------------------------------------

MODULES = ("natural", "wedge2", "wedge2_kernel", "adjoint")


def _wedge2(u, p):
    m = len(u)
    pairs = list(combinations(range(m), 2))
    out = []
    for k, l in pairs:
        row = []
        for i, j in pairs:
            row.append(u[k][i] * u[l][j] - u[l][i] * u[k][j])
        out.append(row)
    return linalg.reduce_mod(out, p) if p else out, pairs


def _restrict(action, basis, p):
    """Matrix of ``action`` on the invariant subspace spanned by ``basis`` (columns)."""
    cols = linalg.transpose(basis)
    images = linalg.transpose(linalg.field_matmul(action, cols, p))
    out_cols = []
    for img in images:
        c = linalg.solve(cols, img, p)
        if c is None:
            raise UnipotentError("subspace is not invariant")  # sanity check
        out_cols.append(c)
    return linalg.transpose(out_cols)


def lie_algebra_basis(g: MatrixGroupModel, lie: str | None = None):
    """Basis of the Lie algebra as flattened ``size*size`` vectors."""
    lie = lie or {"SL": "sl", "PGL": "pgl", "Sp": "sp", "SO": "so"}[g.kind]
    eqs = _lie_equations(g, lie)
    return linalg.nullspace(eqs, g.p, g.size * g.size)


def _lie_equations(g: MatrixGroupModel, lie: str):
    m = g.size
    n2 = m * m
    if lie == "gl":
        return []
    if lie == "sl":
        return [[int(k // m == k % m) for k in range(n2)]]
    if lie in ("sp", "so"):
        j = g.form
        eqs = []
        # (X^T J + J X)[a][b] = sum_c X[c][a] J[c][b] + J[a][c] X[c][b]
        for a in range(m):
            for b in range(m):
                row = [0] * n2
                for c in range(m):
                    row[c * m + a] += j[c][b]
                    row[c * m + b] += j[a][c]
                eqs.append(row)
        return eqs
    raise UnipotentError(f"no Lie algebra {lie!r}")


_COMPATIBLE = {
    "SL": ("sl", "gl"),
    "PGL": ("pgl", "gl"),
    "Sp": ("sp", "gl"),
    "SO": ("so", "gl"),
}


def module_action(g: MatrixGroupModel, u: FieldMatrix, module: str) -> FieldMatrix:
    p = g.p
    rows = [list(r) for r in u.rows]
    if module == "natural":
        return u
    if module == "wedge2":
        return _fm(_wedge2(rows, p)[0], p)
    if module == "wedge2_kernel":
        if g.kind != "Sp":
            raise UnipotentError("wedge2_kernel is defined for Sp(2n) only")
        n = g.size // 2
        if p and n % p == 0:
            raise UnipotentError(f"wedge2_kernel needs l not dividing n (l={p}, n={n})")
        w, pairs = _wedge2(rows, p)
        chi = [[g.form[i][j] for i, j in pairs]]
        return _fm(_restrict(w, linalg.nullspace(chi, p), p), p)
    if module == "adjoint":
        if g.kind == "PGL":
            raise UnipotentError("adjoint module is not modelled for PGL")
        basis = lie_algebra_basis(g)
        uinv = linalg.inverse(rows, p)
        m = g.size
        # conjugation X -> u X u^{-1} on flattened matrices
        big = [[0] * (m * m) for _ in range(m * m)]
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    for d in range(m):
                        big[a * m + b][c * m + d] = rows[a][c] * uinv[d][b]
        big = linalg.reduce_mod(big, p) if p else big
        return _fm(_restrict(big, basis, p), p)
    raise UnipotentError(f"unknown module {module!r}; expected one of {', '.join(MODULES)}")


# --- Jordan data and centralizers --------------------------------------------


def _rank_sequence(mat: FieldMatrix) -> list[int]:
    n = mat.dim
    nil = _minus_identity(mat.rows, mat.p)
    ranks = [n]
    power = nil
    while ranks[-1]:
        r = linalg.rank(power, mat.p)
        if r == ranks[-1]:
            raise UnipotentError("matrix is not unipotent")
        ranks.append(r)
        power = linalg.field_matmul(power, nil, mat.p)
    return ranks


def jordan_type(mat: FieldMatrix) -> JordanType:
    """Partition read off from ``r_k = rank((M - 1)^k)``."""
    r = _rank_sequence(mat) + [0]
    parts = []
    for k in range(1, len(r) - 1):
        at_least_k = r[k - 1] - r[k]
        at_least_next = r[k] - r[k + 1]
        parts += [k] * (at_least_k - at_least_next)
    return JordanType(tuple(sorted(parts, reverse=True)))


def fixed_dim(mat: FieldMatrix) -> int:
    return mat.dim - linalg.rank(_minus_identity(mat.rows, mat.p), mat.p)


def lie_centralizer_dim(g: MatrixGroupModel, u: FieldMatrix, lie: str) -> int:
    """``dim {X in lie : u X u^{-1} = X}`` over the model's field."""
    if lie not in _COMPATIBLE[g.kind]:
        raise UnipotentError(f"{lie} is not compatible with {g.label}")
    m, p = g.size, g.p
    n2 = m * m
    rows = [list(r) for r in u.rows]

    def commutator_rows(extra):
        # (uX - Xu)[a][b] - extra * u[a][b]
        out = []
        for a in range(m):
            for b in range(m):
                row = [0] * (n2 + extra)
                for c in range(m):
                    row[c * m + b] += rows[a][c]
                    row[a * m + c] -= rows[c][b]
                if extra:
                    row[n2] = -rows[a][b]
                out.append(row)
        return out

    if lie == "pgl":
        # uXu^{-1} = X + cI  <=>  uX - Xu = c u ; scalars X = I give the trivial line
        eqs = commutator_rows(1)
        eqs = [[x % p for x in r] for r in eqs] if p else eqs
        return (n2 + 1) - linalg.rank(eqs, p) - 1
    eqs = _lie_equations(g, lie) + commutator_rows(0)
    eqs = [[x % p for x in r] for r in eqs] if p else eqs
    return n2 - linalg.rank(eqs, p)


# --- smoothness ------------------------------------------------------------


@dataclass(frozen=True)
class SmoothnessVerdict:
    center_smooth: bool
    centralizer_smooth: bool
    reason: str

    def to_json(self) -> dict:
        return {
            "center_smooth": self.center_smooth,
            "centralizer_smooth": self.centralizer_smooth,
            "reason": self.reason,
        }


def _ell_torsion(factors, ell) -> bool:
    return any(f and f % ell == 0 for f in factors)


def smoothness_verdict(d: RootDatum, ell: int) -> SmoothnessVerdict:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if _ell_torsion(torsion_invariants(d, "roots"), ell):
        return SmoothnessVerdict(False, False, f"X^*/ZR has {ell}-torsion: the center is not smooth")
    if not _ell_torsion(torsion_invariants(d, "coroots"), ell):
        return SmoothnessVerdict(True, True, f"no {ell}-torsion in X^*/ZR or X_*/ZR^vee")
    families = {c.label if c.family == "E" else c.family for c in d.components}
    blocked = []
    if ell == 2:
        blocked = sorted(f for f in families if f in ("B", "C", "D", "E7"))
    if ell == 3 and "E6" in families:
        blocked = ["E6"]
    if blocked:
        return SmoothnessVerdict(
            True, False, f"X_*/ZR^vee has {ell}-torsion and components {blocked} exclude l={ell}"
        )
    return SmoothnessVerdict(
        True, True, f"X_*/ZR^vee has {ell}-torsion but no component excludes l={ell}"
    )
