"""Exact linear algebra over ZZ, QQ and prime fields.

Matrices are plain lists of rows. Field routines take a characteristic ``p``:
``p == 0`` means the rationals (entries become :class:`fractions.Fraction`),
otherwise entries are reduced into ``range(p)``.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


# --- integer Smith normal form ------------------------------------------


def smith_normal_form(a):
    """Return ``(diag, U, V)`` with ``U @ a @ V`` diagonal.

    ``U`` and ``V`` are unimodular. ``diag`` lists the diagonal entries
    ``d_1 | d_2 | ...`` (all non-negative), of length ``min(rows, cols)``.
    Pivots are chosen as the entry of smallest absolute value in the
    remaining block, scanning rows then columns, so output is deterministic.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(map(int, r)) for r in a]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row dst += k * row src
        m[dst] = [x + k * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        for r in m:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    add_row(t, i, -q)
                if m[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    add_col(t, j, -q)
                if m[t][j]:
                    dirty = True
            if not dirty:
                # the pivot must divide the whole remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # move the smallest remainder into the pivot position
            best = None
            for i in range(t, rows):
                if m[i][t] and (best is None or abs(m[i][t]) < abs(m[best[0]][best[1]])):
                    best = (i, t)
            for j in range(t, cols):
                if m[t][j] and (best is None or abs(m[t][j]) < abs(m[best[0]][best[1]])):
                    best = (t, j)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    diag = [m[i][i] for i in range(min(rows, cols))]
    return diag, u, v


def invariant_factors(a):
    """Invariant factors of the cokernel of the integer matrix ``a``.

    Returns ``(torsion, free_rank)`` where ``torsion`` lists the factors
    greater than one in divisibility order.
    """
    rows = len(a)
    diag, _, _ = smith_normal_form(a) if rows and a[0] else ([], None, None)
    nonzero = [d for d in diag if d]
    return [d for d in nonzero if d > 1], rows - len(nonzero)


def solve_integer(a, b):
    """One integer solution ``x`` of ``a x = b``, or ``None`` if none exists."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag, u, v = smith_normal_form(a)
    c = matvec(u, b)
    y = [0] * cols
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i]:
                return None
            continue
        if c[i] % d:
            return None
        y[i] = c[i] // d
    return matvec(v, y)


# --- field elimination ---------------------------------------------------


def _coerce(m, p):
    if p:
        return reduce_mod(m, p)
    return [[Fraction(x) for x in row] for row in m]


def _inv(x, p):
    return pow(x, -1, p) if p else 1 / x


def rref(m, p=0):
    """Reduced row echelon form and pivot columns over QQ (``p=0``) or GF(p)."""
    a = _coerce(m, p)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = _inv(a[r][c], p)
        a[r] = [(x * inv) % p if p else x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                if p:
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
                else:
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m, p=0):
    if not m or not m[0]:
        return 0
    return len(rref(m, p)[1])


def nullspace(m, p=0, ncols=None):
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    if not m:
        n = ncols or 0
        return [[int(i == j) if p else Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    a, pivots = rref(m, p)
    cols = len(m[0])
    zero, one = (0, 1) if p else (Fraction(0), Fraction(1))
    basis = []
    for f in (c for c in range(cols) if c not in pivots):
        x = [zero] * cols
        x[f] = one
        for i, pc in enumerate(pivots):
            x[pc] = (-a[i][f]) % p if p else -a[i][f]
        basis.append(x)
    return basis


def solve(m, b, p=0):
    """One solution of ``m x = b`` over the field, or ``None``."""
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    a, pivots = rref(aug, p)
    cols = len(m[0])
    if cols in pivots:
        return None
    zero = 0 if p else Fraction(0)
    x = [zero] * cols
    for i, pc in enumerate(pivots):
        x[pc] = a[i][cols]
    return x


def inverse(m, p=0):
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    a, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in a]


def reduce_mod(m, p):
    """Reduce a rational matrix modulo ``p`` (denominators must be prime to ``p``)."""
    if not p:
        return [[Fraction(x) for x in row] for row in m]
    out = []
    for row in m:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} not invertible mod {p}")
            r.append(x.numerator * pow(x.denominator, -1, p) % p)
        out.append(r)
    return out


def field_matmul(a, b, p=0):
    c = matmul(a, b)
    return [[x % p for x in row] for row in c] if p else c
