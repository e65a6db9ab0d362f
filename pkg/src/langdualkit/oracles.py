"""Brute-force oracles used to cross-check the fast algorithms.

None of these call the Iwahori-Matsumoto formula or the descent recursion:
lengths come from Cayley-graph search or from counting walls between
alcoves, Bruhat intervals from subword products, weight sets from exact
convex hulls, dimensions from Weyl's product formula and single
multiplicities from Kostant's partition function.
"""

from __future__ import annotations

import math
from collections import deque
from functools import lru_cache
from fractions import Fraction
from itertools import combinations, product

from . import linalg
from .affine_weyl import AffineWeylElt, omega_elements, simple_reflections
from .root_datum import RootDatum, coweight_with_pairings, weyl_group_elements, weyl_orbit


# --- lengths --------------------------------------------------------------


def _alcove_point(d: RootDatum):
    """A rational point of the fundamental alcove with ``<v0, a> = ht(a)/(H+1)``."""
    if not d.is_semisimple:
        raise ValueError("alcove oracle needs a semisimple datum")
    top = max(sum(a.coeffs) for a in d.positive)
    target = [Fraction(1, top + 1)] * d.semisimple_rank
    return linalg.solve([list(a) for a in d.simple_roots], target)


def alcove_length(w: AffineWeylElt) -> int:
    """Number of affine root hyperplanes separating ``A`` from ``w(A)``."""
    d = w.datum
    v0 = _alcove_point(d)
    wv = [sum(Fraction(m) * x for m, x in zip(row, v0)) + t for row, t in zip(w.finite.mat, w.translation)]
    return sum(abs(math.floor(linalg.dot(wv, a.vector))) for a in d.positive)


def bfs_ball(d: RootDatum, max_len: int) -> dict:
    """Distances from ``Omega`` in the Cayley graph over ``S`` (right multiplication)."""
    gens = simple_reflections(d)
    dist = {}
    queue = deque()
    for om in omega_elements(d):
        dist[om] = 0
        queue.append(om)
    while queue:
        w = queue.popleft()
        k = dist[w]
        if k == max_len:
            continue
        for s in gens:
            ws = w * s
            if ws not in dist:
                dist[ws] = k + 1
                queue.append(ws)
    return dist


def im_ball(d: RootDatum, max_len: int) -> set:
    """Every ``w`` with ``length(w) <= max_len``, found by exhaustive search.

    From ``l(x t(mu)) >= sum |<mu, a>| - N`` each simple pairing of ``mu``
    is bounded by ``max_len + N``.
    """
    from .affine_weyl import length

    bound = max_len + len(d.positive)
    finite = weyl_group_elements(d)
    out = set()
    for pairs in product(range(-bound, bound + 1), repeat=d.semisimple_rank):
        mu = coweight_with_pairings(d, list(pairs))
        if mu is None:
            continue
        for x in finite:
            w = AffineWeylElt(d, x(mu), x)  # x t(mu) = t(x(mu)) x
            if length(w) <= max_len:
                out.add(w)
    return out


# --- Bruhat order ----------------------------------------------------------


def reduced_words_by_bfs(ball: dict, d: RootDatum) -> dict:
    """One reduced word per element plus its Omega part, from BFS distances."""
    gens = simple_reflections(d)
    index = {s: i for s, i in zip(gens, _generator_labels(d))}
    out = {}
    for w in sorted(ball, key=lambda e: ball[e]):
        if ball[w] == 0:
            out[w] = (w, ())
            continue
        for s in gens:
            ws = w * s  # s is an involution
            if ball.get(ws) == ball[w] - 1:
                om, word = out[ws]
                out[w] = (om, word + (index[s],))
                break
    return out


def _generator_labels(d):
    return list(range(d.semisimple_rank)) + [d.rank + c for c in range(len(d.components))]


def subword_lower_set(d: RootDatum, omega: AffineWeylElt, word) -> set:
    """``{omega * prod(subword)}``: the Bruhat interval below ``omega * prod(word)``."""
    gens = dict(zip(_generator_labels(d), simple_reflections(d)))
    out = set()
    for mask in product((0, 1), repeat=len(word)):
        w = omega
        for keep, i in zip(mask, word):
            if keep:
                w = w * gens[i]
        out.add(w)
    return out


# --- convex hulls ----------------------------------------------------------


def _span_coordinates(points):
    """Rational coordinates of ``points`` in a basis of their linear span."""
    basis_rows, pivots = linalg.rref([list(p) for p in points])
    basis = basis_rows[: len(pivots)]
    coords = [[Fraction(p[c]) for c in pivots] for p in points]
    return basis, pivots, coords


def hull_contains(points, target) -> bool:
    """Exact membership of ``target`` in the convex hull of ``points``.

    The hull is described by facet inequalities found by testing every
    affinely independent ``k``-subset, with ``k`` the span dimension.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    target = tuple(Fraction(x) for x in target)
    if all(not any(p) for p in pts):
        return not any(target)
    basis, pivots, coords = _span_coordinates(pts)
    # target must lie in the span: its pivot coordinates reproduce it
    t = [target[c] for c in pivots]
    recon = [sum(ti * row[j] for ti, row in zip(t, basis)) for j in range(len(target))]
    if list(recon) != list(target):
        return False
    k = len(pivots)
    if k == 1:
        vals = [c[0] for c in coords]
        return min(vals) <= t[0] <= max(vals)
    unique = sorted(set(map(tuple, coords)))
    for sub in combinations(unique, k):
        # hyperplane n.x = c through the k points
        rows = [list(p) + [Fraction(-1)] for p in sub]
        null = linalg.nullspace(rows)
        if len(null) != 1:
            continue
        normal, c = null[0][:k], null[0][k]
        vals = [linalg.dot(normal, p) - c for p in unique]
        if all(v >= 0 for v in vals):
            sign = 1
        elif all(v <= 0 for v in vals):
            sign = -1
        else:
            continue
        if sign * (linalg.dot(normal, t) - c) < 0:
            return False
    return True


def hull_weight_set(d: RootDatum, lam) -> set:
    """``conv(W_f lam) cap (lam + ZR^vee)`` for a semisimple datum."""
    if not d.is_semisimple:
        raise ValueError("hull oracle needs a semisimple datum")
    orbit = sorted(weyl_orbit(d, lam))
    pair_orbit = [d.simple_pairings(p) for p in orbit]
    lo = [min(p[i] for p in pair_orbit) for i in range(d.semisimple_rank)]
    hi = [max(p[i] for p in pair_orbit) for i in range(d.semisimple_rank)]
    cols = linalg.transpose([list(c) for c in d.simple_coroots])
    out = set()
    for pairs in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        mu = coweight_with_pairings(d, list(pairs))
        if mu is None:
            continue
        diff = [a - b for a, b in zip(lam, mu)]
        sol = linalg.solve(cols, diff)
        if sol is None or any(x.denominator != 1 for x in sol):
            continue
        if hull_contains(orbit, mu):
            out.add(mu)
    return out


# --- dimensions ------------------------------------------------------------


def weyl_dimension(d: RootDatum, lam) -> int:
    """Weyl's product formula for the dual group, whose roots are the coroots."""
    rho2 = d.two_rho_check
    num = Fraction(1)
    for a in d.positive:
        h = linalg.dot(rho2, a.vector)
        num *= Fraction(2 * linalg.dot(lam, a.vector) + h, h)
    if num.denominator != 1:
        raise ArithmeticError("Weyl dimension is not an integer")  # sanity check
    return int(num)


def _partitions(steps: tuple, target: tuple) -> int:
    """Ways of writing ``target`` as an unordered sum of vectors from ``steps``."""

    @lru_cache(maxsize=None)
    def count(i, rest):
        if not any(rest):
            return 1
        if i == len(steps) or min(rest) < 0:
            return 0
        total = count(i + 1, rest)
        step = steps[i]
        nxt = tuple(r - s for r, s in zip(rest, step))
        if min(nxt) >= 0:
            total += count(i, nxt)
        return total

    return count(0, tuple(target))


def kostant_multiplicity(d: RootDatum, lam, mu) -> int:
    """``dim V(lam)_mu`` as the alternating sum of Kostant partition numbers."""
    from .weight_mult import coroot_coordinates

    steps = tuple(tuple(a.coroot_coeffs) for a in d.positive)
    rho2 = d.two_rho_check
    total = 0
    for w in weyl_group_elements(d):
        # w(lam + rho) - (mu + rho), with rho - w(rho) = (2rho - w(2rho)) / 2
        shift = [(a - b) // 2 for a, b in zip(w(rho2), rho2)]
        diff = [x + s - m for x, s, m in zip(w(lam), shift, mu)]
        coords = coroot_coordinates(d, diff)
        if coords is None or min(coords, default=0) < 0:
            continue
        total += (-1) ** w.length * _partitions(steps, tuple(coords))
    return total
