"""Geometry of numbers over integer lattices, exactly.

Lattices are stored as integer row bases over a common denominator, so dual
lattices stay exact.  Bodies are weighted sup-balls (boxes) and weighted
l1-balls (cross-polytopes); these two families are each other's duals.
Enumeration, successive minima and the Minkowski/transference diagnostics all
run in rational arithmetic with no floating point anywhere.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial, gcd, isqrt, lcm

MAX_ENUM_DIM = 8


class DimensionTooLarge(Exception):
    """Raised when an exact enumeration is requested in dimension > 8."""


class EnumerationBudgetExceeded(Exception):
    """Raised when lattice point enumeration visits more nodes than allowed."""


class BodyKind(Enum):
    SUP_BOX = "box"
    L1_CROSS = "cross"


@dataclass(frozen=True)
class WeightedBody:
    """Symmetric convex body given by positive per-coordinate weights.

    SUP_BOX:   {v : |v_i| <= w_i for all i}
    L1_CROSS:  {v : sum_i |v_i| / w_i <= 1}
    """

    kind: BodyKind
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        if not ws:
            raise ValueError("body needs at least one weight")
        if any(w <= 0 for w in ws):
            raise ValueError("body weights must be positive")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def box(cls, weights) -> "WeightedBody":
        return cls(BodyKind.SUP_BOX, tuple(Fraction(w) for w in weights))

    @classmethod
    def cross(cls, weights) -> "WeightedBody":
        return cls(BodyKind.L1_CROSS, tuple(Fraction(w) for w in weights))

    @property
    def dim(self) -> int:
        return len(self.weights)

    def volume(self) -> Fraction:
        prod = Fraction(1)
        for w in self.weights:
            prod *= 2 * w
        if self.kind is BodyKind.L1_CROSS:
            prod /= factorial(self.dim)
        return prod

    def norm(self, v) -> Fraction:
        return body_norm(v, self)


def body_norm(v, body: WeightedBody) -> Fraction:
    """Gauge of v: the least t >= 0 with v in t * body."""
    if len(v) != body.dim:
        raise ValueError("vector/body dimension mismatch")
    if body.kind is BodyKind.SUP_BOX:
        return max(abs(Fraction(x)) / w for x, w in zip(v, body.weights))
    return sum(abs(Fraction(x)) / w for x, w in zip(v, body.weights))


def bareiss_determinant(rows) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class IntegerLattice:
    """Full-rank lattice spanned by the rows of `basis`, divided by `denom`.

    The actual lattice is {(c @ basis) / denom : c integer row}.  Primal
    lattices use denom == 1; duals carry the common denominator so that all
    arithmetic stays in integers.  `covolume` is the exact covolume.
    """

    basis: tuple[tuple[int, ...], ...]
    denom: int = 1
    covolume: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.basis)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("basis must be a nonempty square matrix")
        if self.denom < 1:
            raise ValueError("denominator must be >= 1")
        object.__setattr__(self, "basis", rows)
        det = bareiss_determinant(rows)
        if det == 0:
            raise ValueError("basis is singular")
        object.__setattr__(self, "covolume", Fraction(abs(det), self.denom**n))

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class MinimaProfile:
    """Successive minima with attaining witnesses (true lattice vectors)."""

    lambdas: tuple[Fraction, ...]
    witnesses: tuple[tuple, ...]


def hermite_normal_form(rows) -> tuple[tuple[int, ...], ...]:
    """Row-style HNF of a full-rank square integer matrix.

    Upper triangular, positive diagonal, entries above each pivot reduced to
    [0, pivot).  Two row-spans are equal iff their HNFs are equal.
    """
    a = [list(r) for r in rows]
    n = len(a)
    for j in range(n):
        for i in range(j + 1, n):
            while a[i][j] != 0:
                if a[j][j] == 0:
                    a[j], a[i] = a[i], a[j]
                    continue
                q = a[i][j] // a[j][j]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[j])]
                if a[i][j] != 0:
                    a[j], a[i] = a[i], a[j]
        if a[j][j] == 0:
            raise ValueError("matrix is not full rank")
        if a[j][j] < 0:
            a[j] = [-x for x in a[j]]
        for i in range(j):
            q = a[i][j] // a[j][j]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[j])]
    return tuple(tuple(r) for r in a)


def same_lattice(l1: IntegerLattice, l2: IntegerLattice) -> bool:
    """Exact equality of the two lattices as point sets."""
    if l1.dim != l2.dim:
        return False
    s1 = [[x * l2.denom for x in row] for row in l1.basis]
    s2 = [[x * l1.denom for x in row] for row in l2.basis]
    return hermite_normal_form(s1) == hermite_normal_form(s2)


def _gram(rows) -> list[list[int]]:
    n = len(rows)
    return [[sum(rows[i][m] * rows[j][m] for m in range(n)) for j in range(n)] for i in range(n)]


def _gso_from_gram(G):
    """Gram-Schmidt data (mu, B) computed from a Gram matrix, exactly."""
    n = len(G)
    mu = [[Fraction(0)] * n for _ in range(n)]
    c = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            cij = Fraction(G[i][j]) - sum(mu[j][l] * c[i][l] for l in range(j))
            c[i][j] = cij
            mu[i][j] = cij / B[j]
        B[i] = Fraction(G[i][i]) - sum(mu[i][l] * c[i][l] for l in range(i))
        if B[i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
    return mu, B


def _round_frac(x: Fraction) -> int:
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def lll_reduce(lat: IntegerLattice, delta: Fraction = Fraction(99, 100)) -> IntegerLattice:
    """LLL-reduce the basis (delta = 0.99); the lattice itself is unchanged."""
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    n = lat.dim
    b = [list(r) for r in lat.basis]
    if n == 1:
        return lat
    G = _gram(b)
    mu, B = _gso_from_gram(G)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            r = _round_frac(mu[k][j])
            if r:
                new_kk = G[k][k] - 2 * r * G[k][j] + r * r * G[j][j]
                for i in range(n):
                    if i != k:
                        G[k][i] -= r * G[j][i]
                        G[i][k] = G[k][i]
                G[k][k] = new_kk
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                for l in range(j):
                    mu[k][l] -= r * mu[j][l]
                mu[k][j] -= r
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            b[k - 1], b[k] = b[k], b[k - 1]
            G[k - 1], G[k] = G[k], G[k - 1]
            for row in G:
                row[k - 1], row[k] = row[k], row[k - 1]
            mu, B = _gso_from_gram(G)
            k = max(k - 1, 1)
    return IntegerLattice(tuple(tuple(r) for r in b), lat.denom)


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


def _coeff_interval(z: Fraction, Q: Fraction) -> tuple[int, int]:
    """Integer c range with (c + z)**2 <= Q, via exact sqrt bracketing."""
    num, den = Q.numerator, Q.denominator
    hi_apx = Fraction(isqrt(num * den) + 1, den)  # strictly above sqrt(Q)
    lo = _ceil_frac(-hi_apx - z)
    hi = _floor_frac(hi_apx - z)
    while lo <= hi and (lo + z) * (lo + z) > Q:
        lo += 1
    while lo <= hi and (hi + z) * (hi + z) > Q:
        hi -= 1
    return lo, hi


def _enumerate_numerators(lat: IntegerLattice, body: WeightedBody, bound, max_nodes=None):
    """All numerator vectors c @ basis whose body gauge is <= bound.

    Works in the numerator space of the lattice (the true lattice vector is
    numerator / denom, and the gauge scales linearly).  Fincke-Pohst over the
    ellipsoid circumscribing the scaled body, then an exact gauge filter.
    """
    n = lat.dim
    if n > MAX_ENUM_DIM:
        raise DimensionTooLarge(f"enumeration limited to dimension {MAX_ENUM_DIM}")
    if body.dim != n:
        raise ValueError("body dimension must match lattice dimension")
    bound = Fraction(bound)
    if bound < 0:
        return []
    red = lll_reduce(lat)
    rows = [list(r) for r in red.basis]
    inv2 = [1 / (w * w) for w in body.weights]
    Gw = [
        [sum(Fraction(rows[i][m] * rows[j][m]) * inv2[m] for m in range(n)) for j in range(n)]
        for i in range(n)
    ]
    mu, B = _gso_from_gram(Gw)
    # sup box of gauge s sits inside the ellipsoid sum (v_i/w_i)^2 <= n s^2;
    # the cross-polytope of gauge s sits inside radius^2 = s^2.
    R2 = bound * bound * (n if body.kind is BodyKind.SUP_BOX else 1)
    out = []
    nodes = 0
    zero = Fraction(0)

    def descend(i, T, centers, vec):
        nonlocal nodes
        lo, hi = _coeff_interval(centers[i], T / B[i])
        for ci in range(lo, hi + 1):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise EnumerationBudgetExceeded(f"enumeration exceeded {max_nodes} nodes")
            dvi = ci + centers[i]
            T2 = T - B[i] * dvi * dvi
            v2 = [x + ci * y for x, y in zip(vec, rows[i])] if ci else vec
            if i == 0:
                if body_norm(v2, body) <= bound:
                    out.append(tuple(v2))
            else:
                centers2 = [centers[j] + ci * mu[i][j] for j in range(i)] if ci else centers[:i]
                descend(i - 1, T2, centers2, v2)

    descend(n - 1, R2, [zero] * n, [0] * n)
    out.sort()
    return out


def enumerate_lattice_points(lat: IntegerLattice, body: WeightedBody, scale=1, max_nodes=None):
    """Exactly the lattice vectors v with gauge_body(v) <= scale, sorted.

    Includes the origin whenever scale >= 0.  For a lattice with denominator,
    vectors are returned as tuples of Fractions.
    """
    numerators = _enumerate_numerators(lat, body, Fraction(scale) * lat.denom, max_nodes)
    if lat.denom == 1:
        return numerators
    return [tuple(Fraction(x, lat.denom) for x in v) for v in numerators]


def _span_forms(vectors, n):
    """Rational linear forms whose common kernel is exactly span(vectors)."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                coef = rows[i][col]
                rows[i] = [a - coef * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(n) if c not in pivots]
    forms = []
    for fcol in free:
        eta = [Fraction(0)] * n
        eta[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            eta[pcol] = -rows[i][fcol]
        forms.append(eta)
    return forms


_PROJECTION_CAP = 64


def _box_projections(rows, weights, n, cap=_PROJECTION_CAP):
    """Per-level Fourier-Motzkin projections of the coordinate box.

    A point sum_l c_l rows[l] of gauge <= g satisfies |coordinate m| <= g*w_m
    (exactly the box gauge; a necessary condition for the cross).  Entry i of
    the result is a list of constraints (a, beta) meaning

        sum_{l >= i} a[l] * c_l  <=  beta * g

    obtained by eliminating c_0..c_{i-1}, so at level i the interval for c_i
    follows from the already fixed outer coefficients and the current radius.
    Dropping constraints (the cap) only widens intervals; the search stays
    complete.
    """
    cur = []
    for m in range(n):
        a = [Fraction(rows[l][m]) for l in range(n)]
        if any(a):
            w = Fraction(weights[m])
            cur.append((a, w))
            cur.append(([-x for x in a], w))
    levels = [cur]
    for i in range(n - 1):
        pos = [c for c in cur if c[0][i] > 0]
        neg = [c for c in cur if c[0][i] < 0]
        zero = [c for c in cur if not c[0][i]]
        derived = []
        for ap, bp in pos:
            for an, bn in neg:
                s, t = -an[i], ap[i]
                a = [s * x + t * y for x, y in zip(ap, an)]
                if not any(a[i + 1 :]):
                    continue
                scale = max(abs(x) for x in a[i + 1 :])
                derived.append((tuple(x / scale for x in a), (s * bp + t * bn) / scale))
        seen = {}
        for a, beta in derived:
            if a in seen:
                seen[a] = min(seen[a], beta)
            else:
                seen[a] = beta
        merged = zero + [(list(a), beta) for a, beta in sorted(seen.items())]
        if len(merged) > cap:
            merged.sort(key=lambda c: (sum(1 for x in c[0] if x), c[1]))
            merged = merged[:cap]
        cur = merged
        levels.append(cur)
    return levels


def _argmin_shift(v, s, body):
    """Integer t minimizing the body gauge of v - t*s, exactly.

    The gauge along the line is convex piecewise linear, so the minimizer is
    the floor or ceiling of a real breakpoint; candidates are the per-term
    zeros and, for the box, the pairwise crossings.
    """
    cands = {Fraction(0)}
    terms = []  # (value at t=0, slope) of coordinate_m / w_m
    for vm, sm, wm in zip(v, s, body.weights):
        terms.append((Fraction(vm) / wm, Fraction(sm) / wm))
        if sm:
            cands.add(Fraction(vm, sm))
    for a, (p, q) in enumerate(terms):
        for p2, q2 in terms[a + 1 :]:
            for sgn in (1, -1):
                den = q - sgn * q2
                if den:
                    cands.add((p - sgn * p2) / den)
    best_t, best_g = 0, body_norm(v, body)
    for c in cands:
        for t in {_floor_frac(c), _ceil_frac(c)}:
            if t != best_t:
                g = body_norm([x - t * y for x, y in zip(v, s)], body)
                if g < best_g:
                    best_t, best_g = t, g
    return best_t


def _polish(v, span_rows, body, passes=16):
    """Greedy integer reduction of v by span rows under the body gauge."""
    v = list(v)
    for _ in range(passes):
        moved = False
        for s in span_rows:
            t = _argmin_shift(v, s, body)
            if t:
                v = [x - t * y for x, y in zip(v, s)]
                moved = True
        if not moved:
            break
    return v


def _solve_square(mat, rhs):
    """Gaussian elimination over Fractions; None if singular."""
    k = len(rhs)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                fac = a[r][col]
                a[r] = [x - fac * y for x, y in zip(a[r], a[col])]
    return [a[r][k] for r in range(k)]


def _corner_candidate(v, span_rows, body):
    """Integer rounding of the real gauge minimizer of v - t*span_rows.

    The continuous problem is a small linear program; its optimum sits at a
    vertex where j+1 box constraints (or j vanishing cross terms) are tight,
    so enumerating coordinate subsets finds it exactly.  Span rows are short,
    hence rounding costs little.
    """
    j, n = len(span_rows), len(v)
    w = body.weights
    best_t = None
    best_g = None
    if body.kind == BodyKind.SUP_BOX:
        for msk in itertools.combinations(range(n), j + 1):
            for signs in itertools.product((1, -1), repeat=j):
                sigma = (1,) + signs
                mat = [
                    [span_rows[i][m] for i in range(j)] + [sigma[a] * w[m]]
                    for a, m in enumerate(msk)
                ]
                sol = _solve_square(mat, [v[m] for m in msk])
                if sol is None:
                    continue
                t, g = sol[:j], sol[j]
                if g < 0:
                    g = -g
                ok = all(
                    abs(v[m] - sum(t[i] * span_rows[i][m] for i in range(j))) <= g * w[m]
                    for m in range(n)
                )
                if ok and (best_g is None or g < best_g):
                    best_g, best_t = g, t
    else:
        for msk in itertools.combinations(range(n), j):
            mat = [[span_rows[i][m] for i in range(j)] for m in msk]
            t = _solve_square(mat, [v[m] for m in msk])
            if t is None:
                continue
            res = [v[m] - sum(t[i] * span_rows[i][m] for i in range(j)) for m in range(n)]
            g = sum(abs(r) / wm for r, wm in zip(res, w))
            if best_g is None or g < best_g:
                best_g, best_t = g, t
    if best_t is None:
        return None
    shifts = [sorted({_floor_frac(x), _ceil_frac(x)}) for x in best_t]
    out = None
    for combo in itertools.product(*shifts):
        cand = [
            x - sum(c * s[m] for c, s in zip(combo, span_rows))
            for m, x in enumerate(v)
        ]
        g = body_norm(cand, body)
        if out is None or g < out[0]:
            out = (g, cand)
    return out[1]


def _shortest_outside(lat: IntegerLattice, body: WeightedBody, witnesses, max_nodes=None):
    """Minimal (gauge, numerator) over lattice numerators outside span(witnesses).

    Branch and bound over the circumscribed ellipsoid of the body intersected
    with the projected box constraints, iterating coefficients nearest the
    continuous optimum first so the radius shrinks early.  Subtrees that stay
    inside the span are skipped entirely, and only strict improvements count,
    so ties with the incumbent never trigger plateau walks; together with the
    projections that keeps dense low-rank sublattices and skewed cosets from
    blowing up the search.
    """
    n = lat.dim
    forms = _span_forms(witnesses, n)

    def in_span(v) -> bool:
        return all(not sum(e * x for e, x in zip(eta, v)) for eta in forms)

    red = lll_reduce(lat)
    rows = [list(r) for r in red.basis]
    row_out = [not in_span(r) for r in rows]
    prefix_in = []
    acc = True
    for i in range(n):
        acc = acc and not row_out[i]
        prefix_in.append(acc)
    best = None  # (gauge, numerator tuple)

    def offer(v):
        nonlocal best
        g = body_norm(v, body)
        if best is None or g < best[0]:
            best = (g, tuple(v))

    span_rows = [rows[i] for i in range(n) if not row_out[i]]
    for i in range(n):
        if row_out[i]:
            offer(rows[i])
            if span_rows:
                # tighten the certificate; a smaller entry gauge keeps the
                # search intervals narrow from the start
                corner = _corner_candidate(rows[i], span_rows, body)
                if corner is not None:
                    offer(_polish(corner, span_rows, body))
                offer(_polish(rows[i], span_rows, body))
    inv2 = [1 / (w * w) for w in body.weights]
    Gw = [
        [sum(Fraction(rows[i][m] * rows[j][m]) * inv2[m] for m in range(n)) for j in range(n)]
        for i in range(n)
    ]
    mu, B = _gso_from_gram(Gw)
    factor = n if body.kind is BodyKind.SUP_BOX else 1
    nodes = 0

    proj = _box_projections(rows, body.weights, n)

    def descend(i, qa, centers, vec, cs):
        nonlocal nodes
        if prefix_in[i] and in_span(vec):
            return

        def interval(g):
            lim = g * g * factor - qa
            if lim < 0:
                return 1, 0
            lo, hi = _coeff_interval(centers[i], lim / B[i])
            if hi - lo > 12:
                # the ellipsoid slice is wide; cut it down to the strict box
                # sliver, so incumbent ties fall outside and plateaus vanish
                for a, beta in proj[i]:
                    known = sum(a[l] * cs[l] for l in range(i + 1, n) if cs[l])
                    rhs = beta * g - known
                    ai = a[i]
                    if ai > 0:
                        bnd = rhs / ai
                        if bnd <= hi:
                            hi = (bnd.numerator - 1) // bnd.denominator
                    elif ai < 0:
                        bnd = rhs / ai
                        if bnd >= lo:
                            lo = bnd.numerator // bnd.denominator + 1
                    elif rhs <= 0:
                        return 1, 0
                    if lo > hi:
                        return 1, 0
            return lo, hi

        def visit(ci):
            nonlocal nodes
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise EnumerationBudgetExceeded(f"enumeration exceeded {max_nodes} nodes")
            dvi = ci + centers[i]
            qa2 = qa + B[i] * dvi * dvi
            if qa2 >= best[0] * best[0] * factor:
                return
            v2 = [x + ci * y for x, y in zip(vec, rows[i])] if ci else list(vec)
            if i == 0:
                if any(v2) and not in_span(v2):
                    offer(v2)
            else:
                centers2 = [centers[j] + ci * mu[i][j] for j in range(i)] if ci else centers[:i]
                cs2 = list(cs)
                cs2[i] = ci
                descend(i - 1, qa2, centers2, v2, cs2)

        # bisect wide intervals: the gauge is a valley along the slice, so a
        # midpoint probe at least halves the gap to the true minimum and the
        # refreshed bounds cut away whatever can no longer win
        g_used = best[0]
        live = list(interval(g_used))
        z = centers[i]

        def refresh():
            nonlocal g_used
            if best[0] < g_used:
                g_used = best[0]
                live[0], live[1] = interval(g_used)

        def scan(a, b):
            refresh()
            a, b = max(a, live[0]), min(b, live[1])
            if a > b:
                return
            if b - a <= 12:
                for ci in sorted(range(a, b + 1), key=lambda c: (abs(c + z), c)):
                    refresh()
                    if live[0] <= ci <= live[1]:
                        visit(ci)
                return
            mid = (a + b) // 2
            visit(mid)
            if -z <= mid:
                scan(a, mid - 1)
                scan(mid + 1, b)
            else:
                scan(mid + 1, b)
                scan(a, mid - 1)

        scan(live[0], live[1])

    descend(n - 1, Fraction(0), [Fraction(0)] * n, [0] * n, [0] * n)
    return best[0], min(best[1], tuple(-x for x in best[1]))


def successive_minima(lat: IntegerLattice, body: WeightedBody, max_nodes=None) -> MinimaProfile:
    """Exact successive minima of the body gauge on the lattice.

    Stage j+1 finds the shortest lattice vector outside the span of the j
    witnesses already chosen, breaking gauge ties by the smaller numerator
    tuple.  The greedy choice attains the minima exactly: a shorter vector
    outside the span would extend the witnesses below the next minimum.
    """
    n = lat.dim
    if n > MAX_ENUM_DIM:
        raise DimensionTooLarge(f"minima computation limited to dimension {MAX_ENUM_DIM}")
    lams, wits = [], []
    while len(wits) < n:
        norm, vec = _shortest_outside(lat, body, wits, max_nodes)
        lams.append(norm / lat.denom)
        wits.append(vec)
    if lat.denom != 1:
        wits = [tuple(Fraction(x, lat.denom) for x in v) for v in wits]
    return MinimaProfile(tuple(lams), tuple(wits))


def _invert_matrix(rows):
    """Exact inverse of an integer matrix as Fractions (Gauss-Jordan)."""
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                coef = a[r][col]
                a[r] = [x - coef * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def dual_lattice(lat: IntegerLattice) -> IntegerLattice:
    """The dual lattice {y : <y, v> integer for all v in lat}, exactly.

    Basis is the inverse transpose of the primal basis, stored as an integer
    matrix over a common denominator.
    """
    n = lat.dim
    inv = _invert_matrix(lat.basis)
    # dual rows: denom * (A^{-1})^T
    entries = [[inv[j][i] * lat.denom for j in range(n)] for i in range(n)]
    den = 1
    for row in entries:
        for x in row:
            den = lcm(den, x.denominator)
    nums = [[int(x * den) for x in row] for row in entries]
    g = den
    for row in nums:
        for x in row:
            g = gcd(g, x)
    if g > 1:
        nums = [[x // g for x in row] for row in nums]
        den //= g
    return IntegerLattice(tuple(tuple(r) for r in nums), den)


def dual_body(body: WeightedBody) -> WeightedBody:
    """Polar dual: box(w) <-> cross(1/w).  An exact involution."""
    recip = tuple(1 / w for w in body.weights)
    if body.kind is BodyKind.SUP_BOX:
        return WeightedBody.cross(recip)
    return WeightedBody.box(recip)


def minkowski_second_ratio(lat: IntegerLattice, body: WeightedBody, max_nodes=None) -> Fraction:
    """(lambda_1 ... lambda_n) * Vol(body) / covolume, exactly.

    Always lies in [2^n / n!, 2^n].
    """
    prof = successive_minima(lat, body, max_nodes)
    prod = Fraction(1)
    for lam in prof.lambdas:
        prod *= lam
    return prod * body.volume() / lat.covolume
