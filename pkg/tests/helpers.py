"""Independent oracles and generators shared across the suite.

Everything here re-derives contracts from first principles over raw
integer pairs (a, b) meaning a+bi, sharing no arithmetic code with the
package.  Tests compare package output against these oracles.
"""

from __future__ import annotations

import random
from fractions import Fraction

from gramsey import GaussInt, GaussRational, MatrixQi


# ---------------------------------------------------------------------------
# Raw Gaussian arithmetic on int pairs
# ---------------------------------------------------------------------------


def norm_raw(a: int, b: int) -> int:
    return a * a + b * b


def mul_raw(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    return a * c - b * d, a * d + b * c


def divides_raw(c: int, d: int, a: int, b: int) -> bool:
    """True iff (c+di) divides (a+bi): cross-multiply by the conjugate."""
    n = c * c + d * d
    if n == 0:
        return False
    return (a * c + b * d) % n == 0 and (b * c - a * d) % n == 0


def points_in_disc(max_norm: int, include_zero: bool = False) -> list[tuple[int, int]]:
    """All (a, b) with norm at most max_norm."""
    out = []
    bound = int(max_norm**0.5) + 1
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            n = a * a + b * b
            if n <= max_norm and (include_zero or n > 0):
                out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# Seeded generators
# ---------------------------------------------------------------------------


def rand_gauss(rng: random.Random, m: int) -> GaussInt:
    return GaussInt(rng.randint(-m, m), rng.randint(-m, m))


def rand_nonzero_gauss(rng: random.Random, m: int) -> GaussInt:
    while True:
        z = rand_gauss(rng, m)
        if not z.is_zero():
            return z


def rand_rational(rng: random.Random, m: int) -> GaussRational:
    return GaussRational(rand_gauss(rng, m), rng.randint(1, m))


def rand_matrix(rng: random.Random, max_dim: int, max_abs: int) -> MatrixQi:
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return MatrixQi(
        [[rand_rational(rng, max_abs) for _ in range(cols)] for _ in range(rows)]
    )


def random_point_set(
    rng: random.Random, radius: int, include_zero: bool, density: float
) -> set[tuple[int, int]]:
    pts = set()
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            if a == 0 and b == 0 and not include_zero:
                continue
            if rng.random() < density:
                pts.add((a, b))
    return pts


# ---------------------------------------------------------------------------
# Largeness oracles: direct quantifier expansion over raw pairs
# ---------------------------------------------------------------------------


def _box(radius: int) -> list[tuple[int, int]]:
    return [
        (a, b)
        for a in range(-radius, radius + 1)
        for b in range(-radius, radius + 1)
    ]


def oracle_syndetic(
    pts: set[tuple[int, int]], radius: int, include_zero: bool, g: int
) -> bool:
    """Every core universe point is moved into the set by some small translate."""
    margin = radius - g
    translates = _box(g)
    for a in range(-margin, margin + 1):
        for b in range(-margin, margin + 1):
            if a == 0 and b == 0 and not include_zero:
                continue
            if not any((a + ta, b + tb) in pts for ta, tb in translates):
                return False
    return True


def oracle_piecewise_syndetic(
    pts: set[tuple[int, int]], radius: int, g: int, f: int
) -> bool:
    """Some placed f-box is fully covered by g-translates into the set."""
    translates = _box(g)
    pattern = _box(f)
    reach = radius - g - f
    for xa in range(-reach, reach + 1):
        for xb in range(-reach, reach + 1):
            if all(
                any((xa + pa + ta, xb + pb + tb) in pts for ta, tb in translates)
                for pa, pb in pattern
            ):
                return True
    return False


def oracle_thick(pts: set[tuple[int, int]], radius: int, f: int) -> bool:
    pattern = _box(f)
    reach = radius - f
    for xa in range(-reach, reach + 1):
        for xb in range(-reach, reach + 1):
            if all((xa + pa, xb + pb) in pts for pa, pb in pattern):
                return True
    return False


def oracle_ip(pts: set[tuple[int, int]], k: int) -> bool:
    """Exhaustive search for k distinct nonzero elements with all sums in the set."""
    elems = sorted(p for p in pts if p != (0, 0))

    def grow(start: int, chosen_sums: list[tuple[int, int]], depth: int) -> bool:
        if depth == k:
            return True
        for i in range(start, len(elems)):
            xa, xb = elems[i]
            fresh = [(sa + xa, sb + xb) for sa, sb in chosen_sums]
            if any(s not in pts for s in fresh):
                continue
            if grow(i + 1, chosen_sums + [(xa, xb)] + fresh, depth + 1):
                return True
        return False

    return grow(0, [], 0)


def oracle_delta(
    pts: set[tuple[int, int]], radius: int, include_zero: bool, k: int
) -> bool:
    """Exhaustive search for an ordered k-tuple with all forward differences in the set."""
    universe = [
        (a, b)
        for a in range(-radius, radius + 1)
        for b in range(-radius, radius + 1)
        if (a, b) != (0, 0)
    ]

    def grow(chosen: list[tuple[int, int]]) -> bool:
        if len(chosen) == k:
            return True
        for x in universe:
            if x in chosen:
                continue
            if any((x[0] - p[0], x[1] - p[1]) not in pts for p in chosen):
                continue
            if grow(chosen + [x]):
                return True
        return False

    return grow([])


# ---------------------------------------------------------------------------
# Exact rational matrix oracle (Fraction pairs, independent of GaussRational)
# ---------------------------------------------------------------------------


def frac_entries(matrix: MatrixQi) -> list[list[tuple[Fraction, Fraction]]]:
    return [
        [(Fraction(e.num.re, e.den), Fraction(e.num.im, e.den)) for e in row]
        for row in matrix.entries
    ]


def frac_apply(
    grid: list[list[tuple[Fraction, Fraction]]], z: tuple[GaussInt, ...]
) -> list[tuple[Fraction, Fraction]]:
    out = []
    for row in grid:
        acc_re = Fraction(0)
        acc_im = Fraction(0)
        for (er, ei), c in zip(row, z):
            acc_re += er * c.re - ei * c.im
            acc_im += er * c.im + ei * c.re
        out.append((acc_re, acc_im))
    return out


# ---------------------------------------------------------------------------
# Straight-line monochromatic search oracle
# ---------------------------------------------------------------------------


def oracle_search(matrix: MatrixQi, coloring, radius: int):
    """Double loop over the documented candidate order, images via Fractions.

    Returns (status, z, image, color, scanned, viable) mirroring
    search_monochromatic on the denominator-cleared matrix.
    """
    import itertools

    from gramsey import box_points, clear_denominators

    _, cleared = clear_denominators(matrix)
    grid = frac_entries(cleared)
    cands = [p for p in box_points(radius) if not p.is_zero()]
    scanned = viable = 0
    for z in itertools.product(cands, repeat=cleared.ncols):
        scanned += 1
        img = frac_apply(grid, z)
        pts = [GaussInt(int(re), int(im)) for re, im in img]
        if not all(coloring.window.contains(p) for p in pts):
            continue
        viable += 1
        colors = {coloring.color_of(p) for p in pts}
        if len(colors) == 1:
            return ("found", z, tuple(pts), colors.pop(), scanned, viable)
    return ("absent" if viable else "exhausted", None, None, None, scanned, viable)
