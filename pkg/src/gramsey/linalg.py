"""Exact linear algebra over Q(i): the all-ones criterion and its dual.

For a u x v matrix A over Q(i) exactly one of two things is true: either
A*s = (1,...,1) has a solution s over Q(i), or some integer row vector
annihilates A on the left while having nonzero dot product with the
all-ones vector.  ``certify`` computes both sides and returns whichever
exists, asserting the dichotomy on every call.

Elimination is fraction-exact Gauss-Jordan with the pivot taken as the
first nonzero entry in column order; determinism matters more than speed
at the intended desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .gaussian import (
    GaussInt,
    GaussRational,
    QR_ONE,
    QR_ZERO,
    UNITS,
    canonical_associate,
    exact_div,
    gcd as gaussian_gcd,
    parse_gauss_int,
    parse_gauss_rational,
)

__all__ = [
    "IprCertificate",
    "MatrixQi",
    "ParseError",
    "VectorQi",
    "VectorZi",
    "certify",
    "clear_denominators",
    "find_obstruction",
    "format_matrix",
    "parse_matrix",
    "progression_matrix",
    "solve_all_ones",
    "verify_translation_identity",
]

VectorQi = tuple[GaussRational, ...]
VectorZi = tuple[GaussInt, ...]

SOLUTION = "solution"
OBSTRUCTION = "obstruction"


def _as_rational(value) -> GaussRational:
    r = GaussRational._coerce(value)
    if r is None:
        raise TypeError(f"cannot use {value!r} as a Q(i) scalar")
    return r


class MatrixQi:
    """Immutable u x v matrix with exact Q(i) entries."""

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[Iterable]) -> None:
        grid = tuple(tuple(_as_rational(e) for e in row) for row in rows)
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixQi is immutable")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def entry(self, i: int, j: int) -> GaussRational:
        return self.entries[i][j]

    def apply(self, vec: Sequence) -> VectorQi:
        """Exact matrix-vector product; raises on dimension mismatch."""
        if len(vec) != self.ncols:
            raise ValueError(f"vector length {len(vec)} != {self.ncols} columns")
        coerced = [_as_rational(x) for x in vec]
        out = []
        for row in self.entries:
            acc = QR_ZERO
            for e, x in zip(row, coerced):
                acc = acc + e * x
            out.append(acc)
        return tuple(out)

    def scaled(self, c) -> "MatrixQi":
        f = _as_rational(c)
        return MatrixQi((e * f for e in row) for row in self.entries)

    def transpose(self) -> "MatrixQi":
        return MatrixQi(zip(*self.entries))

    def is_integral(self) -> bool:
        return all(e.den == 1 for row in self.entries for e in row)

    def integer_entries(self) -> tuple[tuple[GaussInt, ...], ...]:
        """Entry grid as Gaussian integers; raises if any entry is fractional."""
        return tuple(tuple(e.as_gauss_int() for e in row) for row in self.entries)

    def __eq__(self, other):
        if not isinstance(other, MatrixQi):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"MatrixQi({self.nrows}x{self.ncols})"


def progression_matrix(l: int) -> MatrixQi:
    """The (l+1) x 2 arithmetic-progression matrix [[1,0],[1,1],...,[1,l]].

    Applied to (a, d) it produces a, a+d, ..., a+l*d.
    """
    if l < 1:
        raise ValueError("progression length l must be >= 1")
    return MatrixQi([[1, k] for k in range(l + 1)])


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------


def _rref(rows: list[list[GaussRational]], width: int) -> list[int]:
    """In-place Gauss-Jordan; pivots searched only in columns [0, width).

    Returns the pivot columns in order.  Rows may be longer than ``width``
    (augmented systems); trailing columns are carried along.
    """
    nrows = len(rows)
    pivots: list[int] = []
    pr = 0
    for pc in range(width):
        pivot_row = None
        for i in range(pr, nrows):
            if rows[i][pc]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = rows[pr][pc].inverse()
        rows[pr] = [e * inv for e in rows[pr]]
        for i in range(nrows):
            if i != pr and rows[i][pc]:
                f = rows[i][pc]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return pivots


def _solve(matrix: MatrixQi, target: VectorQi) -> Optional[VectorQi]:
    """Particular solution of A*x = target with free variables set to 0."""
    v = matrix.ncols
    aug = [list(row) + [target[i]] for i, row in enumerate(matrix.entries)]
    pivots = _rref(aug, v)
    for i in range(len(pivots), matrix.nrows):
        if aug[i][v]:
            return None
    x = [QR_ZERO] * v
    for r, c in enumerate(pivots):
        x[c] = aug[r][v]
    return tuple(x)


def _nullspace(matrix: MatrixQi) -> list[VectorQi]:
    """Basis of the right null space, one vector per free column, in column order."""
    rows = [list(row) for row in matrix.entries]
    pivots = _rref(rows, matrix.ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(matrix.ncols):
        if f in pivot_set:
            continue
        vec = [QR_ZERO] * matrix.ncols
        vec[f] = QR_ONE
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][f]
        basis.append(tuple(vec))
    return basis


def solve_all_ones(matrix: MatrixQi) -> Optional[VectorQi]:
    """Exact s with A*s = (1,...,1), or None if no solution exists over Q(i).

    Among multiple solutions, returns the one with all free variables 0
    under first-nonzero-column pivoting.
    """
    return _solve(matrix, (QR_ONE,) * matrix.nrows)


def _integerize(vec: VectorQi) -> VectorZi:
    """Clear denominators, divide out the Gaussian content, unit-normalize."""
    scale = math.lcm(*(e.den for e in vec))
    ints = [(e * scale).as_gauss_int() for e in vec]
    content = None
    for z in ints:
        if not z.is_zero():
            content = z if content is None else gaussian_gcd(content, z)
    assert content is not None
    content = canonical_associate(content)
    ints = [exact_div(z, content) for z in ints]
    first = next(z for z in ints if not z.is_zero())
    for mu in UNITS:
        lead = mu * first
        if lead.re > 0 and lead.im >= 0:
            return tuple(mu * z for z in ints)
    raise AssertionError("unreachable: some unit normalizes the leading entry")


def find_obstruction(matrix: MatrixQi) -> Optional[VectorZi]:
    """Integer vector u with u^T A = 0 and u . (1,...,1) != 0, or None.

    The left null space of A is scanned in basis order; the first basis
    vector with nonzero dot against the all-ones vector is cleared to
    Gaussian-integer entries with unit content and a canonical leading
    entry.  If every basis vector is orthogonal to all-ones, so is the
    whole left null space, and None is returned.
    """
    for w in _nullspace(matrix.transpose()):
        dot = QR_ZERO
        for e in w:
            dot = dot + e
        if dot:
            return _integerize(w)
    return None


@dataclass(frozen=True)
class IprCertificate:
    """Either a solution of A*s = all-ones or an integer dual obstruction."""

    kind: str
    solution: Optional[VectorQi] = None
    obstruction: Optional[VectorZi] = None

    def verify(self, matrix: MatrixQi) -> bool:
        """Re-check the certificate by direct multiplication, not the solver."""
        if self.kind == SOLUTION:
            if self.solution is None or len(self.solution) != matrix.ncols:
                return False
            for row in matrix.entries:
                acc = QR_ZERO
                for e, s in zip(row, self.solution):
                    acc = acc + e * s
                if acc != QR_ONE:
                    return False
            return True
        if self.kind == OBSTRUCTION:
            u = self.obstruction
            if u is None or len(u) != matrix.nrows:
                return False
            for j in range(matrix.ncols):
                acc = QR_ZERO
                for i in range(matrix.nrows):
                    acc = acc + GaussRational(u[i]) * matrix.entries[i][j]
                if acc:
                    return False
            dot = GaussInt(0, 0)
            for z in u:
                dot = dot + z
            if dot.is_zero():
                return False
            content = None
            for z in u:
                if not z.is_zero():
                    content = z if content is None else gaussian_gcd(content, z)
            return content is not None and content.norm() == 1
        return False

    def to_json_dict(self, matrix: MatrixQi) -> dict:
        entries = self.solution if self.kind == SOLUTION else self.obstruction
        verified = self.verify(matrix)
        if not verified:
            raise AssertionError("emitted certificate failed independent verification")
        return {
            "kind": self.kind,
            "entries": [str(e) for e in entries],
            "rows": matrix.nrows,
            "cols": matrix.ncols,
            "verified": True,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "IprCertificate":
        kind = doc.get("kind")
        tokens = doc.get("entries")
        if kind not in (SOLUTION, OBSTRUCTION) or not isinstance(tokens, list):
            raise ValueError("malformed certificate document")
        if kind == SOLUTION:
            return cls(kind=SOLUTION, solution=tuple(parse_gauss_rational(t) for t in tokens))
        return cls(kind=OBSTRUCTION, obstruction=tuple(parse_gauss_int(t) for t in tokens))


def certify(matrix: MatrixQi) -> IprCertificate:
    """Decide the all-ones alternative; exactly one branch always holds."""
    s = solve_all_ones(matrix)
    u = find_obstruction(matrix)
    if (s is None) == (u is None):
        raise RuntimeError(
            "elimination bug: solution and obstruction branches must be exclusive"
        )
    if s is not None:
        return IprCertificate(kind=SOLUTION, solution=s)
    return IprCertificate(kind=OBSTRUCTION, obstruction=u)


def clear_denominators(matrix: MatrixQi) -> tuple[int, MatrixQi]:
    """Least n >= 1 with n*A integral, together with n*A."""
    n = math.lcm(*(e.den for row in matrix.entries for e in row))
    return n, matrix.scaled(n)


def verify_translation_identity(
    matrix: MatrixQi,
    w: VectorZi,
    l: GaussInt,
    t: GaussInt,
    x: VectorZi,
) -> bool:
    """Check A*(t*w + x) == l*t*(1,...,1) + A*x with both sides computed independently.

    Requires A*w = l*(1,...,1) with l nonzero; that precondition is checked
    and violations raise.  Under the precondition the identity is linear
    algebra and the return value is always True.
    """
    if len(w) != matrix.ncols or len(x) != matrix.ncols:
        raise ValueError("vector length must match matrix columns")
    if l.is_zero():
        raise ValueError("translation scale l must be nonzero")
    l_rat = GaussRational(l)
    for e in matrix.apply(w):
        if e != l_rat:
            raise ValueError("precondition A*w = l*(1,...,1) does not hold")
    lhs = matrix.apply(tuple(t * wj + xj for wj, xj in zip(w, x)))
    shift = GaussRational(l * t)
    rhs = tuple(shift + e for e in matrix.apply(x))
    return lhs == rhs


# ---------------------------------------------------------------------------
# Matrix file format: first line "u v", then u lines of v tokens.
# ---------------------------------------------------------------------------


class ParseError(ValueError):
    """Malformed matrix file, with line/token coordinates in the message."""


def parse_matrix(text: str) -> MatrixQi:
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise ParseError("line 1: expected header 'u v'")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"line 1: expected two dimensions, got {len(header)} tokens")
    try:
        nrows, ncols = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"line 1: non-integer dimension in {header!r}") from None
    if nrows < 1 or ncols < 1:
        raise ParseError(f"line 1: dimensions must be >= 1, got {nrows} {ncols}")
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != nrows:
        raise ParseError(f"expected {nrows} matrix rows, found {len(body)}")
    rows = []
    for r, line in enumerate(body, start=2):
        tokens = line.split()
        if len(tokens) != ncols:
            raise ParseError(f"line {r}: expected {ncols} entries, got {len(tokens)}")
        row = []
        for c, tok in enumerate(tokens, start=1):
            try:
                row.append(parse_gauss_rational(tok))
            except ValueError as exc:
                raise ParseError(f"line {r}, token {c}: {exc}") from None
        rows.append(row)
    return MatrixQi(rows)


def format_matrix(matrix: MatrixQi) -> str:
    lines = [f"{matrix.nrows} {matrix.ncols}"]
    for row in matrix.entries:
        lines.append(" ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"
