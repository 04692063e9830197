"""Exact arithmetic in the Gaussian integers Z[i] and the field Q(i).

Values are immutable and every operation is a pure function, so everything
here is safe to share across threads without synchronization.  Components
are arbitrary-precision Python ints; nothing overflows.

Conventions fixed here and relied on everywhere else:

* ``div_rem`` rounds each quotient coordinate to the nearest integer and
  breaks exact-half ties toward negative infinity, which keeps
  ``norm(r) <= norm(b)/2`` and makes outputs reproducible.
* The canonical representative of a unit class (the four associates
  ``z, iz, -z, -iz``) is the one with ``re > 0`` and ``im >= 0``; ``gcd``
  and prime enumeration always return it.
* Gaussian primes are enumerated by norm ascending, ties by largest real
  part, so ``choose_prime_exceeding`` is deterministic.
"""

from __future__ import annotations

import functools
import math
import re as _regex
from dataclasses import dataclass

__all__ = [
    "GaussInt",
    "GaussRational",
    "UNITS",
    "canonical_associate",
    "canonical_residue",
    "choose_prime_exceeding",
    "congruent_mod",
    "div_rem",
    "divides",
    "exact_div",
    "gcd",
    "is_gaussian_prime",
    "is_rational_prime",
    "parse_gauss_int",
    "parse_gauss_rational",
    "point_key",
    "prime_with_norm_exceeding",
    "residue_system",
]


@dataclass(frozen=True, slots=True)
class GaussInt:
    """Gaussian integer ``re + im*i``."""

    re: int = 0
    im: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.re, int) or not isinstance(self.im, int):
            raise TypeError("GaussInt components must be int")

    # -- basic structure -------------------------------------------------

    def norm(self) -> int:
        """Field norm ``re**2 + im**2``; multiplicative and zero only at 0."""
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(value) -> "GaussInt | None":
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, int):
            return GaussInt(value, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}i"
        if self.re == 0:
            return imag
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        return f"{self.re}{sign}{'i' if mag == 1 else f'{mag}i'}"


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)

#: The four units of Z[i], in rotation order.
UNITS = (ONE, I, GaussInt(-1, 0), GaussInt(0, -1))


@dataclass(frozen=True, slots=True)
class GaussRational:
    """Element of Q(i) stored as ``num / den`` with ``den > 0``.

    Construction normalizes: the sign of ``den`` is absorbed into ``num``
    and the integer gcd of (num.re, num.im, den) is divided out, so equal
    values compare and hash equal.
    """

    num: GaussInt = ZERO
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if isinstance(num, int):
            num = GaussInt(num, 0)
        if not isinstance(num, GaussInt) or not isinstance(den, int):
            raise TypeError("GaussRational takes a GaussInt numerator and int denominator")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.re, num.im, den)
        if g > 1:
            num = GaussInt(num.re // g, num.im // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_integral(self) -> bool:
        return self.den == 1

    def as_gauss_int(self) -> GaussInt:
        if self.den != 1:
            raise ValueError(f"{self} is not a Gaussian integer")
        return self.num

    # -- field operations ------------------------------------------------

    @staticmethod
    def _coerce(value) -> "GaussRational | None":
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, GaussInt):
            return GaussRational(value, 1)
        if isinstance(value, int):
            return GaussRational(GaussInt(value, 0), 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.num, self.den)

    def inverse(self) -> "GaussRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return GaussRational(self.num.conj() * self.den, self.num.norm())

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"


QR_ZERO = GaussRational(ZERO)
QR_ONE = GaussRational(ONE)


# ---------------------------------------------------------------------------
# Euclidean structure
# ---------------------------------------------------------------------------


def _round_half_down(p: int, q: int) -> int:
    """Nearest integer to p/q for q > 0; exact halves round toward -inf."""
    return -((q - 2 * p) // (2 * q))


def div_rem(a: GaussInt, b: GaussInt) -> tuple[GaussInt, GaussInt]:
    """Euclidean division: a = q*b + r with ``norm(r) <= norm(b)/2``.

    The quotient is the componentwise nearest-integer rounding of
    ``a*conj(b)/norm(b)``; half-ties round toward negative infinity.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero Gaussian integer")
    nb = b.norm()
    p = a * b.conj()
    q = GaussInt(_round_half_down(p.re, nb), _round_half_down(p.im, nb))
    return q, a - q * b


def divides(d: GaussInt, z: GaussInt) -> bool:
    """True iff d is nonzero and divides z in Z[i]."""
    if d.is_zero():
        return False
    return div_rem(z, d)[1].is_zero()


def exact_div(z: GaussInt, d: GaussInt) -> GaussInt:
    q, r = div_rem(z, d)
    if not r.is_zero():
        raise ValueError(f"{d} does not divide {z}")
    return q


def canonical_associate(z: GaussInt) -> GaussInt:
    """The unique associate of z with ``re > 0`` and ``im >= 0`` (0 maps to 0)."""
    if z.is_zero():
        return z
    for _ in range(4):
        if z.re > 0 and z.im >= 0:
            return z
        z = z * I
    raise AssertionError("unreachable: every nonzero class has a canonical member")


def gcd(a: GaussInt, b: GaussInt) -> GaussInt:
    """Greatest common divisor, canonical-associate normalized.

    Divides both inputs, and every common divisor divides it.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, div_rem(a, b)[1]
    return canonical_associate(a)


def congruent_mod(t: GaussInt, l: GaussInt, r: GaussInt) -> bool:
    """True iff t - l is divisible by r in Z[i].  Requires r != 0."""
    if r.is_zero():
        raise ValueError("congruence modulus must be nonzero")
    return div_rem(t - l, r)[1].is_zero()


def point_key(z: GaussInt) -> tuple[int, int, int]:
    """Total-order key: norm ascending, then angle ascending from the positive real axis.

    The angle comparison is exact: within one norm shell, the upper half
    plane (including the positive real axis) comes first with real part
    descending, then the lower half with real part ascending.
    """
    if z.im > 0 or (z.im == 0 and z.re > 0):
        return (z.norm(), 0, -z.re)
    return (z.norm(), 1, z.re)


def canonical_residue(z: GaussInt, m: GaussInt) -> GaussInt:
    """The least element of ``z + m*Z[i]`` in ``point_key`` order.

    Class members within norm(m)/2 of the remainder differ from it by
    delta*m with norm(delta) <= 2, so scanning the nine small deltas
    reaches the class minimum.
    """
    if m.is_zero():
        raise ValueError("residue modulus must be nonzero")
    r = div_rem(z, m)[1]
    candidates = (r + GaussInt(a, b) * m for a in (-1, 0, 1) for b in (-1, 0, 1))
    return min(candidates, key=point_key)


@functools.lru_cache(maxsize=None)
def residue_system(m: GaussInt) -> tuple[GaussInt, ...]:
    """All norm(m) canonical residues mod m, sorted in ``point_key`` order."""
    if m.is_zero():
        raise ValueError("residue modulus must be nonzero")
    s = math.isqrt(m.norm()) + 1
    reps = {
        canonical_residue(GaussInt(a, b), m)
        for a in range(-s, s + 1)
        for b in range(-s, s + 1)
    }
    assert len(reps) == m.norm()
    return tuple(sorted(reps, key=point_key))


# ---------------------------------------------------------------------------
# Primes
# ---------------------------------------------------------------------------


def is_rational_prime(n: int) -> bool:
    """Trial-division primality for ordinary integers (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_gaussian_prime(z: GaussInt) -> bool:
    """True iff z is prime in Z[i].

    Either norm(z) is a rational prime, or z is a unit multiple of a
    rational prime congruent to 3 mod 4.
    """
    n = z.norm()
    if n <= 1:
        return False
    if is_rational_prime(n):
        return True
    if z.re == 0 or z.im == 0:
        p = abs(z.re) + abs(z.im)
        return p % 4 == 3 and is_rational_prime(p)
    return False


def prime_with_norm_exceeding(bound: int) -> GaussInt:
    """Smallest-norm Gaussian prime with norm strictly above ``bound``.

    Ties within a norm go to the largest real part; the result is always
    the canonical representative of its unit class.
    """
    n = max(bound, 1) + 1
    while True:
        a = math.isqrt(n)
        while a >= 1:
            b_sq = n - a * a
            b = math.isqrt(b_sq)
            if b * b == b_sq:
                z = GaussInt(a, b)
                if is_gaussian_prime(z):
                    return z
            a -= 1
        n += 1


def choose_prime_exceeding(bound: int) -> GaussInt:
    """Deterministic Gaussian prime r with ``norm(r) > bound**2``."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return prime_with_norm_exceeding(bound * bound)


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------
#
# Gaussian integer: "a+bi", "a-bi", "a", "bi" (also bare "i"/"-i"), spaces
# allowed anywhere.  Gaussian rational: "(a+bi)/d" with positive integer d,
# or any integer form; a numerator without both parts may drop the parens.
# str() emits forms that parse back to the same value.

_INT_RE = _regex.compile(r"[+-]?\d+\Z")
_IMAG_RE = _regex.compile(r"([+-]?)(\d*)i\Z")
_FULL_RE = _regex.compile(r"([+-]?\d+)([+-]\d*)i\Z")


def parse_gauss_int(text: str) -> GaussInt:
    s = "".join(text.split())
    if not s:
        raise ValueError("empty Gaussian-integer token")
    m = _FULL_RE.fullmatch(s)
    if m:
        sign_digits = m.group(2)
        if sign_digits in ("+", "-"):
            im = 1 if sign_digits == "+" else -1
        else:
            im = int(sign_digits)
        return GaussInt(int(m.group(1)), im)
    m = _IMAG_RE.fullmatch(s)
    if m:
        digits = m.group(2)
        im = int(digits) if digits else 1
        if m.group(1) == "-":
            im = -im
        return GaussInt(0, im)
    if _INT_RE.fullmatch(s):
        return GaussInt(int(s), 0)
    raise ValueError(f"bad Gaussian integer {text!r}")


def parse_gauss_rational(text: str) -> GaussRational:
    s = "".join(text.split())
    if "/" in s:
        num_txt, _, den_txt = s.rpartition("/")
        if num_txt.startswith("(") and num_txt.endswith(")"):
            num_txt = num_txt[1:-1]
        if not den_txt.isdigit():
            raise ValueError(f"denominator must be a positive integer in {text!r}")
        den = int(den_txt)
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return GaussRational(parse_gauss_int(num_txt), den)
    return GaussRational(parse_gauss_int(s), 1)
