"""Finite-window models of largeness notions over the Gaussian integers.

The classical definitions (syndetic, piecewise syndetic, thick, IP, and
difference sets, plus their star-duals) quantify over all of Z[i].  Here
every statement is relativized to a square window {a+bi : |a|,|b| <= R},
optionally minus 0.  Universal quantifiers range only over the core
sub-window whose referenced translates stay representable, so verdicts
are monotone as R grows and edge truncation never manufactures false
negatives.  Star-duals are depth-parameterized: ``is_star_k(B, fam, k)``
asks whether the complement has a depth-k witness, which is decidable,
unlike the unbounded notion.

Detectors return a witness (the first in a documented canonical order)
where one exists, and None otherwise.  Caps keep exhaustive searches at
desk scale: finite-sums sequences at length 20, IP depth at 6, and
difference-set depth at 8.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from ._mix import point_value
from .gaussian import GaussInt, congruent_mod, parse_gauss_int, point_key

__all__ = [
    "DELTA_DEPTH_CAP",
    "FS_LENGTH_CAP",
    "GaussSet",
    "IP_DEPTH_CAP",
    "PsWitness",
    "Window",
    "as_seq",
    "box_points",
    "contains_delta",
    "contains_ip",
    "delta",
    "fs",
    "is_piecewise_syndetic",
    "is_star_k",
    "is_syndetic",
    "is_thick",
    "partial_sums",
]

FS_LENGTH_CAP = 20
IP_DEPTH_CAP = 6
DELTA_DEPTH_CAP = 8


@functools.lru_cache(maxsize=None)
def box_points(radius: int) -> tuple[GaussInt, ...]:
    """All lattice points with |re|,|im| <= radius, canonically ordered."""
    if radius < 0:
        raise ValueError("box radius must be nonnegative")
    pts = [
        GaussInt(a, b)
        for a in range(-radius, radius + 1)
        for b in range(-radius, radius + 1)
    ]
    return tuple(sorted(pts, key=point_key))


@functools.lru_cache(maxsize=None)
def _window_points(radius: int, include_zero: bool) -> tuple[GaussInt, ...]:
    pts = box_points(radius)
    if include_zero:
        return pts
    return tuple(p for p in pts if not p.is_zero())


@dataclass(frozen=True, slots=True)
class Window:
    """The truncated universe {a+bi : |a|,|b| <= radius}, optionally minus 0."""

    radius: int
    include_zero: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.radius, int) or self.radius < 1:
            raise ValueError("window radius must be a positive integer")

    def contains(self, z: GaussInt) -> bool:
        if z.is_zero() and not self.include_zero:
            return False
        return abs(z.re) <= self.radius and abs(z.im) <= self.radius

    def points(self) -> tuple[GaussInt, ...]:
        """Universe points in canonical (norm, angle) order."""
        return _window_points(self.radius, self.include_zero)

    def to_json_dict(self) -> dict:
        return {"radius": self.radius, "include_zero": self.include_zero}


@dataclass(frozen=True, slots=True)
class GaussSet:
    """A subset of a window; complement is always taken within the window."""

    window: Window
    points: frozenset[GaussInt]
    description: Optional[str] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        pts = frozenset(self.points)
        for p in pts:
            if not isinstance(p, GaussInt):
                raise TypeError("GaussSet points must be GaussInt")
            if not self.window.contains(p):
                raise ValueError(f"point {p} outside window radius {self.window.radius}")
        object.__setattr__(self, "points", pts)

    def contains(self, z: GaussInt) -> bool:
        return z in self.points

    def complement(self) -> "GaussSet":
        comp = frozenset(self.window.points()) - self.points
        return GaussSet(self.window, comp, description="complement")

    def sorted_points(self) -> tuple[GaussInt, ...]:
        return tuple(sorted(self.points, key=point_key))

    def __len__(self) -> int:
        return len(self.points)

    # -- construction ----------------------------------------------------

    @classmethod
    def from_predicate(
        cls,
        window: Window,
        pred: Callable[[GaussInt], bool],
        description: Optional[str] = None,
    ) -> "GaussSet":
        return cls(window, frozenset(p for p in window.points() if pred(p)), description)

    @classmethod
    def from_rule(cls, window: Window, rule: dict, default_seed: int = 0) -> "GaussSet":
        name = rule.get("name")
        if name == "residue-class":
            m = parse_gauss_int(str(rule["modulus"]))
            res = parse_gauss_int(str(rule.get("residue", "0")))
            if m.is_zero():
                raise ValueError("residue-class modulus must be nonzero")
            return cls.from_predicate(
                window,
                lambda z: congruent_mod(z, res, m),
                description=f"residue-class:{res} mod {m}",
            )
        if name == "norm-threshold":
            lo = int(rule.get("min_norm", 0))
            hi = rule.get("max_norm")
            hi_int = None if hi is None else int(hi)
            return cls.from_predicate(
                window,
                lambda z: lo <= z.norm() and (hi_int is None or z.norm() <= hi_int),
                description=f"norm-threshold:[{lo},{'inf' if hi_int is None else hi_int}]",
            )
        if name == "real-parity":
            parity = rule.get("parity", "even")
            if parity not in ("even", "odd"):
                raise ValueError(f"real-parity wants 'even' or 'odd', got {parity!r}")
            want = 0 if parity == "even" else 1
            return cls.from_predicate(
                window,
                lambda z: z.re % 2 == want,
                description=f"real-parity:{parity}",
            )
        if name == "random":
            seed = int(rule.get("seed", default_seed))
            density = float(rule.get("density", 0.5))
            if not 0.0 <= density <= 1.0:
                raise ValueError("random-rule density must lie in [0, 1]")
            threshold = int(density * 2**64)
            return cls.from_predicate(
                window,
                lambda z: point_value(seed, z.re, z.im) < threshold,
                description=f"random:seed={seed},density={density!r}",
            )
        raise ValueError(f"unknown set rule {name!r}")

    @classmethod
    def from_json_dict(cls, doc: dict, default_seed: int = 0) -> "GaussSet":
        wdoc = doc.get("window")
        if not isinstance(wdoc, dict) or "radius" not in wdoc:
            raise ValueError("set document needs window.radius")
        window = Window(int(wdoc["radius"]), bool(wdoc.get("include_zero", True)))
        if "points" in doc:
            pts = frozenset(parse_gauss_int(str(t)) for t in doc["points"])
            return cls(window, pts, description="explicit")
        if "rule" in doc:
            return cls.from_rule(window, doc["rule"], default_seed)
        raise ValueError("set document needs 'points' or 'rule'")

    def to_json_dict(self) -> dict:
        return {
            "window": self.window.to_json_dict(),
            "points": [str(p) for p in self.sorted_points()],
        }

    def describe(self) -> dict:
        return {
            "window": self.window.to_json_dict(),
            "kind": self.description or "explicit",
            "size": len(self.points),
        }


# ---------------------------------------------------------------------------
# Sequences, finite sums, differences
# ---------------------------------------------------------------------------


def as_seq(entries: Iterable[GaussInt]) -> tuple[GaussInt, ...]:
    """Validate a sequence: nonempty with nonzero entries.

    Repeats are allowed here; the witness searches below only ever emit
    distinct-entry sequences, but sum/difference enumeration is well
    defined either way.
    """
    seq = tuple(entries)
    if not seq:
        raise ValueError("sequence must be nonempty")
    for i, x in enumerate(seq, start=1):
        if not isinstance(x, GaussInt):
            raise TypeError("sequence entries must be GaussInt")
        if x.is_zero():
            raise ValueError(f"sequence entry {i} is zero")
    return seq


def fs(x: Iterable[GaussInt]) -> frozenset[GaussInt]:
    """All finite sums over nonempty index sets of the sequence."""
    seq = as_seq(x)
    if len(seq) > FS_LENGTH_CAP:
        raise ValueError(f"sequence length {len(seq)} exceeds fs cap {FS_LENGTH_CAP}")
    sums: set[GaussInt] = set()
    for entry in seq:
        sums |= {s + entry for s in sums}
        sums.add(entry)
    return frozenset(sums)


def delta(x: Iterable[GaussInt]) -> frozenset[GaussInt]:
    """Forward differences {x_m - x_n : n < m}."""
    seq = as_seq(x)
    if len(seq) < 2:
        raise ValueError("difference set needs a sequence of length >= 2")
    return frozenset(
        seq[m] - seq[n] for m in range(1, len(seq)) for n in range(m)
    )


def partial_sums(x: Iterable[GaussInt]) -> tuple[GaussInt, ...]:
    """y_n = x_1 + ... + x_n; errors if any y_n is zero or repeats."""
    seq = as_seq(x)
    out: list[GaussInt] = []
    acc = GaussInt(0, 0)
    for i, entry in enumerate(seq, start=1):
        acc = acc + entry
        if acc.is_zero():
            raise ValueError(f"partial sum y_{i} is zero")
        if acc in out:
            raise ValueError(f"partial sum y_{i} repeats an earlier value")
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# Detectors
# ---------------------------------------------------------------------------


def is_syndetic(B: GaussSet, g_radius: int) -> Optional[tuple[GaussInt, ...]]:
    """Translate set G within g_radius covering the core sub-window, or None.

    Coverage means every universe point s with |Re s|,|Im s| <= R - g_radius
    has some t in G with s + t in B.  G is built greedily over candidate
    translates in canonical order, so output is deterministic; an empty
    tuple is a valid (vacuous) witness when the core is empty.
    """
    radius = B.window.radius
    if g_radius < 1:
        raise ValueError("g radius must be >= 1")
    if g_radius > radius:
        raise ValueError("g radius exceeds window radius")
    margin = radius - g_radius
    core = [s for s in B.window.points() if abs(s.re) <= margin and abs(s.im) <= margin]
    remaining = set(core)
    chosen: list[GaussInt] = []
    for t in box_points(g_radius):
        if not remaining:
            break
        newly = [s for s in remaining if (s + t) in B.points]
        if newly:
            chosen.append(t)
            remaining.difference_update(newly)
    if remaining:
        return None
    return tuple(chosen)


@dataclass(frozen=True, slots=True)
class PsWitness:
    """Translates G and a placement x with (box(f) + x) covered by -t + B."""

    translates: tuple[GaussInt, ...]
    x: GaussInt


def is_piecewise_syndetic(
    B: GaussSet, g_radius: int, f_radius: int
) -> Optional[PsWitness]:
    """Witness that translates within g_radius cover some placed f-box.

    The pattern is the full box of radius f_radius (largeness in F is
    monotone, so the largest pattern at that scale suffices).  Placements
    x range over the core where every needed translate stays
    representable, i.e. |x| components <= R - g_radius - f_radius.
    """
    radius = B.window.radius
    if g_radius < 1 or f_radius < 1:
        raise ValueError("g and f radii must be >= 1")
    if g_radius + f_radius >= radius:
        raise ValueError("need g_radius + f_radius < window radius")
    pattern = box_points(f_radius)
    translates = box_points(g_radius)
    for x in box_points(radius - g_radius - f_radius):
        block = [x + d for d in pattern]
        if all(any((s + t) in B.points for t in translates) for s in block):
            remaining = set(block)
            chosen: list[GaussInt] = []
            for t in translates:
                if not remaining:
                    break
                newly = [s for s in remaining if (s + t) in B.points]
                if newly:
                    chosen.append(t)
                    remaining.difference_update(newly)
            return PsWitness(translates=tuple(chosen), x=x)
    return None


def is_thick(B: GaussSet, f_radius: int) -> Optional[GaussInt]:
    """Placement x with the whole box(f_radius) + x inside B, or None."""
    radius = B.window.radius
    if f_radius < 1:
        raise ValueError("f radius must be >= 1")
    if f_radius >= radius:
        raise ValueError("need f_radius < window radius")
    pattern = box_points(f_radius)
    for x in box_points(radius - f_radius):
        if all((x + d) in B.points for d in pattern):
            return x
    return None


def contains_ip(B: GaussSet, k: int) -> Optional[tuple[GaussInt, ...]]:
    """Length-k sequence with distinct entries whose finite sums all lie in B.

    Finite sums are order-insensitive, so candidates are enumerated as
    ascending index tuples over B's points in canonical order; the first
    witness in that order is returned, or None after exhausting the
    search.  Sums leaving the window count as outside B.
    """
    if k < 1:
        raise ValueError("ip depth must be >= 1")
    if k > IP_DEPTH_CAP:
        raise ValueError(f"ip depth {k} exceeds cap {IP_DEPTH_CAP}")
    cands = [p for p in B.sorted_points() if not p.is_zero()]
    member = B.points
    seq: list[GaussInt] = []
    sums: list[GaussInt] = []

    def grow(start: int) -> bool:
        if len(seq) == k:
            return True
        for idx in range(start, len(cands)):
            x = cands[idx]
            fresh = [s + x for s in sums]
            if any(f not in member for f in fresh):
                continue
            seq.append(x)
            sums.append(x)
            sums.extend(fresh)
            if grow(idx + 1):
                return True
            del sums[-(len(fresh) + 1):]
            seq.pop()
        return False

    return tuple(seq) if grow(0) else None


def contains_delta(B: GaussSet, k: int) -> Optional[tuple[GaussInt, ...]]:
    """Length-k sequence whose forward differences all lie in B, or None.

    Differences are order-sensitive, so ordered tuples of distinct nonzero
    window points are searched depth-first, each position in canonical
    order; the first witness in that order is returned.
    """
    if k < 2:
        raise ValueError("delta depth must be >= 2")
    if k > DELTA_DEPTH_CAP:
        raise ValueError(f"delta depth {k} exceeds cap {DELTA_DEPTH_CAP}")
    cands = [p for p in B.window.points() if not p.is_zero()]
    member = B.points
    seq: list[GaussInt] = []
    used: set[GaussInt] = set()

    def grow() -> bool:
        if len(seq) == k:
            return True
        for x in cands:
            if x in used:
                continue
            if any((x - prev) not in member for prev in seq):
                continue
            seq.append(x)
            used.add(x)
            if grow():
                return True
            seq.pop()
            used.remove(x)
        return False

    return tuple(seq) if grow() else None


def normalize_family(name: str, allowed: tuple[str, ...]) -> str:
    fam = str(name).strip().lower()
    if fam not in allowed:
        raise ValueError(f"family must be one of {allowed}, got {name!r}")
    return fam


def is_star_k(B: GaussSet, family: str, k: int) -> bool:
    """Depth-k star-dual: no depth-k witness of the family fits in B's complement."""
    fam = normalize_family(family, ("ip", "delta"))
    comp = B.complement()
    if fam == "ip":
        return contains_ip(comp, k) is None
    return contains_delta(comp, k) is None
