"""Monochromatic image search and finite experiment drivers.

A coloring splits a window into k classes; ``search_monochromatic`` scans
candidate vectors in a documented canonical order for one whose image
lands entirely inside the window in a single class.  The experiment
functions re-enact, at finite scale, arguments whose full statements are
infinitary: each report carries a ``scope: "finite-window"`` field and
states only what was actually counted or found.

Candidate vectors are enumerated lexicographically by coordinate, each
coordinate running over lattice points in (norm, angle) order, so "first
witness" is well defined and reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from ._mix import point_value
from .gaussian import (
    GaussInt,
    canonical_residue,
    congruent_mod,
    parse_gauss_int,
    prime_with_norm_exceeding,
    residue_system,
)
from .largeness import (
    GaussSet,
    Window,
    box_points,
    contains_delta,
    contains_ip,
    is_piecewise_syndetic,
    is_thick,
    normalize_family,
)
from .linalg import (
    MatrixQi,
    SOLUTION,
    VectorZi,
    certify,
    clear_denominators,
)

__all__ = [
    "Coloring",
    "ImageCertificate",
    "SearchResult",
    "abundance_report",
    "congruence_proofcheck",
    "positivity_filter",
    "preimage_set",
    "preservation_experiment",
    "ramsey_refine",
    "search_monochromatic",
]

SCOPE = "finite-window"

RAMSEY_SAMPLE_CAP = 32


def _tokens(values: Optional[Iterable[GaussInt]]) -> Optional[list[str]]:
    if values is None:
        return None
    return [str(v) for v in values]


def _nonzero_box(radius: int) -> tuple[GaussInt, ...]:
    return tuple(p for p in box_points(radius) if not p.is_zero())


def _int_grid(matrix: MatrixQi) -> tuple[int, tuple[tuple[GaussInt, ...], ...]]:
    n, scaled = clear_denominators(matrix)
    return n, scaled.integer_entries()


def _image_times_n(
    grid: tuple[tuple[GaussInt, ...], ...], z: tuple[GaussInt, ...]
) -> list[GaussInt]:
    out = []
    for row in grid:
        acc_re = 0
        acc_im = 0
        for e, c in zip(row, z):
            acc_re += e.re * c.re - e.im * c.im
            acc_im += e.re * c.im + e.im * c.re
        out.append(GaussInt(acc_re, acc_im))
    return out


def _image_on_original(
    grid: tuple[tuple[GaussInt, ...], ...], n: int, z: tuple[GaussInt, ...]
) -> Optional[tuple[GaussInt, ...]]:
    """A*z as Gaussian integers, or None if some entry is fractional."""
    scaled = _image_times_n(grid, z)
    if n == 1:
        return tuple(scaled)
    out = []
    for e in scaled:
        if e.re % n or e.im % n:
            return None
        out.append(GaussInt(e.re // n, e.im // n))
    return tuple(out)


# ---------------------------------------------------------------------------
# Colorings
# ---------------------------------------------------------------------------


class Coloring:
    """A total coloring of a window with colors {0, ..., k-1}.

    Rule-based colorings are pure functions of the point (and a seed for
    the random rule), so equal inputs always produce equal colorings.
    """

    __slots__ = ("window", "colors", "kind", "_params", "_table", "_residue_index")

    def __init__(
        self,
        window: Window,
        colors: int,
        kind: str,
        params: Optional[Mapping] = None,
    ) -> None:
        if not isinstance(colors, int) or colors < 1:
            raise ValueError("coloring needs at least one color")
        params = dict(params or {})
        table: Optional[dict[GaussInt, int]] = None
        residue_index: Optional[dict[GaussInt, int]] = None
        if kind == "real-parity":
            if colors < 2:
                raise ValueError("real-parity coloring needs at least 2 colors")
        elif kind == "residue":
            m = params.get("modulus")
            if not isinstance(m, GaussInt) or m.is_zero():
                raise ValueError("residue coloring needs a nonzero GaussInt modulus")
            residue_index = {r: i for i, r in enumerate(residue_system(m))}
        elif kind == "norm-band":
            width = params.get("width")
            if not isinstance(width, int) or width < 1:
                raise ValueError("norm-band coloring needs integer width >= 1")
        elif kind == "random":
            seed = params.get("seed")
            if not isinstance(seed, int):
                raise ValueError("random coloring needs an integer seed")
        elif kind == "explicit":
            table = dict(params.get("assignment") or {})
            universe = set(window.points())
            if set(table) != universe:
                raise ValueError(
                    f"explicit assignment must cover the window exactly "
                    f"({len(table)} entries for {len(universe)} points)"
                )
            for p, c in table.items():
                if not isinstance(c, int) or not 0 <= c < colors:
                    raise ValueError(f"color {c!r} for {p} outside 0..{colors - 1}")
        else:
            raise ValueError(f"unknown coloring kind {kind!r}")
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "_params", params)
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_residue_index", residue_index)

    def __setattr__(self, name, value):
        raise AttributeError("Coloring is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def real_parity(cls, window: Window, colors: int = 2) -> "Coloring":
        return cls(window, colors, "real-parity")

    @classmethod
    def residue(cls, window: Window, colors: int, modulus: GaussInt) -> "Coloring":
        return cls(window, colors, "residue", {"modulus": modulus})

    @classmethod
    def norm_band(cls, window: Window, colors: int, width: int) -> "Coloring":
        return cls(window, colors, "norm-band", {"width": width})

    @classmethod
    def seeded_random(cls, window: Window, colors: int, seed: int) -> "Coloring":
        return cls(window, colors, "random", {"seed": seed})

    @classmethod
    def explicit(
        cls, window: Window, colors: int, assignment: Mapping[GaussInt, int]
    ) -> "Coloring":
        return cls(window, colors, "explicit", {"assignment": dict(assignment)})

    @classmethod
    def from_json_dict(cls, doc: dict, default_seed: int = 0) -> "Coloring":
        wdoc = doc.get("window")
        if not isinstance(wdoc, dict) or "radius" not in wdoc:
            raise ValueError("coloring document needs window.radius")
        window = Window(int(wdoc["radius"]), bool(wdoc.get("include_zero", True)))
        if "colors" not in doc:
            raise ValueError("coloring document needs a colors count")
        colors = int(doc["colors"])
        if "assignment" in doc:
            table = {}
            for pair in doc["assignment"]:
                token, color = pair
                table[parse_gauss_int(str(token))] = int(color)
            return cls.explicit(window, colors, table)
        rule = doc.get("rule")
        if not isinstance(rule, dict):
            raise ValueError("coloring document needs 'assignment' or 'rule'")
        name = rule.get("name")
        if name == "real-parity":
            return cls.real_parity(window, colors)
        if name == "residue":
            return cls.residue(window, colors, parse_gauss_int(str(rule["modulus"])))
        if name == "norm-band":
            return cls.norm_band(window, colors, int(rule.get("width", 1)))
        if name == "random":
            return cls.seeded_random(window, colors, int(rule.get("seed", default_seed)))
        raise ValueError(f"unknown coloring rule {name!r}")

    # -- lookup ----------------------------------------------------------

    def color_of(self, z: GaussInt) -> int:
        if not self.window.contains(z):
            raise ValueError(f"{z} lies outside the coloring window")
        if self.kind == "real-parity":
            return z.re % 2
        if self.kind == "residue":
            rep = canonical_residue(z, self._params["modulus"])
            return self._residue_index[rep] % self.colors
        if self.kind == "norm-band":
            return (z.norm() // self._params["width"]) % self.colors
        if self.kind == "random":
            return point_value(self._params["seed"], z.re, z.im) % self.colors
        return self._table[z]

    def describe(self) -> dict:
        out = {
            "window": self.window.to_json_dict(),
            "colors": self.colors,
            "kind": self.kind,
        }
        if self.kind == "residue":
            out["modulus"] = str(self._params["modulus"])
        elif self.kind == "norm-band":
            out["width"] = self._params["width"]
        elif self.kind == "random":
            out["seed"] = self._params["seed"]
        elif self.kind == "explicit":
            out["assignment_size"] = len(self._table)
        return out


# ---------------------------------------------------------------------------
# Monochromatic image search
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ImageCertificate:
    """A vector z with nonzero entries whose image is in-window and one color."""

    z: VectorZi
    color: int
    image: tuple[GaussInt, ...]

    def verify(self, matrix: MatrixQi, coloring: Coloring) -> bool:
        """Independent recomputation: exact image, window membership, colors."""
        if len(self.z) != matrix.ncols or len(self.image) != matrix.nrows:
            return False
        if any(c.is_zero() for c in self.z):
            return False
        for rat, claimed in zip(matrix.apply(self.z), self.image):
            if not rat.is_integral() or rat.as_gauss_int() != claimed:
                return False
        for p in self.image:
            if not coloring.window.contains(p):
                return False
            if coloring.color_of(p) != self.color:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "z": [str(c) for c in self.z],
            "color": self.color,
            "image": [str(p) for p in self.image],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ImageCertificate":
        try:
            z = tuple(parse_gauss_int(t) for t in doc["z"])
            image = tuple(parse_gauss_int(t) for t in doc["image"])
            color = int(doc["color"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed image certificate: {exc}") from None
        return cls(z=z, color=color, image=image)


@dataclass(frozen=True, slots=True)
class SearchResult:
    """Outcome of a monochromatic scan.

    ``absent`` means in-window candidates existed but none was
    monochromatic; ``exhausted`` means no candidate image stayed inside
    the window at all.
    """

    status: str
    certificate: Optional[ImageCertificate]
    scanned: int
    viable: int


def search_monochromatic(
    matrix: MatrixQi, coloring: Coloring, search_radius: int
) -> SearchResult:
    """First z in canonical order with a one-color in-window image.

    Operates on the denominator-cleared matrix n*A, so images are always
    Gaussian integers; the scale n is reported by the CLI alongside the
    certificate.
    """
    if search_radius < 1:
        raise ValueError("search radius must be >= 1")
    _, grid = _int_grid(matrix)
    window = coloring.window
    cands = _nonzero_box(search_radius)
    scanned = 0
    viable = 0
    for z in itertools.product(cands, repeat=len(grid[0])):
        scanned += 1
        image = []
        for row in grid:
            acc_re = 0
            acc_im = 0
            for e, c in zip(row, z):
                acc_re += e.re * c.re - e.im * c.im
                acc_im += e.re * c.im + e.im * c.re
            p = GaussInt(acc_re, acc_im)
            if not window.contains(p):
                image = None
                break
            image.append(p)
        if image is None:
            continue
        viable += 1
        first = coloring.color_of(image[0])
        if all(coloring.color_of(p) == first for p in image[1:]):
            cert = ImageCertificate(z=z, color=first, image=tuple(image))
            return SearchResult("found", cert, scanned, viable)
    return SearchResult("absent" if viable else "exhausted", None, scanned, viable)


# ---------------------------------------------------------------------------
# Preimages and abundance
# ---------------------------------------------------------------------------


def preimage_set(matrix: MatrixQi, C: GaussSet, radius: int) -> list[VectorZi]:
    """All z in (box minus 0)^v with A*z integral and inside C^u, in scan order.

    Membership uses the original matrix A: entries of A*z must be Gaussian
    integers and members of C.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    n, grid = _int_grid(matrix)
    out = []
    for z in itertools.product(_nonzero_box(radius), repeat=len(grid[0])):
        img = _image_on_original(grid, n, z)
        if img is not None and all(e in C.points for e in img):
            out.append(z)
    return out


def abundance_report(matrix: MatrixQi, C: GaussSet, radius: int, depth: int) -> dict:
    """Count how much of the in-window image set lies in C^u, with witnesses.

    The image set I collects distinct integral images A*z over the full
    z-box (zero vector included) whose entries all fit in C's window.
    Coordinatewise projections of I intersected with C^u are tested for
    depth-k finite-sums and difference witnesses.  This is finite evidence
    only, never a claim about the untruncated statement.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    if depth < 2 or depth > 6:
        raise ValueError("abundance depth must lie in 2..6 (shared ip/delta cap)")
    n, grid = _int_grid(matrix)
    images: set[tuple[GaussInt, ...]] = set()
    for z in itertools.product(box_points(radius), repeat=len(grid[0])):
        img = _image_on_original(grid, n, z)
        if img is None:
            continue
        if all(C.window.contains(e) for e in img):
            images.add(img)
    in_c = {img for img in images if all(e in C.points for e in img)}
    projections = []
    for j in range(matrix.nrows):
        proj = GaussSet(
            C.window,
            frozenset(img[j] for img in in_c),
            description=f"projection-{j}",
        )
        projections.append(
            {
                "coordinate": j,
                "ip_witness": _tokens(contains_ip(proj, depth)),
                "delta_witness": _tokens(contains_delta(proj, depth)),
            }
        )
    total = len(images)
    hits = len(in_c)
    return {
        "counts": {"images_total": total, "images_in_c": hits},
        "ratio": (hits / total) if total else 0.0,
        "projections": projections,
        "params": {
            "radius": radius,
            "depth": depth,
            "denominator_scale": n,
            "matrix": {"rows": matrix.nrows, "cols": matrix.ncols},
            "set": C.describe(),
        },
        "scope": SCOPE,
    }


# ---------------------------------------------------------------------------
# Ramsey pair refinement
# ---------------------------------------------------------------------------


def ramsey_refine(
    ys: list[VectorZi], C: GaussSet
) -> Optional[tuple[int, int]]:
    """Indices (n, m), n < m, with every coordinate of ys[m] - ys[n] in C.

    Coordinates are processed in order; at each stage a greedy sublist is
    grown from every possible starting element (an element joins if its
    forward differences against all kept elements lie in C) and the
    longest result survives.  Greedy refinement can miss sublists an
    unbounded argument would find; callers should report an empty result
    as "refinement emptied".  Indices are 0-based positions in ``ys``.
    """
    vecs = [tuple(y) for y in ys]
    if len(vecs) < 2:
        raise ValueError("refinement needs at least two vectors")
    if len(set(vecs)) != len(vecs):
        raise ValueError("refinement vectors must be pairwise distinct")
    width = len(vecs[0])
    if width < 1 or any(len(v) != width for v in vecs):
        raise ValueError("refinement vectors must share a positive length")
    survivors = list(range(len(vecs)))
    for i in range(width):
        best: list[int] = []
        for s in range(len(survivors)):
            kept = [survivors[s]]
            for idx in survivors[s + 1 :]:
                if all((vecs[idx][i] - vecs[j][i]) in C.points for j in kept):
                    kept.append(idx)
            if len(kept) > len(best):
                best = kept
        survivors = best
        if len(survivors) < 2:
            return None
    a, b = survivors[0], survivors[1]
    assert all((vecs[b][i] - vecs[a][i]) in C.points for i in range(width))
    return (a, b)


# ---------------------------------------------------------------------------
# Congruence proof-check
# ---------------------------------------------------------------------------


def congruence_proofcheck(matrix: MatrixQi, l: GaussInt, radius: int) -> dict:
    """Finite re-enactment of the obstruction argument.

    When no solution of A*s = all-ones exists, an integer dual vector u
    annihilates A while u . all-ones != 0.  A Gaussian prime r is chosen
    with norm above both norm(l) and norm(l*(u . all-ones)); P is the
    punctured residue class of l mod r inside the window.  The scan
    confirms that no candidate z has A*z entirely inside P^u: any such z
    would force l*(u . all-ones) to vanish mod r, impossible for a nonzero
    element of norm below norm(r).  When a solution exists, the solution
    branch is reported instead.
    """
    if l.is_zero():
        raise ValueError("l must be nonzero")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    cert = certify(matrix)
    assert cert.verify(matrix)
    params = {
        "l": str(l),
        "radius": radius,
        "matrix": {"rows": matrix.nrows, "cols": matrix.ncols},
    }
    if cert.kind == SOLUTION:
        return {
            "branch": "solution",
            "solution": _tokens(cert.solution),
            "verified": True,
            "params": params,
            "scope": SCOPE,
        }
    u_vec = cert.obstruction
    u_dot = GaussInt(0, 0)
    for e in u_vec:
        u_dot = u_dot + e
    l_u_dot = l * u_dot
    bound = max(l.norm(), l_u_dot.norm())
    r = prime_with_norm_exceeding(bound)
    n, grid = _int_grid(matrix)
    residue_class = {
        t
        for t in box_points(radius)
        if not t.is_zero() and congruent_mod(t, l, r)
    }
    matches: list[VectorZi] = []
    scanned = 0
    for z in itertools.product(_nonzero_box(radius), repeat=len(grid[0])):
        scanned += 1
        img = _image_on_original(grid, n, z)
        if img is not None and all(e in residue_class for e in img):
            matches.append(z)
    return {
        "branch": "obstruction",
        "obstruction": _tokens(u_vec),
        "prime": str(r),
        "bounds": {
            "norm_l": l.norm(),
            "norm_l_u_dot": l_u_dot.norm(),
            "norm_r": r.norm(),
        },
        "dot_nonzero_mod_r": not congruent_mod(l_u_dot, GaussInt(0, 0), r),
        "residue_class_size": len(residue_class),
        "candidates_scanned": scanned,
        "match_count": len(matches),
        "matches": [_tokens(z) for z in matches[:5]],
        "params": params,
        "scope": SCOPE,
    }


# ---------------------------------------------------------------------------
# Preservation experiments
# ---------------------------------------------------------------------------


def positivity_filter(matrix: MatrixQi, z: VectorZi) -> bool:
    """True iff every entry of A*z has strictly positive real and imaginary parts."""
    return all(e.num.re > 0 and e.num.im > 0 for e in matrix.apply(z))


def _classify(S: GaussSet, fam: str, k: int):
    if fam == "ip":
        w = contains_ip(S, k)
        return (w is not None), _tokens(w)
    if fam == "delta":
        w = contains_delta(S, k)
        return (w is not None), _tokens(w)
    if fam == "ps":
        w = is_piecewise_syndetic(S, k, k)
        if w is None:
            return False, None
        return True, {"translates": _tokens(w.translates), "x": str(w.x)}
    w = is_thick(S, k)
    return (w is not None), (None if w is None else str(w))


def _joint_delta(
    grid, n: int, C: GaussSet, radius: int, cap: int = RAMSEY_SAMPLE_CAP
) -> dict:
    """Vector-difference witness hunt restricted to the positivity cone.

    Samples the first ``cap`` candidates (in scan order) whose integral
    image has all entries with positive real and imaginary parts, then
    refines their images pairwise; a surviving pair yields a difference
    vector whose image lies in C^u by construction.
    """
    zs: list[tuple[GaussInt, ...]] = []
    ys: list[tuple[GaussInt, ...]] = []
    seen: set[tuple[GaussInt, ...]] = set()
    for z in itertools.product(_nonzero_box(radius), repeat=len(grid[0])):
        img = _image_on_original(grid, n, z)
        if img is None:
            continue
        if not all(e.re > 0 and e.im > 0 for e in img):
            continue
        if img in seen:
            continue
        seen.add(img)
        zs.append(z)
        ys.append(img)
        if len(zs) == cap:
            break
    if len(zs) < 2:
        return {"status": "exhausted", "sample_size": len(zs)}
    pair = ramsey_refine(ys, C)
    if pair is None:
        return {"status": "refinement-emptied", "sample_size": len(zs)}
    a, b = pair
    diff = tuple(zb - za for za, zb in zip(zs[a], zs[b]))
    image_diffs = [yb - ya for ya, yb in zip(ys[a], ys[b])]
    assert all(d in C.points for d in image_diffs)
    return {
        "status": "found",
        "sample_size": len(zs),
        "pair": [a, b],
        "witness": _tokens(diff),
        "witness_image_diff": _tokens(image_diffs),
        "entries_nonzero": all(not c.is_zero() for c in diff),
        "within_search_box": all(
            abs(c.re) <= radius and abs(c.im) <= radius for c in diff
        ),
    }


def _joint_thick(W: list[VectorZi], v: int, radius: int, k: int) -> dict:
    """Scan for a translated product box (box(k))^v fully inside W."""
    members = set(W)
    deltas = list(itertools.product(box_points(k), repeat=v))
    for x in itertools.product(box_points(radius - k), repeat=v):
        if all(
            tuple(xc + dc for xc, dc in zip(x, d)) in members for d in deltas
        ):
            return {"status": "found", "x": _tokens(x), "f_radius": k}
    return {"status": "absent", "f_radius": k}


def preservation_experiment(
    matrix: MatrixQi, C: GaussSet, family: str, k: int, radius: int
) -> dict:
    """Classify C, pull back through A, and test the preimage the same way.

    The preimage W lives in (box minus 0)^v; each coordinate projection is
    classified with the same family detector at the same depth, and for
    the difference family a joint vector witness is hunted via the greedy
    pair refinement (thick gets a product-box scan).  The report never
    claims more than these finite observations.
    """
    fam = normalize_family(family, ("ip", "delta", "ps", "thick"))
    if radius < 1:
        raise ValueError("radius must be >= 1")
    c_holds, c_witness = _classify(C, fam, k)
    n, grid = _int_grid(matrix)
    W = preimage_set(matrix, C, radius)
    proj_window = Window(radius, include_zero=False)
    projections = []
    for j in range(matrix.ncols):
        proj = GaussSet(
            proj_window,
            frozenset(z[j] for z in W),
            description=f"projection-{j}",
        )
        holds, witness = _classify(proj, fam, k)
        projections.append({"coordinate": j, "holds": holds, "witness": witness})
    if fam == "delta":
        joint = _joint_delta(grid, n, C, radius)
    elif fam == "thick":
        joint = _joint_thick(W, matrix.ncols, radius, k)
    else:
        joint = {"status": "per-coordinate-only"}
    return {
        "family": fam,
        "depth": k,
        "c_classification": {"holds": c_holds, "witness": c_witness},
        "preimage_count": len(W),
        "projections": projections,
        "joint": joint,
        "params": {
            "radius": radius,
            "denominator_scale": n,
            "matrix": {"rows": matrix.nrows, "cols": matrix.ncols},
            "set": C.describe(),
        },
        "scope": SCOPE,
    }
