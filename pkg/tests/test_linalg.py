"""Exact elimination, the all-ones alternative, certificates, matrix text."""

import random
from fractions import Fraction

import pytest

from gramsey import (
    GaussInt,
    GaussRational,
    IprCertificate,
    MatrixQi,
    ParseError,
    certify,
    clear_denominators,
    find_obstruction,
    format_matrix,
    gcd,
    parse_matrix,
    progression_matrix,
    solve_all_ones,
    verify_translation_identity,
)
from gramsey.linalg import OBSTRUCTION, SOLUTION
from helpers import rand_matrix

gi = GaussInt
I = GaussInt(0, 1)


def qr(re, im=0, den=1):
    return GaussRational(GaussInt(re, im), den)


# Independent multiply oracle on Fraction pairs; no package arithmetic.


def _frac_pair(q):
    return Fraction(q.num.re, q.den), Fraction(q.num.im, q.den)


def _apply_frac(matrix, vec):
    out = []
    for row in matrix.entries:
        acc_re = Fraction(0)
        acc_im = Fraction(0)
        for e, x in zip(row, vec):
            er, ei = _frac_pair(e)
            xr, xi = _frac_pair(x)
            acc_re += er * xr - ei * xi
            acc_im += er * xi + ei * xr
        out.append((acc_re, acc_im))
    return out


def _rationalize(ints):
    return tuple(GaussRational(z) for z in ints)


# ---------------------------------------------------------------------------
# Matrix container
# ---------------------------------------------------------------------------


def test_matrix_construction_and_coercion():
    m = MatrixQi([[1, I], [qr(1, 0, 2), gi(3, -1)]])
    assert m.nrows == 2 and m.ncols == 2
    assert m.entry(0, 0) == qr(1)
    assert m.entry(0, 1) == qr(0, 1)
    assert m.entry(1, 0) == qr(1, 0, 2)
    assert m.entry(1, 1) == qr(3, -1)


def test_matrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        MatrixQi([])
    with pytest.raises(ValueError):
        MatrixQi([[]])
    with pytest.raises(ValueError):
        MatrixQi([[1, 2], [3]])
    with pytest.raises(TypeError):
        MatrixQi([[1.5]])


def test_matrix_immutable():
    m = MatrixQi([[1]])
    with pytest.raises(AttributeError):
        m.entries = ()


def test_matrix_transpose_scaled_integral():
    m = MatrixQi([[1, 2], [3, 4]])
    t = m.transpose()
    assert t.entries == (tuple(qr(x) for x in (1, 3)), tuple(qr(x) for x in (2, 4)))
    assert m.scaled(2).entry(1, 1) == qr(8)
    assert m.is_integral()
    assert not MatrixQi([[qr(1, 0, 2)]]).is_integral()
    assert m.integer_entries()[1] == (gi(3), gi(4))
    with pytest.raises(ValueError):
        MatrixQi([[qr(1, 0, 2)]]).integer_entries()


def test_apply_matches_fraction_oracle():
    rng = random.Random(5)
    for _ in range(60):
        m = rand_matrix(rng, 3, 5)
        vec = tuple(
            GaussRational(gi(rng.randint(-5, 5), rng.randint(-5, 5)), rng.randint(1, 4))
            for _ in range(m.ncols)
        )
        got = [_frac_pair(e) for e in m.apply(vec)]
        assert got == _apply_frac(m, vec)


def test_apply_dimension_mismatch():
    with pytest.raises(ValueError):
        MatrixQi([[1, 2]]).apply((gi(1),))


def test_progression_matrix():
    m = progression_matrix(3)
    assert m.nrows == 4 and m.ncols == 2
    out = m.apply((gi(2), gi(0, 1)))
    assert [e.as_gauss_int() for e in out] == [gi(2), gi(2, 1), gi(2, 2), gi(2, 3)]
    with pytest.raises(ValueError):
        progression_matrix(0)


# ---------------------------------------------------------------------------
# Solutions
# ---------------------------------------------------------------------------


def test_solve_all_ones_progression():
    s = solve_all_ones(progression_matrix(4))
    assert s == (qr(1), qr(0))


def test_solve_all_ones_free_variables_zero():
    assert solve_all_ones(MatrixQi([[1, 5]])) == (qr(1), qr(0))


def test_solve_all_ones_fractional():
    assert solve_all_ones(MatrixQi([[2]])) == (qr(1, 0, 2),)
    assert solve_all_ones(MatrixQi([[gi(0, 1)]])) == (qr(0, -1),)


def test_solve_all_ones_unsolvable():
    assert solve_all_ones(MatrixQi([[0]])) is None
    assert solve_all_ones(MatrixQi([[1], [2]])) is None


def test_solve_all_ones_verified_by_oracle():
    rng = random.Random(17)
    hits = 0
    for _ in range(120):
        m = rand_matrix(rng, 3, 4)
        s = solve_all_ones(m)
        if s is None:
            continue
        hits += 1
        assert _apply_frac(m, s) == [(Fraction(1), Fraction(0))] * m.nrows
    assert hits > 20


def test_solution_scales_inversely_with_matrix():
    rng = random.Random(23)
    for _ in range(40):
        m = rand_matrix(rng, 3, 4)
        s = solve_all_ones(m)
        if s is None:
            continue
        n = rng.randint(2, 7)
        scaled = solve_all_ones(m.scaled(n))
        assert scaled is not None
        assert all(a == b / n for a, b in zip(scaled, s))


# ---------------------------------------------------------------------------
# Obstructions
# ---------------------------------------------------------------------------


def test_find_obstruction_pinned_column():
    assert find_obstruction(MatrixQi([[1], [2]])) == (gi(2), gi(-1))
    assert find_obstruction(MatrixQi([[I], [2 * I]])) == (gi(2), gi(-1))
    assert find_obstruction(MatrixQi([[0]])) == (gi(1),)
    assert find_obstruction(MatrixQi([[0, 0], [0, 0]])) == (gi(1), gi(0))


def test_find_obstruction_none_when_solvable():
    assert find_obstruction(MatrixQi([[1], [1]])) is None
    assert find_obstruction(progression_matrix(2)) is None


def test_obstruction_properties_random():
    rng = random.Random(29)
    hits = 0
    for _ in range(120):
        m = rand_matrix(rng, 3, 4)
        u = find_obstruction(m)
        if u is None:
            continue
        hits += 1
        assert len(u) == m.nrows
        # annihilates A on the left, checked through the transpose
        left = _apply_frac(m.transpose(), _rationalize(u))
        assert left == [(Fraction(0), Fraction(0))] * m.ncols
        total = sum(u, gi(0))
        assert not total.is_zero()
        nonzero = [z for z in u if not z.is_zero()]
        content = nonzero[0]
        for z in nonzero[1:]:
            content = gcd(content, z)
        assert content.norm() == 1
        lead = nonzero[0]
        assert lead.re > 0 and lead.im >= 0
    assert hits > 20


# ---------------------------------------------------------------------------
# Certificates and the dichotomy
# ---------------------------------------------------------------------------


def test_certify_dichotomy_random():
    rng = random.Random(31)
    kinds = {SOLUTION: 0, OBSTRUCTION: 0}
    for _ in range(150):
        m = rand_matrix(rng, 3, 4)
        cert = certify(m)
        kinds[cert.kind] += 1
        assert cert.verify(m)
        if cert.kind == SOLUTION:
            assert find_obstruction(m) is None
        else:
            assert solve_all_ones(m) is None
    assert kinds[SOLUTION] > 10 and kinds[OBSTRUCTION] > 10


def test_verify_rejects_tampered_solution():
    m = progression_matrix(2)
    cert = certify(m)
    assert cert.kind == SOLUTION
    bad = IprCertificate(kind=SOLUTION, solution=(qr(1), qr(1)))
    assert not bad.verify(m)
    short = IprCertificate(kind=SOLUTION, solution=(qr(1),))
    assert not short.verify(m)
    assert not IprCertificate(kind=SOLUTION, solution=None).verify(m)


def test_verify_rejects_tampered_obstruction():
    m = MatrixQi([[1], [2]])
    assert IprCertificate(kind=OBSTRUCTION, obstruction=(gi(2), gi(-1))).verify(m)
    # scaled copy annihilates but has non-unit content
    assert not IprCertificate(kind=OBSTRUCTION, obstruction=(gi(4), gi(-2))).verify(m)
    # wrong length
    assert not IprCertificate(kind=OBSTRUCTION, obstruction=(gi(2),)).verify(m)
    # does not annihilate
    assert not IprCertificate(kind=OBSTRUCTION, obstruction=(gi(1), gi(1))).verify(m)
    # annihilates but sums to zero
    twin = MatrixQi([[1], [1]])
    assert not IprCertificate(kind=OBSTRUCTION, obstruction=(gi(1), gi(-1))).verify(twin)
    assert not IprCertificate(kind="junk").verify(m)


def test_certificate_json_round_trip():
    for m in (progression_matrix(3), MatrixQi([[1], [2]]), MatrixQi([[qr(1, 1, 2)]])):
        cert = certify(m)
        doc = cert.to_json_dict(m)
        assert doc["verified"] is True
        assert doc["rows"] == m.nrows and doc["cols"] == m.ncols
        back = IprCertificate.from_json_dict(doc)
        assert back.kind == cert.kind
        assert back.verify(m)
        assert (back.solution, back.obstruction) == (cert.solution, cert.obstruction)


def test_to_json_refuses_invalid_certificate():
    m = MatrixQi([[1], [2]])
    bad = IprCertificate(kind=OBSTRUCTION, obstruction=(gi(1), gi(1)))
    with pytest.raises(AssertionError):
        bad.to_json_dict(m)


def test_from_json_rejects_malformed():
    with pytest.raises(ValueError):
        IprCertificate.from_json_dict({"kind": "junk", "entries": []})
    with pytest.raises(ValueError):
        IprCertificate.from_json_dict({"entries": ["1"]})
    with pytest.raises(ValueError):
        IprCertificate.from_json_dict({"kind": SOLUTION, "entries": "1"})
    with pytest.raises(ValueError):
        IprCertificate.from_json_dict({"kind": SOLUTION, "entries": ["bogus!"]})


# ---------------------------------------------------------------------------
# Denominator clearing and the translation identity
# ---------------------------------------------------------------------------


def test_clear_denominators():
    m = MatrixQi([[qr(1, 0, 2), qr(0, 1, 3)]])
    n, cleared = clear_denominators(m)
    assert n == 6
    assert cleared.entries == ((qr(3), qr(0, 2)),)
    whole = MatrixQi([[1, 2]])
    n2, same = clear_denominators(whole)
    assert n2 == 1 and same == whole


def test_clear_denominators_minimal():
    rng = random.Random(37)
    for _ in range(40):
        m = rand_matrix(rng, 3, 5)
        n, cleared = clear_denominators(m)
        assert cleared.is_integral()
        assert cleared == m.scaled(n)
        if n > 1:
            # no proper divisor of n clears every denominator
            for d in range(1, n):
                if n % d == 0 and d < n:
                    assert not m.scaled(d).is_integral()


def test_translation_identity_progression():
    rng = random.Random(41)
    m = progression_matrix(3)
    for l in (gi(1), gi(0, 1), gi(2, -3)):
        w = (l, gi(0))
        for _ in range(25):
            t = gi(rng.randint(-9, 9), rng.randint(-9, 9))
            x = (gi(rng.randint(-9, 9), rng.randint(-9, 9)),
                 gi(rng.randint(-9, 9), rng.randint(-9, 9)))
            if t.is_zero():
                continue
            assert verify_translation_identity(m, w, l, t, x)


def test_translation_identity_preconditions():
    m = progression_matrix(2)
    with pytest.raises(ValueError):
        verify_translation_identity(m, (gi(1), gi(1)), gi(1), gi(1), (gi(0), gi(0)))
    with pytest.raises(ValueError):
        verify_translation_identity(m, (gi(1), gi(0)), gi(0), gi(1), (gi(0), gi(0)))
    with pytest.raises(ValueError):
        verify_translation_identity(m, (gi(1),), gi(1), gi(1), (gi(0), gi(0)))


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------


def test_parse_matrix_basic():
    m = parse_matrix("2 2\n1 i\n(1+i)/2 -3\n")
    assert m.entry(0, 1) == qr(0, 1)
    assert m.entry(1, 0) == qr(1, 1, 2)
    assert m.entry(1, 1) == qr(-3)


def test_parse_matrix_ignores_blank_lines():
    m = parse_matrix("2 1\n\n1\n\n2\n\n")
    assert m.nrows == 2 and m.entry(1, 0) == qr(2)


def test_format_parse_round_trip():
    rng = random.Random(43)
    for _ in range(50):
        m = rand_matrix(rng, 4, 6)
        assert parse_matrix(format_matrix(m)) == m


def test_parse_matrix_errors_carry_coordinates():
    with pytest.raises(ParseError, match="line 1"):
        parse_matrix("")
    with pytest.raises(ParseError, match="line 1"):
        parse_matrix("2\n1\n2\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_matrix("a b\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_matrix("0 1\n")
    with pytest.raises(ParseError, match="rows"):
        parse_matrix("2 1\n1\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_matrix("2 2\n1 2\n3\n")
    with pytest.raises(ParseError, match="line 2, token 2"):
        parse_matrix("1 2\n1 bogus!\n")


def test_parse_error_is_value_error():
    assert issubclass(ParseError, ValueError)
