from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from trialgebra.exact_field import (
    CycloNum, ExactMatrix, FieldError, ZERO, ONE, TWO, HALF, I, OMEGA, SQRT2, SQRT3,
    named_constant, cos_sin_pi, cyclotomic_polynomial, kernel, rank, solve,
)

# ---------------------------------------------------------------------------
# independent oracle: polynomial division over Q, written from scratch here
# ---------------------------------------------------------------------------

def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    while out and not out[-1]:
        out.pop()
    return out


def poly_div(num, den):
    num = list(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        q[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    while num and not num[-1]:
        num.pop()
    return q, num


def oracle_modulus():
    """x^24 - 1 divided by the product of all proper cyclotomic factors."""
    memo = {}

    def cyc(n):
        if n in memo:
            return memo[n]
        p = [Fraction(1)]
        for d in range(1, n):
            if n % d == 0:
                p = poly_mul(p, cyc(d))
        xn = [Fraction(0)] * (n + 1)
        xn[0], xn[n] = Fraction(-1), Fraction(1)
        q, r = poly_div(xn, p)
        assert not r
        memo[n] = q
        return q

    return cyc(24)


def test_modulus_is_degree_8_trinomial():
    want = [Fraction(c) for c in (1, 0, 0, 0, -1, 0, 0, 0, 1)]
    assert oracle_modulus() == want
    assert cyclotomic_polynomial(24) == want


def test_zeta_power_reduction():
    z = CycloNum.zeta
    assert z(6) * z(6) == CycloNum.rational(-1)  # zeta^12 = -1
    # zeta^4 * zeta^4 = zeta^8 = zeta^4 - 1, frozen from the oracle division
    assert z(4) * z(4) == z(4) - ONE
    assert z(1) ** 24 == ONE
    assert z(13) == -z(1)


def test_inverse_of_zeta_against_multiplication():
    z = CycloNum.zeta(1)
    inv = z.inv()
    assert inv * z == ONE
    assert inv == CycloNum.zeta(23)


def test_inverse_of_rational():
    assert CycloNum.rational(2).inv() == CycloNum.rational(Fraction(1, 2))


def test_inverse_of_zero_raises():
    with pytest.raises(FieldError):
        ZERO.inv()


def test_named_constants_satisfy_minimal_polynomials():
    i = named_constant("i")
    omega = named_constant("omega")
    s2 = named_constant("sqrt2")
    s3 = named_constant("sqrt3")
    assert i * i == -ONE
    assert omega * omega + omega + ONE == ZERO
    assert s2 * s2 == TWO
    assert s3 * s3 == CycloNum.rational(3)
    assert named_constant("half") + named_constant("half") == ONE


def test_unknown_constant_rejected():
    with pytest.raises(FieldError):
        named_constant("tau")


def test_cos_sin_values():
    c, s = cos_sin_pi(Fraction(1, 3))
    assert c == HALF
    assert s * s == CycloNum.rational(Fraction(3, 4))
    c, s = cos_sin_pi(Fraction(1, 4))
    assert c == s == SQRT2 * HALF
    c, s = cos_sin_pi(Fraction(1, 2))
    assert (c, s) == (ZERO, ONE)
    assert c * c + s * s == ONE


def test_cos_sin_outside_field():
    with pytest.raises(FieldError):
        cos_sin_pi(Fraction(1, 5))
    with pytest.raises(FieldError):
        cos_sin_pi(Fraction(1, 8))


small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)


def cyclos(max_terms=3):
    return st.lists(st.tuples(st.integers(0, 7), small_fractions),
                    min_size=0, max_size=max_terms).map(_to_cyclo)


def _to_cyclo(pairs):
    coeffs = [Fraction(0)] * 8
    for k, v in pairs:
        coeffs[k] = v
    return CycloNum(coeffs)


@settings(max_examples=60, derandomize=True)
@given(cyclos(), cyclos(), cyclos())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a + (b + c) == (a + b) + c
    assert ONE * a == a


@settings(max_examples=40, derandomize=True)
@given(cyclos())
def test_inverse_round_trip(a):
    if a:
        assert a * a.inv() == ONE


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def test_kernel_of_identity_is_trivial():
    assert kernel(ExactMatrix.identity(3)) == []


def test_kernel_of_rank_one():
    m = ExactMatrix.from_rows([[1, 1], [1, 1]])
    k = kernel(m)
    assert len(k) == 1
    assert not any(m.mat_vec(k[0]))


def test_rank_of_zero_matrix():
    assert rank(ExactMatrix.zero(3, 4)) == 0


def test_rank_nullity_random(rng):
    for _ in range(25):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        ents = [CycloNum.rational(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
                if rng.random() < 0.7 else ZERO for _ in range(r * c)]
        m = ExactMatrix(r, c, tuple(ents))
        ker = m.kernel()
        assert m.rank() + len(ker) == c
        for v in ker:
            assert not any(m.mat_vec(v))


def test_solve_identity():
    m = ExactMatrix.identity(3)
    b = (ONE, TWO, ZERO)
    assert m.solve(b) == b


def test_solve_round_trip(rng):
    for _ in range(20):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = ExactMatrix(r, c, tuple(
            CycloNum.rational(rng.randint(-4, 4)) for _ in range(r * c)))
        x = tuple(CycloNum.rational(rng.randint(-3, 3)) for _ in range(c))
        b = m.mat_vec(x)
        sol = m.solve(b)
        assert sol is not None
        assert m.mat_vec(sol) == b


def test_solve_reports_inconsistency():
    m = ExactMatrix.from_rows([[1, 1], [1, 1]])
    assert solve(m, (ONE, TWO)) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        ExactMatrix.identity(2).solve((ONE,))


def test_inverse_and_determinant():
    m = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert m.det() == CycloNum.rational(-2)
    assert m @ m.inverse() == ExactMatrix.identity(2)
    assert m.inverse() @ m == ExactMatrix.identity(2)


def test_inverse_with_out_of_order_pivots():
    # leading zeros force pivot discovery out of column order
    m = ExactMatrix.from_rows([[0, Fraction(13, 4), Fraction(3, 2)],
                               [-1, Fraction(13, 4), Fraction(3, 2)],
                               [0, Fraction(3, 2), 1]])
    assert m @ m.inverse() == ExactMatrix.identity(3)


def test_determinant_of_singular():
    assert ExactMatrix.from_rows([[1, 1], [1, 1]]).det() == ZERO


def test_matrix_power():
    m = ExactMatrix.from_rows([[0, -1], [1, 0]])
    assert m ** 4 == ExactMatrix.identity(2)


def test_json_round_trip():
    m = ExactMatrix.from_rows([[I, HALF], [SQRT3, OMEGA]])
    data = m.to_json()
    assert data["rows"] == 2 and data["cols"] == 2
    assert all(len(e) == 8 for e in data["entries"])
    assert ExactMatrix.from_json(data) == m
