"""Exact scalar arithmetic in Q(zeta_24) and exact dense/sparse linear algebra.

The scalar type ``CycloNum`` is an element of Q[x]/(x^8 - x^4 + 1), i.e. the
cyclotomic field generated by a primitive 24th root of unity ``zeta``.  This
is the smallest cyclotomic field containing the imaginary unit (zeta^6), a
primitive cube root of unity (zeta^8), sqrt(2) and sqrt(3) -- every scalar
the rest of the package ever needs.  Coordinates are stored in the power
basis 1, zeta, ..., zeta^7 as exact ``Fraction``s, so equality of field
elements is equality of coefficient tuples.

``ExactMatrix`` is a dense matrix over CycloNum with exact rank / kernel /
solve built on one sparse-row Gaussian elimination engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

DEGREE = 8

_FR0 = Fraction(0)
_FR1 = Fraction(1)


class FieldError(ValueError):
    """Raised for nonsensical field operations (division by zero, bad names)."""


# ---------------------------------------------------------------------------
# polynomial helpers (dense lists of Fractions, ascending degree)
# ---------------------------------------------------------------------------

def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    out = [_FR0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod(num: Sequence[Fraction], den: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    den = _poly_trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [_FR0] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        if c:
            quot[k] = c
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return _poly_trim(quot), _poly_trim(num)


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Coefficients of the n-th cyclotomic polynomial, by recursive division
    of x^n - 1 by the product of all lower-order cyclotomic factors."""
    phi = [_FR1]
    for d in range(1, n):
        if n % d == 0:
            phi = _poly_mul(phi, cyclotomic_polynomial(d))
    xn_minus_1 = [-_FR1] + [_FR0] * (n - 1) + [_FR1]
    quot, rem = _poly_divmod(xn_minus_1, phi)
    if rem:
        raise ArithmeticError(f"cyclotomic factorization of x^{n}-1 left a remainder")
    return quot


# the defining modulus: x^8 - x^4 + 1
_MODULUS = [_FR1, _FR0, _FR0, _FR0, -_FR1, _FR0, _FR0, _FR0, _FR1]


def _check_modulus() -> None:
    if cyclotomic_polynomial(24) != _MODULUS:
        raise ArithmeticError("24th cyclotomic polynomial is not x^8 - x^4 + 1")


_check_modulus()


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class CycloNum:
    """An element of Q(zeta_24) in the power basis 1, zeta, ..., zeta^7."""

    __slots__ = ("coeffs", "nz")

    def __init__(self, coeffs: Iterable[Fraction]):
        t = tuple(coeffs)
        if len(t) != DEGREE:
            raise ValueError(f"need {DEGREE} coefficients, got {len(t)}")
        self.coeffs = t
        self.nz = tuple(k for k in range(DEGREE) if t[k])

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, x) -> "CycloNum":
        f = _as_fraction(x)
        return cls((f,) + (_FR0,) * (DEGREE - 1))

    @classmethod
    def zeta(cls, k: int) -> "CycloNum":
        """zeta^k reduced mod x^8 - x^4 + 1 (zeta^12 = -1)."""
        k %= 24
        sign = _FR1
        if k >= 12:
            k -= 12
            sign = -_FR1
        c = [_FR0] * DEGREE
        if k < 8:
            c[k] = sign
        else:  # 8 <= k <= 11: zeta^k = zeta^(k-4) - zeta^(k-8)
            c[k - 4] = sign
            c[k - 8] = -sign
        return cls(c)

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.nz)

    def is_rational(self) -> bool:
        return self.nz == () or self.nz == (0,)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.nz:
            return self
        if not self.nz:
            return o
        c = list(self.coeffs)
        for k in o.nz:
            c[k] = c[k] + o.coeffs[k] if c[k] else o.coeffs[k]
        return CycloNum(c)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.nz:
            return self
        c = list(self.coeffs)
        for k in o.nz:
            c[k] = c[k] - o.coeffs[k] if c[k] else -o.coeffs[k]
        return CycloNum(c)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycloNum(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        anz, bnz = self.nz, o.nz
        if not anz or not bnz:
            return ZERO
        a, b = self.coeffs, o.coeffs
        if anz == (0,):
            a0 = a[0]
            if a0 == 1:
                return o
            return CycloNum(tuple(a0 * x if x else _FR0 for x in b))
        if bnz == (0,):
            b0 = b[0]
            if b0 == 1:
                return self
            return CycloNum(tuple(b0 * x if x else _FR0 for x in a))
        prod = [_FR0] * 15
        for i in anz:
            ai = a[i]
            for j in bnz:
                prod[i + j] += ai * b[j]
        # x^(k+8) = x^(k+4) - x^k, applied from the top degree down
        for d in range(14, 7, -1):
            c = prod[d]
            if c:
                prod[d - 4] += c
                prod[d - 8] -= c
        return CycloNum(prod[:8])

    __rmul__ = __mul__

    def inv(self) -> "CycloNum":
        """Multiplicative inverse via the extended gcd with the modulus."""
        if not self:
            raise FieldError("division by zero in Q(zeta_24)")
        # invariants: r0 = s0 * self (mod modulus), r1 = s1 * self (mod modulus)
        r0, r1 = _MODULUS[:], _poly_trim(list(self.coeffs))
        s0, s1 = [], [_FR1]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            qs1 = _poly_mul(q, s1)
            new_s = [a - b for a, b in
                     zip(s0 + [_FR0] * max(0, len(qs1) - len(s0)),
                         qs1 + [_FR0] * max(0, len(s0) - len(qs1)))]
            s0, s1 = s1, _poly_trim(new_s)
        if not r1:
            raise FieldError("element shares a factor with the modulus")
        c = r1[0]
        out = [x / c for x in s1]
        _, rem = _poly_divmod(out, _MODULUS)
        rem += [_FR0] * (DEGREE - len(rem))
        return CycloNum(tuple(rem))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- equality / display -------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_rational():
            return f"CycloNum({self.coeffs[0]})"
        terms = [f"{c}*z^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return "CycloNum(" + " + ".join(terms) + ")"

    # -- serialization ------------------------------------------------------

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_strings(cls, octet) -> "CycloNum":
        if isinstance(octet, (str, int)):
            return cls.rational(octet)
        return cls(tuple(_as_fraction(s) for s in octet))


ZERO = CycloNum.rational(0)
ONE = CycloNum.rational(1)
TWO = CycloNum.rational(2)
HALF = CycloNum.rational(Fraction(1, 2))
I = CycloNum.zeta(6)
OMEGA = CycloNum.zeta(8)
SQRT2 = CycloNum.zeta(3) + CycloNum.zeta(-3)
SQRT3 = CycloNum.zeta(2) + CycloNum.zeta(-2)

_NAMED = {"i": I, "omega": OMEGA, "sqrt2": SQRT2, "sqrt3": SQRT3, "half": HALF}


def named_constant(name: str) -> CycloNum:
    try:
        return _NAMED[name]
    except KeyError:
        raise FieldError(f"unknown constant {name!r}; choose from {sorted(_NAMED)}") from None


def _check_constants() -> None:
    assert I * I == -ONE
    assert OMEGA * OMEGA + OMEGA + ONE == ZERO
    assert SQRT2 * SQRT2 == TWO
    assert SQRT3 * SQRT3 == CycloNum.rational(3)
    assert HALF + HALF == ONE


_check_constants()


def cos_sin_pi(multiple: Fraction) -> tuple[CycloNum, CycloNum]:
    """Exact (cos, sin) of ``multiple * pi``; the reduced denominator of the
    multiple must divide 12, else the value falls outside Q(zeta_24)."""
    multiple = _as_fraction(multiple)
    k = multiple * 12
    if k.denominator != 1:
        raise FieldError(f"cos/sin of {multiple}*pi is not in Q(zeta_24)")
    k = int(k)
    zp, zm = CycloNum.zeta(k), CycloNum.zeta(-k)
    cos = (zp + zm) * HALF
    sin = (zp - zm) * (-I * HALF)
    return cos, sin


# ---------------------------------------------------------------------------
# sparse-row Gaussian elimination engine
# ---------------------------------------------------------------------------

Row = dict  # {column index: CycloNum}


class EliminationError(ValueError):
    pass


def _row_sub_scaled(row: Row, factor: CycloNum, other: Row) -> None:
    """row -= factor * other, pruning exact zeros."""
    for c, v in other.items():
        cur = row.get(c)
        nv = (cur - factor * v) if cur is not None else -(factor * v)
        if nv:
            row[c] = nv
        elif cur is not None:
            del row[c]


def _reduce_rows(rows: Iterable[Row]) -> dict[int, Row]:
    """Reduced row echelon basis of the row span, keyed by pivot column.

    Rows are folded in one at a time: each incoming row is cleared of every
    existing pivot column (each clearing step only introduces entries at
    non-pivot columns, so the loop terminates), then normalized to leading
    coefficient 1 on its first surviving column, which is eliminated from all
    prior rows.  The basis therefore stays fully reduced throughout.  Exact
    arithmetic; pivoting is always on the first nonzero entry.
    """
    basis: dict[int, Row] = {}
    for incoming in rows:
        row = dict(incoming)
        while row:
            hit = None
            for c in sorted(row):
                if c in basis:
                    hit = c
                    break
            if hit is None:
                break
            _row_sub_scaled(row, row[hit], basis[hit])
        if not row:
            continue
        p = min(row)
        lead_inv = row[p].inv()
        row = {c: v * lead_inv for c, v in row.items()}
        for prior in basis.values():
            f = prior.get(p)
            if f is not None:
                _row_sub_scaled(prior, f, row)
        basis[p] = row
    return basis


def rref(rows: Iterable[Row]) -> dict[int, Row]:
    return _reduce_rows(rows)


def kernel_of_rows(rows: Iterable[Row], ncols: int) -> list[tuple[CycloNum, ...]]:
    """Basis of {v : R v = 0} for the constraint rows R, as coordinate tuples."""
    basis = _reduce_rows(rows)
    free = [c for c in range(ncols) if c not in basis]
    out = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for p, row in basis.items():
            coeff = row.get(f)
            if coeff is not None:
                vec[p] = -coeff
        out.append(tuple(vec))
    return out


# ---------------------------------------------------------------------------
# dense exact matrices
# ---------------------------------------------------------------------------

def _coerce_entry(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    return CycloNum.rational(x)


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[CycloNum, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the declared shape")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "ExactMatrix":
        r = len(data)
        c = len(data[0]) if r else 0
        flat = []
        for row in data:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(_coerce_entry(x) for x in row)
        return cls(r, c, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, r: int, c: int) -> "ExactMatrix":
        return cls(r, c, (ZERO,) * (r * c))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "ExactMatrix":
        n = len(diag)
        d = [_coerce_entry(x) for x in diag]
        return cls(n, n, tuple(d[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "ExactMatrix":
        c = len(columns)
        r = len(columns[0]) if c else 0
        return cls(r, c, tuple(_coerce_entry(columns[j][i]) for i in range(r) for j in range(c)))

    # -- access -------------------------------------------------------------

    def get(self, i: int, j: int) -> CycloNum:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[CycloNum, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[CycloNum, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def sparse_rows(self) -> list[Row]:
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append({j: self.entries[base + j] for j in range(self.cols) if self.entries[base + j]})
        return out

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, s) -> "ExactMatrix":
        s = _coerce_entry(s)
        return ExactMatrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    def _same_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, m, k = self.rows, other.cols, self.cols
        out = [ZERO] * (n * m)
        for i in range(n):
            ibase = i * k
            obase = i * m
            for t in range(k):
                a = self.entries[ibase + t]
                if not a:
                    continue
                tbase = t * m
                for j in range(m):
                    b = other.entries[tbase + j]
                    if b:
                        out[obase + j] = out[obase + j] + a * b
        return ExactMatrix(n, m, tuple(out))

    def mat_vec(self, vec: Sequence[CycloNum]) -> tuple[CycloNum, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for i in range(self.rows):
            acc = ZERO
            base = i * self.cols
            for j, v in enumerate(vec):
                if v:
                    e = self.entries[base + j]
                    if e:
                        acc = acc + e * v
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           tuple(self.get(i, j) for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __pow__(self, n: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = ExactMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    # -- elimination-backed queries -----------------------------------------

    def rank(self) -> int:
        return len(_reduce_rows(self.sparse_rows()))

    def kernel(self) -> list[tuple[CycloNum, ...]]:
        """Exact basis of the null space; dimension = cols - rank."""
        return kernel_of_rows(self.sparse_rows(), self.cols)

    def solve(self, rhs: Sequence[CycloNum]):
        """One exact solution of self @ x = rhs, or None if none exists."""
        if len(rhs) != self.rows:
            raise ValueError("right-hand side length does not match row count")
        sols = self.solve_many([tuple(rhs)])
        return sols[0]

    def solve_many(self, rhs_list: Sequence[Sequence[CycloNum]]):
        """Solve self @ x = b for several b at once (free variables set to 0).

        Returns a list with one solution tuple (or None) per right-hand side.
        """
        n, m = self.rows, self.cols
        k = len(rhs_list)
        for b in rhs_list:
            if len(b) != n:
                raise ValueError("right-hand side length does not match row count")
        rows = self.sparse_rows()
        for i, row in enumerate(rows):
            for t, b in enumerate(rhs_list):
                v = _coerce_entry(b[i])
                if v:
                    row[m + t] = v
        basis = _reduce_rows(rows)
        bad = set()
        for p in basis:
            if p >= m:
                bad.add(p - m)  # a pivot inside the rhs block: that system is inconsistent
        out = []
        for t in range(k):
            if t in bad:
                out.append(None)
                continue
            vec = [ZERO] * m
            for p, row in basis.items():
                if p < m:
                    c = row.get(m + t)
                    if c is not None:
                        vec[p] = c
            out.append(tuple(vec))
        return out

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        eye = [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
        sols = self.solve_many(eye)
        if any(s is None for s in sols) or self.rank() < n:
            raise EliminationError("matrix is singular")
        return ExactMatrix.from_columns(sols)

    def det(self) -> CycloNum:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        rows = self.sparse_rows()
        det = ONE
        live = list(range(self.rows))
        for col in range(self.cols):
            pick = None
            for idx, r in enumerate(live):
                if col in rows[r]:
                    pick = idx
                    break
            if pick is None:
                return ZERO
            if pick != 0:
                live[0], live[pick] = live[pick], live[0]
                det = -det
            prow = rows[live[0]]
            pval = prow[col]
            det = det * pval
            pinv = pval.inv()
            for r in live[1:]:
                f = rows[r].get(col)
                if f is not None:
                    _row_sub_scaled(rows[r], f * pinv, prow)
            live = live[1:]
        return det

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [e.to_strings() for e in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "ExactMatrix":
        entries = tuple(CycloNum.from_strings(e) for e in data["entries"])
        return cls(int(data["rows"]), int(data["cols"]), entries)


def rank(m: ExactMatrix) -> int:
    return m.rank()


def kernel(m: ExactMatrix) -> list[tuple[CycloNum, ...]]:
    return m.kernel()


def solve(m: ExactMatrix, rhs: Sequence[CycloNum]):
    return m.solve(rhs)


# -- small vector helpers ----------------------------------------------------

def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(s, u):
    return tuple(s * a for a in u)


def vec_dot(u, v):
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def vec_is_zero(u) -> bool:
    return not any(u)
