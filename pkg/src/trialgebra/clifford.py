"""Clifford algebra C(V, q) for dim V <= 8 over Q(zeta_24).

Basis blades are products of orthogonal basis vectors encoded as bitmasks
(bit i set <=> e_{i+1} present); a multivector is a map from masks to
coefficients with no stored zeros.  The default quadratic space is the
8-dimensional one with q(e_i) = -1 for every i, so e_i^2 = -1 and distinct
generators anticommute.

Blade product signs are computed by counting the transpositions needed to
interleave the two index sequences plus the contraction factors q(e_i) for
repeated indices: O(k^2) per blade pair and exact, which is all dim <= 8
ever needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exact_field import CycloNum, ExactMatrix, ZERO, ONE, cos_sin_pi

MINUS_ONE = -ONE


class CliffordError(ValueError):
    pass


@dataclass(frozen=True)
class QuadraticSpace:
    dim: int
    alphas: tuple[CycloNum, ...]  # alpha_i = q(e_{i+1}) for an orthogonal basis

    def __post_init__(self):
        if not (1 <= self.dim <= 8):
            raise CliffordError("supported dimensions are 1..8")
        if len(self.alphas) != self.dim:
            raise CliffordError("need one alpha per basis vector")


_DEFAULT = QuadraticSpace(8, (MINUS_ONE,) * 8)


def default_space() -> QuadraticSpace:
    """The space C^8 with q(x) = -(x_1^2 + ... + x_8^2)."""
    return _DEFAULT


def _blade_mul(a: int, b: int, alphas: tuple[CycloNum, ...]) -> tuple[int, CycloNum]:
    """Product of basis blades e_A e_B: resulting mask is A xor B, and the
    coefficient collects transposition signs and squared-generator factors."""
    swaps = 0
    coeff = ONE
    bb = b
    while bb:
        low = bb & -bb
        i = low.bit_length() - 1
        bb &= bb - 1
        swaps += (a >> (i + 1)).bit_count()
        if a & low:
            a ^= low
            coeff = coeff * alphas[i]
        else:
            a |= low
    if swaps & 1:
        coeff = -coeff
    return a, coeff


def _blade_mul_sign(a: int, b: int) -> tuple[int, int]:
    """_blade_mul specialized to the default space (every alpha = -1): the
    coefficient is just a sign, so keep it an int."""
    swaps = 0
    bb = b
    while bb:
        low = bb & -bb
        i = low.bit_length() - 1
        bb &= bb - 1
        swaps += (a >> (i + 1)).bit_count()
        if a & low:
            a ^= low
            swaps += 1  # alpha_i = -1
        else:
            a |= low
    return a, -1 if swaps & 1 else 1


def _is_default_like(space: QuadraticSpace) -> bool:
    return all(al == MINUS_ONE for al in space.alphas)


class CliffordElement:
    """Sparse multivector; terms map blade masks to nonzero coefficients."""

    __slots__ = ("space", "terms")

    def __init__(self, space: QuadraticSpace, terms: Mapping[int, CycloNum]):
        limit = 1 << space.dim
        clean: dict[int, CycloNum] = {}
        for mask, c in terms.items():
            if mask >= limit or mask < 0:
                raise CliffordError(f"blade mask {mask:#b} outside the algebra")
            if not isinstance(c, CycloNum):
                c = CycloNum.rational(c)
            if c:
                clean[mask] = c
        self.space = space
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def scalar(cls, value, space: QuadraticSpace | None = None) -> "CliffordElement":
        return cls(space or _DEFAULT, {0: value})

    @classmethod
    def blade(cls, mask: int, space: QuadraticSpace | None = None, coeff=1) -> "CliffordElement":
        return cls(space or _DEFAULT, {mask: coeff})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def grades(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None if not homogeneous in parity."""
        ps = {m.bit_count() & 1 for m in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def grade_part(self, k: int) -> "CliffordElement":
        return CliffordElement(self.space, {m: c for m, c in self.terms.items()
                                            if m.bit_count() == k})

    def coefficient(self, mask: int) -> CycloNum:
        return self.terms.get(mask, ZERO)

    def vector_coords(self) -> tuple[CycloNum, ...]:
        """Coordinates in e_1..e_n; raises if any non-grade-1 term is present."""
        if any(m.bit_count() != 1 for m in self.terms):
            raise CliffordError("element is not a vector")
        return tuple(self.terms.get(1 << i, ZERO) for i in range(self.space.dim))

    # -- linear ops ----------------------------------------------------------

    def _same_space(self, other: "CliffordElement") -> None:
        if self.space != other.space:
            raise CliffordError("operands live in different quadratic spaces")

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        self._same_space(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return CliffordElement(self.space, out)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.space, {m: -c for m, c in self.terms.items()})

    def scale(self, s) -> "CliffordElement":
        if not isinstance(s, CycloNum):
            s = CycloNum.rational(s)
        return CliffordElement(self.space, {m: s * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return clif_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            other = CliffordElement.scalar(other, self.space)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space.dim, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "CliffordElement(0)"
        bits = []
        for m in sorted(self.terms):
            name = "1" if m == 0 else "e" + "".join(str(i + 1) for i in range(8) if m >> i & 1)
            bits.append(f"{self.terms[m]!r}*{name}")
        return "CliffordElement(" + " + ".join(bits) + ")"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"space": self.space.dim,
                "terms": {format(m, f"#0{self.space.dim + 2}b"): c.to_strings()
                          for m, c in sorted(self.terms.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "CliffordElement":
        dim = int(data["space"])
        space = _DEFAULT if dim == 8 else QuadraticSpace(dim, (MINUS_ONE,) * dim)
        terms = {int(k, 2): CycloNum.from_strings(v) for k, v in data["terms"].items()}
        return cls(space, terms)


def basis_vector(i: int, space: QuadraticSpace | None = None) -> CliffordElement:
    """e_i for 1-based i."""
    space = space or _DEFAULT
    if not (1 <= i <= space.dim):
        raise CliffordError(f"e_{i} outside dimension {space.dim}")
    return CliffordElement.blade(1 << (i - 1), space)


def vector(coords: Iterable, space: QuadraticSpace | None = None) -> CliffordElement:
    space = space or _DEFAULT
    return CliffordElement(space, {1 << i: c for i, c in enumerate(coords)})


def clif_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    if x.space != y.space:
        raise CliffordError("operands live in different quadratic spaces")
    out: dict[int, CycloNum] = {}
    if _is_default_like(x.space):
        for ma, ca in x.terms.items():
            nca = -ca
            for mb, cb in y.terms.items():
                m, s = _blade_mul_sign(ma, mb)
                c = (ca if s > 0 else nca) * cb
                if c:
                    cur = out.get(m)
                    nv = cur + c if cur is not None else c
                    if nv:
                        out[m] = nv
                    elif cur is not None:
                        del out[m]
    else:
        alphas = x.space.alphas
        for ma, ca in x.terms.items():
            for mb, cb in y.terms.items():
                m, s = _blade_mul(ma, mb, alphas)
                c = ca * cb * s
                if c:
                    cur = out.get(m)
                    nv = cur + c if cur is not None else c
                    if nv:
                        out[m] = nv
                    elif cur is not None:
                        del out[m]
    return CliffordElement(x.space, out)


def grade_involution(x: CliffordElement) -> CliffordElement:
    return CliffordElement(x.space, {m: -c if m.bit_count() & 1 else c
                                     for m, c in x.terms.items()})


def transpose(x: CliffordElement) -> CliffordElement:
    """Blade reversal: sign (-1)^(k(k-1)/2) on grade k."""
    out = {}
    for m, c in x.terms.items():
        k = m.bit_count()
        out[m] = -c if (k * (k - 1) // 2) & 1 else c
    return CliffordElement(x.space, out)


def bar(x: CliffordElement) -> CliffordElement:
    """Clifford conjugation: grade involution followed by reversal."""
    return transpose(grade_involution(x))


def _conjugation_images(x: CliffordElement) -> list[CliffordElement]:
    """iota(x) e_i bar(x) for each basis vector e_i."""
    gx, bx = grade_involution(x), bar(x)
    return [clif_mul(clif_mul(gx, basis_vector(i, x.space)), bx)
            for i in range(1, x.space.dim + 1)]


def _pin_verdict(x: CliffordElement, images: list[CliffordElement] | None = None) -> bool:
    if x.parity() is None or x.is_zero():
        return False
    if clif_mul(x, bar(x)) != CliffordElement.scalar(1, x.space):
        return False
    if images is None:
        images = _conjugation_images(x)
    return all(all(m.bit_count() == 1 for m in y.terms) for y in images)


def is_pin(x: CliffordElement) -> bool:
    """Homogeneous parity, x bar(x) = 1, and twisted conjugation maps V to V."""
    return _pin_verdict(x)


def is_spin(x: CliffordElement) -> bool:
    return x.parity() == 0 and is_pin(x)


def vector_rep(x: CliffordElement) -> ExactMatrix:
    """Matrix of v -> iota(x) v bar(x) on e_1..e_n; requires a pin element."""
    images = _conjugation_images(x)
    if not _pin_verdict(x, images):
        raise CliffordError("vector_rep needs a pin-group element")
    return ExactMatrix.from_columns([y.vector_coords() for y in images])


def gram_matrix(space: QuadraticSpace | None = None) -> ExactMatrix:
    """Gram matrix of the half-polarized form: diag(q(e_i))."""
    space = space or _DEFAULT
    return ExactMatrix.diagonal(space.alphas)


def is_q_orthogonal(m: ExactMatrix, space: QuadraticSpace | None = None) -> bool:
    g = gram_matrix(space)
    return m.transpose() @ g @ m == g


def bivector_exp(terms: Iterable[tuple[Fraction, int]],
                 space: QuadraticSpace | None = None) -> CliffordElement:
    """Product of exp(theta_k * B_k) = cos(theta_k) + sin(theta_k) B_k over
    2-blades B_k that pairwise commute and square to -1; angles are given as
    exact rational multiples of pi."""
    space = space or _DEFAULT
    terms = list(terms)
    blades = [m for _, m in terms]
    for m in blades:
        if m.bit_count() != 2:
            raise CliffordError(f"{m:#b} is not a 2-blade")
        _, sq = _blade_mul(m, m, space.alphas)
        if sq != MINUS_ONE:
            raise CliffordError(f"blade {m:#b} does not square to -1")
    for idx, m1 in enumerate(blades):
        for m2 in blades[idx + 1:]:
            if _blade_mul(m1, m2, space.alphas) != _blade_mul(m2, m1, space.alphas):
                raise CliffordError(f"blades {m1:#b} and {m2:#b} do not commute")
    out = CliffordElement.scalar(1, space)
    for angle, m in terms:
        cos, sin = cos_sin_pi(angle)
        factor = CliffordElement(space, {0: cos, m: sin})
        out = clif_mul(out, factor)
    if not is_spin(out):
        raise CliffordError("exponential left the spin group; bad input blades")
    return out


def center_elements() -> tuple[CliffordElement, dict[str, bool]]:
    """The volume element eta = e1...e8 of the default space with its
    commutation checks: central in the even part, anticommutes with vectors,
    and squares to +1 or -1 (computed, not assumed)."""
    space = _DEFAULT
    eta = CliffordElement.blade((1 << 8) - 1, space)
    even_ok = all(
        clif_mul(eta, CliffordElement.blade(m, space)) ==
        clif_mul(CliffordElement.blade(m, space), eta)
        for m in range(1 << 8) if m.bit_count() % 2 == 0)
    vec_ok = all(
        clif_mul(eta, basis_vector(i, space)) + clif_mul(basis_vector(i, space), eta) ==
        CliffordElement.scalar(0, space)
        for i in range(1, 9))
    sq = clif_mul(eta, eta)
    sq_val = sq.coefficient(0)
    checks = {
        "commutes_with_even_blades": even_ok,
        "anticommutes_with_vectors": vec_ok,
        "square_is_plus_one": sq == CliffordElement.scalar(1, space),
        "square_is_unit_scalar": sq.terms.keys() <= {0} and sq_val in (ONE, MINUS_ONE),
    }
    return eta, checks
