"""Trialities as data, the spinor-model triality of the default quadratic
space, the order-3 automorphism built from the two involutions iota_1 and
iota_2, and its linearization on the 28-dimensional space of bivectors.

A ``TrialityMap`` is a permutation-tagged triple of exact 8x8 matrices
(A_1, A_2, A_3) with A_i mapping the i-th space of the triality to the
perm(i)-th one; the trilinear form must be preserved after the permutation
bookkeeping.

The linearized automorphism ``dtheta_on_bivectors`` never needs the group
map itself: the first-slot component of the conjugated triple determines a
unique bivector through the standard representation, recovered by an exact
linear solve.  Order 3, bracket preservation, and the 14-dimensional fixed
subalgebra are verified downstream, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .exact_field import CycloNum, ExactMatrix, ZERO, ONE, TWO, I, SQRT2, rref
from .clifford import (
    CliffordElement, default_space, clif_mul, bar, is_spin, vector_rep,
    gram_matrix, CliffordError, basis_vector,
)
from .spinor import (
    SpinorElement, clifford_action, vector_action, pairing_N,
    half_spin_matrices, plus_masks, minus_masks, plus_coords, minus_coords,
)

N_BIVECTORS = 28


class TrialityError(ValueError):
    pass


# ---------------------------------------------------------------------------
# triality data and maps
# ---------------------------------------------------------------------------

SparseTensor = dict[tuple[int, int, int], CycloNum]


@dataclass(frozen=True)
class TrialityData:
    """Three 8x8 Gram matrices and the structure tensor of t3 : V1 x V2 -> V3,
    with t3[i][j] giving the V3-coordinates of t3(b_i, b_j)."""
    forms: tuple[ExactMatrix, ExactMatrix, ExactMatrix]
    t3: tuple[tuple[tuple[CycloNum, ...], ...], ...]

    def trilinear(self) -> SparseTensor:
        """T(b_i, b_j, b_k) = q3(t3(b_i, b_j), b_k) as a sparse tensor."""
        g3 = self.forms[2]
        out: SparseTensor = {}
        for i in range(8):
            for j in range(8):
                vec = g3.mat_vec(self.t3[i][j])
                for k, c in enumerate(vec):
                    if c:
                        out[(i, j, k)] = c
        return out

    def t3_apply(self, u: Sequence[CycloNum], v: Sequence[CycloNum]) -> tuple[CycloNum, ...]:
        acc = [ZERO] * 8
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                f = ui * vj
                row = self.t3[i][j]
                for k, c in enumerate(row):
                    if c:
                        acc[k] = acc[k] + f * c
        return tuple(acc)


@dataclass(frozen=True)
class TrialityMap:
    """perm maps slot i to slot perm[i] (0-based); mats[i] : V_{i} -> V_{perm[i]}."""
    perm: tuple[int, int, int]
    mats: tuple[ExactMatrix, ExactMatrix, ExactMatrix]

    def is_identity(self) -> bool:
        return self.perm == (0, 1, 2) and all(m == ExactMatrix.identity(m.rows)
                                              for m in self.mats)


def compose(f: TrialityMap, g: TrialityMap) -> TrialityMap:
    """f after g."""
    perm = tuple(f.perm[g.perm[i]] for i in range(3))
    mats = tuple(f.mats[g.perm[i]] @ g.mats[i] for i in range(3))
    return TrialityMap(perm, mats)  # type: ignore[arg-type]


def _contract_axis(t: SparseTensor, m: ExactMatrix, axis: int) -> SparseTensor:
    """Replace basis index j on the given axis by sum_j t[..j..] * m[j][new]."""
    out: SparseTensor = {}
    for key, c in t.items():
        j = key[axis]
        for new in range(8):
            e = m.get(j, new)
            if not e:
                continue
            nk = list(key)
            nk[axis] = new
            nk = tuple(nk)
            cur = out.get(nk)
            v = c * e
            nv = cur + v if cur is not None else v
            if nv:
                out[nk] = nv
            elif cur is not None:
                del out[nk]
    return out


def preserves_trilinear(data: TrialityData, tmap: TrialityMap) -> bool:
    """T(u_1, u_2, u_3) = T(v_1, v_2, v_3) whenever u_{perm(i)} = A_i(v_i)."""
    t = data.trilinear()
    inv = [0, 0, 0]
    for i, p in enumerate(tmap.perm):
        inv[p] = i
    s = t
    for axis in range(3):
        s = _contract_axis(s, tmap.mats[inv[axis]], axis)
    # s indexed by (l1,l2,l3) where l_{perm(i)} carries v_i; compare to T permuted
    want: SparseTensor = {}
    for (k1, k2, k3), c in t.items():
        ks = (k1, k2, k3)
        l = [0, 0, 0]
        for i in range(3):
            l[tmap.perm[i]] = ks[i]
        want[tuple(l)] = c
    return s == want


def is_isometry_triple(data: TrialityData, tmap: TrialityMap) -> bool:
    for i in range(3):
        g_src = data.forms[i]
        g_dst = data.forms[tmap.perm[i]]
        a = tmap.mats[i]
        if a.transpose() @ g_dst @ a != g_src:
            return False
    return True


def validate_triality_map(data: TrialityData, tmap: TrialityMap) -> bool:
    return is_isometry_triple(data, tmap) and preserves_trilinear(data, tmap)


# ---------------------------------------------------------------------------
# the spinor-model triality (C^8, S+, S-)
# ---------------------------------------------------------------------------

Vec8 = tuple[CycloNum, ...]


def _as_vec8(v) -> Vec8:
    t = tuple(x if isinstance(x, CycloNum) else CycloNum.rational(x) for x in v)
    if len(t) != 8:
        raise ValueError("8 coordinates expected")
    return t


def q_vec(u: Vec8, v: Vec8) -> CycloNum:
    """Half-polarized bilinear form of q(x) = -sum x_i^2."""
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc - a * b
    return acc


@lru_cache(maxsize=None)
def spinor_model() -> TrialityData:
    from .spinor import gram_N_plus, gram_N_minus
    g1 = gram_matrix()  # diag(-1)
    g2 = gram_N_plus()
    g3 = gram_N_minus()
    t3 = []
    for i in range(8):
        row = []
        ei = [ZERO] * 8
        ei[i] = ONE
        for m in plus_masks():
            row.append(minus_coords(vector_action(ei, SpinorElement.blade(m))))
        t3.append(tuple(row))
    return TrialityData((g1, g2, g3), tuple(t3))


def t3_product(v: Vec8, x: SpinorElement) -> SpinorElement:
    return vector_action(v, x)


def t2_product(v: Vec8, y: SpinorElement) -> SpinorElement:
    return vector_action(v, y)


def t1_product(x: SpinorElement, y: SpinorElement) -> Vec8:
    """The C^8-valued product S+ x S- -> C^8, recovered from
    q(e_p, t1(x,y)) = N(e_p . x, y); with q = -sum coordinates this reads
    t1_p = -N(e_p . x, y)."""
    out = []
    for p in range(8):
        ep = [ZERO] * 8
        ep[p] = ONE
        out.append(-pairing_N(vector_action(ep, x), y))
    return tuple(out)


def slot_product(i: int, a, k: int, b):
    """Product V_i x V_k -> V_j for the spinor model, slots in {1, 2, 3}."""
    pair = {i, k}
    if pair == {1, 2}:
        v, x = (a, b) if i == 1 else (b, a)
        return t3_product(v, x)
    if pair == {1, 3}:
        v, y = (a, b) if i == 1 else (b, a)
        return t2_product(v, y)
    if pair == {2, 3}:
        x, y = (a, b) if i == 2 else (b, a)
        return t1_product(x, y)
    raise TrialityError(f"no product between slots {i} and {k}")


def slot_norm(i: int, a) -> CycloNum:
    if i == 1:
        return q_vec(a, a)
    return pairing_N(a, a)


# ---------------------------------------------------------------------------
# involutions and the order-3 map
# ---------------------------------------------------------------------------

def default_v1() -> Vec8:
    """i * e_1, which has q = 1."""
    return (I,) + (ZERO,) * 7


def default_x1() -> SpinorElement:
    """(1 + w1^w2^w3^w4)/sqrt2 inside S+ (unit for the pairing), or its odd
    twin if the plus label sits on the odd half."""
    inv_sqrt2 = SQRT2.inv()
    if 0 in plus_masks():
        s = SpinorElement({0: ONE, 15: ONE})
    else:
        s = SpinorElement({1: ONE, 14: ONE})
    s = s.scale(inv_sqrt2)
    if pairing_N(s, s) != ONE:
        raise TrialityError("default unit spinor failed its norm check")
    return s


def _plus_matrix(fn: Callable[[SpinorElement], SpinorElement], to_minus: bool) -> ExactMatrix:
    coords = minus_coords if to_minus else plus_coords
    return ExactMatrix.from_columns([coords(fn(SpinorElement.blade(m))) for m in plus_masks()])


def _minus_matrix(fn: Callable[[SpinorElement], SpinorElement], to_plus: bool) -> ExactMatrix:
    coords = plus_coords if to_plus else minus_coords
    return ExactMatrix.from_columns([coords(fn(SpinorElement.blade(m))) for m in minus_masks()])


def _vec_matrix(fn: Callable[[Vec8], Vec8]) -> ExactMatrix:
    cols = []
    for p in range(8):
        ep = [ZERO] * 8
        ep[p] = ONE
        cols.append(fn(tuple(ep)))
    return ExactMatrix.from_columns(cols)


def make_iota(k: int, v1: Vec8 | None = None, x1: SpinorElement | None = None) -> TrialityMap:
    """The two involutive triality maps: k = 1 swaps the spinor slots through
    a unit vector, k = 2 swaps the vector slot with S- through a unit spinor."""
    v1 = _as_vec8(v1) if v1 is not None else default_v1()
    x1 = x1 if x1 is not None else default_x1()
    if q_vec(v1, v1) != ONE:
        raise TrialityError("v1 must satisfy q(v1) = 1")
    if pairing_N(x1, x1) != ONE:
        raise TrialityError("x1 must be a unit spinor")
    if k == 1:
        def reflect(v: Vec8) -> Vec8:
            f = TWO * q_vec(v1, v)
            return tuple(-(vi - f * wi) for vi, wi in zip(v, v1))  # -R_{v1}
        a1 = _vec_matrix(reflect)
        a2 = _plus_matrix(lambda s: vector_action(v1, s), to_minus=True)
        a3 = _minus_matrix(lambda s: vector_action(v1, s), to_plus=True)
        return TrialityMap((0, 2, 1), (a1, a2, a3))
    if k == 2:
        def reflect_s(s: SpinorElement) -> SpinorElement:
            return -(s - x1.scale(TWO * pairing_N(x1, s)))  # -R_{x1}
        a1 = ExactMatrix.from_columns([minus_coords(vector_action(_unit(p), x1))
                                       for p in range(8)])
        a2 = _plus_matrix(reflect_s, to_minus=False)
        a3 = ExactMatrix.from_columns([t1_product(x1, SpinorElement.blade(m))
                                       for m in minus_masks()])
        return TrialityMap((2, 1, 0), (a1, a2, a3))
    raise TrialityError("k must be 1 or 2")


def _unit(p: int) -> Vec8:
    ep = [ZERO] * 8
    ep[p] = ONE
    return tuple(ep)


def theta_prime(v1: Vec8 | None = None, x1: SpinorElement | None = None) -> TrialityMap:
    """iota_2 after iota_1; cyclic of order three."""
    return compose(make_iota(2, v1, x1), make_iota(1, v1, x1))


def theta_prime_display(v1: Vec8 | None = None, x1: SpinorElement | None = None) -> TrialityMap:
    """The same map assembled from its closed-form slot expressions
    (x1(v1 x), y1(x1 y), v1(y1 v)); used to cross-check the composition."""
    v1 = _as_vec8(v1) if v1 is not None else default_v1()
    x1 = x1 if x1 is not None else default_x1()
    y1 = vector_action(v1, x1)
    to_slot3 = ExactMatrix.from_columns(
        [minus_coords(vector_action(v1, vector_action(_unit(p), y1))) for p in range(8)])
    to_slot1 = ExactMatrix.from_columns(
        [t1_product(x1, vector_action(v1, SpinorElement.blade(m))) for m in plus_masks()])
    to_slot2 = ExactMatrix.from_columns(
        [plus_coords(vector_action(t1_product(x1, SpinorElement.blade(m)), y1))
         for m in minus_masks()])
    return TrialityMap((2, 0, 1), (to_slot3, to_slot1, to_slot2))


def spin_to_triple(a: CliffordElement) -> TrialityMap:
    """(vector_rep, half-spin plus, half-spin minus) of a spin element, with
    the trilinear-form validator run on the result."""
    if not is_spin(a):
        raise CliffordError("spin_to_triple needs a spin-group element")
    plus, minus = half_spin_matrices(a)
    tmap = TrialityMap((0, 1, 2), (vector_rep(a), plus, minus))
    if not validate_triality_map(spinor_model(), tmap):
        raise TrialityError("triple of a spin element failed the trilinear validator")
    return tmap


# ---------------------------------------------------------------------------
# bivectors, brackets, and the linearized automorphism
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bivector_masks() -> tuple[int, ...]:
    return tuple(m for m in range(256) if m.bit_count() == 2)


@lru_cache(maxsize=None)
def _bivector_index() -> dict[int, int]:
    return {m: i for i, m in enumerate(bivector_masks())}


def bivector_from_coords(coords: Sequence[CycloNum]) -> CliffordElement:
    return CliffordElement(default_space(),
                           {m: c for m, c in zip(bivector_masks(), coords)})


def bivector_coords(x: CliffordElement) -> tuple[CycloNum, ...]:
    idx = _bivector_index()
    out = [ZERO] * N_BIVECTORS
    for m, c in x.terms.items():
        if m not in idx:
            raise TrialityError(f"element has a non-bivector component {m:#b}")
        out[idx[m]] = c
    return tuple(out)


@lru_cache(maxsize=None)
def bracket_table() -> dict[tuple[int, int], tuple[tuple[int, CycloNum], ...]]:
    """[B_k, B_l] expanded over the bivector basis, stored sparsely."""
    masks = bivector_masks()
    out = {}
    idx = _bivector_index()
    for k, mk in enumerate(masks):
        bk = CliffordElement.blade(mk)
        for l, ml in enumerate(masks):
            comm = clif_mul(bk, CliffordElement.blade(ml)) - clif_mul(CliffordElement.blade(ml), bk)
            entries = []
            for m, c in comm.terms.items():
                if m not in idx:
                    raise TrialityError("bracket of bivectors left the bivector space")
                entries.append((idx[m], c))
            if entries:
                out[(k, l)] = tuple(entries)
    return out


def bracket_coords(u: Sequence[CycloNum], v: Sequence[CycloNum]) -> tuple[CycloNum, ...]:
    table = bracket_table()
    acc = [ZERO] * N_BIVECTORS
    for (k, l), entries in table.items():
        uk = u[k]
        if not uk:
            continue
        vl = v[l]
        if not vl:
            continue
        f = uk * vl
        for r, c in entries:
            acc[r] = acc[r] + f * c
    return tuple(acc)


def drho_vector(b: CliffordElement) -> ExactMatrix:
    """Standard-representation derivative: v -> b v - v b on basis vectors."""
    cols = []
    for j in range(1, 9):
        ej = basis_vector(j)
        cols.append((clif_mul(b, ej) - clif_mul(ej, b)).vector_coords())
    return ExactMatrix.from_columns(cols)


def drho_plus(b: CliffordElement) -> ExactMatrix:
    return ExactMatrix.from_columns(
        [plus_coords(clifford_action(b, SpinorElement.blade(m))) for m in plus_masks()])


@lru_cache(maxsize=None)
def _drho_system() -> ExactMatrix:
    """64x28 matrix whose column k is the flattened drho of basis bivector k."""
    cols = []
    for mk in bivector_masks():
        cols.append(drho_vector(CliffordElement.blade(mk)).entries)
    return ExactMatrix.from_columns(cols)


@lru_cache(maxsize=None)
def _default_theta_slot2() -> tuple[ExactMatrix, ExactMatrix]:
    th = theta_prime()
    if th.perm != (2, 0, 1):
        raise TrialityError("theta' does not realize the expected 3-cycle")
    theta2 = th.mats[1]  # V2 -> V1
    return theta2, theta2.inverse()


def dtheta_on_bivectors(v1: Vec8 | None = None, x1: SpinorElement | None = None) -> ExactMatrix:
    """28x28 matrix of the linearized order-3 automorphism on bivectors.

    For each basis bivector B, the half-spin derivative conjugated by the
    slot-2 component of theta' is the standard-representation derivative of
    the image bivector; an exact solve recovers it.
    """
    if v1 is None and x1 is None:
        theta2, theta2_inv = _default_theta_slot2()
    else:
        th = theta_prime(v1, x1)
        if th.perm != (2, 0, 1):
            raise TrialityError("theta' does not realize the expected 3-cycle")
        theta2 = th.mats[1]
        theta2_inv = theta2.inverse()
    d = _drho_system()
    rhs = []
    for mk in bivector_masks():
        m = theta2 @ drho_plus(CliffordElement.blade(mk)) @ theta2_inv
        rhs.append(m.entries)
    sols = d.solve_many(rhs)
    if any(s is None for s in sols):
        raise TrialityError("conjugated derivative left the image of drho; "
                            "the identification is broken")
    return ExactMatrix.from_columns(sols)


@lru_cache(maxsize=None)
def default_dtheta() -> ExactMatrix:
    return dtheta_on_bivectors()


def fixed_subalgebra(auto: ExactMatrix,
                     require_order_3: bool = False) -> tuple[int, list[tuple[CycloNum, ...]]]:
    """Kernel of (auto - 1) on bivector coordinates, with a bracket-closure
    check.  Pass require_order_3 for maps that are expected to cube to the
    identity (the linearized automorphism itself does; its composition with a
    conjugation generally does not, though its fixed space is still a
    subalgebra)."""
    if (auto.rows, auto.cols) != (N_BIVECTORS, N_BIVECTORS):
        raise TrialityError("expected a 28x28 matrix")
    eye = ExactMatrix.identity(N_BIVECTORS)
    if require_order_3 and auto @ auto @ auto != eye:
        raise TrialityError("automorphism is not of order dividing 3")
    if auto.rank() != N_BIVECTORS:
        raise TrialityError("automorphism matrix is singular")
    basis = (auto - eye).kernel()
    span = rref([{i: c for i, c in enumerate(v) if c} for v in basis])
    for i, u in enumerate(basis):
        for v in basis[i:]:
            br = bracket_coords(u, v)
            if not _in_span(span, br):
                raise TrialityError("fixed subspace is not closed under the bracket")
    return len(basis), basis


def _in_span(span_rref: dict[int, dict[int, CycloNum]], vec: Sequence[CycloNum]) -> bool:
    row = {i: c for i, c in enumerate(vec) if c}
    while row:
        p = min(row)
        piv = span_rref.get(p)
        if piv is None:
            return False
        f = row[p]
        for c, v in piv.items():
            cur = row.get(c)
            nv = (cur - f * v) if cur is not None else -(f * v)
            if nv:
                row[c] = nv
            elif cur is not None:
                del row[c]
    return True


def ad_on_bivectors(s: CliffordElement) -> ExactMatrix:
    """Conjugation B -> s B s^{-1} on the bivector basis (s in the spin group,
    so s^{-1} = bar(s))."""
    if not is_spin(s):
        raise CliffordError("ad_on_bivectors needs a spin-group element")
    sb = bar(s)
    cols = []
    for mk in bivector_masks():
        img = clif_mul(clif_mul(s, CliffordElement.blade(mk)), sb)
        cols.append(bivector_coords(img))
    return ExactMatrix.from_columns(cols)


# ---------------------------------------------------------------------------
# octonion-model symmetry bookkeeping
# ---------------------------------------------------------------------------

def octonion_hat(a: ExactMatrix) -> ExactMatrix:
    """conj . a . conj in the fixed octonion basis (unit, then trace-zero)."""
    k = ExactMatrix.diagonal([1, -1, -1, -1, -1, -1, -1, -1])
    return k @ a @ k


def octonion_sigma1(triple):
    a, b, c = triple
    return (octonion_hat(a), octonion_hat(c), octonion_hat(b))


def octonion_sigma2(triple):
    a, b, c = triple
    return (octonion_hat(c), octonion_hat(b), octonion_hat(a))


def octonion_theta_shift(triple):
    a, b, c = triple
    return (b, c, a)
