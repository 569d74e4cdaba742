import pytest

from trialgebra.exact_field import ExactMatrix, ZERO, ONE, rref
from trialgebra import clifford as cl
from trialgebra import spinor as sp
from trialgebra import sampling
from trialgebra.triality import q_vec


def test_wedge_and_contraction_normalization():
    one = sp.SpinorElement.one()
    assert sp.wedge_w(1, one) == sp.SpinorElement.blade(0b0001)
    assert sp.contract_w(1, sp.SpinorElement.blade(0b0001)) == one
    for k in range(1, 5):
        for j in range(1, 5):
            d = sp.contract_w(k, sp.SpinorElement.blade(1 << (j - 1)))
            assert d == (sp.SpinorElement.one() if j == k else sp.SpinorElement({}))


def test_generator_actions_square_correctly():
    # lambda(e_i)^2 = q(e_i) = -1 on every basis spinor
    for i in range(1, 9):
        for m in range(16):
            s = sp.SpinorElement.blade(m)
            twice = sp.clifford_action(cl.basis_vector(i),
                                       sp.clifford_action(cl.basis_vector(i), s))
            assert twice == s.scale(-1)


def test_clifford_relation_on_random_vectors(rng):
    for _ in range(50):
        u, v = sampling.vec8(rng), sampling.vec8(rng)
        s = sampling.spinor(rng)
        lhs = sp.vector_action(u, sp.vector_action(v, s)) + \
            sp.vector_action(v, sp.vector_action(u, s))
        b_q = q_vec(u, v) + q_vec(v, u)
        assert lhs == s.scale(b_q)


def test_module_law(rng):
    for _ in range(30):
        x, y = sampling.multivector(rng), sampling.multivector(rng)
        s = sampling.spinor(rng)
        assert sp.clifford_action(cl.clif_mul(x, y), s) == \
            sp.clifford_action(x, sp.clifford_action(y, s))


def test_blade_actions_linearly_independent():
    rows = []
    for cm in range(256):
        bl = cl.CliffordElement.blade(cm)
        row = {}
        for m in range(16):
            img = sp.clifford_action(bl, sp.SpinorElement.blade(m))
            for m2, c in img.terms.items():
                row[m * 16 + m2] = c
        rows.append(row)
    assert len(rref(rows)) == 256


def test_half_spin_labels_match_published_center_table():
    assert sp.plus_is_even()
    eta = cl.CliffordElement.blade(0xFF)
    plus, minus = sp.half_spin_matrices(eta)
    assert plus == ExactMatrix.identity(8)
    assert minus == ExactMatrix.identity(8).scale(-1)
    plus, minus = sp.half_spin_matrices(cl.CliffordElement.scalar(-1))
    assert plus == ExactMatrix.identity(8).scale(-1)
    assert minus == ExactMatrix.identity(8).scale(-1)
    p1, m1 = sp.half_spin_matrices(cl.CliffordElement.scalar(1))
    assert p1 == ExactMatrix.identity(8) and m1 == ExactMatrix.identity(8)


def test_half_spin_multiplicative(rng):
    a = sampling.spin_element(rng, factors=2)
    b = sampling.spin_element(rng, factors=2)
    pa, ma = sp.half_spin_matrices(a)
    pb, mb = sp.half_spin_matrices(b)
    pab, mab = sp.half_spin_matrices(cl.clif_mul(a, b))
    assert pab == pa @ pb
    assert mab == ma @ mb


def test_half_spin_requires_spin():
    with pytest.raises(cl.CliffordError):
        sp.half_spin_matrices(cl.basis_vector(1))


def test_parity_exchange():
    for i in range(1, 9):
        v = cl.basis_vector(i)
        for m in sp.plus_masks():
            img = sp.clifford_action(v, sp.SpinorElement.blade(m))
            assert set(img.terms) <= set(sp.minus_masks())
        for m in sp.minus_masks():
            img = sp.clifford_action(v, sp.SpinorElement.blade(m))
            assert set(img.terms) <= set(sp.plus_masks())


def test_top_coefficient():
    assert sp.top_coefficient(sp.SpinorElement.blade(0b1111)) == ONE
    assert sp.top_coefficient(sp.SpinorElement.one()) == ZERO
    assert sp.top_coefficient(sp.SpinorElement.blade(0b0011)) == ZERO


def test_pairing_examples():
    one = sp.SpinorElement.one()
    top = sp.SpinorElement.blade(0b1111)
    assert sp.pairing_N(one, top) == ONE
    assert sp.pairing_N(top, one) == ONE
    assert sp.pairing_N(one, one) == ZERO


def test_pairing_symmetric_within_halves(rng):
    for masks in (sp.plus_masks(), sp.minus_masks()):
        for _ in range(20):
            x = sampling.spinor_in(rng, masks)
            y = sampling.spinor_in(rng, masks)
            assert sp.pairing_N(x, y) == sp.pairing_N(y, x)


def test_pairing_gram_rank():
    gp = sp.gram_N_plus()
    gm = sp.gram_N_minus()
    assert gp.rank() == 8 and gm.rank() == 8
    assert gp == gp.transpose()
    assert gm == gm.transpose()


def test_pairing_vector_self_adjoint(rng):
    for _ in range(50):
        v = sampling.vec8(rng)
        x, y = sampling.spinor(rng), sampling.spinor(rng)
        assert sp.pairing_N(sp.vector_action(v, x), y) == \
            sp.pairing_N(x, sp.vector_action(v, y))


def test_pairing_spin_invariance(rng):
    for _ in range(4):
        a = sampling.spin_element(rng, factors=2)
        x, y = sampling.spinor(rng), sampling.spinor(rng)
        ax = sp.clifford_action(a, x)
        ay = sp.clifford_action(a, y)
        assert sp.pairing_N(ax, ay) == sp.pairing_N(x, y)


def test_bar_pairing_relation(rng):
    for _ in range(20):
        x, y = sampling.spinor(rng), sampling.spinor(rng)
        assert sp.pairing_Nbar(x, y) == sp.pairing_N(sp.spinor_iota(x), y)


def test_stray_component_rejected():
    mixed = sp.SpinorElement({0: ONE, 1: ONE})
    with pytest.raises(ValueError):
        sp.plus_coords(mixed)


def test_isotropic_basis_pairing_reading():
    """The contraction normalization d_k(w_j) = delta_kj encodes the reading
    b_q(w_k, w'_k) = 1 (half of it is the stated 1/2): the full polarization
    of q on the isotropic pair is 1, pinned by the module relation."""
    from trialgebra.exact_field import HALF, I
    # w_k = (i e_k + e_{k+4})/2 and w'_k = (i e_k - e_{k+4})/2 in coordinates
    for k in range(4):
        wk = [ZERO] * 8
        wk[k] = I * HALF
        wk[k + 4] = HALF
        wpk = [ZERO] * 8
        wpk[k] = I * HALF
        wpk[k + 4] = -HALF
        b_q = q_vec(wk, wpk) + q_vec(wpk, wk)
        assert q_vec(wk, wpk) == HALF
        assert b_q == ONE
        assert q_vec(wk, wk) == ZERO and q_vec(wpk, wpk) == ZERO
        # and the module action realizes exactly that pairing:
        # lambda(w_k) lambda(w'_k) + lambda(w'_k) lambda(w_k) = 1
        for m in range(16):
            s = sp.SpinorElement.blade(m)
            lhs = sp.vector_action(wk, sp.vector_action(wpk, s)) + \
                sp.vector_action(wpk, sp.vector_action(wk, s))
            assert lhs == s
