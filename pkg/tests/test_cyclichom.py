import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicrossed.coeff import SAYDModule
from bicrossed.cyclichom import (
    Bicocyclic,
    ColumnOps,
    DiagonalOps,
    RowOps,
    StandardCocyclic,
    bullet,
    check_cocyclic,
    check_psi,
    psi_diag,
    psi_diag_inv,
)
from bicrossed.exactlin import Vec

from conftest import shipped

ONE_U, H_, E_ = (0, 0), (1, 0), (0, 1)
UNIT = ((0,), ONE_U)
HH = ((0,), H_)


def e1_ops(module="trivial", **kw):
    fx = shipped("e1-borel-sl2")
    S = SAYDModule(fx.H, fx.module(module), **kw)
    return fx, S, StandardCocyclic(S, 2, 2)


def test_first_face_inserts_unit():
    _, _, std = e1_ops()
    assert std.face(0, Vec.unit((0, ())), 0) == {(0, (UNIT,)): 1}


def test_tau_examples():
    _, _, std = e1_ops()
    c = Vec.unit((0, (HH,)))
    golden = {(0, (UNIT,)): 2, (0, (HH,)): -1}
    assert std.tau(c, 1) == golden
    assert std.tau(std.tau(c, 1), 1) == c
    assert std.tau(Vec.unit((0, (UNIT,))), 1) == {(0, (UNIT,)): 1}


def test_b_and_B_examples():
    _, _, std = e1_ops()
    assert std.b(Vec.unit((0, ())), 0) == Vec()
    assert std.B(Vec.unit((0, (UNIT,))), 1) == {(0, ()): 1}


def test_bullet_examples(e1):
    lh = e1.lh
    f, ff = (1,), (2,)
    assert bullet(lh, lh.U.gen(0), Vec.unit((f,))) == {(f,): 2}
    assert bullet(lh, lh.U.gen(1), Vec.unit((f, f))) == {(ff, f): 1, (f, ff): 3}


def bullet_oracle(lh, i, f1, f2):
    """X•(f¹⊗f²) = X⟨0⟩▷f¹ ⊗ X⟨1⟩f² + f¹ ⊗ X▷f² for a generator X = X_i."""
    F = lh.F
    out = Vec()
    for j in range(lh.m):
        for e, c in lh.coef[i][j].items():
            left = lh.act_gen(j, Vec.unit(f1))
            right = F.mul(Vec.unit(e), Vec.unit(f2))
            for a, x in left.items():
                for b, y in right.items():
                    out.add_term((a, b), c * x * y)
    for b, y in lh.act_gen(i, Vec.unit(f2)).items():
        out.add_term((f1, b), y)
    return out


@given(st.integers(0, 1), st.integers(0, 3), st.integers(0, 3))
def test_bullet_matches_leg_oracle(i, p, q):
    lh = shipped("e1-borel-sl2").lh
    assert bullet(lh, lh.U.gen(i), Vec.unit(((p,), (q,)))) == bullet_oracle(lh, i, (p,), (q,))


@pytest.mark.parametrize("module", ["trivial", "adjoint"])
def test_standard_module_identities(module):
    _, _, std = e1_ops(module)
    assert check_cocyclic(std, 2, 2, 0).ok


def test_e3_standard_identities():
    fx = shipped("e3-laurent")
    assert check_cocyclic(StandardCocyclic(SAYDModule(fx.H, fx.module("trivial"))), 3, 3, 0).ok


def test_missing_delta_twist_breaks_cyclicity():
    _, _, std = e1_ops(delta_twist=False)
    ids = check_cocyclic(std, 1, 2, 0).identities()
    assert "cocyclic.tau-cyclic" in ids


@settings(max_examples=15)
@given(st.integers(1, 2), st.integers(0, 10**6))
def test_random_cochains(n, seed):
    _, _, std = e1_ops()
    c = std.sample(random.Random(seed), n)
    assert std.b(std.b(c, n), n + 1) == Vec()
    assert std.tau_power(c, n, n + 1) == c


def test_bicocyclic_rows_columns_diagonal():
    _, S, _ = e1_ops()
    bico = Bicocyclic(S, 2, 2)
    for q in range(2):
        assert check_cocyclic(RowOps(bico, q), 2, 2, q).ok
    for p in range(2):
        assert check_cocyclic(ColumnOps(bico, p), 2, 2, p).ok
    assert check_cocyclic(DiagonalOps(bico), 2, 2, 0).ok


def test_vertical_last_face_on_unit():
    _, S, _ = e1_ops()
    col = ColumnOps(Bicocyclic(S), 1)
    assert col.face(1, Vec.unit((0, (ONE_U,), ())), 0) == {(0, (ONE_U,), ((0,),)): 1}


def test_psi_examples():
    _, S, _ = e1_ops()
    bico = Bicocyclic(S, 2, 2)
    assert psi_diag(bico, Vec.unit((0, (), ()))) == {(0, ()): 1}
    # ∇H = H⊗1, so the twist is trivial
    assert psi_diag(bico, Vec.unit((0, (H_,), ((1,),)))) == {(0, (((1,), H_),)): 1}
    c = Vec({(0, (E_, H_), ((1,), (2,))): 1, (0, (H_, E_), ((0,), (1,))): -2})
    assert psi_diag_inv(bico, psi_diag(bico, c)) == c
    assert check_psi(bico, 2, 2, 0).ok
