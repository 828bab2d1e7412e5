from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicrossed.exactlin import Fraction, Vec
from bicrossed.liealg import (
    LieAlgebra,
    LieModule,
    adjoint_trace_character,
    ce_coboundary,
    ce_cohomology,
    check_jacobi,
    check_module,
    contract,
    de_rham,
    lie_homology_boundary,
    relative_invariant_basis,
    sort_sign,
)

from oracles import DenseCE, module_matrices, raw_fixture, structure_constants

SL2 = {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}


@pytest.fixture
def sl2():
    return LieAlgebra.from_brackets(["H", "E", "F"], SL2)


@pytest.fixture
def axb():
    return LieAlgebra.from_brackets(["X", "Y"], {(0, 1): {1: 1}})


def test_jacobi_reports(sl2):
    assert check_jacobi(sl2).ok
    assert check_jacobi(LieAlgebra.abelian(["a", "b", "c"])).ok
    raw = {
        (0, 1): {1: 2}, (1, 0): {1: -2},
        (0, 2): {2: -2}, (2, 0): {2: 2},
        (1, 2): {0: 2}, (2, 1): {0: -1},
    }
    assert not check_jacobi(LieAlgebra(["H", "E", "F"], raw)).ok


def test_modular_character(sl2):
    borel = LieAlgebra.from_brackets(["H", "E"], {(0, 1): {1: 2}})
    assert adjoint_trace_character(borel) == [2, 0]
    assert adjoint_trace_character(sl2) == [0, 0, 0]
    assert adjoint_trace_character(LieAlgebra.abelian(["a", "b"])) == [0, 0]


def test_de_rham_sign(axb):
    # ∂θ^Y = θ^X∧θ^Y for [X, Y] = Y
    assert de_rham(axb, (1,)) == {(0, 1): 1}
    assert de_rham(axb, (0,)) == Vec()


def test_degree_zero_coboundary(sl2):
    V = LieModule.adjoint(sl2).as_right()
    # E◁H = −2E, E◁F = H
    assert ce_coboundary(sl2, V, Vec.unit((1, ()))) == {(1, (0,)): -2, (0, (2,)): 1}


def test_homology_boundary(sl2):
    V = LieModule.trivial(sl2)
    assert lie_homology_boundary(sl2, V, Vec.unit((0, (1, 2)))) == {(0, (0,)): -1}
    g = LieAlgebra.abelian(["a", "b"])
    assert lie_homology_boundary(g, LieModule.trivial(g), Vec.unit((0, (0, 1)))) == Vec()


def test_relative_invariants(sl2):
    V = LieModule.trivial(sl2)
    assert relative_invariant_basis(sl2, [0], V, 1) == []
    assert relative_invariant_basis(sl2, [0], V, 2) == [{(0, (1, 2)): 1}]
    assert relative_invariant_basis(sl2, [0, 1, 2], V, 1) == []
    assert len(relative_invariant_basis(sl2, [], V, 2)) == 3


def test_module_checks(sl2):
    A = LieModule.adjoint(sl2)
    assert check_module(sl2, A).ok and check_module(sl2, A.as_right()).ok
    broken = LieModule(3, [m for m in A.action], "left")
    broken.action[0] = [v * 2 for v in broken.action[0]]
    assert not check_module(sl2, broken).ok


@pytest.mark.parametrize(
    "name, module, dims",
    [("e1-borel-sl2", "trivial", [1, 0, 0, 1]), ("e1-borel-sl2", "adjoint", [0, 0, 0, 0]), ("e2-axb", "trivial", [1, 1, 0])],
)
def test_cohomology_against_dense_oracle(name, module, dims):
    data = raw_fixture(name)
    basis, C = structure_constants(data)
    oracle = DenseCE(C, module_matrices(data, C, module))
    assert oracle.cohomology() == dims
    g = LieAlgebra.from_brackets(basis, {
        (i, j): {k: Fraction(int(c.p), int(c.q)) for k, c in enumerate(C[i][j]) if c}
        for i in range(len(C)) for j in range(i + 1, len(C))
    })
    V = LieModule.adjoint(g) if module == "adjoint" else LieModule.trivial(g)
    assert ce_cohomology(g, V).dims == dims


def test_abelian_cohomology_is_binomial():
    g = LieAlgebra.abelian(["a", "b", "c"])
    assert ce_cohomology(g, LieModule.trivial(g)).dims == [1, 3, 3, 1]


@given(st.lists(st.integers(0, 5), max_size=6))
def test_sort_sign(seq):
    sg, key = sort_sign(seq)
    if len(set(seq)) < len(seq):
        assert sg == 0
    else:
        assert key == tuple(sorted(seq))
        # swapping the first two entries flips the sign
        if len(seq) >= 2:
            assert sort_sign([seq[1], seq[0]] + seq[2:])[0] == -sg


@given(st.integers(0, 2), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_coboundary_squares_to_zero(q, coeffs):
    g = LieAlgebra.from_brackets(["H", "E", "F"], SL2)
    V = LieModule.adjoint(g).as_right()
    keys = [(a, I) for I in combinations(range(3), q) for a in range(3)]
    omega = Vec.from_terms((keys[(k * 5) % len(keys)], c) for k, c in enumerate(coeffs))
    assert ce_coboundary(g, V, ce_coboundary(g, V, omega)) == Vec()


def test_contraction_sign():
    assert contract(1, Vec.unit((0, (0, 1)))) == {(0, (0,)): -1}
    assert contract(0, Vec.unit((0, (0, 1)))) == {(0, (1,)): 1}
