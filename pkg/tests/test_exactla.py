from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossbraid.exactla import (
    I_UNIT,
    ZETA8,
    Cyc8,
    Matrix,
    NonRationalSolution,
    TensorIndex,
    block_identity_kron,
    exact_div,
    exact_int,
    format_scalar,
    inverse,
    kernel_basis,
    kron,
    kron_all,
    parse_scalar,
    rank,
    solve_affine,
    solve_quadratic_system,
    sqrt_exact,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
cyc = st.lists(small, min_size=4, max_size=4).map(Cyc8.make)


def matrices(rows, cols):
    return st.lists(st.lists(st.integers(-2, 2), min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        Matrix.from_rows
    )


# --- scalars ---------------------------------------------------------------

def test_zeta_powers():
    assert ZETA8 ** 8 == 1
    assert ZETA8 ** 4 == -1
    assert I_UNIT * I_UNIT == -1
    assert Cyc8.zeta_power(2) == I_UNIT
    assert isinstance(Cyc8.zeta_power(4), Fraction)


def test_make_collapses_rationals():
    assert Cyc8.make([3, 0, 0, 0]) == 3
    assert type(Cyc8.make([3, 0, 0, 0])) is Fraction


@pytest.mark.parametrize("x, root", [(1, 1), (4, 2), (Fraction(9, 4), Fraction(3, 2)), (-1, I_UNIT)])
def test_sqrt_exact(x, root):
    assert sqrt_exact(x) == root
    assert sqrt_exact(x) ** 2 == x


def test_sqrt_of_two_and_minus_two():
    for x in (2, -2, 8, Fraction(1, 2)):
        assert sqrt_exact(x) ** 2 == x


def test_sqrt_outside_field():
    with pytest.raises(ValueError):
        sqrt_exact(3)


def test_format_examples():
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    assert format_scalar(I_UNIT) == "z^2"
    assert format_scalar(Cyc8.make([Fraction(1, 2), -1, 0, 1])) == "1/2 - z + z^3"


def test_parse_rejects_floats():
    with pytest.raises(TypeError):
        parse_scalar(0.5)


@given(cyc)
def test_format_parse_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(cyc, cyc, cyc)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(cyc)
def test_inverse(a):
    if a == 0:
        with pytest.raises(ZeroDivisionError):
            Cyc8.lift(a).inverse()
    else:
        assert a * exact_div(1, a) == 1


def test_exact_div_never_floats():
    assert exact_div(1, 2) == Fraction(1, 2)
    assert isinstance(exact_div(3, 6), Fraction)
    assert exact_int(Fraction(4, 2)) == 2 and type(exact_int(Fraction(4, 2))) is int
    assert exact_int(Fraction(1, 2)) == Fraction(1, 2)


# --- matrices --------------------------------------------------------------

def test_zero_entries_are_not_stored():
    m = Matrix(2, 2, {0: {0: 0, 1: 3}})
    assert m.nnz == 1


def test_shape_errors():
    with pytest.raises(ValueError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(IndexError):
        Matrix(2, 2, {2: {0: 1}})


@settings(max_examples=40)
@given(matrices(2, 3), matrices(3, 2), matrices(2, 2), matrices(2, 1))
def test_kron_mixed_product(a, b, c, d):
    assert kron(a, c) @ kron(b, d) == kron(a @ b, c @ d)


@given(matrices(3, 2))
def test_block_identity_kron_matches_kron(m):
    assert block_identity_kron(2, m, 3) == kron_all(Matrix.identity(2), m, Matrix.identity(3))


@given(matrices(3, 3), matrices(3, 3), matrices(3, 3))
def test_matmul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


def test_kron_index_order():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    k = kron(a, b)
    assert k[0, 3] == 2 and k[3, 0] == 3 and k[2, 3] == 4


def test_tensor_index_roundtrip():
    ti = TensorIndex((2, 3, 4))
    assert all(ti.flatten(ti.unflatten(k)) == k for k in range(ti.size))
    assert ti.flatten((1, 0, 0)) == 12


# --- linear algebra --------------------------------------------------------

@settings(max_examples=60)
@given(matrices(3, 5))
def test_rank_nullity_and_kernel(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert m.apply(dict(enumerate(v))) == {}


@settings(max_examples=60)
@given(matrices(3, 3))
def test_inverse_or_singular(m):
    if rank(m) == 3:
        assert (inverse(m) @ m).is_identity()
    else:
        with pytest.raises(ZeroDivisionError):
            inverse(m)


def test_inverse_with_nonunit_pivot_stays_exact():
    m = Matrix.from_rows([[2, 0], [0, 3]])
    inv = inverse(m)
    assert inv[0, 0] == Fraction(1, 2) and isinstance(inv[0, 0], Fraction)


@settings(max_examples=60)
@given(matrices(3, 4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_affine_recovers_solution(m, x):
    b = [m.apply(dict(enumerate(x))).get(i, 0) for i in range(m.rows)]
    part, ker = solve_affine(m, b)
    assert [m.apply(dict(enumerate(part))).get(i, 0) for i in range(m.rows)] == b
    assert len(ker) == m.cols - rank(m)


def test_solve_affine_inconsistent():
    assert solve_affine(Matrix.from_rows([[1, 1], [1, 1]]), [0, 1]) is None


def test_cyclotomic_matrices():
    m = Matrix.scalar(2, I_UNIT)
    assert (m @ m) == Matrix.scalar(2, -1)
    assert (inverse(m) @ m).is_identity()


# --- quadratic systems -----------------------------------------------------

def test_quadratic_square_root_branches():
    # x^2 = 1, y = x
    eqs = [{(0, 0): 1, (): -1}, {(1,): 1, (0,): -1}]
    assert solve_quadratic_system(2, eqs) == [(-1, -1), (1, 1)]


def test_quadratic_product_branches():
    # xy = 0, x + y = 1
    eqs = [{(0, 1): 1}, {(0,): 1, (1,): 1, (): -1}]
    assert sorted(solve_quadratic_system(2, eqs)) == [(0, 1), (1, 0)]


def test_quadratic_irrational():
    with pytest.raises(NonRationalSolution):
        solve_quadratic_system(1, [{(0, 0): 1, (): -2}])


def test_quadratic_negative_discriminant_is_reported():
    with pytest.raises(NonRationalSolution):
        solve_quadratic_system(1, [{(0, 0): 1, (): 1}])


def test_quadratic_inconsistent_linear_part():
    assert solve_quadratic_system(1, [{(0,): 1, (): -1}, {(0,): 1, (): -2}]) == []
