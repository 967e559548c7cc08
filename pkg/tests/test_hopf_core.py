import dataclasses
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossbraid.exactla import Matrix
from crossbraid.hopf_core import (
    HopfData,
    StructureError,
    convolution_inverse,
    convolve,
    convolve_all,
    cyclic_group_algebra,
    delta_functional,
    enumerate_characters,
    enumerate_grouplikes,
    exterior_algebra,
    functional_from_map,
    is_character,
    klein_group_algebra,
    r_form_inverse,
    r_matrix_inverse,
    verify_antipode,
    verify_antipode_antimultiplicative,
    verify_bialgebra_axioms,
    verify_cqt,
    verify_qt,
)
from crossbraid.supergroup import build_supergroup, standard_r_form, standard_r_matrix


@pytest.mark.parametrize("n", [1, 2, 3])
def test_supergroup_passes_every_suite(n):
    h = build_supergroup(n)
    for rep in (
        verify_bialgebra_axioms(h),
        verify_antipode(h),
        verify_antipode_antimultiplicative(h),
        verify_qt(h, standard_r_matrix(n)),
        verify_cqt(h, standard_r_form(n)),
    ):
        assert rep.ok, rep.render_text()


@pytest.mark.parametrize("fixture", [cyclic_group_algebra(2), cyclic_group_algebra(3), klein_group_algebra()])
def test_group_algebras_are_hopf(fixture):
    assert verify_bialgebra_axioms(fixture).ok
    assert verify_antipode(fixture).ok
    assert len(enumerate_grouplikes(fixture)) == fixture.dim


def test_exterior_fixture_is_an_algebra_only():
    e = exterior_algebra(2)
    rep = verify_bialgebra_axioms(e)
    assert rep["associativity"].ok and rep["unitality"].ok and rep["coassociativity"].ok
    assert not rep["coproduct multiplicative"].ok
    assert enumerate_characters(e) == [tuple(e.counit)]


# --- mutations with pinned witnesses ------------------------------------------------


def test_identity_antipode_fails_at_x1(h2):
    bad = dataclasses.replace(h2, antipode=Matrix.identity(h2.dim))
    name, failure = verify_antipode(bad).first_failure()
    assert name == "m(S⊗id)Δ = 1ε"
    assert failure.witness == (1,)
    assert failure.lhs == "x1 + ux1"


def test_perturbed_product_fails_associativity(h2):
    mult = [list(row) for row in h2.mult]
    mult[1][2] = {3: Fraction(2)}
    bad = dataclasses.replace(h2, mult=tuple(tuple(r) for r in mult))
    name, failure = verify_bialgebra_axioms(bad).first_failure()
    assert name == "associativity"
    assert failure.witness == (1, 2, 4)


def test_trivial_r_matrix_fails_conjugation(h2):
    name, failure = verify_qt(h2, {(0, 0): Fraction(1)}).first_failure()
    assert name == "Δop(h) = R Δ(h) R^-1"
    assert failure.witness == (1,)


def test_wrong_sign_r_form_fails_quasi_cocommutativity(h2):
    u = h2.index("u")
    bad = Matrix(8, 8, {0: {0: 1, u: 1}, u: {0: 1, u: 1}})
    rep = verify_cqt(h2, bad)
    assert [c.identity for c in rep.failed()] == ["r(a1⊗b1) a2 b2 = r(a2⊗b2) b1 a1"]
    assert (1, u) in [f.witness for f in rep.failed()[0].failures]


def test_singular_r_matrix_skips_remaining_checks(h2):
    rep = verify_qt(h2, {})
    assert not rep["R invertible"].ok
    assert all(c.skipped for c in rep.checks[1:])


# --- structure ------------------------------------------------------------------------


def test_grouplikes_and_characters(h2):
    assert enumerate_grouplikes(h2) == [{0: 1}, {4: 1}]
    chars = enumerate_characters(h2)
    assert chars[0] == tuple(h2.counit)
    assert len(chars) == 2
    assert chars[1][4] == -1 and all(v == 0 for i, v in enumerate(chars[1]) if i not in (0, 4))


def test_r_inverses(h2):
    R = standard_r_matrix(2)
    assert r_matrix_inverse(h2, R) is not None
    r = standard_r_form(2)
    inv = r_form_inverse(h2, r)
    assert inv == r  # r(u⊗u)² = 1 and r vanishes on the exterior part


def test_json_roundtrip_is_exact(h2):
    text = h2.to_json()
    doc = json.loads(text)
    assert all(isinstance(v, str) for v in doc["counit"])
    back = HopfData.from_json(text)
    assert back.to_json() == text
    assert back.mult == h2.mult and back.comult == h2.comult and back.antipode == h2.antipode


def test_floats_rejected(h2):
    doc = h2.to_json_dict()
    doc["counit"][0] = 1.0
    with pytest.raises(StructureError):
        HopfData.from_json_dict(doc)


def test_missing_field(h2):
    doc = h2.to_json_dict()
    del doc["antipode"]
    with pytest.raises(StructureError):
        HopfData.from_json_dict(doc)


def test_shape_validation():
    with pytest.raises(StructureError):
        HopfData.from_dense(["1"], [[["1", "0"]]], ["1"], [[["1"]]], ["1"], [["1"]])


# --- convolution ----------------------------------------------------------------------

functionals = st.lists(st.integers(-2, 2), min_size=8, max_size=8).map(lambda xs: tuple(Fraction(x) for x in xs))


@settings(max_examples=30, deadline=None)
@given(functionals, functionals, functionals)
def test_convolution_associative_with_unit(p, q, r):
    h = build_supergroup(2)
    eps = tuple(h.counit)
    assert convolve(convolve(p, q, h), r, h) == convolve(p, convolve(q, r, h), h)
    assert convolve(eps, p, h) == p == convolve(p, eps, h)


@settings(max_examples=30, deadline=None)
@given(functionals)
def test_convolution_inverse(p):
    h = build_supergroup(2)
    try:
        q = convolution_inverse(p, h)
    except ZeroDivisionError:
        # invertible exactly when nonzero on both grouplikes
        assert p[0] == 0 or p[4] == 0
        return
    assert convolve(p, q, h) == tuple(h.counit) == convolve(q, p, h)


def test_characters_are_closed_under_convolution(h2):
    chars = enumerate_characters(h2)
    for a in chars:
        for b in chars:
            assert is_character(h2, convolve(a, b, h2))
    assert convolve_all(h2, chars[1], chars[1]) == tuple(h2.counit)


def test_functional_from_map_and_delta(h2):
    assert functional_from_map(h2, Matrix.identity(8)) == tuple(h2.counit)
    assert delta_functional(h2, 3) == tuple(Fraction(int(i == 3)) for i in range(8))
