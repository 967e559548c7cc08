import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossbraid.comodule import (
    Comodule,
    ComoduleAxiomError,
    check_comodule_morphism,
    comodule_axioms,
    cotensor,
    grouplike_comodule,
    one_dimensional,
    regular_comodule,
    subcomodule,
    tensor_comodules,
    twist_coaction,
    unit_cotensor_maps,
)
from crossbraid.exactla import Matrix, kron
from crossbraid.supergroup import build_supergroup

H2 = build_supergroup(2)


def base_objects(h):
    reg = regular_comodule(h)
    return {
        "k1": one_dimensional(h, "1"),
        "ku": one_dimensional(h, "u"),
        "H": reg,
        "V2": subcomodule(reg, [0, 1], "V2"),
    }


OBJECTS = base_objects(H2)


def test_regular_comodule_axioms(h2):
    rep = comodule_axioms(regular_comodule(h2))
    assert rep.ok
    assert {c.identity for c in rep.checks} >= {"(Δ⊗id)ρ = (id⊗ρ)ρ", "right: (id⊗Δ)ρ = (ρ⊗id)ρ"}


def test_broken_coaction_is_rejected(h2):
    with pytest.raises(ComoduleAxiomError):
        Comodule(h2, 1, [{(1, 0): Fraction(1)}])


def test_non_grouplike_rejected(h2):
    with pytest.raises(ValueError):
        grouplike_comodule(h2, {1: Fraction(1)})


def test_subcomodule_must_be_closed(h2):
    with pytest.raises(ValueError):
        subcomodule(regular_comodule(h2), [1])  # Δx1 involves u⊗x1 and x1⊗1


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(sorted(OBJECTS)), min_size=2, max_size=3))
def test_tensor_products_satisfy_axioms(names):
    obj = OBJECTS[names[0]]
    for name in names[1:]:
        obj = tensor_comodules(obj, OBJECTS[name])
    assert comodule_axioms(obj).ok
    assert obj.dim == math.prod(OBJECTS[n].dim for n in names)


def test_tensor_is_memoized():
    a, b = OBJECTS["ku"], OBJECTS["H"]
    assert tensor_comodules(a, b) is tensor_comodules(a, b)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(OBJECTS)), st.sampled_from(sorted(OBJECTS)), st.sampled_from(sorted(OBJECTS)))
def test_identity_tensor_maps_are_morphisms(a, b, c):
    x = tensor_comodules(tensor_comodules(OBJECTS[a], OBJECTS[b]), OBJECTS[c])
    y = tensor_comodules(OBJECTS[a], tensor_comodules(OBJECTS[b], OBJECTS[c]))
    # the trivial reassociation is the identity matrix and must commute with the coactions
    assert check_comodule_morphism(Matrix.identity(x.dim), x, y).ok


def test_ku_squared_is_trivial():
    ku = OBJECTS["ku"]
    sq = tensor_comodules(ku, ku)
    assert sq.terms == OBJECTS["k1"].terms


def test_cotensor_dimensions():
    k1, ku, reg = OBJECTS["k1"], OBJECTS["ku"], OBJECTS["H"]
    assert cotensor(reg, ku).dim == 1
    assert cotensor(reg, reg).dim == 8
    assert cotensor(k1, k1).dim == 1
    assert cotensor(k1, ku).dim == 0


def test_cotensor_with_antipode_fallback():
    k = OBJECTS["ku"]
    bare = Comodule(H2, 1, k.terms, label="ku-left-only")
    result = cotensor(bare, k)
    assert result.right_coaction == "antipode"
    assert result.dim == 1


def test_unit_cotensor_maps_compose_to_identity():
    for y in OBJECTS.values():
        into, back = unit_cotensor_maps(y)
        assert back @ into == Matrix.identity(y.dim)
        image = cotensor(OBJECTS["H"], y)
        assert image.dim == y.dim


def test_morphism_checks(h2):
    reg = regular_comodule(h2)
    assert check_comodule_morphism(Matrix.identity(8), reg, reg, "bi").ok
    # ε: H -> k1 is not colinear
    counit = Matrix(1, 8, {0: {0: 1, 4: 1}})
    assert not check_comodule_morphism(counit, reg, OBJECTS["k1"]).ok
    with pytest.raises(ValueError):
        check_comodule_morphism(Matrix.identity(2), reg, reg)
    with pytest.raises(ValueError):
        check_comodule_morphism(Matrix.identity(8), reg, reg, "up")


def test_twist_by_unit_is_identity(h2):
    reg = regular_comodule(h2)
    assert twist_coaction(reg, {0: Fraction(1)}).terms == reg.terms
    twisted = twist_coaction(reg, {4: Fraction(1)})
    assert comodule_axioms(twisted).ok
    assert twisted.terms != reg.terms


def test_from_matrix_roundtrip(h2):
    reg = regular_comodule(h2)
    again = Comodule.from_matrix(h2, reg.coaction)
    assert again.terms == reg.terms


def test_kron_of_identity_maps_is_a_morphism():
    x, y = OBJECTS["V2"], OBJECTS["H"]
    f = kron(Matrix.identity(x.dim), Matrix.identity(y.dim))
    xy = tensor_comodules(x, y)
    assert check_comodule_morphism(f, xy, xy).ok
