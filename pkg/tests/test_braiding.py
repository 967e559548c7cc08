import itertools
import json
from fractions import Fraction

import pytest

from crossbraid.braiding import (
    EXPECTED_VERDICTS,
    READINGS,
    automorphism_candidates,
    braiding_component,
    character_candidate,
    check_br4_with_t,
    check_c2_conditions,
    check_general_conditions,
    check_reduced_conditions,
    cross_validate_conditions,
    monodromy_obstruction,
    restrict_to_identity_component,
    rform_braiding,
    t_search,
    trivial_candidate,
    twisted_rform_identity,
    verify_hexagons,
    with_t,
)
from crossbraid.comodule import check_comodule_morphism, tensor_comodules
from crossbraid.crossed import CrossedDatum, klein_group, standard_objects
from crossbraid.crossed import testset as graded_testset
from crossbraid.exactla import Cyc8, Matrix
from crossbraid.hopf_core import enumerate_characters
from crossbraid.supergroup import build_iota, deformed_r_form, standard_r_form

from conftest import cached_preset, cached_verdict


def datum(name):
    return cached_preset(name).datum


def test_rform_braiding_on_grouplikes(h2):
    objs = standard_objects(h2)
    r = standard_r_form(2)
    assert rform_braiding(r, objs["ku"], objs["ku"]) == Matrix.scalar(1, -1)
    assert rform_braiding(r, objs["k1"], objs["ku"]) == Matrix.identity(1)
    hh = tensor_comodules(objs["H"], objs["H"])
    c_hh = rform_braiding(r, objs["H"], objs["H"])
    assert check_comodule_morphism(c_hh, hh, hh).ok
    assert (c_hh @ c_hh).is_identity()


def test_twisted_rform_identity(h2):
    r = standard_r_form(2)
    u = {h2.index("u"): Fraction(1)}
    assert twisted_rform_identity(h2, r, build_iota(2), u).ok
    name, failure = twisted_rform_identity(h2, r, Matrix.identity(8), u).first_failure()
    assert failure.witness == ("x1",) and failure.lhs == "-x1"


def test_candidates_come_from_automorphisms():
    labels = [c.label for c in automorphism_candidates(datum("D-1-id-plus"))]
    assert labels == ["trivial"]


# --- conditions -----------------------------------------------------------------------


def test_trivial_candidate_fails_braid4_and_braid5():
    rep = check_general_conditions(datum("D-u-iota-minus"), trivial_candidate(datum("D-u-iota-minus")))
    failed = {ch.identity: ch.failures[0].witness for ch in rep.failed()}
    assert failed == {
        "braid4: V^a(g(b,c)) = (γ_abc γ_bca)⁻¹ γ_bac": ("u", "u", "u"),
        "braid5: W^b(g(c,a)) = γ_cab γ_bca γ_cba⁻¹": ("u", "u", "u"),
    }


@pytest.mark.parametrize(
    "name, ok, first",
    [
        ("D-1-id-plus", True, None),
        ("D-u-iota-plus", True, None),
        ("D-1-id-minus", False, ("d′: ε(g) = γ⁻¹", ("1",))),
        ("D-u-iota-minus", False, ("d′: ε(g) = γ⁻¹", ("u",))),
    ],
)
def test_reduced_conditions(name, ok, first):
    rep = check_reduced_conditions(datum(name))
    assert rep.ok is ok
    if first:
        n, failure = rep.first_failure()
        assert (n, failure.witness) == first
        assert (failure.lhs, failure.rhs) == (1, -1)


def test_reduced_conditions_agree_with_general_ones():
    for name in ("D-1-id-plus", "D-1-id-minus", "D-u-iota-plus", "D-u-iota-minus"):
        d = datum(name)
        assert check_reduced_conditions(d).ok == check_general_conditions(d, trivial_candidate(d)).ok, name


def test_character_candidate_satisfies_c2_conditions():
    d = datum("D-u-iota-minus")
    chi = enumerate_characters(d.hopf)[1]
    cand = character_candidate(d, chi)
    assert check_c2_conditions(d, cand).ok
    assert all(on_h == on_set for on_h, on_set in cross_validate_conditions(d, cand).values())
    with pytest.raises(ValueError):
        character_candidate(d, (0,) * 8)


def test_conditions_cross_validate_on_other_objects():
    for name in ("D-1-id-minus", "D-u-iota-plus"):
        d = datum(name)
        results = cross_validate_conditions(d, trivial_candidate(d))
        assert results and all(a == b for a, b in results.values())


def test_klein_datum_with_asymmetric_g_fails_braid1(h2):
    grp = klein_group()
    u = {h2.index("u"): Fraction(1)}
    iota = build_iota(2)
    rng = range(4)

    def pairing(a, b):  # first bit of a times second bit of b
        return (a & 1) * ((b >> 1) & 1)

    d = CrossedDatum(
        h2, grp,
        {(a, b): (u if pairing(a, b) else dict(h2.unit)) for a in rng for b in rng},
        {(a, b): (iota if pairing(a, b) else Matrix.identity(8)) for a in rng for b in rng},
        {k: Fraction(1) for k in itertools.product(rng, repeat=3)},
        {a: "trivial" for a in rng},
        "klein-asymmetric",
        standard_r_form(2),
    )
    rep = check_general_conditions(d, trivial_candidate(d))
    name, failure = rep.first_failure()
    assert name == "braid1: g(a,b) = g(b,a), f^{a,b} = f^{b,a}"
    assert failure.witness == ("a", "b")


def test_br4_with_t_as_displayed_rejects_nontrivial_t():
    d = datum("D-1-id-minus")
    cand = with_t(trivial_candidate(d), {(1, 1): Cyc8.zeta_power(2)})
    name, failure = check_br4_with_t(d, cand).first_failure()
    assert failure is not None


# --- hexagons -------------------------------------------------------------------------


def test_trivial_candidate_fails_hexagons_for_u_iota_minus():
    d = datum("D-u-iota-minus")
    rep = verify_hexagons(d, trivial_candidate(d), graded_testset(d))
    assert rep["bra1"].failure_count == 27 and rep["bra2"].failure_count > 0
    assert rep["bra1"].failures[0].witness == ("[k1,u]", "[k1,u]", "[k1,u]")
    assert rep["components are comodule morphisms"].ok and rep["naturality"].ok


def test_hexagon_outcome_does_not_depend_on_object_order():
    d = datum("D-u-iota-minus")
    objs = graded_testset(d)
    forward = verify_hexagons(d, trivial_candidate(d), objs)
    backward = verify_hexagons(d, trivial_candidate(d), list(reversed(objs)))
    assert [(c.identity, c.cases, c.failure_count) for c in forward.checks] == [
        (c.identity, c.cases, c.failure_count) for c in backward.checks
    ]


def test_trivial_candidate_braids_d_1_id_plus():
    d = datum("D-1-id-plus")
    objs = graded_testset(d)
    rep = verify_hexagons(d, trivial_candidate(d), objs)
    assert rep.ok
    assert rep["bra1"].cases == rep["bra2"].cases == 216
    restriction = restrict_to_identity_component(d, trivial_candidate(d), objs)
    assert restriction.report.ok
    assert restriction.symmetric


@pytest.mark.parametrize("reading, first", [("aa", ("[k1,u]",) * 3), ("ab", ("[k1,e]", "[ku,e]", "[k1,u]"))])
def test_character_candidate_fails_hexagons(reading, first):
    d = datum("D-u-iota-minus")
    cand = character_candidate(d, enumerate_characters(d.hopf)[1])
    rep = verify_hexagons(d, cand, graded_testset(d), reading)
    assert rep.first_failure() == ("bra1", rep["bra1"].failures[0])
    assert rep["bra1"].failures[0].witness == first
    assert not rep["components are comodule morphisms"].ok
    assert rep["naturality"].ok


def test_unknown_reading():
    d = datum("D-1-id-plus")
    x = graded_testset(d)[0]
    assert set(READINGS) == {"aa", "ab"}
    with pytest.raises(ValueError):
        braiding_component(d, trivial_candidate(d), x, x, "ba")


def test_t_search_on_d_1_id_minus():
    d = datum("D-1-id-minus")
    out = t_search(d, graded_testset(d))
    assert out["hexagons_pass_for"] == ["z^2", "-z^2"]
    assert out["br4_as_displayed_holds_for"] == []


def test_t_scaled_candidate_passes_hexagons():
    d = datum("D-1-id-minus")
    cand = with_t(trivial_candidate(d), {(1, 1): Cyc8.zeta_power(2)}, "t=i")
    assert verify_hexagons(d, cand, graded_testset(d, "minimal")).ok


def test_monodromy_obstruction():
    out = monodromy_obstruction(datum("D-u-iota-plus"))
    assert out["obstructed"] is True
    assert out["lazy_functionals"] == 3
    assert out["self_braiding_of_k_g"] == "-1"
    assert monodromy_obstruction(datum("D-1-id-plus")) is None


# --- verdicts -------------------------------------------------------------------------


@pytest.mark.parametrize("name", [n for n in EXPECTED_VERDICTS if n.startswith("C0")])
def test_c0_presets_are_filtered(name):
    v = cached_verdict(name)
    assert v.verdict == "filtered"
    assert v.certificate == {
        "violation": {"condition": "biGalois objects trivial (L_a ≅ H)", "witness": {"grade": "u", "biGalois": "U0"}}
    }


def test_verdict_field_order_is_stable():
    v = cached_verdict("D-1-id-minus")
    doc = v.to_dict()
    assert list(doc) == ["preset", "verdict", "certificate", "exploratory"]
    assert doc["certificate"] == {
        "violation": {"condition": "d′: ε(g) = γ⁻¹", "witness": {"at": ["1"], "lhs": "1", "rhs": "-1"}}
    }
    assert json.dumps(doc, ensure_ascii=False) == json.dumps(cached_verdict("D-1-id-minus").to_dict(), ensure_ascii=False)


def test_braidable_certificate():
    cert = cached_verdict("D-1-id-plus").certificate
    assert cert["candidate"]["label"] == "trivial"
    assert cert["hexagons"]["ok"] is True
    assert cert["restriction"] == {"ok": True, "symmetric": True, "non_symmetric_witness": None}


def test_exploratory_entries_are_marked():
    kinds = [e["kind"] for e in cached_verdict("D-u-iota-minus").exploratory]
    assert kinds == ["character-candidate", "t-scalar-search", "monodromy-obstruction"]
    chi = cached_verdict("D-u-iota-minus").exploratory[0]
    assert chi["beyond_candidate_class"] is True
    assert chi["braiding"] is False


def _with_rform(d, r, suffix):
    return CrossedDatum(d.hopf, d.group, d.gmap, d.fmaps, d.gamma, d.bigalois, f"{d.name}{suffix}", r)


def test_deformed_r_form_gives_a_non_symmetric_braiding():
    d = _with_rform(datum("D-1-id-plus"), deformed_r_form(2, 1, 2), "[r deformed]")
    objs = graded_testset(d)
    cand = trivial_candidate(d)
    assert check_reduced_conditions(d).ok
    assert verify_hexagons(d, cand, objs).ok
    restriction = restrict_to_identity_component(d, cand, objs)
    assert restriction.report.ok
    assert not restriction.symmetric
    assert restriction.witness == ("[H,e]", "[H,e]")


def test_deformed_r_form_keeps_u_iota_plus_obstructed():
    d = _with_rform(datum("D-u-iota-plus"), deformed_r_form(2, 1, 2), "[r deformed]")
    rep = verify_hexagons(d, trivial_candidate(d), graded_testset(d, "minimal"))
    assert rep.first_failure()[1].witness == ("[k1,u]",) * 3
