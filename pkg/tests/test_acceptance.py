"""Acceptance criteria 1-9, one test each; conftest prints a PASS/FAIL line per criterion."""

import itertools
from fractions import Fraction

from crossbraid.braiding import (
    EXPECTED_VERDICTS,
    trivial_candidate,
    twisted_rform_identity,
    verify_hexagons,
)
from crossbraid.comodule import comodule_axioms, regular_comodule, tensor_comodules
from crossbraid.crossed import (
    mutate_f_identity,
    mutate_g_unit,
    mutate_gamma,
    validate_datum,
    verify_pentagon,
)
from crossbraid.crossed import testset as graded_testset
from crossbraid.exactla import Matrix, kernel_basis, rank
from crossbraid.hopf_core import (
    enumerate_grouplikes,
    verify_antipode,
    verify_antipode_antimultiplicative,
    verify_bialgebra_axioms,
    verify_cqt,
    verify_qt,
)
from crossbraid.morphisms import classify_map, enumerate_bicomodule_algebra_autos, enumerate_bigalois_isos
from crossbraid.supergroup import build_iota, build_supergroup, standard_r_form, standard_r_matrix

from conftest import cached_preset, cached_verdict

H = build_supergroup(2)
U = {H.index("u"): Fraction(1)}
ONE = {0: Fraction(1)}
D_PRESETS = ("D-1-id-plus", "D-1-id-minus", "D-u-iota-plus", "D-u-iota-minus")


def test_criterion_1_hopf_qt_cqt_axioms():
    for rep in (
        verify_bialgebra_axioms(H),
        verify_antipode(H),
        verify_antipode_antimultiplicative(H),
        verify_qt(H, standard_r_matrix(2)),
        verify_cqt(H, standard_r_form(2)),
    ):
        assert rep.ok, rep.render_text()


def test_criterion_2_enumeration():
    assert enumerate_grouplikes(H) == [ONE, U]
    autos = enumerate_bicomodule_algebra_autos(H)
    assert [m.matrix.is_identity() for m in autos] == [True]
    isos = enumerate_bigalois_isos(H, U)
    assert len(isos) == 1
    iota = isos[0].matrix
    assert iota == build_iota(2)
    assert iota.column(H.index("u")) == {H.index("u"): -1}
    for k in ("x1", "x2"):
        assert iota.column(H.index(k)) == {H.index(k): -1}


def test_criterion_3_pentagon_and_mutations():
    for name in D_PRESETS:
        d = cached_preset(name).datum
        rep = verify_pentagon(d, graded_testset(d, "default"))
        assert rep.ok and rep["pentagon"].cases == 6**4, name
    d = cached_preset("D-u-iota-plus").datum
    pinned = {
        "γ(u,u,u)=2": (mutate_gamma(d, 2), "γ 3-cocycle", ("u", "u", "u", "u")),
        "f=id": (mutate_f_identity(d), "f^{a,b} bicomodule algebra isomorphism H^g(a,b) -> H", ("u", "u")),
        "g(u,u)=1": (mutate_g_unit(d), "f^{a,b} bicomodule algebra isomorphism H^g(a,b) -> H", ("u", "u")),
    }
    for label, (mutant, condition, witness) in pinned.items():
        name, failure = validate_datum(mutant).first_failure()
        assert (name, failure.witness) == (condition, witness), label


def test_criterion_4_braidability_verdicts():
    observed = {name: cached_verdict(name).verdict for name in EXPECTED_VERDICTS}
    for name in ("D-1-id-minus", "D-u-iota-minus"):
        cond = cached_verdict(name).certificate["violation"]["condition"]
        assert cond == "d′: ε(g) = γ⁻¹", name
    for name in ("C0-1-id-plus", "C0-1-id-minus", "C0-u-iota-plus", "C0-u-iota-minus"):
        assert cached_verdict(name).certificate["violation"]["condition"] == "biGalois objects trivial (L_a ≅ H)"
    for name in ("D-1-id-plus", "D-u-iota-plus"):
        cert = cached_verdict(name).certificate
        assert "candidate" in cert and cert["candidate"]["label"] == "trivial", (name, cert)
        assert cert["hexagons"]["ok"]
    assert observed == EXPECTED_VERDICTS


def test_criterion_5_hexagon_failure_witness():
    d = cached_preset("D-u-iota-minus").datum
    objs = graded_testset(d, "default")
    grade_u = {o.label for o in objs if o.grade == 1}
    rep = verify_hexagons(d, trivial_candidate(d), objs)
    assert not rep["bra1"].ok
    assert any(set(f.witness) <= grade_u for f in rep["bra1"].failures)


def test_criterion_6_twisted_rform_identity():
    r = standard_r_form(2)
    ident, iota = Matrix.identity(8), build_iota(2)
    for f, g, expected in ((ident, ONE, True), (iota, U, True), (ident, U, False)):
        rep = twisted_rform_identity(H, r, f, g)
        assert rep.checks[0].cases == 8
        assert rep.ok is expected


def test_criterion_7_restriction_to_grade_e():
    for name in ("D-1-id-plus", "D-u-iota-plus"):
        v = cached_verdict(name)
        assert v.verdict == "braidable", f"{name}: {v.certificate}"
        restriction = v.reports["restriction trivial"]
        assert restriction.ok
        assert not v.certificate["restriction"]["symmetric"], f"{name}: c² = id on every test pair"


def test_criterion_8_property_suites():
    objs = [regular_comodule(H), regular_comodule(H)]
    assert comodule_axioms(tensor_comodules(*objs)).ok
    m = regular_comodule(H).coaction
    assert rank(m) + len(kernel_basis(m)) == m.cols
    for cm in enumerate_bigalois_isos(H, U) + enumerate_bicomodule_algebra_autos(H):
        g = U if cm.source_twist == "u" else ONE
        assert classify_map(H, cm.matrix, g).is_bicomodule_algebra_iso
    d = cached_preset("D-u-iota-minus").datum
    objs = graded_testset(d, "minimal")
    outcomes = set()
    for perm in itertools.islice(itertools.permutations(objs), 0, 24, 5):
        rep = verify_hexagons(d, trivial_candidate(d), perm)
        outcomes.add(tuple((c.identity, c.cases, c.failure_count) for c in rep.checks))
    assert len(outcomes) == 1
    assert cached_verdict("D-1-id-plus").to_dict() == cached_verdict.__wrapped__("D-1-id-plus").to_dict()


def test_criterion_9_character_candidate_pipeline():
    entry = next(e for e in cached_verdict("D-u-iota-minus").exploratory if e["kind"] == "character-candidate")
    assert entry["beyond_candidate_class"] is True
    assert all(entry["conditions"].values())
    assert set(entry["hexagons"]) == {"aa", "ab"}
    for summary in entry["hexagons"].values():
        assert {"bra1", "bra2"} <= set(summary["checks"])
    assert isinstance(entry["braiding"], bool)
