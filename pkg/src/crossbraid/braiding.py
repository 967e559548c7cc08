"""Braidings on crossed-product categories and the braidability pipeline.

A candidate assigns to every grade a two functionals λ_θ(a), λ_τ(a) and to
every pair of grades a scalar t(a, b).  The braiding component on
([V,a], [W,b]) is

    t(a, b) · c_{V,W} ∘ (θ_V ⊗ τ_W)

where c is the braiding of Comod(H) coming from the r-form and θ, τ are the
natural endomorphisms induced by the candidate functionals.  Which grade
indexes θ and τ is selectable (``reading``): "aa" uses the grade of the first
object for both, "ab" uses the first grade for θ and the second for τ.

In the condition checks W^a stands for λ_θ(a) and V^a for λ_τ(a).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .comodule import Comodule, check_comodule_morphism, regular_comodule, tensor_comodules
from .crossed import (
    CrossedDatum,
    GradedMorphism,
    GradedObject,
    NotInstantiable,
    associator_parts,
    preset,
    scaled_equal,
    standard_objects,
    tensor_graded,
    testset as make_testset,
    validate_datum,
    verify_pentagon,
)
from .exactla import Cyc8, Matrix, exact_div, exact_int, format_scalar, kron
from .hopf_core import (
    HopfData,
    convolution_inverse,
    convolve_all,
    enumerate_characters,
    functional_from_map,
    is_character,
)
from .morphisms import (
    enumerate_bicomodule_algebra_autos,
    lazy_functionals,
    map_from_functional,
    natural_endo_from_functional,
)
from .reports import Report, jsonable

READINGS = ("aa", "ab")


# ---------------------------------------------------------------------------
# candidates


@dataclass(frozen=True)
class BraidingCandidate:
    theta: dict  # grade -> functional
    tau: dict  # grade -> functional
    t: dict = field(default_factory=dict)  # (a, b) -> scalar, missing entries are 1
    provenance: str = "bicomodule"
    label: str = ""

    def t_of(self, a: int, b: int):
        return self.t.get((a, b), Fraction(1))

    def to_dict(self, d: CrossedDatum) -> dict:
        grp = d.group
        return {
            "label": self.label,
            "class": self.provenance,
            "theta": {grp.name(a): _format_functional(d.hopf, lam) for a, lam in sorted(self.theta.items())},
            "tau": {grp.name(a): _format_functional(d.hopf, lam) for a, lam in sorted(self.tau.items())},
            "t": {f"{grp.name(a)},{grp.name(b)}": format_scalar(self.t_of(a, b))
                  for a in range(grp.order) for b in range(grp.order)},
        }


def _format_functional(h: HopfData, lam) -> str:
    if tuple(lam) == tuple(h.counit):
        return "ε"
    out = ""
    for i, v in enumerate(lam):
        if v == 0:
            continue
        text = format_scalar(v)
        if " " in text:
            sign, text = "+", f"({text})"
        else:
            sign = "-" if text.startswith("-") else "+"
            text = text.lstrip("-")
        term = f"δ_{h.labels[i]}" if text == "1" else f"{text}·δ_{h.labels[i]}"
        out = (f"-{term}" if sign == "-" else term) if not out else f"{out} {sign} {term}"
    return out or "0"


def trivial_candidate(d: CrossedDatum) -> BraidingCandidate:
    eps = tuple(d.hopf.counit)
    grades = range(d.group.order)
    return BraidingCandidate({a: eps for a in grades}, {a: eps for a in grades}, {}, "bicomodule", "trivial")


def candidate_from_maps(d: CrossedDatum, w: Matrix, v: Matrix, label: str = "") -> BraidingCandidate:
    """θ = ε∘w and τ = ε∘v on every non-identity grade."""
    h = d.hopf
    eps = tuple(h.counit)
    W, V = functional_from_map(h, w), functional_from_map(h, v)
    grades = range(d.group.order)
    return BraidingCandidate({a: (eps if a == 0 else W) for a in grades}, {a: (eps if a == 0 else V) for a in grades},
                             {}, "bicomodule", label)


def character_candidate(d: CrossedDatum, chi, label: str = "χ") -> BraidingCandidate:
    if not is_character(d.hopf, chi):
        raise ValueError("not a character")
    eps = tuple(d.hopf.counit)
    grades = range(d.group.order)
    lam = {a: (eps if a == 0 else tuple(chi)) for a in grades}
    return BraidingCandidate(lam, dict(lam), {}, "character", label)


def with_t(c: BraidingCandidate, t: dict, label: str = "") -> BraidingCandidate:
    return BraidingCandidate(c.theta, c.tau, dict(t), c.provenance, label or c.label)


# ---------------------------------------------------------------------------
# matrices


def rform_braiding(r: Matrix, x: Comodule, y: Comodule) -> Matrix:
    """c(x⊗y) = r(y₋₁⊗x₋₁) y₀⊗x₀ as a (dY·dX) x (dX·dY) matrix."""
    dx, dy = x.dim, y.dim
    rrows = {k: r.row(k) for k in range(r.rows) if r.row(k)}
    rows: dict = {}
    for a in range(dx):
        xa = x.terms[a]
        for b in range(dy):
            col = a * dy + b
            for (k, b2), cy in y.terms[b].items():
                rk = rrows.get(k)
                if rk is None:
                    continue
                for (hh, a2), cx in xa.items():
                    v = rk.get(hh)
                    if v is None:
                        continue
                    row = rows.setdefault(b2 * dx + a2, {})
                    w = row.get(col, 0) + v * cx * cy
                    if w == 0:
                        row.pop(col)
                    else:
                        row[col] = exact_int(w)
    return Matrix(dy * dx, dx * dy, rows)


def sigma_half_braiding(d: CrossedDatum, a: int, b: int, x: Comodule) -> Matrix:
    """U⊗X -> X⊗U for U = k_g(a,b): the swap (identity on flat indices) composed with x -> ε f^{a,b}(x₋₁) x₀."""
    return natural_endo_from_functional(d.F(a, b), x)


def _rform(d: CrossedDatum) -> Matrix:
    if d.rform is None:
        raise ValueError(f"{d.name or 'datum'} carries no r-form")
    return d.rform


def _endo(d: CrossedDatum, lam, x: Comodule) -> Matrix | None:
    return None if tuple(lam) == tuple(d.hopf.counit) else natural_endo_from_functional(lam, x)


def braiding_parts(d: CrossedDatum, c: BraidingCandidate, x: GradedObject, y: GradedObject, reading: str = "aa") -> tuple:
    """(t(a,b), rational matrix) of the component X⊗Y -> Y⊗X."""
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}; choose from {READINGS}")

    def build():
        a, b = x.grade, y.grade
        grade = {"a": a, "b": b}
        m = rform_braiding(_rform(d), x.comodule, y.comodule)
        th = _endo(d, c.theta[grade[reading[0]]], x.comodule)
        ta = _endo(d, c.tau[grade[reading[1]]], y.comodule)
        if th is not None or ta is not None:
            m = m @ kron(th if th is not None else Matrix.identity(x.dim), ta if ta is not None else Matrix.identity(y.dim))
        return c.t_of(a, b), m

    key = ("braid", id(c), reading, id(x), id(y))
    hit = d._cache.get(key)
    if hit is not None and hit[0][0] is c and hit[0][1] is x and hit[0][2] is y:
        return hit[1]
    val = build()
    d._cache[key] = ((c, x, y), val)
    return val


def braiding_component(d: CrossedDatum, c: BraidingCandidate, x: GradedObject, y: GradedObject, reading: str = "aa") -> GradedMorphism:
    s, m = braiding_parts(d, c, x, y, reading)
    return GradedMorphism(m.scale(s), tensor_graded(d, x, y), tensor_graded(d, y, x))


def build_graded_braiding(d: CrossedDatum, c: BraidingCandidate, objects, reading: str = "aa") -> dict:
    """Components for every ordered pair of the given objects, keyed by their positions."""
    objs = list(objects)
    return {(i, j): braiding_component(d, c, x, y, reading) for i, x in enumerate(objs) for j, y in enumerate(objs)}


# ---------------------------------------------------------------------------
# conditions


def r_against(d: CrossedDatum, g: dict) -> tuple:
    """The functional h -> r(h⊗g)."""
    r = _rform(d)
    return tuple(sum((c * r[i, k] for k, c in g.items()), Fraction(0)) for i in range(d.hopf.dim))


def _functional_identity(chk, x: Comodule, lhs, rhs, witness, h: HopfData) -> bool:
    """Record whether λ(x₋₁)x₀ = μ(x₋₁)x₀ on X; the witness gets the first basis vector that differs."""
    ml = natural_endo_from_functional(lhs, x)
    mr = natural_endo_from_functional(rhs, x)
    if ml == mr:
        return chk.record(True, witness)
    diff = ml.first_difference(mr)
    col = diff[1] if diff else None
    where = x.hopf.labels[col] if x.label == "H" and col is not None else col
    return chk.record(False, tuple(witness) + (where,), _format_functional(h, lhs), _format_functional(h, rhs))


def _inverse_or_none(lam, h: HopfData):
    try:
        return convolution_inverse(lam, h)
    except ZeroDivisionError:
        return None


def functional_conditions(d: CrossedDatum, c: BraidingCandidate) -> list:
    """(condition, witness, lhs functional, rhs functional) for (braid2) and (braid3)."""
    h, grp = d.hopf, d.group
    out = []
    for a, b in itertools.product(range(grp.order), repeat=2):
        ab = grp.mul(a, b)
        rg = r_against(d, d.g(a, b))
        F = d.F(a, b)
        w = (grp.name(a), grp.name(b))
        winv = _inverse_or_none(c.theta[ab], h)
        vinv = _inverse_or_none(c.tau[ab], h)
        if winv is not None:
            out.append(("braid2: W^b*W^a*(W^ab)⁻¹ = F^{a,b}*r(−⊗g(a,b))", w,
                        convolve_all(h, c.theta[b], c.theta[a], winv), convolve_all(h, F, rg)))
        else:
            out.append(("braid2: W^b*W^a*(W^ab)⁻¹ = F^{a,b}*r(−⊗g(a,b))", w, None, None))
        if vinv is not None:
            out.append(("braid3: V^b*V^a*(V^ab)⁻¹ = r(−⊗g(a,b))*F^{a,b}", w,
                        convolve_all(h, c.tau[b], c.tau[a], vinv), convolve_all(h, rg, F)))
        else:
            out.append(("braid3: V^b*V^a*(V^ab)⁻¹ = r(−⊗g(a,b))*F^{a,b}", w, None, None))
    return out


def check_general_conditions(d: CrossedDatum, c: BraidingCandidate) -> Report:
    h, grp = d.hopf, d.group
    n = grp.order
    rep = Report(f"braiding conditions {d.name} / {c.label}")
    abelian = rep.check("Γ abelian")
    for a, b in itertools.product(range(n), repeat=2):
        abelian.record(grp.mul(a, b) == grp.mul(b, a), (grp.name(a), grp.name(b)))
    if not abelian.ok:
        rep.notes.append("Γ non-abelian: the remaining conditions are not evaluated")
        return rep
    norm = rep.check("normalization: λ_θ(e) = λ_τ(e) = ε, t(a,e) = t(e,a) = 1")
    eps = tuple(h.counit)
    norm.record(tuple(c.theta[0]) == eps and tuple(c.tau[0]) == eps, ("e",))
    for a in range(n):
        norm.record(c.t_of(a, 0) == 1 and c.t_of(0, a) == 1, (grp.name(a),))
    sym = rep.check("braid1: g(a,b) = g(b,a), f^{a,b} = f^{b,a}")
    for a, b in itertools.product(range(n), repeat=2):
        ok = d.g(a, b) == d.g(b, a) and d.fmaps[(a, b)] == d.fmaps[(b, a)]
        sym.record(ok, (grp.name(a), grp.name(b)), h.format_element(d.g(a, b)), h.format_element(d.g(b, a)))
    H = regular_comodule(h)
    for name, w, lhs, rhs in functional_conditions(d, c):
        chk = rep.check(name)
        if lhs is None:
            chk.record(False, w + ("not convolution invertible",))
        else:
            _functional_identity(chk, H, lhs, rhs, w, h)
    gam = d.gam
    b4 = rep.check("braid4: V^a(g(b,c)) = (γ_abc γ_bca)⁻¹ γ_bac")
    b5 = rep.check("braid5: W^b(g(c,a)) = γ_cab γ_bca γ_cba⁻¹")
    for a, b, cc in itertools.product(range(n), repeat=3):
        w = tuple(map(grp.name, (a, b, cc)))
        lhs = h.evaluate(c.tau[a], d.g(b, cc))
        rhs = gam(b, a, cc) / (gam(a, b, cc) * gam(b, cc, a))
        b4.record(lhs == rhs, w, lhs, rhs)
        lhs = h.evaluate(c.theta[b], d.g(cc, a))
        rhs = gam(cc, a, b) * gam(b, cc, a) / gam(cc, b, a)
        b5.record(lhs == rhs, w, lhs, rhs)
    return rep


def check_br4_with_t(d: CrossedDatum, c: BraidingCandidate) -> Report:
    """γ_abc V^a(g(b,c)) t_{bc,a} γ_bca = t_{b,c} γ_bac t_{c,a}, as displayed.

    At c = e this reads t_{b,a} = 1, so any t with a nontrivial value fails here.
    """
    h, grp = d.hopf, d.group
    rep = Report(f"(br4) with t {d.name} / {c.label}")
    chk = rep.check("γ_abc V^a(g(b,c)) t_{bc,a} γ_bca = t_{b,c} γ_bac t_{c,a}")
    for a, b, cc in itertools.product(range(grp.order), repeat=3):
        lhs = d.gam(a, b, cc) * h.evaluate(c.tau[a], d.g(b, cc)) * c.t_of(grp.mul(b, cc), a) * d.gam(b, cc, a)
        rhs = c.t_of(b, cc) * d.gam(b, a, cc) * c.t_of(cc, a)
        chk.record(lhs == rhs, tuple(map(grp.name, (a, b, cc))), lhs, rhs)
    return rep


def _require_c2(d: CrossedDatum) -> None:
    if d.group.order != 2:
        raise ValueError("these conditions are stated for Γ = C2")


def check_c2_conditions(d: CrossedDatum, c: BraidingCandidate) -> Report:
    _require_c2(d)
    h = d.hopf
    H = regular_comodule(h)
    eps = tuple(h.counit)
    g, F, gamma = d.g(1, 1), d.F(1, 1), d.gam(1, 1, 1)
    rg = r_against(d, g)
    W, V = c.theta[1], c.tau[1]
    rep = Report(f"C2 conditions {d.name} / {c.label}")
    for name, lam in (("a: W*W⁻¹ = ε", W), ("c: V*V⁻¹ = ε", V)):
        chk = rep.check(name)
        inv = _inverse_or_none(lam, h)
        if inv is None:
            chk.record(False, ("not convolution invertible",))
        else:
            _functional_identity(chk, H, convolve_all(h, lam, inv), eps, (), h)
    _functional_identity(rep.check("b: W*W = F*r(−⊗g)"), H, convolve_all(h, W, W), convolve_all(h, F, rg), (), h)
    _functional_identity(rep.check("d: V*V = r(−⊗g)*F"), H, convolve_all(h, V, V), convolve_all(h, rg, F), (), h)
    _reorder(rep, ["a: W*W⁻¹ = ε", "b: W*W = F*r(−⊗g)", "c: V*V⁻¹ = ε", "d: V*V = r(−⊗g)*F"])
    gl = h.format_element(g)
    v = h.evaluate(V, g)
    rep.check("e: V(g) = γ⁻¹").record(v == 1 / gamma, (gl,), v, 1 / gamma)
    w = h.evaluate(W, g)
    rep.check("f: W(g) = γ").record(w == gamma, (gl,), w, gamma)
    return rep


def _reorder(rep: Report, names: list) -> None:
    rep.checks.sort(key=lambda ch: names.index(ch.identity) if ch.identity in names else len(names))


def check_reduced_conditions(d: CrossedDatum) -> Report:
    """Conditions a′–e′: the C2 conditions with v = w = id."""
    _require_c2(d)
    h = d.hopf
    H = regular_comodule(h)
    eps = tuple(h.counit)
    g, F, gamma = d.g(1, 1), d.F(1, 1), d.gam(1, 1, 1)
    rg = r_against(d, g)
    rep = Report(f"reduced conditions {d.name}")
    _functional_identity(rep.check("a′: ε*ε = ε"), H, convolve_all(h, eps, eps), eps, (), h)
    _functional_identity(rep.check("b′: ε = F*r(−⊗g)"), H, eps, convolve_all(h, F, rg), (), h)
    _functional_identity(rep.check("c′: ε = r(−⊗g)*F"), H, eps, convolve_all(h, rg, F), (), h)
    gl = h.format_element(g)
    e_g = h.counit_of(g)
    rep.check("d′: ε(g) = γ⁻¹").record(e_g == 1 / gamma, (gl,), e_g, 1 / gamma)
    rep.check("e′: ε(g) = γ").record(e_g == gamma, (gl,), e_g, gamma)
    return rep


def cross_validate_conditions(d: CrossedDatum, c: BraidingCandidate) -> dict:
    """Pass/fail of each functional condition on H versus on {k1, ku, H⊗H}."""
    h = d.hopf
    objs = standard_objects(h)
    H = objs["H"]
    others = [objs["k1"], objs["ku"], tensor_comodules(H, H)]
    out = {}
    for name, w, lhs, rhs in functional_conditions(d, c):
        if lhs is None:
            continue
        on_h = natural_endo_from_functional(lhs, H) == natural_endo_from_functional(rhs, H)
        on_set = all(natural_endo_from_functional(lhs, x) == natural_endo_from_functional(rhs, x) for x in others)
        out[(name, w)] = (on_h, on_set)
    return out


def twisted_rform_identity(h: HopfData, r: Matrix, f: Matrix, g: dict) -> Report:
    """r(f(x₋₁)⊗g) x₀ = x on the regular comodule, basis element by basis element."""
    lam = tuple(sum((fv * c * r[k, m] for k, fv in f.column(i).items() for m, c in g.items()), Fraction(0))
                for i in range(h.dim))
    endo = natural_endo_from_functional(lam, regular_comodule(h))
    rep = Report(f"r(f(x₋₁)⊗{h.format_element(g)})x₀ = x")
    chk = rep.check("r(f(x₋₁)⊗g)x₀ = x")
    for j in range(h.dim):
        image = endo.column(j)
        chk.record(image == {j: 1}, (h.labels[j],), h.format_element(image), h.labels[j])
    return rep


# ---------------------------------------------------------------------------
# hexagons


def _label(x: GradedObject) -> str:
    return x.label


def _hexagon_sides(d: CrossedDatum, c: BraidingCandidate, U, V, W, reading: str, parse: str):
    """Yield (tag, left scalar, left matrix, right scalar, right matrix) for (bra1) and (bra2)."""
    VW, UV = tensor_graded(d, V, W), tensor_graded(d, U, V)
    iU, iV, iW = (Matrix.identity(o.dim) for o in (U, V, W))

    sa1, ma1 = associator_parts(d, V, W, U, parse)
    sb, mb = braiding_parts(d, c, U, VW, reading)
    sa2, ma2 = associator_parts(d, U, V, W, parse)
    s_uw, m_uw = braiding_parts(d, c, U, W, reading)
    sa3, ma3 = associator_parts(d, V, U, W, parse)
    s_uv, m_uv = braiding_parts(d, c, U, V, reading)
    yield ("bra1", sa1 * sb * sa2, ma1 @ mb @ ma2, s_uw * sa3 * s_uv, kron(iV, m_uw) @ ma3 @ kron(m_uv, iW))

    si1, mi1 = associator_parts(d, W, U, V, parse, inverse=True)
    sb2, mb2 = braiding_parts(d, c, UV, W, reading)
    si2, mi2 = associator_parts(d, U, V, W, parse, inverse=True)
    si3, mi3 = associator_parts(d, U, W, V, parse, inverse=True)
    s_vw, m_vw = braiding_parts(d, c, V, W, reading)
    yield ("bra2", si1 * sb2 * si2, mi1 @ mb2 @ mi2, s_uw * si3 * s_vw, kron(m_uw, iV) @ mi3 @ kron(iU, m_vw))


def naturality_morphisms(d: CrossedDatum, objects) -> list:
    """Comodule maps between test objects of equal grade: k1 -> H, ku -> H and a lazy endomorphism of H."""
    h = d.hopf
    by = {(o.comodule.label, o.grade): o for o in objects}
    u = h.index("u")
    lazy = [lam for lam in lazy_functionals(h) if tuple(lam) != tuple(h.counit)]
    endo = map_from_functional(h, lazy[0], "left") if lazy else None
    out = []
    for a in range(d.group.order):
        H = by.get(("H", a))
        if H is None:
            continue
        for name, idx in (("k1", 0), ("ku", u)):
            src = by.get((name, a))
            if src is not None:
                out.append((f"{src.label}->{H.label}", Matrix(h.dim, 1, {idx: {0: 1}}), src, H))
        if endo is not None:
            out.append((f"lazy endo of {H.label}", endo, H, H))
    return out


def verify_hexagons(d: CrossedDatum, c: BraidingCandidate, objects, reading: str = "aa", parse: str = "coherent") -> Report:
    objs = list(objects)
    rep = Report(f"hexagons {d.name} / {c.label} ({reading})")
    bra1, bra2 = rep.check("bra1"), rep.check("bra2")
    for U, V, W in itertools.product(objs, repeat=3):
        w = (U.label, V.label, W.label)
        for tag, sl, ml, sr, mr in _hexagon_sides(d, c, U, V, W, reading, parse):
            ok = scaled_equal(sl, ml, sr, mr)
            (bra1 if tag == "bra1" else bra2).record(ok, w, None if ok else ml.scale(sl), None if ok else mr.scale(sr))
    maps = rep.check("components are comodule morphisms")
    for X, Y in itertools.product(objs, repeat=2):
        comp = braiding_component(d, c, X, Y, reading)
        maps.record(check_comodule_morphism(comp.matrix, comp.source.comodule, comp.target.comodule, "left").ok,
                    (X.label, Y.label))
    nat = rep.check("naturality")
    for name, phi, X, X2 in naturality_morphisms(d, objs):
        if not check_comodule_morphism(phi, X.comodule, X2.comodule, "left").ok:
            raise AssertionError(f"test morphism {name} is not a comodule map")
        for Y in objs:
            s1, m1 = braiding_parts(d, c, X2, Y, reading)
            s2, m2 = braiding_parts(d, c, X, Y, reading)
            iY = Matrix.identity(Y.dim)
            nat.record(scaled_equal(s1, m1 @ kron(phi, iY), s2, kron(iY, phi) @ m2), (name, "first slot", Y.label))
            s1, m1 = braiding_parts(d, c, Y, X2, reading)
            s2, m2 = braiding_parts(d, c, Y, X, reading)
            nat.record(scaled_equal(s1, m1 @ kron(iY, phi), s2, kron(phi, iY) @ m2), (name, "second slot", Y.label))
    return rep


def hexagon_ratios(d: CrossedDatum, c: BraidingCandidate, objects, reading: str = "aa", parse: str = "coherent") -> list:
    """For each triple and tag, κ with LHS = κ·RHS, or None when the sides are not proportional."""
    out = []
    for U, V, W in itertools.product(list(objects), repeat=3):
        for tag, sl, ml, sr, mr in _hexagon_sides(d, c, U, V, W, reading, parse):
            out.append((tag, (U.grade, V.grade, W.grade), (U.label, V.label, W.label), _ratio(sl, ml, sr, mr)))
    return out


def _ratio(sl, ml: Matrix, sr, mr: Matrix):
    if ml == mr:
        return exact_div(sl, sr)
    if ml.nnz == 0 or mr.nnz == 0:
        return None
    i, j, v = next(iter(ml.items()))
    w = mr[i, j]
    if w == 0:
        return None
    k = exact_div(v, w)
    return exact_div(sl * k, sr) if ml == mr.scale(k) else None


def t_constraints_hold(d: CrossedDatum, ratios: list, t) -> tuple:
    """Check t(a,bc)κ = t(a,b)t(a,c) for bra1 and t(ab,c)κ = t(a,c)t(b,c) for bra2; return (ok, first failing witness)."""
    mul = d.group.mul
    for tag, (a, b, c), w, k in ratios:
        if k is None:
            return False, (tag,) + w
        if tag == "bra1":
            ok = t(a, mul(b, c)) * k == t(a, b) * t(a, c)
        else:
            ok = t(mul(a, b), c) * k == t(a, c) * t(b, c)
        if not ok:
            return False, (tag,) + w
    return True, None


@dataclass
class Restriction:
    report: Report
    symmetric: bool
    witness: tuple | None


def restrict_to_identity_component(d: CrossedDatum, c: BraidingCandidate, objects, reading: str = "aa") -> Restriction:
    """Grade-e components: compare with the r-form braiding, re-run the hexagons with trivial associators, test symmetry."""
    base = [o for o in objects if o.grade == 0]
    r = _rform(d)
    rep = Report(f"restriction to grade e {d.name} / {c.label}")
    eq = rep.check("restriction equals the r-form braiding")
    for X, Y in itertools.product(base, repeat=2):
        s, m = braiding_parts(d, c, X, Y, reading)
        eq.record(m.scale(s) == rform_braiding(r, X.comodule, Y.comodule), (X.label, Y.label))

    def cmat(X, Y):
        s, m = braiding_parts(d, c, X, Y, reading)
        return m.scale(s)

    h1, h2 = rep.check("c_{U,V⊗W} = (id⊗c_{U,W})(c_{U,V}⊗id)"), rep.check("c_{U⊗V,W} = (c_{U,W}⊗id)(id⊗c_{V,W})")
    for U, V, W in itertools.product(base, repeat=3):
        iU, iV, iW = (Matrix.identity(o.dim) for o in (U, V, W))
        w = (U.label, V.label, W.label)
        h1.record(cmat(U, tensor_graded(d, V, W)) == kron(iV, cmat(U, W)) @ kron(cmat(U, V), iW), w)
        h2.record(cmat(tensor_graded(d, U, V), W) == kron(cmat(U, W), iV) @ kron(iU, cmat(V, W)), w)
    witness = None
    for X, Y in itertools.product(base, repeat=2):
        if not (cmat(Y, X) @ cmat(X, Y)).is_identity():
            witness = (X.label, Y.label)
            break
    rep.notes.append("symmetric on the test objects" if witness is None else f"not symmetric: c² ≠ id at {witness}")
    return Restriction(rep, witness is None, witness)


# ---------------------------------------------------------------------------
# verdicts

EXPECTED_VERDICTS = {
    "C0-1-id-plus": "filtered",
    "C0-1-id-minus": "filtered",
    "C0-u-iota-plus": "filtered",
    "C0-u-iota-minus": "filtered",
    "D-1-id-plus": "braidable",
    "D-1-id-minus": "non-braidable",
    "D-u-iota-plus": "braidable",
    "D-u-iota-minus": "non-braidable",
}


@dataclass
class Verdict:
    preset: str
    verdict: str
    certificate: dict
    exploratory: list = field(default_factory=list)
    reports: dict = field(default_factory=dict, repr=False)

    def to_dict(self) -> dict:
        return {"preset": self.preset, "verdict": self.verdict, "certificate": self.certificate, "exploratory": self.exploratory}


def _violation(condition: str, witness) -> dict:
    return {"violation": {"condition": condition, "witness": witness}}


def _failure_witness(rep: Report) -> dict:
    """{"condition", "at", and "lhs"/"rhs" when they are scalars} for the first failing check."""
    name, failure = rep.first_failure()
    out = {"condition": name}
    if failure is not None:
        out["at"] = jsonable(failure.witness)
        if failure.lhs is not None and not isinstance(failure.lhs, Matrix):
            out["lhs"] = jsonable(failure.lhs)
            out["rhs"] = jsonable(failure.rhs)
    return out


def _hexagon_summary(rep: Report, testset_name: str) -> dict:
    return {"testset": testset_name, "ok": rep.ok, "checks": {ch.identity: {"ok": ch.ok, "cases": ch.cases} for ch in rep.checks}}


def automorphism_candidates(d: CrossedDatum) -> list:
    """Candidates whose θ and τ come from bicomodule algebra automorphisms of H."""
    autos = enumerate_bicomodule_algebra_autos(d.hopf)
    out = []
    for w, v in itertools.product(autos, repeat=2):
        label = "trivial" if w.matrix.is_identity() and v.matrix.is_identity() else f"({w.label or 'w'},{v.label or 'v'})"
        out.append(candidate_from_maps(d, w.matrix, v.matrix, label))
    return out


def braidability_report(name: str, testset: str = "default", exploratory: bool = True, reading: str = "aa",
                        n: int = 2) -> Verdict:
    d = preset(name, n).datum
    grp = d.group
    if not d.instantiable:
        bad = next(a for a in range(grp.order) if d.bigalois[a] != "trivial")
        return Verdict(name, "filtered", _violation(
            "biGalois objects trivial (L_a ≅ H)", {"grade": grp.name(bad), "biGalois": d.bigalois[bad].split(":", 1)[-1]}))
    if not grp.is_abelian():
        return Verdict(name, "filtered", _violation("Γ abelian", {"group": list(grp.elements)}))
    reports: dict = {"datum": validate_datum(d)}
    if not reports["datum"].ok:
        return Verdict(name, "non-braidable", _violation("datum valid", _failure_witness(reports["datum"])), reports=reports)
    objs = make_testset(d, testset)
    reports["pentagon"] = verify_pentagon(d, objs)
    if not reports["pentagon"].ok:
        return Verdict(name, "non-braidable", _violation("pentagon", _failure_witness(reports["pentagon"])), reports=reports)

    violations = []
    for cand in automorphism_candidates(d):
        if cand.label == "trivial" and grp.order == 2:
            cond = check_reduced_conditions(d)
        elif grp.order == 2:
            cond = check_c2_conditions(d, cand)
        else:
            cond = check_general_conditions(d, cand)
        reports[f"conditions {cand.label}"] = cond
        if not cond.ok:
            violations.append(_failure_witness(cond))
            continue
        hexa = verify_hexagons(d, cand, objs, reading)
        reports[f"hexagons {cand.label}"] = hexa
        if not hexa.ok:
            fw = _failure_witness(hexa)
            violations.append({**fw, "condition": f"hexagon {fw['condition']}"})
            continue
        restriction = restrict_to_identity_component(d, cand, objs, reading)
        reports[f"restriction {cand.label}"] = restriction.report
        if not restriction.report.ok:
            raise AssertionError(f"{name}: a hexagon-verified candidate failed to restrict to Comod(H)")
        certificate = {
            "candidate": cand.to_dict(d),
            "hexagons": _hexagon_summary(hexa, testset),
            "restriction": {"ok": restriction.report.ok, "symmetric": restriction.symmetric,
                            "non_symmetric_witness": list(restriction.witness) if restriction.witness else None},
        }
        verdict = "braidable"
        break
    else:
        verdict = "non-braidable"
        first = violations[0] if violations else {"condition": "candidate set empty"}
        certificate = {"violation": {"condition": first["condition"], "witness": {k: v for k, v in first.items() if k != "condition"}}}
    ex = exploratory_section(d, objs, testset) if exploratory else []
    return Verdict(name, verdict, certificate, ex, reports)


# ---------------------------------------------------------------------------
# exploratory section: never feeds the verdict


def character_exploration(d: CrossedDatum, objs, testset_name: str) -> list:
    out = []
    eps = tuple(d.hopf.counit)
    for k, chi in enumerate(ch for ch in enumerate_characters(d.hopf) if tuple(ch) != eps):
        cand = character_candidate(d, chi, "χ" if k == 0 else f"χ{k}")
        cond = check_c2_conditions(d, cand)
        entry = {
            "kind": "character-candidate",
            "candidate": cand.to_dict(d),
            "beyond_candidate_class": True,
            "conditions": {ch.identity: ch.ok for ch in cond.checks},
        }
        if cond.ok:
            hex_out = {}
            for reading in READINGS:
                rep = verify_hexagons(d, cand, objs, reading)
                summary = _hexagon_summary(rep, testset_name)
                if not rep.ok:
                    summary["first_failure"] = _failure_witness(rep)
                hex_out[reading] = summary
            entry["hexagons"] = hex_out
            entry["braiding"] = any(summary["ok"] for summary in hex_out.values())
        out.append(entry)
    return out


def t_search(d: CrossedDatum, objs, reading: str = "aa") -> dict:
    """Trivial θ, τ with t(u,u) ranging over the eighth roots of unity (Γ = C2)."""
    _require_c2(d)
    base = trivial_candidate(d)
    ratios = hexagon_ratios(d, base, objs, reading)
    passing = []
    br4 = {}
    for k in range(8):
        z = Cyc8.zeta_power(k)
        ok, _ = t_constraints_hold(d, ratios, lambda a, b, z=z: z if (a, b) == (1, 1) else Fraction(1))
        if ok:
            passing.append(format_scalar(z))
            br4[format_scalar(z)] = check_br4_with_t(d, with_t(base, {(1, 1): z})).ok
    return {
        "kind": "t-scalar-search",
        "candidate": "trivial θ, τ; t(u,u) in μ8",
        "hexagons_pass_for": passing,
        "br4_as_displayed_holds_for": [k for k, v in br4.items() if v],
    }


def monodromy_obstruction(d: CrossedDatum) -> dict | None:
    """For g(u,u) ≠ 1: every braiding gives q([k_u,e]) = r(u⊗u), while x = [k1,u] has x⊗x ≅ [k_u,e]."""
    _require_c2(d)
    h = d.hopf
    g = d.g(1, 1)
    if g == dict(h.unit):
        return None
    u = h.grouplike_index(g)
    lazy = lazy_functionals(h)
    fixes = all(lam[u] == lam[0] for lam in lazy)
    ku = standard_objects(h)["ku"]
    q = rform_braiding(_rform(d), ku, ku)[0, 0]
    return {
        "kind": "monodromy-obstruction",
        "lazy_functionals": len(lazy),
        "lazy_functionals_agree_on_1_and_g": fixes,
        "self_braiding_of_k_g": format_scalar(q),
        "argument": "the double braiding with x = [k1,u] is a natural automorphism of the grade-e objects, "
                    "i.e. an invertible lazy functional λ, and λ(g) = λ(1) makes the monodromy of x with [k_g,e] trivial; "
                    "but x⊗x ≅ [k_g,e], so that monodromy equals q(x)^4 = q(x⊗x) = r(g⊗g) = -1, "
                    "and r(u⊗u) = -1 for every coquasitriangular form on H",
        "obstructed": fixes and q == -1,
    }


def exploratory_section(d: CrossedDatum, objs, testset_name: str) -> list:
    out = character_exploration(d, objs, testset_name)
    if d.group.order == 2:
        out.append(t_search(d, objs))
        mono = monodromy_obstruction(d)
        if mono is not None:
            out.append(mono)
    return out


def expected_verdict(name: str) -> str:
    return EXPECTED_VERDICTS[name]

