"""Bicomodule algebra maps H^g -> H and natural endomorphisms from functionals.

Enumeration is two-phase.  The bicomodule conditions are linear in the matrix
entries and are solved exactly; the survivors form a small parameter space
(asserted to have at most four dimensions) on which multiplicativity becomes a
system of quadratic equations, solved by branching on rational roots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .comodule import Comodule, check_comodule_morphism, regular_comodule, twist_coaction
from .exactla import Matrix, exact_int, inverse, kernel_basis, solve_quadratic_system
from .hopf_core import HopfData, _acc

MAX_FREE_PARAMETERS = 4


class EnumerationTooLarge(RuntimeError):
    """The linear phase left more free parameters than the enumeration supports."""


def natural_endo_from_functional(lam, x: Comodule) -> Matrix:
    """The map x -> λ(x₋₁) x₀ on X."""
    rows: dict = {}
    for j, t in enumerate(x.terms):
        for (a, i), c in t.items():
            v = lam[a]
            if v != 0:
                row = rows.setdefault(i, {})
                w = row.get(j, 0) + c * v
                if w == 0:
                    row.pop(j, None)
                else:
                    row[j] = exact_int(w)
    return Matrix(x.dim, x.dim, rows)


def map_from_functional(h: HopfData, lam, side: str = "left") -> Matrix:
    """left: h -> h₁ λ(h₂) (a left comodule map);  right: h -> λ(h₁) h₂."""
    cols = []
    for i in range(h.dim):
        col: dict = {}
        for (j, k), c in h.comult[i].items():
            if side == "left":
                _acc(col, j, c * lam[k])
            else:
                _acc(col, k, c * lam[j])
        cols.append(col)
    return Matrix.from_columns(h.dim, cols)


def lazy_functionals(h: HopfData) -> list[tuple]:
    """Basis of {λ : λ(h₁)h₂ = h₁λ(h₂) for all h}."""
    d = h.dim
    rows: dict = {}
    for i in range(d):
        for (j, k), c in h.comult[i].items():
            # coordinate k of λ(h1)h2 gets c*λ_j; coordinate j of h1λ(h2) gets c*λ_k
            r = rows.setdefault(i * d + k, {})
            r[j] = r.get(j, 0) + c
            r = rows.setdefault(i * d + j, {})
            r[k] = r.get(k, 0) - c
    return [tuple(Fraction(v) for v in vec) for vec in kernel_basis(Matrix(d * d, d, rows))]


def is_lazy(h: HopfData, lam) -> bool:
    return map_from_functional(h, lam, "left") == map_from_functional(h, lam, "right")


def is_algebra_map(h: HopfData, m: Matrix) -> bool:
    if m.apply(h.unit) != h.unit:
        return False
    cols = [m.column(i) for i in range(h.dim)]
    return all(
        h.product(cols[i], cols[j]) == m.apply(h.mult[i][j]) for i in range(h.dim) for j in range(h.dim)
    )


@dataclass(frozen=True)
class ComoduleAlgebraMap:
    matrix: Matrix
    source_twist: str
    is_algebra_map: bool
    is_left_comodule: bool
    is_right_comodule: bool
    is_invertible: bool
    label: str = ""

    @property
    def is_bicomodule_algebra_iso(self) -> bool:
        return self.is_algebra_map and self.is_left_comodule and self.is_right_comodule and self.is_invertible

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "source_twist": self.source_twist,
            "matrix": self.matrix.to_strings(),
            "is_algebra_map": self.is_algebra_map,
            "is_left_comodule": self.is_left_comodule,
            "is_right_comodule": self.is_right_comodule,
            "is_invertible": self.is_invertible,
        }


def _invertible(m: Matrix) -> bool:
    try:
        inverse(m)
    except ZeroDivisionError:
        return False
    return True


def classify_map(h: HopfData, m: Matrix, g: dict, label: str = "") -> ComoduleAlgebraMap:
    """Independent re-verification of every flag for a map H^g -> H."""
    target = regular_comodule(h)
    source = twist_coaction(target, g)
    rep = check_comodule_morphism(m, source, target, "bi")
    return ComoduleAlgebraMap(
        matrix=m,
        source_twist=h.format_element(g),
        is_algebra_map=is_algebra_map(h, m),
        is_left_comodule=rep["left: (id⊗f)ρ = ρf"].ok,
        is_right_comodule=rep["right: (f⊗id)ρ = ρf"].ok,
        is_invertible=_invertible(m),
        label=label,
    )


def _bicomodule_constraints(h: HopfData, g: dict) -> Matrix:
    """Linear system on the entries F[k, i] (variable index i*dim + k) of maps H^g -> H."""
    d = h.dim
    source = twist_coaction(regular_comodule(h), g)
    rows: list[dict] = []
    for j in range(d):
        # left: sum over λ^g(b_j) = sum c a⊗b_i of a⊗F(b_i)  minus  Δ(F(b_j))
        left: dict = {}
        for (a, i), c in source.terms[j].items():
            for k in range(d):
                left.setdefault((a, k), {})
                _acc(left[(a, k)], i * d + k, c)
        for kk in range(d):
            for (a, k), c in h.comult[kk].items():
                left.setdefault((a, k), {})
                _acc(left[(a, k)], j * d + kk, -c)
        right: dict = {}
        for (i, a), c in source.right_terms[j].items():
            for k in range(d):
                right.setdefault((k, a), {})
                _acc(right[(k, a)], i * d + k, c)
        for kk in range(d):
            for (k, a), c in h.comult[kk].items():
                right.setdefault((k, a), {})
                _acc(right[(k, a)], j * d + kk, -c)
        rows.extend(r for r in left.values() if r)
        rows.extend(r for r in right.values() if r)
    return Matrix(len(rows), d * d, dict(enumerate(rows)))


def enumerate_bigalois_isos(h: HopfData, g: dict, label_of=None) -> list[ComoduleAlgebraMap]:
    """All bicomodule algebra isomorphisms H^g -> H (left coaction twisted by g)."""
    d = h.dim
    kern = kernel_basis(_bicomodule_constraints(h, g))
    if len(kern) > MAX_FREE_PARAMETERS:
        raise EnumerationTooLarge(f"linear phase left {len(kern)} parameters (limit {MAX_FREE_PARAMETERS})")
    npar = len(kern)
    # F(b_i) as affine forms in the parameters: coords[i][k] = {s: K_s[k, i]}
    coords = [[{s: kern[s][i * d + k] for s in range(npar) if kern[s][i * d + k] != 0} for k in range(d)] for i in range(d)]
    eqs: list[dict] = []
    for k in range(d):
        eq: dict = {}
        for i, c in h.unit.items():
            for s, v in coords[i][k].items():
                _acc(eq, (s,), c * v)
        _acc(eq, (), -h.unit.get(k, 0))
        if eq:
            eqs.append(eq)
    for i, j in itertools.product(range(d), repeat=2):
        per_coord: dict = {}
        for k, fk in enumerate(coords[i]):
            if not fk:
                continue
            for l, fl in enumerate(coords[j]):
                if not fl:
                    continue
                for m, c in h.mult[k][l].items():
                    eq = per_coord.setdefault(m, {})
                    for s, a in fk.items():
                        for t, b in fl.items():
                            _acc(eq, tuple(sorted((s, t))), c * a * b)
        for q, c in h.mult[i][j].items():
            for m in range(d):
                for s, v in coords[q][m].items():
                    _acc(per_coord.setdefault(m, {}), (s,), -c * v)
        eqs.extend(e for e in per_coord.values() if e)
    found = []
    for sol in solve_quadratic_system(npar, eqs):
        cols = []
        for i in range(d):
            col: dict = {}
            for k in range(d):
                v = sum((sol[s] * a for s, a in coords[i][k].items()), Fraction(0))
                if v != 0:
                    col[k] = v
            cols.append(col)
        m = Matrix.from_columns(d, cols)
        label = label_of(m) if label_of else ("id" if m.is_identity() else "")
        cm = classify_map(h, m, g, label)
        if not cm.is_bicomodule_algebra_iso:
            if cm.is_algebra_map and cm.is_left_comodule and cm.is_right_comodule:
                continue  # a non-invertible solution of the equations
            raise AssertionError(f"enumerated map failed re-verification: {cm}")
        found.append(cm)
    found.sort(key=lambda cm: tuple(cm.matrix.items()))
    return found


def enumerate_bicomodule_algebra_autos(h: HopfData, label_of=None) -> list[ComoduleAlgebraMap]:
    return enumerate_bigalois_isos(h, dict(h.unit), label_of)
