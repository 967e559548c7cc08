"""Left H-comodules as coaction matrices, with tensor and cotensor products.

A coaction ρ: X -> H⊗X is stored column by column: ``terms[j]`` is the sparse
element ``{(h, i): c}`` of H⊗X equal to ρ(e_j).  The matrix form has shape
``(dim_H * dim) x dim`` with row index ``h * dim + i``.  An optional right
coaction X -> X⊗H is stored the same way with keys ``(i, h)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactla import Matrix, exact_int, kernel_basis
from .hopf_core import HopfData, _acc
from .reports import Report


class ComoduleAxiomError(ValueError):
    pass


def _integral(t: dict) -> dict:
    return {k: exact_int(v) for k, v in t.items()}


class Comodule:
    __slots__ = ("hopf", "dim", "terms", "right_terms", "label", "_tensor_cache", "_matrix")

    def __init__(self, hopf: HopfData, dim: int, terms, right_terms=None, label: str = "", check: bool = True):
        if len(terms) != dim:
            raise ValueError(f"{len(terms)} coaction columns for dimension {dim}")
        self.hopf = hopf
        self.dim = dim
        self.terms = tuple(_integral(t) for t in terms)
        self.right_terms = tuple(_integral(t) for t in right_terms) if right_terms is not None else None
        self.label = label
        self._tensor_cache = {}
        self._matrix = None
        if check:
            failure = comodule_axioms(self).first_failure()
            if failure is not None:
                raise ComoduleAxiomError(f"{label or 'comodule'}: {failure[0]} fails at {failure[1].witness}")

    @classmethod
    def from_matrix(cls, hopf: HopfData, coaction: Matrix, label: str = "") -> "Comodule":
        dim = coaction.cols
        if coaction.rows != hopf.dim * dim:
            raise ValueError(f"coaction must have {hopf.dim * dim} rows, got {coaction.rows}")
        terms = []
        for j in range(dim):
            terms.append({(r // dim, r % dim): v for r, v in coaction.column(j).items()})
        return cls(hopf, dim, terms, label=label)

    @property
    def coaction(self) -> Matrix:
        if self._matrix is None:
            d = self.dim
            self._matrix = Matrix.from_columns(self.hopf.dim * d, [{h * d + i: c for (h, i), c in t.items()} for t in self.terms])
        return self._matrix

    @property
    def has_right(self) -> bool:
        return self.right_terms is not None

    def __repr__(self):
        return f"Comodule({self.label or '?'}, dim={self.dim})"


def comodule_axioms(x: Comodule) -> Report:
    """Coassociativity and counit for the left coaction (and the right one if present)."""
    h = x.hopf
    rep = Report(f"comodule axioms {x.label}")
    coassoc = rep.check("(Δ⊗id)ρ = (id⊗ρ)ρ")
    counit = rep.check("(ε⊗id)ρ = id")
    for j, t in enumerate(x.terms):
        lhs: dict = {}
        rhs: dict = {}
        back: dict = {}
        for (a, i), c in t.items():
            for (p, q), e in h.comult[a].items():
                _acc(lhs, (p, q, i), c * e)
            for (b, k), e in x.terms[i].items():
                _acc(rhs, (a, b, k), c * e)
            _acc(back, i, c * h.counit[a])
        coassoc.record(lhs == rhs, (j,))
        counit.record(back == {j: 1}, (j,), back, {j: 1})
    if x.right_terms is not None:
        rc = rep.check("right: (id⊗Δ)ρ = (ρ⊗id)ρ")
        ru = rep.check("right: (id⊗ε)ρ = id")
        for j, t in enumerate(x.right_terms):
            lhs = {}
            rhs = {}
            back = {}
            for (i, a), c in t.items():
                for (p, q), e in h.comult[a].items():
                    _acc(lhs, (i, p, q), c * e)
                for (k, b), e in x.right_terms[i].items():
                    _acc(rhs, (k, b, a), c * e)
                _acc(back, i, c * h.counit[a])
            rc.record(lhs == rhs, (j,))
            ru.record(back == {j: 1}, (j,), back, {j: 1})
    return rep


# ---------------------------------------------------------------------------
# constructors


def regular_comodule(h: HopfData) -> Comodule:
    """H with ρ = Δ on the left and the natural right coaction Δ."""
    terms = [dict(h.comult[i]) for i in range(h.dim)]
    return Comodule(h, h.dim, terms, right_terms=[dict(h.comult[i]) for i in range(h.dim)], label="H")


def is_grouplike(h: HopfData, g: dict) -> bool:
    want: dict = {}
    for i, x in g.items():
        for j, y in g.items():
            _acc(want, (i, j), x * y)
    return h.coproduct(g) == want and h.counit_of(g) == 1


def grouplike_comodule(h: HopfData, g: dict, label: str = "") -> Comodule:
    """The one-dimensional comodule k_g with ρ(1) = g⊗1 (and right coaction 1 -> 1⊗g)."""
    if not is_grouplike(h, g):
        raise ValueError(f"{h.format_element(g)} is not grouplike")
    name = label or f"k_{h.format_element(g)}"
    return Comodule(h, 1, [{(i, 0): c for i, c in g.items()}], right_terms=[{(0, i): c for i, c in g.items()}], label=name)


def subcomodule(x: Comodule, basis_indices, label: str = "") -> Comodule:
    """Restrict x to the span of some of its basis vectors (must be a subcomodule)."""
    idx = list(basis_indices)
    pos = {b: k for k, b in enumerate(idx)}
    terms = []
    for b in idx:
        t = {}
        for (a, i), c in x.terms[b].items():
            if i not in pos:
                raise ValueError(f"span of {idx} is not a subcomodule: basis {b} leaks into {i}")
            t[(a, pos[i])] = c
        terms.append(t)
    right = None
    if x.right_terms is not None and all(i in pos for b in idx for (i, _a) in x.right_terms[b]):
        right = [{(pos[i], a): c for (i, a), c in x.right_terms[b].items()} for b in idx]
    return Comodule(x.hopf, len(idx), terms, right_terms=right, label=label or f"sub({x.label})")


def tensor_comodules(x: Comodule, y: Comodule) -> Comodule:
    """X⊗Y with ρ(x⊗y) = x₋₁y₋₁ ⊗ x₀⊗y₀ (memoized per pair)."""
    hit = x._tensor_cache.get(id(y))
    if hit is not None and hit[0] is y:
        return hit[1]
    h = x.hopf
    if y.hopf is not h:
        raise ValueError("comodules over different Hopf algebras")
    dy = y.dim
    terms = []
    for a in range(x.dim):
        ta = x.terms[a]
        for b in range(dy):
            out: dict = {}
            for (p, a2), c in ta.items():
                row = h.mult[p]
                for (q, b2), e in y.terms[b].items():
                    for m, f in row[q].items():
                        _acc(out, (m, a2 * dy + b2), c * e * f)
            terms.append(out)
    right = None
    if x.right_terms is not None and y.right_terms is not None:
        right = []
        for a in range(x.dim):
            for b in range(dy):
                out = {}
                for (a2, p), c in x.right_terms[a].items():
                    for (b2, q), e in y.right_terms[b].items():
                        for m, f in h.mult[p][q].items():
                            _acc(out, (a2 * dy + b2, m), c * e * f)
                right.append(out)
    label = f"{x.label}⊗{y.label}" if x.label and y.label else ""
    result = Comodule(h, x.dim * dy, terms, right_terms=right, label=label)
    x._tensor_cache[id(y)] = (y, result)
    return result


def twist_coaction(x: Comodule, g: dict) -> Comodule:
    """λ^g: x -> g⁻¹ x₋₁ g ⊗ x₀; the right coaction (if any) is kept."""
    h = x.hopf
    if not is_grouplike(h, g):
        raise ValueError(f"{h.format_element(g)} is not grouplike")
    ginv = h.antipode.apply(g)
    terms = []
    for t in x.terms:
        out: dict = {}
        for (a, i), c in t.items():
            for m, e in h.product(h.product(ginv, h.basis(a)), g).items():
                _acc(out, (m, i), c * e)
        terms.append(out)
    return Comodule(h, x.dim, terms, right_terms=x.right_terms, label=f"{x.label}^{h.format_element(g)}")


def antipode_right_terms(x: Comodule) -> list:
    """The right coaction x -> x₀ ⊗ S(x₋₁) induced by the antipode."""
    h = x.hopf
    out = []
    for t in x.terms:
        r: dict = {}
        for (a, i), c in t.items():
            for m, e in h.antipode.column(a).items():
                _acc(r, (i, m), c * e)
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# cotensor


@dataclass(frozen=True)
class Cotensor:
    """Kernel of (ρʳ⊗id - id⊗ρ_Y) on X⊗Y; ``inclusion`` has the basis as columns."""

    basis: tuple
    inclusion: Matrix
    right_coaction: str

    @property
    def dim(self) -> int:
        return len(self.basis)


def cotensor(x: Comodule, y: Comodule, use_antipode: bool | None = None) -> Cotensor:
    """X □_H Y.  X acts through its stored right coaction, or through x₀⊗S(x₋₁)
    when none is stored (or when ``use_antipode`` is forced)."""
    h = x.hopf
    if use_antipode is None:
        use_antipode = x.right_terms is None
    right = antipode_right_terms(x) if use_antipode else x.right_terms
    dx, dy, dh = x.dim, y.dim, h.dim
    cols = []
    for a in range(dx):
        for b in range(dy):
            col: dict = {}
            for (a2, m), c in right[a].items():
                _acc(col, (a2 * dh + m) * dy + b, c)
            for (m, b2), c in y.terms[b].items():
                _acc(col, (a * dh + m) * dy + b2, -c)
            cols.append(col)
    big = Matrix.from_columns(dx * dh * dy, cols)
    basis = tuple(kernel_basis(big))
    inc = Matrix.from_columns(dx * dy, [{k: v for k, v in enumerate(vec) if v != 0} for vec in basis])
    return Cotensor(basis, inc, "antipode" if use_antipode else "stored")


def unit_cotensor_maps(y: Comodule):
    """(coaction map Y -> H⊗Y, counit map H⊗Y -> Y) realizing Y ≅ H □_H Y."""
    h = y.hopf
    dy = y.dim
    into = Matrix.from_columns(h.dim * dy, [{m * dy + i: c for (m, i), c in t.items()} for t in y.terms])
    rows: dict = {}
    for m in range(h.dim):
        e = h.counit[m]
        if e != 0:
            for i in range(dy):
                rows.setdefault(i, {})[m * dy + i] = e
    back = Matrix(dy, h.dim * dy, rows)
    return into, back


# ---------------------------------------------------------------------------
# morphisms


def check_comodule_morphism(f: Matrix, x: Comodule, y: Comodule, side: str = "left") -> Report:
    """left: (id⊗f)ρ_X = ρ_Y f;  right: (f⊗id)ρʳ_X = ρʳ_Y f;  bi: both."""
    if side not in ("left", "right", "bi"):
        raise ValueError(f"side must be left, right or bi, not {side!r}")
    if f.shape != (y.dim, x.dim):
        raise ValueError(f"map of shape {f.shape} cannot go from dim {x.dim} to dim {y.dim}")
    rep = Report(f"{side} comodule morphism {x.label} -> {y.label}")
    cols = [f.column(j) for j in range(x.dim)]
    if side in ("left", "bi"):
        chk = rep.check("left: (id⊗f)ρ = ρf")
        for j in range(x.dim):
            lhs: dict = {}
            for (a, i), c in x.terms[j].items():
                for k, v in cols[i].items():
                    _acc(lhs, (a, k), c * v)
            rhs: dict = {}
            for k, v in cols[j].items():
                for (a, i), c in y.terms[k].items():
                    _acc(rhs, (a, i), c * v)
            chk.record(lhs == rhs, (j,), lhs, rhs)
    if side in ("right", "bi"):
        chk = rep.check("right: (f⊗id)ρ = ρf")
        xr = x.right_terms if x.right_terms is not None else antipode_right_terms(x)
        yr = y.right_terms if y.right_terms is not None else antipode_right_terms(y)
        for j in range(x.dim):
            lhs = {}
            for (i, a), c in xr[j].items():
                for k, v in cols[i].items():
                    _acc(lhs, (k, a), c * v)
            rhs = {}
            for k, v in cols[j].items():
                for (i, a), c in yr[k].items():
                    _acc(rhs, (i, a), c * v)
            chk.record(lhs == rhs, (j,), lhs, rhs)
    return rep


def is_comodule_map(f: Matrix, x: Comodule, y: Comodule) -> bool:
    return check_comodule_morphism(f, x, y, "left").ok


def one_dimensional(h: HopfData, label: str) -> Comodule:
    """k_g for a grouplike given by its basis label."""
    return grouplike_comodule(h, {h.index(label): Fraction(1)}, label=f"k_{label}")
