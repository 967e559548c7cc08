"""The supergroup algebra H(n) = kC2 ⋉ ΛV with dim V = n.

Basis element ``u^e x_S`` has index ``e * 2**n + mask(S)`` where bit ``i`` of
the mask stands for ``x_{i+1}``; for n = 2 the order is
``1, x1, x2, x1x2, u, ux1, ux2, ux1x2``.

Sign rules: ``u x = -x u`` and ``x_i x_j = -x_j x_i``, so
``(u^e x_S)(u^d x_T) = (-1)^(d|S|) sign(S, T) u^(e+d) x_(S∪T)`` and zero when S
and T meet.  Δ(u) = u⊗u and Δ(x) = x⊗1 + u⊗x are extended multiplicatively;
S(u) = u and S(x) = -ux are extended anti-multiplicatively.
"""

from __future__ import annotations

from fractions import Fraction

from .exactla import Matrix
from .hopf_core import HopfData, _acc, shuffle_sign


def _popcount(m: int) -> int:
    return bin(m).count("1")


def basis_index(n: int, e: int, mask: int) -> int:
    return e * (1 << n) + mask


def basis_label(n: int, e: int, mask: int) -> str:
    xs = "".join(f"x{i + 1}" for i in range(n) if mask >> i & 1)
    if e:
        return "u" + xs
    return xs or "1"


def split_index(n: int, i: int) -> tuple[int, int]:
    """Index -> (e, mask)."""
    return i >> n, i & ((1 << n) - 1)


def _product_table(n: int) -> tuple:
    N = 1 << n
    dim = 2 * N
    rows = []
    for i in range(dim):
        e, s = split_index(n, i)
        row = []
        for j in range(dim):
            d, t = split_index(n, j)
            if s & t:
                row.append({})
                continue
            sign = (-1) ** (d * _popcount(s)) * shuffle_sign(s, t)
            row.append({basis_index(n, e ^ d, s | t): Fraction(sign)})
        rows.append(tuple(row))
    return tuple(rows)


def build_supergroup(n: int) -> HopfData:
    if n < 1:
        raise ValueError("the exterior part needs n >= 1")
    N = 1 << n
    dim = 2 * N
    mult = _product_table(n)
    labels = tuple(basis_label(n, *split_index(n, i)) for i in range(dim))

    def tmul(a: dict, b: dict) -> dict:
        out: dict = {}
        for (i, j), x in a.items():
            for (k, l), y in b.items():
                for p, c in mult[i][k].items():
                    for q, e in mult[j][l].items():
                        _acc(out, (p, q), x * y * c * e)
        return out

    def vmul(a: dict, b: dict) -> dict:
        out: dict = {}
        for i, x in a.items():
            for j, y in b.items():
                for k, c in mult[i][j].items():
                    _acc(out, k, x * y * c)
        return out

    one, u = 0, basis_index(n, 1, 0)
    gens = [basis_index(n, 0, 1 << i) for i in range(n)]
    delta_u = {(u, u): Fraction(1)}
    delta_x = [{(x, one): Fraction(1), (u, x): Fraction(1)} for x in gens]
    s_u = {u: Fraction(1)}
    s_x = [vmul({u: Fraction(-1)}, {x: Fraction(1)}) for x in gens]

    comult = []
    antipode_cols = []
    for i in range(dim):
        e, mask = split_index(n, i)
        d = {(one, one): Fraction(1)}
        s = {one: Fraction(1)}
        if e:
            d = tmul(d, delta_u)
            s = vmul(s_u, s)
        for k in range(n):
            if mask >> k & 1:
                d = tmul(d, delta_x[k])
                s = vmul(s_x[k], s)
        comult.append(d)
        antipode_cols.append(s)

    return HopfData(
        dim=dim,
        labels=labels,
        mult=mult,
        unit={one: Fraction(1)},
        comult=tuple(comult),
        counit=tuple(Fraction(1) if split_index(n, i)[1] == 0 else Fraction(0) for i in range(dim)),
        antipode=Matrix.from_columns(dim, antipode_cols),
    )


def standard_r_matrix(n: int) -> dict:
    """R = 1/2 (1⊗1 + 1⊗u + u⊗1 - u⊗u) as an element of H⊗H."""
    u = basis_index(n, 1, 0)
    half = Fraction(1, 2)
    return {(0, 0): half, (0, u): half, (u, 0): half, (u, u): -half}


def standard_r_form(n: int) -> Matrix:
    """r(u^a ⊗ u^b) = (-1)^(ab), zero whenever an exterior factor is present."""
    dim = 2 << n
    u = basis_index(n, 1, 0)
    return Matrix(dim, dim, {0: {0: 1, u: 1}, u: {0: 1, u: -1}})


def build_iota(n: int) -> Matrix:
    """ι(u^e x_S) = (-1)^(e + |S|) u^e x_S."""
    dim = 2 << n
    return Matrix.diag([(-1) ** (e + _popcount(m)) for e, m in (split_index(n, i) for i in range(dim))])


def parity_functional(n: int) -> tuple:
    """The character χ: χ(u) = -1, χ(x_S) = 0 for S nonempty."""
    dim = 2 << n
    return tuple(Fraction((-1) ** e) if m == 0 else Fraction(0) for e, m in (split_index(n, i) for i in range(dim)))


def grouplike_labels(n: int) -> dict:
    """Labels of the grouplikes 1 and u mapped to their basis indices."""
    return {"1": 0, "u": basis_index(n, 1, 0)}


def deformed_r_form(n: int, i: int, j: int, c=1) -> Matrix:
    """The standard r-form plus a rank-one exterior term between x_i and x_j (i ≠ j, 1-based).

    r(x_i⊗x_j) = r(x_i⊗ux_j) = r(ux_i⊗ux_j) = c and r(ux_i⊗x_j) = -c.  The
    braiding it induces on Comod(H) squares to a non-identity map on H⊗H.
    """
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"need distinct generator indices in 1..{n}, got {i}, {j}")
    base = standard_r_form(n)
    rows = {k: dict(base.row(k)) for k in range(base.rows) if base.row(k)}
    xi, xj = 1 << (i - 1), 1 << (j - 1)
    for ei, ej, sign in ((0, 0, 1), (0, 1, 1), (1, 0, -1), (1, 1, 1)):
        rows.setdefault(basis_index(n, ei, xi), {})[basis_index(n, ej, xj)] = sign * Fraction(c)
    return Matrix(base.rows, base.cols, rows)
