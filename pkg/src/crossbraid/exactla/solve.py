"""Gaussian elimination over exact scalars: echelon forms, kernels, affine solves."""

from __future__ import annotations

from typing import Sequence

from .cyclotomic import exact_div
from .matrix import Matrix


def rref(m: Matrix, rhs: Sequence | None = None):
    """Reduced row echelon form with unit pivots.

    Returns ``(rows, pivots, rhs_out)`` where ``rows`` is a list of sparse row
    dicts (one per pivot, in pivot-column order), ``pivots`` the pivot columns
    and ``rhs_out`` the transformed right-hand side (``None`` if not given).
    When a right-hand side is supplied, an inconsistent system is signalled by
    ``rhs_out`` being ``None`` while ``rhs`` was not.
    """
    work = [(m.row(i), (rhs[i] if rhs is not None else 0)) for i in range(m.rows)]
    work = [(r, b) for r, b in work if r or b != 0]
    pivot_rows: list[tuple[dict, object]] = []
    pivots: list[int] = []
    # eliminate column by column, always on the lowest available column index
    pending = work
    while pending:
        col = min(min(r) for r, _ in pending if r) if any(r for r, _ in pending) else None
        if col is None:
            # only zero rows remain; any nonzero rhs is a contradiction
            if any(b != 0 for _, b in pending):
                return [r for r, _ in pivot_rows], pivots, None
            break
        idx = next(k for k, (r, _) in enumerate(pending) if col in r)
        prow, pb = pending.pop(idx)
        inv = exact_div(1, prow[col]) if prow[col] != 1 else 1
        if inv != 1:
            prow = {j: v * inv for j, v in prow.items()}
            pb = pb * inv
        nxt = []
        for r, b in pending:
            f = r.get(col)
            if f is not None:
                r = dict(r)
                for j, v in prow.items():
                    w = r.get(j, 0) - f * v
                    if w == 0:
                        r.pop(j, None)
                    else:
                        r[j] = w
                b = b - f * pb
            if r or b != 0:
                nxt.append((r, b))
        pending = nxt
        # clear the new pivot column from earlier pivot rows
        for k, (r, b) in enumerate(pivot_rows):
            f = r.get(col)
            if f is not None:
                r = dict(r)
                for j, v in prow.items():
                    w = r.get(j, 0) - f * v
                    if w == 0:
                        r.pop(j, None)
                    else:
                        r[j] = w
                pivot_rows[k] = (r, b - f * pb)
        pivot_rows.append((prow, pb))
        pivots.append(col)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    rows = [pivot_rows[k][0] for k in order]
    piv = [pivots[k] for k in order]
    out_rhs = [pivot_rows[k][1] for k in order] if rhs is not None else None
    return rows, piv, out_rhs


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of {v : m v = 0}, one vector per free column, in free-column order.

    Each basis vector has a 1 in its free column and 0 in the other free
    columns, so the output is canonical for a given matrix.
    """
    rows, pivots, _ = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [0] * m.cols
        v[free] = 1
        for r, p in zip(rows, pivots):
            c = r.get(free)
            if c is not None:
                v[p] = -c
        basis.append(tuple(v))
    return basis


def solve_affine(m: Matrix, b: Sequence):
    """Solve m x = b.

    Returns ``(particular, kernel)`` with every solution equal to the particular
    solution plus a combination of the kernel basis, or ``None`` when the system
    is inconsistent. The particular solution has zeros in all free columns.
    """
    if len(b) != m.rows:
        raise ValueError(f"rhs has length {len(b)}, expected {m.rows}")
    rows, pivots, rhs = rref(m, list(b))
    if rhs is None:
        return None
    x = [0] * m.cols
    for p, val in zip(pivots, rhs):
        x[p] = val
    return tuple(x), kernel_basis(m)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    aug = Matrix(n, 2 * n, {i: {**m.row(i), n + i: 1} for i in range(n)})
    rows, pivots, _ = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix(n, n, {i: {j - n: v for j, v in r.items() if j >= n} for i, r in enumerate(rows)})
