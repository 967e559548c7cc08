"""Sparse exact matrices.

Entries are ints, Fractions or :class:`Cyc8` values; zeros are never stored.
A matrix is immutable once built: every operation returns a new instance.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .cyclotomic import format_scalar, parse_scalar


class Matrix:
    __slots__ = ("rows", "cols", "_r")

    def __init__(self, rows: int, cols: int, data: Mapping[int, Mapping[int, object]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        self.rows = rows
        self.cols = cols
        clean: dict[int, dict[int, object]] = {}
        for i, row in (data or {}).items():
            if not 0 <= i < rows:
                raise IndexError(f"row {i} outside {rows}x{cols}")
            r = {}
            for j, v in row.items():
                if not 0 <= j < cols:
                    raise IndexError(f"column {j} outside {rows}x{cols}")
                if v != 0:
                    r[j] = v
            if r:
                clean[i] = r
        self._r = clean

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, rows, cols, data):
        m = cls.__new__(cls)
        m.rows, m.cols, m._r = rows, cols, data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._raw(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def scalar(cls, n: int, s) -> "Matrix":
        if s == 0:
            return cls.zeros(n, n)
        return cls._raw(n, n, {i: {i: s} for i in range(n)})

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls(n, n, {i: {i: v} for i, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, {i: {j: parse_scalar(v) for j, v in enumerate(r)} for i, r in enumerate(rows)})

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, object]]) -> "Matrix":
        data: dict[int, dict[int, object]] = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v != 0:
                    data.setdefault(i, {})[j] = v
        return cls(rows, len(columns), data)

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._r.get(i, {}).get(j, 0)

    def row(self, i: int) -> dict:
        return dict(self._r.get(i, {}))

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in self._r.items() if j in r}

    def items(self) -> Iterable[tuple[int, int, object]]:
        for i in sorted(self._r):
            r = self._r[i]
            for j in sorted(r):
                yield i, j, r[j]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._r.values())

    def to_rows(self) -> list[list]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(v) for v in row] for row in self.to_rows()]

    # -- algebra ------------------------------------------------------
    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        out: dict[int, dict[int, object]] = {}
        orows = other._r
        for i, ri in self._r.items():
            acc: dict[int, object] = {}
            for k, a in ri.items():
                rk = orows.get(k)
                if not rk:
                    continue
                for j, b in rk.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v != 0}
            if acc:
                out[i] = acc
        return Matrix._raw(self.rows, other.cols, out)

    def apply(self, vec: Mapping[int, object]) -> dict[int, object]:
        """Multiply by a sparse column vector given as {index: value}."""
        out: dict[int, object] = {}
        for i, ri in self._r.items():
            s = 0
            for k, a in ri.items():
                v = vec.get(k)
                if v is not None:
                    s = s + a * v
            if s != 0:
                out[i] = s
        return out

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = {i: dict(r) for i, r in self._r.items()}
        for i, r in other._r.items():
            tgt = out.setdefault(i, {})
            for j, v in r.items():
                w = tgt.get(j, 0) + (v if sign > 0 else -v)
                if w == 0:
                    tgt.pop(j, None)
                else:
                    tgt[j] = w
            if not tgt:
                del out[i]
        return Matrix._raw(self.rows, self.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, -1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, s) -> "Matrix":
        if s == 0:
            return Matrix.zeros(self.rows, self.cols)
        if s == 1:
            return self
        return Matrix._raw(self.rows, self.cols, {i: {j: v * s for j, v in r.items()} for i, r in self._r.items()})

    @property
    def T(self) -> "Matrix":
        out: dict[int, dict[int, object]] = {}
        for i, r in self._r.items():
            for j, v in r.items():
                out.setdefault(j, {})[i] = v
        return Matrix._raw(self.cols, self.rows, out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._r == other._r

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.items())))

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.rows) if self.rows == self.cols else False

    def first_difference(self, other: "Matrix"):
        """First (row, col, mine, theirs) where the two matrices differ, or None."""
        if self.shape != other.shape:
            return ("shape", self.shape, other.shape)
        for i in sorted(set(self._r) | set(other._r)):
            a, b = self._r.get(i, {}), other._r.get(i, {})
            for j in sorted(set(a) | set(b)):
                if a.get(j, 0) != b.get(j, 0):
                    return (i, j, a.get(j, 0), b.get(j, 0))
        return None

    def __repr__(self):
        if self.rows * self.cols <= 64:
            body = "; ".join(" ".join(format_scalar(v) for v in row) for row in self.to_rows())
            return f"Matrix({self.rows}x{self.cols}: {body})"
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz})"


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, leftmost factor slowest: (a⊗b)[(i,k),(j,l)] = a[i,j]*b[k,l]."""
    br, bc = b.rows, b.cols
    out: dict[int, dict[int, object]] = {}
    for i, ra in a._r.items():
        for k, rb in b._r.items():
            row = {}
            for j, x in ra.items():
                base = j * bc
                if x == 1:
                    for l, y in rb.items():
                        row[base + l] = y
                else:
                    for l, y in rb.items():
                        row[base + l] = x * y
            out[i * br + k] = row
    return Matrix._raw(a.rows * br, a.cols * bc, out)


def kron_all(*ms: Matrix) -> Matrix:
    out = Matrix.identity(1)
    for m in ms:
        out = kron(out, m)
    return out


def block_identity_kron(left: int, m: Matrix, right: int = 1) -> Matrix:
    """I_left ⊗ m ⊗ I_right without materialising the identity factors."""
    out: dict[int, dict[int, object]] = {}
    mr, mc = m.rows, m.cols
    for a in range(left):
        for i, r in m._r.items():
            for c in range(right):
                out[(a * mr + i) * right + c] = {(a * mc + j) * right + c: v for j, v in r.items()}
    return Matrix._raw(left * mr * right, left * mc * right, out)


def vector(values: Sequence) -> dict[int, object]:
    """Dense sequence -> sparse {index: value}."""
    return {i: parse_scalar(v) for i, v in enumerate(values) if parse_scalar(v) != 0}


def dense(vec: Mapping[int, object], n: int) -> tuple:
    return tuple(vec.get(i, 0) for i in range(n))

