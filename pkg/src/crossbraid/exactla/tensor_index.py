"""Flattening of multi-indices over tensor factors (leftmost factor slowest)."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod


@dataclass(frozen=True)
class TensorIndex:
    dims: tuple[int, ...]

    @property
    def size(self) -> int:
        return prod(self.dims)

    def flatten(self, idx) -> int:
        if len(idx) != len(self.dims):
            raise ValueError(f"expected {len(self.dims)} indices, got {len(idx)}")
        k = 0
        for i, d in zip(idx, self.dims):
            if not 0 <= i < d:
                raise IndexError(f"index {i} out of range for factor of size {d}")
            k = k * d + i
        return k

    def unflatten(self, k: int) -> tuple[int, ...]:
        if not 0 <= k < self.size:
            raise IndexError(f"flat index {k} out of range {self.size}")
        out = []
        for d in reversed(self.dims):
            k, r = divmod(k, d)
            out.append(r)
        return tuple(reversed(out))
