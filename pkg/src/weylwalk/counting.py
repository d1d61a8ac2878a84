"""Exact walk counts, confined and unconfined.

The reflection sum and the DP share no code path beyond the step set, so the
DP serves as an independent oracle for the reflection principle.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from ._perm import signed_permutations
from .lattice import Model, check_chamber, reachable

MAX_REFLECTION_K = 7


def _ballot(n: int, d: int) -> int:
    """Number of n-step +-1 walks with displacement d."""
    if (n + d) % 2:
        return 0
    m = (n + d) // 2
    return comb(n, m) if 0 <= m <= n else 0


def count_free(model: Model, u: Sequence[int], v: Sequence[int], n: int) -> int:
    """Number of unconstrained n-step walks from u to v."""
    if len(u) != len(v) or len(u) != model.k:
        raise ValueError("endpoint lengths must both equal the model dimension")
    if n < 0:
        return 0
    d = [b - a for a, b in zip(u, v)]
    if model.is_lock_step:
        out = 1
        for dj in d:
            out *= _ballot(n, dj)
            if not out:
                break
        return out
    return _random_turns_free(n, d)


def _random_turns_free(n: int, d: Sequence[int]) -> int:
    # sum over step budgets n_1 + ... + n_k = n of the multinomial weight
    # times a +-1 walk count per coordinate
    if sum(abs(x) for x in d) > n or (n - sum(d)) % 2:
        return 0
    k = len(d)
    if k == 1:
        return _ballot(n, d[0])
    # partial[m] = number of m-step walks realising d[:j] using only the first j coordinates
    partial = [_ballot(m, d[0]) for m in range(n + 1)]
    for j in range(1, k - 1):
        col = [_ballot(m, d[j]) for m in range(n + 1)]
        nxt = [0] * (n + 1)
        for m in range(n + 1):
            acc = 0
            for i in range(m + 1):
                a = partial[i]
                if a:
                    b = col[m - i]
                    if b:
                        acc += comb(m, i) * a * b
            nxt[m] = acc
        partial = nxt
    last = d[-1]
    total = 0
    for i in range(n + 1):
        a = partial[i]
        if a:
            b = _ballot(n - i, last)
            if b:
                total += comb(n, i) * a * b
    return total


def signed_reflection_sum(model: Model, u: Sequence[int], v: Sequence[int], n: int) -> int:
    """Sum of sgn(sigma) * P_n(sigma(u) -> v) over all permutations, unchecked."""
    k = len(u)
    if k > MAX_REFLECTION_K:
        raise ValueError(f"reflection sum over {k}! permutations exceeds the k <= {MAX_REFLECTION_K} limit")
    total = 0
    for perm, sign in signed_permutations(k):
        total += sign * count_free(model, [u[i] for i in perm], v, n)
    return total


def count_confined_reflection(model: Model, u: Sequence[int], v: Sequence[int], n: int) -> int:
    """Confined count via the signed sum over permuted start points."""
    u = check_chamber(u, "start")
    v = check_chamber(v, "end")
    value = signed_reflection_sum(model, u, v, n)
    if value < 0:
        raise ArithmeticError(f"reflection sum is negative ({value}) for {model}, {u}->{v}, n={n}")
    return value


@dataclass(frozen=True)
class CountWindow:
    """Bounding box for lattice points visited by an n-step walk."""

    lo: tuple[int, ...]
    hi: tuple[int, ...]

    @classmethod
    def for_walk(cls, u: Sequence[int], n: int) -> "CountWindow":
        # every step moves each coordinate by at most one
        return cls(tuple(x - n for x in u), tuple(x + n for x in u))

    def contains(self, p: Sequence[int]) -> bool:
        return all(a <= x <= b for a, x, b in zip(self.lo, p, self.hi))

    def chamber_points(self) -> Iterator[tuple[int, ...]]:
        """Strictly increasing lattice points in the box, lexicographically."""
        k = len(self.lo)

        def rec(j, prev, acc):
            if j == k:
                yield tuple(acc)
                return
            start = self.lo[j] if prev is None else max(self.lo[j], prev + 1)
            for x in range(start, self.hi[j] + 1):
                acc.append(x)
                yield from rec(j + 1, x, acc)
                acc.pop()

        yield from rec(0, None, [])


class ChamberLayer:
    """Final layer of the chamber DP, held as residues modulo several primes."""

    def __init__(self, model: Model, u: Sequence[int], n: int, backend: str | None = None):
        self.model = model
        self.u = check_chamber(u, "start")
        if len(self.u) != model.k:
            raise ValueError("start point length does not match model dimension")
        self.n = n
        self.primes = kernels.primes_for_bound(model.num_steps**n)
        self.lo, self.arrays = kernels.final_layer_residues(model, self.u, n, self.primes, backend)

    def at(self, v: Sequence[int]) -> int:
        idx = tuple(int(x - l) for x, l in zip(v, self.lo))
        if any(i < 0 or i >= s for i, s in zip(idx, self.arrays[0].shape)):
            return 0
        return kernels.reconstruct([a[idx] for a in self.arrays], self.primes)

    def total(self) -> int:
        residues = [int(a[a != 0].sum(dtype=object)) % p for a, p in zip(self.arrays, self.primes)]
        return kernels.reconstruct(residues, self.primes)

    def items(self) -> dict[tuple[int, ...], int]:
        """All endpoints with a nonzero count."""
        support = np.zeros(self.arrays[0].shape, dtype=bool)
        for a in self.arrays:
            support |= a != 0
        out = {}
        for idx in zip(*np.nonzero(support)):
            v = tuple(int(i + l) for i, l in zip(idx, self.lo))
            out[v] = kernels.reconstruct([a[idx] for a in self.arrays], self.primes)
        return out


def confined_layer(model: Model, u: Sequence[int], n: int, backend: str | None = None) -> dict:
    """Map from endpoint to exact confined count, for every endpoint reached."""
    return ChamberLayer(model, u, n, backend).items()


def count_confined_dp(model: Model, u: Sequence[int], v: Sequence[int], n: int,
                      backend: str | None = None) -> int:
    """Confined count by forward dynamic programming over chamber points."""
    v = check_chamber(v, "end")
    if n < 0:
        return 0
    return ChamberLayer(model, u, n, backend).at(v)


def count_free_endpoint(model: Model, u: Sequence[int], n: int, method: str = "dp",
                        backend: str | None = None) -> int:
    """Total number of confined n-step walks starting at u."""
    u = check_chamber(u, "start")
    if method == "dp":
        return ChamberLayer(model, u, n, backend).total()
    if method in ("reflection_sum", "reflection"):
        total = 0
        for v in CountWindow.for_walk(u, n).chamber_points():
            if reachable(model, u, v, n):
                total += count_confined_reflection(model, u, v, n)
        return total
    raise ValueError(f"unknown method {method!r}")
