"""Backend selection and exact reconstruction for the chamber DP kernel.

The transfer kernel runs modulo primes just below 2**62; several independent
runs are glued together with the Chinese remainder theorem. The compiled
extension is preferred; the numpy twin is used when it is missing or when the
environment variable ``WEYLWALK_PURE`` is set to a non-empty value.
"""
from __future__ import annotations

import functools
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np
from sympy import prevprime
from sympy.ntheory.modular import crt

from . import _dpcore_py
from .lattice import Model, steps

log = logging.getLogger(__name__)

try:
    from . import _dpcore as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _dpcore_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

if _compiled is not None and not os.environ.get("WEYLWALK_PURE"):
    DEFAULT_BACKEND = "compiled"
else:
    DEFAULT_BACKEND = "python"


def backend_module(name: str | None = None):
    name = name or DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}") from None


@functools.lru_cache(maxsize=None)
def _prime(i: int) -> int:
    return prevprime(1 << 62 if i == 0 else _prime(i - 1))


def primes_for_bound(bound: int) -> list[int]:
    """Smallest prefix of the fixed prime list whose product exceeds ``bound``."""
    out, prod, i = [], 1, 0
    while prod <= bound:
        p = _prime(i)
        out.append(p)
        prod *= p
        i += 1
    return out


def walk_box(u: Sequence[int], n: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Lower corner and shape of the box holding every point within n+1 of u."""
    lo = np.array([x - n - 1 for x in u], dtype=np.int64)
    shape = tuple(2 * n + 3 for _ in u)
    return lo, shape


def chamber_mask(lo: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    k = len(shape)
    grids = np.indices(shape, dtype=np.int64)
    mask = np.ones(shape, dtype=bool)
    for j in range(k - 1):
        mask &= grids[j] + lo[j] < grids[j + 1] + lo[j + 1]
    return mask


def final_layer_residues(model: Model, u: Sequence[int], n: int, primes: Sequence[int],
                         backend: str | None = None, workers: int | None = None):
    """Confined walk counts after ``n`` steps from ``u``, one residue array per prime.

    Returns ``(lo, arrays)`` where ``arrays[i][idx]`` is the count at lattice
    point ``lo + idx`` modulo ``primes[i]``.
    """
    mod = backend_module(backend)
    lo, shape = walk_box(u, n)
    mask = np.ascontiguousarray(chamber_mask(lo, shape).ravel().astype(np.uint8))
    st = np.ascontiguousarray(np.array(steps(model), dtype=np.int64))
    start = np.ascontiguousarray(np.array(u, dtype=np.int64) - lo)
    shp = np.array(shape, dtype=np.int64)

    def run(p):
        return mod.chamber_walk_residues(st, start, n, shp, mask, p)

    if workers is None:
        workers = min(len(primes), os.cpu_count() or 1)
    if workers > 1 and mod is not _dpcore_py:
        with ThreadPoolExecutor(workers) as ex:
            arrays = list(ex.map(run, primes))
    else:
        arrays = [run(p) for p in primes]
    return lo, arrays


def reconstruct(residues: Sequence[int], primes: Sequence[int]) -> int:
    """Nonnegative integer below prod(primes) with the given residues."""
    if len(primes) == 1:
        return int(residues[0])
    value, _ = crt(list(primes), [int(r) for r in residues], check=False)
    return int(value)
