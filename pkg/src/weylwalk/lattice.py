"""Walk models and the type-A Weyl chamber.

Only the two reflectable zero-drift step sets exist for type A: the lock step
set {(+-1, ..., +-1)} and the random turns set {+-e_j}.
"""
from __future__ import annotations

import cmath
import enum
import itertools
from dataclasses import dataclass
from typing import Sequence


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class Kind(enum.Enum):
    LOCK_STEP = "lockstep"
    RANDOM_TURNS = "randomturns"


@dataclass(frozen=True)
class Model:
    kind: Kind
    k: int

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.k!r}")

    @classmethod
    def lock_step(cls, k: int) -> "Model":
        return cls(Kind.LOCK_STEP, k)

    @classmethod
    def random_turns(cls, k: int) -> "Model":
        return cls(Kind.RANDOM_TURNS, k)

    @property
    def is_lock_step(self) -> bool:
        return self.kind is Kind.LOCK_STEP

    @property
    def num_steps(self) -> int:
        return 2**self.k if self.is_lock_step else 2 * self.k

    def __str__(self):
        return f"{self.kind.value}(k={self.k})"


def steps(model: Model) -> list[tuple[int, ...]]:
    """Full step set of ``model``, generated from its defining rule."""
    k = model.k
    if model.is_lock_step:
        return [tuple(eps) for eps in itertools.product((1, -1), repeat=k)]
    out = []
    for j in range(k):
        for sign in (1, -1):
            e = [0] * k
            e[j] = sign
            out.append(tuple(e))
    return out


def in_chamber(p: Sequence[int]) -> bool:
    """True iff ``p`` is strictly increasing (open chamber x_1 < ... < x_k)."""
    return all(p[j] < p[j + 1] for j in range(len(p) - 1))


def check_chamber(p: Sequence[int], name: str = "point") -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if not in_chamber(p):
        raise DomainError(f"{name} {p} is not strictly increasing (outside the chamber)")
    return p


def reachable(model: Model, u: Sequence[int], v: Sequence[int], n: int) -> bool:
    """Necessary parity/distance conditions for a positive confined count.

    A ``True`` answer does not guarantee a nonzero count; ``False`` does
    guarantee zero.
    """
    if len(u) != model.k or len(v) != model.k:
        raise ValueError("endpoint length does not match model dimension")
    if n < 0:
        return False
    if model.is_lock_step:
        if len({x % 2 for x in u}) > 1 or len({x % 2 for x in v}) > 1:
            return False
        if (u[0] - v[0] - n) % 2:
            return False
        return all(abs(b - a) <= n for a, b in zip(u, v))
    dist = sum(abs(b - a) for a, b in zip(u, v))
    return (n - sum(v) + sum(u)) % 2 == 0 and n >= dist


def step_gen_value(model: Model, z: Sequence[complex]) -> complex:
    """Evaluate the step generating function S(z) in double precision."""
    if len(z) != model.k:
        raise ValueError("argument length does not match model dimension")
    if any(zj == 0 for zj in z):
        raise DomainError("step generating function is singular at z_j = 0")
    terms = [complex(zj) + 1 / complex(zj) for zj in z]
    if model.is_lock_step:
        out = complex(1)
        for t in terms:
            out *= t
        return out
    return complex(sum(terms))


def step_gen_on_torus(model: Model, phi: Sequence[float]) -> complex:
    return step_gen_value(model, [cmath.exp(1j * p) for p in phi])
