"""Closed-form bound evaluators.

These are pure integer formulas.  Nothing in this module looks at a
graph; comparing a formula with brute-force truth is the job of
:mod:`mostarlab.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange


@dataclass(frozen=True)
class BoundValue:
    claim: str
    n: int
    k: int
    mu: int | None
    value: int


def _check(n: int, k: int, n_min: int = 2) -> None:
    if n < n_min or not 1 <= k <= n - 1:
        raise OutOfRange(f"need n >= {n_min} and 1 <= k <= n-1, got n={n}, k={k}")


def max_bound(n: int, k: int) -> int:
    """Upper bound for order ``n`` with exactly ``k`` cut edges."""
    _check(n, k)
    return k * (n - 2) + (n - k - 1) * k


def min_bound(n: int, k: int) -> int:
    """Lower bound: sum of ``|n - 2(floor((n-k-1)/2) + i)|`` for ``i = 1..k``."""
    _check(n, k)
    base = (n - k - 1) // 2
    return sum(abs(n - 2 * (base + i)) for i in range(1, k + 1))


def max_cycle_edge_contribution(n: int) -> int:
    """Largest imbalance a non-pendant edge can have in order ``n``."""
    return n - 3


def cyclomatic_bound(n: int, k: int, mu: int) -> int:
    if mu < 0:
        raise OutOfRange(f"mu must be >= 0, got {mu}")
    _check(n, k, n_min=3)
    return k * (n - 2) + k * (n - k - 1) + mu * max_cycle_edge_contribution(n)


def evaluate(claim: str, n: int, k: int, mu: int | None = None) -> BoundValue:
    if claim == "T1_MAX":
        value = max_bound(n, k)
    elif claim == "T2_MIN":
        value = min_bound(n, k)
    elif claim == "T3_CYCLOMATIC":
        value = cyclomatic_bound(n, k, mu or 0)
    else:
        raise ValueError(f"unknown bound {claim!r}")
    return BoundValue(claim, n, k, mu, value)
