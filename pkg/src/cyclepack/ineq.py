"""Exact feasibility checks for the cycle-type counting systems.

Cycles of the ``k-1`` long cycles are sorted into four types with counts
``theta1..theta4`` (``theta1 <= 1``).  For ``k-1 >= 6`` the two strict
linear bounds

    2/3 (k-1) - 1/3 < theta1 + theta2 + theta3/3 + theta4/2
    2/3 (k-1) - 1/3 < theta1/3 + theta3 + 7/9 theta4

must have no solution; for ``k-1 = 5`` the sharper system in ``r = 3a + b``

    9a + 3b + 1 <= (3a+b)(theta1 + theta2) + a theta3 + (3a+b)/2 theta4
    9a + 3b + 1 <= (ceil(a + b/3) - 1) theta1 + (3a+b) theta3 + (2a+1) theta4

must have none with ``a >= 1``, ``b in {0, 1, 2}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional


@dataclass(frozen=True)
class TypeCounts:
    theta1: int
    theta2: int
    theta3: int
    theta4: int
    a: Optional[int] = None
    b: Optional[int] = None

    @property
    def k_minus_1(self) -> int:
        return self.theta1 + self.theta2 + self.theta3 + self.theta4

    @property
    def thetas(self) -> tuple[int, int, int, int]:
        return (self.theta1, self.theta2, self.theta3, self.theta4)


@dataclass
class Feasibility:
    feasible: bool
    witnesses: list[TypeCounts] = field(default_factory=list)
    checked: int = 0


def type_vectors(k_minus_1: int) -> Iterator[tuple[int, int, int, int]]:
    """All ``(theta1..theta4)`` with ``theta1 <= 1`` summing to ``k_minus_1``, lexicographically."""
    for t1 in range(min(1, k_minus_1) + 1):
        for t2 in range(k_minus_1 - t1 + 1):
            for t3 in range(k_minus_1 - t1 - t2 + 1):
                yield (t1, t2, t3, k_minus_1 - t1 - t2 - t3)


def linear_holds(k_minus_1: int, theta: tuple[int, int, int, int]) -> bool:
    t1, t2, t3, t4 = theta
    # both sides scaled by 18, which clears every denominator
    bound = 12 * k_minus_1 - 6
    return bound < 18 * (t1 + t2) + 6 * t3 + 9 * t4 and bound < 6 * t1 + 18 * t3 + 14 * t4


def check_linear_system(k_minus_1: int) -> Feasibility:
    if k_minus_1 < 1:
        raise ValueError("k - 1 must be at least 1")
    result = Feasibility(False)
    for theta in type_vectors(k_minus_1):
        result.checked += 1
        if linear_holds(k_minus_1, theta):
            result.witnesses.append(TypeCounts(*theta))
    result.feasible = bool(result.witnesses)
    return result


def quadratic_coefficients(theta: tuple[int, int, int, int], b: int) -> list[tuple[Fraction, Fraction]]:
    """Each constraint as ``(c1, c0)`` meaning ``c1*a + c0 <= 0``."""
    t1, t2, t3, t4 = theta
    # left minus right side, collected by powers of a
    s_c1 = 9 - 3 * (t1 + t2) - t3 - Fraction(3 * t4, 2)
    s_c0 = 3 * b + 1 - b * (t1 + t2) - Fraction(b * t4, 2)
    # ceil(a + b/3) - 1 is a - 1 for b = 0 and a for b in {1, 2}
    ceil_shift = -1 if b == 0 else 0
    t_c1 = 9 - t1 - 3 * t3 - 2 * t4
    t_c0 = 3 * b + 1 - ceil_shift * t1 - b * t3 - t4
    return [(Fraction(s_c1), Fraction(s_c0)), (Fraction(t_c1), Fraction(t_c0))]


def quadratic_holds(theta: tuple[int, int, int, int], a: int, b: int) -> bool:
    """Direct evaluation of both constraints, written independently of the coefficient form."""
    t1, t2, t3, t4 = theta
    r = 3 * a + b
    lhs = 9 * a + 3 * b + 1
    s_rhs = r * (t1 + t2) + a * t3 + Fraction(r * t4, 2)
    t_rhs = (math.ceil(Fraction(3 * a + b, 3)) - 1) * t1 + r * t3 + (2 * a + 1) * t4
    return lhs <= s_rhs and lhs <= t_rhs


def feasible_a_range(theta: tuple[int, int, int, int], b: int) -> Optional[tuple[int, Optional[int]]]:
    """The integers ``a >= 1`` meeting both constraints, as ``(lo, hi)`` with ``hi=None`` for unbounded.

    Returns None when the set is empty.
    """
    lo: int = 1
    hi: Optional[int] = None
    for c1, c0 in quadratic_coefficients(theta, b):
        if c1 > 0:
            bound = math.floor(-c0 / c1)
            hi = bound if hi is None else min(hi, bound)
        elif c1 < 0:
            lo = max(lo, math.ceil(-c0 / c1))
        elif c0 > 0:
            return None
    if hi is not None and hi < lo:
        return None
    return (lo, hi)


def check_quadratic_system_k5() -> Feasibility:
    result = Feasibility(False)
    for theta in type_vectors(5):
        for b in (0, 1, 2):
            result.checked += 1
            rng = feasible_a_range(theta, b)
            if rng is not None:
                result.witnesses.append(TypeCounts(*theta, a=rng[0], b=b))
    result.feasible = bool(result.witnesses)
    return result


def expected_feasible(k_minus_1: int) -> bool:
    return k_minus_1 <= 4


def feasibility_row(k_minus_1: int) -> dict:
    """One table row: the system that decides this ``k-1`` and its verdict."""
    linear = check_linear_system(k_minus_1)
    if k_minus_1 == 5:
        decided = check_quadratic_system_k5()
        system = "quadratic"
    else:
        decided = linear
        system = "linear"
    return {
        "k_minus_1": k_minus_1,
        "system": system,
        "linear_feasible": linear.feasible,
        "feasible": decided.feasible,
        "witnesses": [list(w.thetas) + ([w.a, w.b] if w.a is not None else []) for w in decided.witnesses],
        "expected_feasible": expected_feasible(k_minus_1),
    }
