"""Generalized Arnold cat map on an N x N lattice.

The map sends a lattice point (x, y) to (x + p*y, q*x + (1 + p*q)*y) mod n.
The classic cat map is p = q = 1.  All arithmetic is done on residues, so
entries never exceed 2*(n-1)^2 before reduction and machine integers are
safe for any lattice side this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ParameterError, PeriodSearchError


class Point(NamedTuple):
    """Lattice point: x is the column index, y is the row index."""

    x: int
    y: int


@dataclass(frozen=True)
class AcmParams:
    """Map parameters (p, q) on an n x n lattice, stored reduced mod n."""

    p: int
    q: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"lattice side must be >= 1, got {self.n}")
        if self.p < 0 or self.q < 0:
            raise ParameterError(f"p and q must be non-negative, got p={self.p}, q={self.q}")
        object.__setattr__(self, "p", self.p % self.n)
        object.__setattr__(self, "q", self.q % self.n)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over Z_n, row-major entries (a, b; c, d)."""

    a: int
    b: int
    c: int
    d: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"modulus must be >= 1, got {self.n}")
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, getattr(self, name) % self.n)

    @classmethod
    def identity(cls, n: int) -> "Mat2":
        return cls(1, 0, 0, 1, n)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if self.n != other.n:
            raise ParameterError(f"modulus mismatch: {self.n} != {other.n}")
        n = self.n
        return Mat2(
            (self.a * other.a + self.b * other.c) % n,
            (self.a * other.b + self.b * other.d) % n,
            (self.c * other.a + self.d * other.c) % n,
            (self.c * other.b + self.d * other.d) % n,
            n,
        )


def map_matrix(params: AcmParams) -> Mat2:
    """The forward map as a matrix: [[1, p], [q, 1 + p*q]] mod n."""
    p, q, n = params.p, params.q, params.n
    return Mat2(1, p, q, 1 + p * q, n)


def inverse_map_matrix(params: AcmParams) -> Mat2:
    """Inverse of map_matrix: [[1 + p*q, -p], [-q, 1]] mod n (determinant is 1)."""
    p, q, n = params.p, params.q, params.n
    return Mat2(1 + p * q, -p, -q, 1, n)


def _check_point(params: AcmParams, pt: Point) -> None:
    if not (0 <= pt.x < params.n and 0 <= pt.y < params.n):
        raise ParameterError(f"point {tuple(pt)} outside [0, {params.n})^2")


def _apply(m: Mat2, pt: Point) -> Point:
    return Point((m.a * pt.x + m.b * pt.y) % m.n, (m.c * pt.x + m.d * pt.y) % m.n)


def acm_map(params: AcmParams, pt: Point) -> Point:
    """Move one lattice point forward by one map application."""
    _check_point(params, pt)
    return _apply(map_matrix(params), pt)


def acm_inverse_map(params: AcmParams, pt: Point) -> Point:
    """Move one lattice point back: exact inverse of acm_map."""
    _check_point(params, pt)
    return _apply(inverse_map_matrix(params), pt)


def mat_power_mod(m: Mat2, z: int) -> Mat2:
    """m**z with every intermediate product reduced mod n (square and multiply)."""
    if z < 0:
        raise ParameterError(f"exponent must be >= 0, got {z}")
    result = Mat2.identity(m.n)
    base = m
    while z:
        if z & 1:
            result = result @ base
        z >>= 1
        if z:
            base = base @ base
    return result


def matrix_period(params: AcmParams) -> int:
    """Smallest P >= 1 with A**P = I mod n.

    The period of the map matrix never exceeds 3n, so the search is
    capped there; exceeding the cap raises PeriodSearchError.
    """
    a = map_matrix(params)
    ident = Mat2.identity(params.n)
    acc = ident
    for k in range(1, 3 * params.n + 1):
        acc = acc @ a
        if acc == ident:
            return k
    raise PeriodSearchError(f"no period within 3n = {3 * params.n} for n = {params.n}")
