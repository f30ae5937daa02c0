"""Intersection arrays and their purely combinatorial derived parameters.

An intersection array ``{b0,...,b_{D-1}; c1,...,cD}`` determines, for each
distance i, the numbers b_i and c_i of neighbors one shell further out and
one shell back.  Everything here is exact integer arithmetic: feasibility
screens (shell sizes, counting identities) hinge on exact divisibility, so
no floating point is used anywhere in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    InconsistentSrg,
    InvalidArray,
    NonIntegralShell,
    NotDiameterTwo,
    ParseError,
)

_ARRAY_RE = re.compile(r"^\{([0-9,+-]*);([0-9,+-]*)\}$")


@dataclass(frozen=True)
class IntersectionArray:
    """Validated intersection array.

    Hard invariants (checked on construction): equal-length halves, D >= 2
    (a diameter-1 array is a complete graph, which is excluded throughout),
    b_i >= 1 and c_i >= 1, c_1 = 1, and a_i = k - b_i - c_i >= 0 for all i.

    The standard monotonicity chain b0 > b1 >= ... >= b_{D-1} and
    c1 <= c2 <= ... <= cD is checked by the factories (`parse_array`,
    `from_bc`) and can be switched off there for experimentation.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        b, c = self.b, self.c
        if len(b) != len(c):
            raise InvalidArray("equal-length halves", f"{len(b)} b's vs {len(c)} c's")
        if len(b) < 2:
            raise InvalidArray("diameter >= 2", "complete graphs are excluded")
        if any(not isinstance(x, int) or x < 1 for x in b + c):
            raise InvalidArray("positive integers", f"b={b}, c={c}")
        if c[0] != 1:
            raise InvalidArray("c_1 = 1", f"c_1 = {c[0]}")
        k = b[0]
        for i in range(len(b) + 1):
            ai = k - self.b_at(i) - self.c_at(i)
            if ai < 0:
                raise InvalidArray("a_i >= 0", f"a_{i} = {ai}")

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i with the convention b_D = 0."""
        return self.b[i] if i < self.d else 0

    def c_at(self, i: int) -> int:
        """c_i with the convention c_0 = 0."""
        return self.c[i - 1] if i >= 1 else 0

    def a_at(self, i: int) -> int:
        return self.k - self.b_at(i) - self.c_at(i)

    @property
    def a(self) -> tuple[int, ...]:
        """a_0 ... a_D."""
        return tuple(self.a_at(i) for i in range(self.d + 1))

    def row(self, i: int) -> tuple[int, int, int]:
        """(c_i, a_i, b_i) for 1 <= i <= D."""
        return (self.c_at(i), self.a_at(i), self.b_at(i))

    def rows(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(self.row(i) for i in range(1, self.d + 1))

    def __str__(self) -> str:
        return format_array(self)

    def to_dict(self) -> dict:
        return {"d": self.d, "b": list(self.b), "c": list(self.c)}


@dataclass(frozen=True)
class DerivedParams:
    """Counting parameters derived exactly from an array."""

    a: tuple[int, ...]
    k_shell: tuple[int, ...]
    v: int
    head: int

    def to_dict(self) -> dict:
        return {
            "a": list(self.a),
            "k_shell": list(self.k_shell),
            "v": self.v,
            "head": self.head,
        }


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular graph parameters (v, k, lambda, mu)."""

    v: int
    k: int
    lam: int
    mu: int

    def to_dict(self) -> dict:
        return {"v": self.v, "k": self.k, "lambda": self.lam, "mu": self.mu}


def _check_monotone(arr: IntersectionArray) -> None:
    b, c = arr.b, arr.c
    if arr.d >= 2 and b[1] >= b[0]:
        raise InvalidArray("b_0 > b_1", f"b_0 = {b[0]}, b_1 = {b[1]}")
    for i in range(1, len(b) - 1):
        if b[i + 1] > b[i]:
            raise InvalidArray("b nonincreasing", f"b_{i} = {b[i]} < b_{i+1} = {b[i+1]}")
    for i in range(len(c) - 1):
        if c[i] > c[i + 1]:
            raise InvalidArray("c nondecreasing", f"c_{i+1} = {c[i]} > c_{i+2} = {c[i+1]}")


def from_bc(b, c, *, monotone: bool = True) -> IntersectionArray:
    """Build a validated array from the two halves."""
    arr = IntersectionArray(tuple(int(x) for x in b), tuple(int(x) for x in c))
    if monotone:
        _check_monotone(arr)
    return arr


def parse_array(text: str, *, monotone: bool = True) -> IntersectionArray:
    """Parse ``{b0,...,b_{D-1};c1,...,cD}``; whitespace is ignored.

    Raises ParseError for malformed text and InvalidArray when a validated
    invariant fails (the message names the invariant).
    """
    compact = re.sub(r"\s+", "", text)
    m = _ARRAY_RE.match(compact)
    if m is None:
        raise ParseError(f"not of the form '{{b0,...;c1,...}}': {text!r}")
    halves = []
    for part in m.groups():
        items = part.split(",") if part else []
        try:
            halves.append([int(x) for x in items])
        except ValueError:
            raise ParseError(f"non-integer entry in {text!r}") from None
    return from_bc(halves[0], halves[1], monotone=monotone)


def format_array(arr: IntersectionArray) -> str:
    """Canonical text form; `parse_array(format_array(a)) == a`."""
    return "{%s;%s}" % (",".join(map(str, arr.b)), ",".join(map(str, arr.c)))


def head_of(arr: IntersectionArray) -> int:
    """Number of indices 1 <= j <= D-1 with (c_j, a_j, b_j) = (c_1, a_1, b_1)."""
    first = arr.row(1)
    return sum(1 for j in range(1, arr.d) if arr.row(j) == first)


def derive(arr: IntersectionArray) -> DerivedParams:
    """Shell sizes k_i = k_{i-1} b_{i-1} / c_i, vertex count and head.

    Raises NonIntegralShell when some k_i is not an integer, which proves
    the array infeasible.
    """
    shells = [1]
    for i in range(1, arr.d + 1):
        num = shells[-1] * arr.b[i - 1]
        den = arr.c[i - 1]
        if num % den != 0:
            raise NonIntegralShell(i, num, den)
        shells.append(num // den)
    return DerivedParams(
        a=arr.a,
        k_shell=tuple(shells),
        v=sum(shells),
        head=head_of(arr),
    )


def srg_of(arr: IntersectionArray) -> SrgParams:
    """Convert a diameter-2 array to (v, k, lambda, mu)."""
    if arr.d != 2:
        raise NotDiameterTwo(f"diameter is {arr.d}")
    dp = derive(arr)
    return SrgParams(v=dp.v, k=arr.k, lam=arr.a_at(1), mu=arr.c_at(2))


def srg_to_array(p: SrgParams, *, monotone: bool = True) -> IntersectionArray:
    """Convert (v, k, lambda, mu) back to its diameter-2 array.

    The counting identity k(k-lambda-1) = (v-k-1)mu must hold; it is what
    makes the conversion a bijection.
    """
    b1 = p.k - p.lam - 1
    lhs = p.k * b1
    rhs = (p.v - p.k - 1) * p.mu
    if lhs != rhs:
        raise InconsistentSrg(lhs, rhs)
    return from_bc((p.k, b1), (1, p.mu), monotone=monotone)
