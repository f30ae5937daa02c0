"""Exception hierarchy.

Every failure that certifies a mathematical fact (infeasibility, an
inconsistency step, a counterexample pair) carries the witnessing data as
attributes so callers can render machine-readable certificates.
"""

from __future__ import annotations


class DrgError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------------------
# intersection arrays
# ---------------------------------------------------------------------------

class ParseError(DrgError):
    """Array text does not match the ``{b0,...,b_{D-1};c1,...,cD}`` format."""


class InvalidArray(DrgError):
    """An intersection-array invariant is violated; names the invariant."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)


class NonIntegralShell(DrgError):
    """A shell size k_i is not an integer; the array is infeasible."""

    def __init__(self, i: int, num: int, den: int):
        self.i, self.num, self.den = i, num, den
        super().__init__(f"k_{i} = {num}/{den} is not an integer")


class NotDiameterTwo(DrgError):
    """Strongly-regular conversion requires diameter 2."""


class InconsistentSrg(DrgError):
    """The counting identity k(k-lambda-1) = (v-k-1)mu fails."""

    def __init__(self, lhs: int, rhs: int):
        self.lhs, self.rhs = lhs, rhs
        super().__init__(f"k(k-lambda-1) = {lhs} != {rhs} = (v-k-1)mu")


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

class RootCountMismatch(DrgError):
    """Fewer distinct real eigenvalues than D+1 were certified."""

    def __init__(self, found: int, expected: int):
        self.found, self.expected = found, expected
        super().__init__(f"found {found} distinct real roots, expected {expected}")


class RootIsolationError(DrgError):
    """Refinement exceeded the hard bisection budget."""


class InfeasibleMultiplicity(DrgError):
    """An eigenvalue multiplicity is certifiably not a positive integer."""

    def __init__(self, eigenvalue: str, value: str):
        self.eigenvalue, self.value = eigenvalue, value
        super().__init__(f"multiplicity of {eigenvalue} is {value}, not an integer")


# ---------------------------------------------------------------------------
# geometric parameters
# ---------------------------------------------------------------------------

class GeometricInconsistency(DrgError):
    """The array admits no consistent clique-geometry parameters.

    ``step`` is the index i at which the left-to-right solve failed
    (0 denotes a precondition on the array as a whole).
    """

    kind = "inconsistent"

    def __init__(self, step: int, reason: str):
        self.step = step
        self.reason = reason
        super().__init__(f"step {step}: {reason}")

    def to_dict(self) -> dict:
        return {"inconsistent_at": self.step, "kind": self.kind, "reason": self.reason}


class NotMinusThree(GeometricInconsistency):
    kind = "not_minus_three"


class NonDivisible(GeometricInconsistency):
    kind = "non_divisible"


class OutOfRange(GeometricInconsistency):
    kind = "out_of_range"


class TauDNotThree(GeometricInconsistency):
    kind = "tau_d_not_three"


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

class ParamOutOfRange(DrgError):
    """A family-generator parameter violates the declared range."""


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

class BadParams(DrgError):
    """Invalid construction parameters."""


class DisconnectedInput(DrgError):
    """Edge-list input describes a disconnected graph."""


class NotBipartite(DrgError):
    """Halving requires a bipartite graph."""


class DisconnectedResult(DrgError):
    """A derived graph (halved / distance power) is disconnected."""


class NotDistanceRegular(DrgError):
    """BFS verification found a counterexample pair."""

    def __init__(self, x: int, y: int, i: int, what: str, expected: int, found: int):
        self.x, self.y, self.i = x, y, i
        self.what, self.expected, self.found = what, expected, found
        super().__init__(
            f"{what}_{i} differs at pair ({x},{y}): expected {expected}, found {found}"
        )


class NonIntegralCliqueSize(DrgError):
    """The clique bound 1 - k/theta_min is not an integer."""


class NoCover(DrgError):
    """No clique cover exists; carries a witness edge and its cover count."""

    def __init__(self, edge: tuple[int, int], count: int):
        self.edge, self.count = edge, count
        super().__init__(f"edge {edge} covered {count} times")


class LineNotUnique(DrgError):
    """An edge lies in zero lines, or no unique-line selection exists."""

    def __init__(self, edge: tuple[int, int], count: int):
        self.edge, self.count = edge, count
        super().__init__(f"edge {edge} lies in {count} candidate lines")


class LineCountNotThree(DrgError):
    def __init__(self, vertex: int, count: int):
        self.vertex, self.count = vertex, count
        super().__init__(f"vertex {vertex} lies on {count} lines, expected 3")


class LineSizeWrong(DrgError):
    def __init__(self, clique: tuple[int, ...], size: int, expected: int):
        self.clique, self.size, self.expected = clique, size, expected
        super().__init__(f"line {clique} has {size} vertices, expected {expected}")


class ClassificationGap(DrgError):
    """An in-window, spectrally consistent array matched no known family."""
