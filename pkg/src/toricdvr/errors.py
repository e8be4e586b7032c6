"""Exception types raised across the package.

Every mathematically meaningful failure gets its own class so callers (and
the command line tool) can react to the precise failure mode instead of
string-matching messages.
"""


class ToricDVRError(Exception):
    """Base class for all errors raised by this package."""


# -- arithmetic ---------------------------------------------------------------

class NotIntegral(ToricDVRError):
    """A scaled vector entry has negative p-adic valuation."""


class NotPrime(ToricDVRError):
    """The configured uniformizer is not a prime number."""


class SingularMatrix(ToricDVRError):
    """A matrix that must be invertible is singular."""


class SingularBasis(SingularMatrix):
    """A basis matrix supplied as input is singular."""


# -- polyhedral geometry ------------------------------------------------------

class NotStronglyConvex(ToricDVRError):
    """A cone contains a line."""


class NotAFan(ToricDVRError):
    """Two cones intersect in a set that is not a common face."""


class NonIntegralVertex(ToricDVRError):
    """A height-1 slice has a vertex outside the lattice N."""


class NotComplete(ToricDVRError):
    """A polyhedral complex required to be complete is not."""


class RecessionNotFan(ToricDVRError):
    """The recession cones of a polyhedral complex do not form a fan."""


class NotAVertex(ToricDVRError):
    """The given point is not a vertex of the complex."""


# -- buildings ----------------------------------------------------------------

class NonIntegerValues(ToricDVRError):
    """A norm that should correspond to a lattice has non-integer values."""


class LevelMismatch(ToricDVRError):
    """Two norms being compared do not have the same level."""


class NotInLink(ToricDVRError):
    """The norm does not lie in the link neighborhood of the lattice."""


class ValuesOutOfRange(ToricDVRError):
    """Residue valuation values must lie in [0, 1)."""


class IndexOutOfRange(ToricDVRError):
    """A symmetric-function or Chern index is outside 1..r (or 0..r)."""


# -- bundles ------------------------------------------------------------------

class OutsideSupport(ToricDVRError):
    """A point does not lie in the support of the fan."""


class OutsideStar(ToricDVRError):
    """A point does not lie in the support of a star fan."""


class NoCoveringCone(ToricDVRError):
    """No maximal cone of the fan covers the given height-0 cone."""


class ShapeMismatch(ToricDVRError):
    """A matrix has the wrong shape for the requested operation."""


class NotValidated(ToricDVRError):
    """An operation requiring validated bundle data ran on unvalidated data."""


class InternalError(ToricDVRError):
    """An invariant that valid inputs cannot break was broken anyway."""


# -- piecewise polynomials ----------------------------------------------------

class ArityMismatch(ToricDVRError):
    """Polynomials over different variable counts were combined."""


class ComplexMismatch(ToricDVRError):
    """Two piecewise-polynomial classes live on different complexes."""


class ConditionIFailed(ToricDVRError):
    """A vertex tuple member is not piecewise polynomial on its star fan."""

    def __init__(self, vertex, face, detail=""):
        self.vertex = vertex
        self.face = face
        super().__init__(
            f"condition (i) failed at vertex {vertex}, face {face}" +
            (f": {detail}" if detail else ""))


class ConditionIIFailed(ToricDVRError):
    """Two vertices of a cell carry different representing polynomials."""

    def __init__(self, cell, vertex_a, vertex_b):
        self.cell = cell
        self.vertex_a = vertex_a
        self.vertex_b = vertex_b
        super().__init__(
            f"condition (ii) failed on cell {cell} between vertices "
            f"{vertex_a} and {vertex_b}")


# -- input handling -----------------------------------------------------------

class SchemaError(ToricDVRError):
    """An input document does not match the expected schema."""

    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}")
