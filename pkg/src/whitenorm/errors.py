"""Exception hierarchy shared by all whitenorm modules."""


class WhitenormError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(WhitenormError, ValueError):
    """Malformed input: non-coprime pairs, bad slope strings, q <= 0, ..."""


class ScopeError(WhitenormError):
    """Input outside the proven scope (p even, or p/q on an excluded slope)."""


class DegenerateSlope(WhitenormError):
    """A slope formula produced 0/0."""


class DegenerateInput(WhitenormError):
    """Resultant input with zero degree in the elimination variable."""


class DegenerateCase(WhitenormError):
    """Closed-form formula undefined for this (p, q)."""


class InexactDivision(WhitenormError):
    """Polynomial division left a remainder where exactness was required."""


class ResultantIdentityMismatch(WhitenormError):
    """Sylvester determinant and closed form disagree after normalization."""


class SymmetryViolation(WhitenormError):
    """A resultant symmetry identity failed; the message names it."""


class ConvergenceFailure(WhitenormError):
    """Root iteration did not converge; carries iteration diagnostics."""


class TrivialRootMismatch(WhitenormError):
    """Numeric multiplicity at s = +-1 disagrees with the exact order."""


class ClassificationViolation(WhitenormError):
    """A root-classification assertion failed; the message names it."""


class AmbiguousT(WhitenormError):
    """Both quadratic branches satisfy the filling eigenvalue condition."""


class NoT(WhitenormError):
    """Neither quadratic branch satisfies the filling eigenvalue condition."""


class SingularPoint(WhitenormError):
    """Eigenvalue tuple where the inverse parametrization is undefined."""


class VerificationFailure(WhitenormError):
    """A reconstructed representation failed a residual check."""


class CountMismatch(WhitenormError):
    """Numeric class count disagrees with the closed-form count."""


class SystemInconsistent(WhitenormError):
    """The norm linear system has no solution (distance-table bug)."""


class RankUnexpected(WhitenormError):
    """The norm linear system rank differs from the one expected in range."""


class RankMismatch(WhitenormError):
    """Numeric matrix rank differs from its asserted value."""


class ClosedFormMismatch(WhitenormError):
    """Numeric determinant disagrees with its closed form."""


class CommonRootSuspected(WhitenormError):
    """Two root sets that must be disjoint come closer than the threshold."""
