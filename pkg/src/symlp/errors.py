"""Exception types shared across the package."""


class SymlpError(Exception):
    """Base class for all domain errors raised by symlp."""


class ClosureLimitExceeded(SymlpError):
    """Group or orbit enumeration grew past the configured element limit."""

    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"closure exceeds the configured limit of {limit} elements")


class NotSignedPermutation(SymlpError):
    """Matrix is not a product of a +-1 diagonal and a permutation matrix."""


class UtilityNotOrbitConstant(SymlpError):
    """Objective coefficients differ inside one orbit block.

    This signals that the supplied partition does not come from a symmetry
    group of the problem at hand.
    """


class DimensionTooLarge(SymlpError):
    """Full symmetry detection was asked for more variables than the cap allows."""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(
            f"full symmetry detection is capped at {cap} variables (got {n}); "
            "supply generators instead"
        )


class LpsParseError(SymlpError):
    """Syntax or structure error in an LPS document or generators file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VerificationFailed(SymlpError):
    """A supplied generator failed symmetry verification.

    Carries the per-generator reports so callers can show which one failed.
    """

    def __init__(self, reports):
        self.reports = reports
        bad = [r for r in reports if not r.verdict]
        super().__init__(f"{len(bad)} of {len(reports)} generators are not symmetries")
