"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`SliceError`,
so callers (and the CLI) can separate domain failures from programming bugs.
The CLI maps :class:`AdmissibilityError` subclasses to exit code 2 and
:class:`NumericalError` subclasses to exit code 3.
"""


class SliceError(Exception):
    """Base class for all library errors."""


class NumericalError(SliceError):
    """A floating-point consistency check failed."""


class AdmissibilityError(SliceError):
    """The input is outside the class where the zero theory applies."""


# algebra ---------------------------------------------------------------

class InvalidAlgebra(SliceError):
    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(str(f) for f in report) or "invalid algebra")


class AlgebraMismatch(SliceError):
    pass


class CapExceeded(SliceError):
    pass


class NotInQuadraticCone(SliceError):
    pass


class Singular(NumericalError):
    pass


class NotSqrtMinusOne(SliceError):
    pass


# complexified algebra --------------------------------------------------

class NotAZeroDivisor(SliceError):
    pass


class DegenerateY(SliceError):
    pass


# slice functions -------------------------------------------------------

class OutOfDomain(SliceError):
    pass


class NotIntrinsic(SliceError):
    pass


class RealPointForDerivative(SliceError):
    pass


class MissingDerivativeCallback(SliceError):
    pass


# zeros -----------------------------------------------------------------

class NotAdmissible(AdmissibilityError):
    pass


class NonRealNormal(AdmissibilityError):
    pass


class NoConvergence(NumericalError):
    pass


class NotARoot(NumericalError):
    pass


class OddRealMultiplicity(NumericalError):
    pass


class NonZeroRemainder(NumericalError):
    pass


class DegreeMismatch(NumericalError):
    pass


# cauchy ----------------------------------------------------------------

class OnSingularSphere(SliceError):
    pass


class NotSliceRegular(SliceError):
    pass


class OutsideDomain(SliceError):
    pass


class NonAssociativeOffSlice(SliceError):
    pass
