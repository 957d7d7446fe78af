"""Exception types shared across the package."""


class IcatError(Exception):
    """Base class for all package errors."""


class InvalidStructure(IcatError):
    """A carrier table violates the laws of its kind."""


class InvalidMorphism(IcatError):
    """A map is not structure preserving or is out of range."""


class KindMismatch(IcatError):
    """Objects from incompatible ambient kinds were combined."""


class UnsupportedCoproduct(IcatError):
    """The ambient kind has no finite coproduct construction."""


class NotSplit(IcatError):
    """alpha has no section, or the supplied beta is not one."""


class InvalidDiagram(IcatError):
    """Commutation or section conditions of a diagram fail."""


class KernelNotTrivial(IcatError):
    """A construction requiring a trivial kernel was given a fat one."""


class FactorizationFailure(IcatError):
    """A required unique factorization does not exist."""


class ComparisonNotIso(IcatError):
    """A canonical comparison expected to be invertible is not."""


class ChainConditionViolated(IcatError):
    """Consecutive chain maps do not compose to zero."""


class LawViolation(IcatError):
    """Displayed equational laws of a model fail; carries a witness."""


class InvalidAction(IcatError):
    """An action table violates unit, mixing or automorphism laws."""


class ConjugationEscapesKernel(IcatError):
    """Conjugating the kernel left its image (impossible for groups)."""


class TriangleLawViolated(IcatError):
    """A unit/counit composite expected to be an identity is not."""


class RightCancellationViolated(IcatError):
    """A multiplication table is not right-cancellative with identity 0."""


class BoundTooLarge(IcatError):
    """An exhaustive enumeration was requested beyond the supported size."""


class BadInput(IcatError):
    """Malformed JSON input or unknown name."""
