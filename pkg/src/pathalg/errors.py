"""Exception hierarchy shared by all pathalg modules."""


class PathAlgError(Exception):
    """Base class for all library errors."""


class InputError(PathAlgError):
    """Malformed input document, quiver, rule set or path literal."""


class MixedFields(PathAlgError):
    """Two scalars from fields with different parameter lists were combined."""


class DivisionByZero(PathAlgError):
    pass


class ParseError(InputError):
    pass


class ZeroPoly(PathAlgError):
    """An operation that needs a nonzero element got zero (e.g. tip of 0)."""


class ParallelismError(InputError):
    """Paths with different endpoints were combined into one linear form."""


class FuelExhausted(PathAlgError):
    """A bounded search or rewriting loop ran out of its step budget."""


class CapExceeded(PathAlgError):
    """A degree or length cap was hit while work provably remained."""


class OrderViolation(PathAlgError):
    """A rule or residual is not oriented by the supplied monomial order."""


class UnknownRule(PathAlgError):
    pass


class TraceMismatch(PathAlgError):
    """A recorded reduction step cannot be interpreted over this system."""


class NotQuadratic(PathAlgError):
    """The quadratic-only shortcut was called on a non-quadratic system."""


class DegreeMismatch(PathAlgError):
    pass


class DiamondUnverified(PathAlgError):
    """Resolution machinery was invoked on a system that failed the
    diamond (confluence) check."""


class ComplexViolation(PathAlgError):
    """An internally constructed differential failed d∘d = 0 or the
    contraction recursion did not close; indicates an invalid system or
    a bug."""


class InfiniteChains(PathAlgError):
    """Dualization needs finitely many ambiguities per degree."""


class BetaZero(InputError):
    """The down-up Calabi-Yau check requires an invertible second parameter."""


class UnknownExample(InputError):
    pass


class BadParams(InputError):
    pass
