"""Exceptions raised by the algebra engine"""


class PurityError(ValueError):
    """Base class for every error raised by the engine"""


class RankMismatchError(PurityError):
    """Lattices or vectors live in ambient spaces of different rank"""


class RingMismatchError(PurityError):
    """Ideals or modules are defined over different base rings"""


class ParentMismatchError(PurityError):
    """Submodules belong to different module presentations"""


class ContainmentError(PurityError):
    """A required containment between lattices does not hold"""


class InfiniteModuleError(PurityError):
    """Operation needs a finite module"""


class BudgetExceededError(PurityError):
    """Module is larger than the configured element budget"""


class PolicyError(PurityError):
    """Quantification policy does not fit the ring or module"""


class PreconditionError(PurityError):
    """A predicate was called outside the hypotheses it is stated under"""


class ProblemFormatError(PurityError):
    """Problem description file is malformed"""


class UnknownClaimError(PurityError):
    """Unknown scan claim, mining pattern or module family"""
