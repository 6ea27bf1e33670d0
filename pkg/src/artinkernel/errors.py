"""Exception hierarchy.

The CLI maps these onto exit codes: input problems exit 2, violated
preconditions exit 3, broken internal invariants exit 4.
"""


class ArtinKernelError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(ArtinKernelError, ValueError):
    exit_code = 2


class ZeroCharacterError(InputError):
    """The zero character has no Artin kernel."""


class DisconnectedGraphError(InputError):
    """An operation that requires a connected graph got a disconnected one."""


class InvalidSplittingError(InputError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("invalid splitting: " + ", ".join(self.violations))


class PreconditionError(ArtinKernelError):
    exit_code = 3


class NotChordalError(PreconditionError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("graph is not chordal; chordless cycle " + "-".join(self.cycle))


class NotBlockGraphError(PreconditionError):
    pass


class WildInputError(PreconditionError):
    """The character vanishes on a cut vertex, so its kernel surjects onto F_inf."""

    def __init__(self, vertices):
        self.vertices = tuple(sorted(vertices))
        super().__init__("character vanishes on cut vertices " + ", ".join(self.vertices))


class NotApplicableError(PreconditionError):
    pass


class InvariantError(ArtinKernelError, AssertionError):
    exit_code = 4


class NoWitnessError(PreconditionError):
    """No character on the graph is neither wild nor tame."""
