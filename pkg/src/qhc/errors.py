"""Exception hierarchy shared by all qhc modules.

InputError covers anything a caller can fix (bad JSON, a polynomial that
is not quasi-homogeneous, a root that does not lie in the chosen field).
ConsistencyError means an internal invariant failed and indicates a bug,
never bad input.
"""


class QhcError(Exception):
    pass


class InputError(QhcError):
    """Invalid or unsupported input; maps to exit code 1 in the CLI."""


class ConsistencyError(QhcError):
    """An exact identity that must hold by construction failed; exit code 2."""


class NotHomogeneousError(InputError):
    """Raised when a polynomial is not quasi-homogeneous for given weights."""

    def __init__(self, degrees):
        self.degrees = frozenset(degrees)
        super().__init__(
            "not homogeneous, degrees {%s}" % ", ".join(str(d) for d in sorted(self.degrees))
        )
