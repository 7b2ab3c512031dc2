"""Exception types shared across the package.

The CLI maps these to exit codes: InputError -> 2, BudgetExhausted -> 3.
Everything else is a bug and surfaces as an ordinary traceback.
"""


class CmwildError(Exception):
    """Base class for all package errors."""


class InputError(CmwildError):
    """Malformed or invalid user input: bad polynomial syntax, composite
    characteristic, inhomogeneous relations, dimension mismatches."""


class BudgetExhausted(CmwildError):
    """A bounded search (regular sequence candidates, isomorphism sampling)
    ran out of attempts without reaching a decision."""
