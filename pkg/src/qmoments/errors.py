"""Exceptions shared across the package."""


class InvalidInputError(ValueError):
    """An argument violates a documented precondition.

    The command line maps this exception to exit code 2.
    """
