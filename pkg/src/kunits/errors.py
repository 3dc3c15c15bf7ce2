"""Exceptions shared by every kunits module."""


class DomainError(ValueError):
    """The input is outside the mathematical domain of the operation."""


class CapabilityError(Exception):
    """The input is valid but exceeds a configured working bound.

    Raised instead of ever returning a wrong or unverified answer; the
    message names the bound that was hit.
    """
