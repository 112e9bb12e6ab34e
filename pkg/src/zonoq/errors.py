"""Exceptions shared across the package."""


class GuardExceeded(ValueError):
    """A size guard was hit (ground-set, box-volume or monomial-count limit)."""


class NotUnimodular(ValueError):
    """An operation that is only valid for unimodular matrices was asked to
    work on a non-unimodular one."""
