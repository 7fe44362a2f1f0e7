"""Exact dimension bookkeeping for configuration spaces of the (punctured) torus."""

__version__ = "0.1.0"


class RepstabError(Exception):
    """Base class for domain errors raised by this package."""


class UnsupportedDegree(RepstabError):
    """Homological degree outside the tabulated range."""


class InternalMismatch(RepstabError):
    """A derived table disagrees with its published checksum."""


class CapExceeded(RepstabError):
    """Enumeration size above the configured cap."""


class MissingData(RepstabError):
    """A dimension profile lacks a degree the computation needs."""


class UnknownDimension(RepstabError):
    """A report needed a dimension outside the tabulated range."""
