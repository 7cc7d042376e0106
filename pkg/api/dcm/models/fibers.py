"""Fiber reports."""

# Utilities
import attr


@attr.s(frozen=True, slots=True)
class FiberReport:
    """Fiber of Psi over one element of DC_n.

    ``tau`` is its unique 4321-avoiding (and Bruhat minimal) member and
    ``maximal`` its Bruhat maximal members, which are the 4231-avoiding ones.
    """

    members = attr.ib(converter=frozenset)
    tau = attr.ib()
    maximal = attr.ib(converter=frozenset)
    convex = attr.ib()


@attr.s(frozen=True, slots=True)
class CatalanFiberReport:
    """Fiber of w -> alpha(w): the Bruhat interval [pi, pi_prime]."""

    members = attr.ib(converter=frozenset)
    pi = attr.ib()
    pi_prime = attr.ib()
    interval = attr.ib()
