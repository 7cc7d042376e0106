"""Suite results."""

# Utilities
import attr


@attr.s(frozen=True, slots=True)
class SuiteResult:
    """Outcome of one exhaustive or randomized suite.

    ``checked`` counts the individual cases; ``counterexample`` holds the
    first failing case in scan order, or None.
    """

    key = attr.ib()
    statement = attr.ib()
    passed = attr.ib()
    checked = attr.ib(default=0)
    details = attr.ib(factory=dict)
    counterexample = attr.ib(default=None)
