"""Presentations of DC_n."""

# Utilities
import attr


@attr.s(frozen=True, slots=True)
class PresentationInstance:
    """Generators f_1..f_{n-1} with the relations as pairs of words."""

    n = attr.ib()
    relations = attr.ib(converter=tuple)

    @property
    def generator_count(self):
        return max(self.n - 1, 0)


@attr.s(frozen=True, slots=True)
class PresentationReport:
    """Outcome of comparing the completed presentation with DC_n.

    ``stable`` says that the completed rules still identify both sides of
    every defining relation.
    """

    presented_size = attr.ib()
    matches = attr.ib()
    stable = attr.ib()
    relations_hold = attr.ib()
    rule_count = attr.ib()
    longest_normal_form = attr.ib()
