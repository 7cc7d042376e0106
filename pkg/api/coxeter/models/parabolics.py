"""Parabolic subgroups and their maximal coset representatives."""

# Utilities
import attr


@attr.s(frozen=True, slots=True)
class ParabolicData:
    """W_J, its longest element w_J (which indexes e_J) and W^J.

    W^J holds the maximal length representatives of the cosets w W_J,
    listed in the order of their cosets (minimal length first).
    """

    J = attr.ib(converter=frozenset)
    subgroup = attr.ib(converter=frozenset)
    longest = attr.ib()
    max_reps = attr.ib(converter=tuple)

    @property
    def idempotent(self):
        return self.longest

    @property
    def index(self):
        return len(self.max_reps)
