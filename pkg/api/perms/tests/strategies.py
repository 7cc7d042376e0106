"""Hypothesis strategies shared by the test suites."""

# Hypothesis
from hypothesis import strategies as st

# Models
from api.perms.models import Permutation


def permutations(min_n=1, max_n=6):
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Permutation)
    )


def permutation_pairs(min_n=1, max_n=6):
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.tuples(
            st.permutations(range(1, n + 1)).map(Permutation),
            st.permutations(range(1, n + 1)).map(Permutation),
        )
    )
