from .permutations import (
    Permutation,
    ReducedWord,
    compose,
    format_permutation,
    format_values,
    invert,
    parse_permutation,
    parse_values,
)
from .monotone_maps import Direction, MonotoneMap
