"""Rotating normal form on dual braid (Birman-Ko-Lee) monoids.

Words are strings in the `p.q` / `p.q!` grammar, e.g. "1.2 2.3 1.3!".
"""

from bklrot._core import (
    accepts,
    are_equivalent,
    automaton_dot,
    automaton_text,
    braids_equal,
    count_accepted,
    count_classes,
    is_rotating,
    mirror,
    normalize,
    phi,
    reverse,
    sigma,
    split,
    verify_witness,
    witness_pair,
)

__all__ = [
    "accepts",
    "are_equivalent",
    "automaton_dot",
    "automaton_text",
    "braids_equal",
    "count_accepted",
    "count_classes",
    "is_rotating",
    "mirror",
    "normalize",
    "phi",
    "reverse",
    "sigma",
    "split",
    "verify_witness",
    "witness_pair",
]
