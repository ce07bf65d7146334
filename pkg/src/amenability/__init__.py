"""Exact classification of finite-dimensional algebras over Q by weak,
cyclic, cyclically weak and point amenability, with a theorem audit harness."""

__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    Algebra,
    Morphism,
    direct_sum,
    lau_product,
    opposite,
    quotient,
    tensor,
    unitize,
    validate,
)
from .characters import CharacterSet, find_rational_characters, is_character  # noqa: E402
from .cohomology import AmenabilityReport, classify  # noqa: E402

__all__ = [
    "Algebra",
    "AmenabilityReport",
    "CharacterSet",
    "Morphism",
    "classify",
    "direct_sum",
    "find_rational_characters",
    "is_character",
    "lau_product",
    "opposite",
    "quotient",
    "tensor",
    "unitize",
    "validate",
]
