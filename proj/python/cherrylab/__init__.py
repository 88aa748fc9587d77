"""Bounded edge-colorings of complete graphs: cherries, local-lemma budgets,
extremal constructions and properly colored / rainbow embeddings.

Exact rationals are returned as "p/q" strings; wrap them in
fractions.Fraction for arithmetic.
"""

from ._core import *  # noqa: F401,F403
from ._core import Coloring, Graph  # noqa: F401

__version__ = "0.1.0"
