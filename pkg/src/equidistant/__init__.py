"""Equidistant codes in q-ary Hamming spaces."""

from .codes import Code, Word, hamming_distance, is_equidistant
from .bounds import best_bound
from .search import max_equidistant

__all__ = ["Code", "Word", "hamming_distance", "is_equidistant", "best_bound", "max_equidistant"]
__version__ = "0.1.0"
