"""Example extensions, brute-force oracles and the random instance generator."""
from .catalogue import NAMES, CorpusItem, Expectation, build, check_item, run_corpus

__all__ = ["NAMES", "CorpusItem", "Expectation", "build", "check_item", "run_corpus"]
