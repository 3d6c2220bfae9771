"""Morse pairs of function germs on stratified spaces."""

from ._core import local_multiplicity, milnor_oracle, morse_pairs, run

__all__ = ["run", "morse_pairs", "milnor_oracle", "local_multiplicity"]
