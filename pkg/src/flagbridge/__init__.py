"""Workbench for flag-bridge syndrome extraction on distance-3 codes.

Builds and verifies syndrome-extraction circuits whose ancillas double as
flags and connectivity bridges, checks them fault-tolerant by exhaustive
single-fault injection, derives lookup-table decoders from the same
enumeration, and estimates logical error rates of the two-round QEC
protocol under circuit-level depolarizing noise.
"""

from .pauli import PauliString
from .codes import StabilizerCode, steane, five_qubit, rotated_surface_d3

__all__ = [
    "PauliString",
    "StabilizerCode",
    "steane",
    "five_qubit",
    "rotated_surface_d3",
]

__version__ = "0.1.0"
