"""Discrete-time quantum walk simulator.

State-vector evolution on a 1-D lattice for the standard Hadamard walk, a
coin-retaining shift-operator walk (reduced and explicit three-register
forms), entangled particle pairs, a co-location-constrained condensate walk
and the classical random-walk baseline.
"""

from qwalk._core import (
    coincidence_scan,
    run_pair,
    run_single,
    runs_required,
    variance_scan,
)

__all__ = [
    "coincidence_scan",
    "run_pair",
    "run_single",
    "runs_required",
    "variance_scan",
]
