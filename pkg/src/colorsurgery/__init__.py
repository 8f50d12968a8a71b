"""Color-code lattice surgery toolkit.

Stabilizer simulation, lattice construction, the merge/split measurement
protocol with independent verification, a matching decoder for the splitting
step, domain-wall classification, and resource-overhead estimation.
"""

from .pauli import PauliOperator, GeneratorSet, pauli_mul, commutes, in_group
from .tableau import StabilizerTableau

__version__ = "0.1.0"

__all__ = [
    "PauliOperator",
    "GeneratorSet",
    "StabilizerTableau",
    "pauli_mul",
    "commutes",
    "in_group",
    "__version__",
]
