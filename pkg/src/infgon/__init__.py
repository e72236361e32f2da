"""
Exact combinatorics of the completed discrete cluster category.

Arcs of the completed ∞-gon, their Hom spaces, symbolic arc sets, and the
classification of t-structures and co-t-structures by decorated
non-crossing partitions, with a brute-force oracle for finite windows.

Modules:
- gon_model: labels, points, arcs, windows and intervals
- hom_model: shift, hammocks, Hom dimensions and middle terms
- arcsets: symbolic rectangle unions and closure conditions
- ncp: non-crossing partitions, Kreweras complements, decorations
- torsion: aisles, co-aisles, hearts, predicates and lattice operations
- oracle: windowed verification suites
- infgon_cli: command line interface
"""

from .errors import ContractViolation, InfgonError, SchemaError
from .gon_model import GonConfig, Model

__all__ = ["ContractViolation", "GonConfig", "InfgonError", "Model", "SchemaError"]
