"""Exact computations for the derived category of rank-2 bundles on a curve.

Submodules:

* ``liecore``: root data, dual Coxeter numbers, SL2 characters
* ``alcove``: affine Weyl alcove classification (closed form, residues, search)
* ``fusion``: level-k SL2 fusion ring and Verlinde numbers
* ``bwb``: loop-group Borel-Weil-Bott cohomology and Hom-degree bookkeeping
* ``coinv``: coinvariant algebra and the graded modules R_m, S_n
* ``sod``: block tables, Hodge/Hochschild polynomials, additivity check
* ``cli``: the ``bunsod`` command
"""

from .alcove import AlcoveClass, classify_bfs, classify_sl2, classify_typeA
from .bwb import CohomologyAnswer, cohomology, hom_amplitude, semiorthogonality_certificate
from .fusion import fusion_coefficient, verlinde_dim, verlinde_dim_trig
from .liecore import GroupType, SL2Character, dual_coxeter, irrep_character, tensor_decompose
from .sod import enumerate_blocks, hh_additivity_check

__version__ = "0.1.0"

__all__ = [
    "AlcoveClass",
    "CohomologyAnswer",
    "GroupType",
    "SL2Character",
    "classify_bfs",
    "classify_sl2",
    "classify_typeA",
    "cohomology",
    "dual_coxeter",
    "enumerate_blocks",
    "fusion_coefficient",
    "hh_additivity_check",
    "hom_amplitude",
    "irrep_character",
    "semiorthogonality_certificate",
    "tensor_decompose",
    "verlinde_dim",
    "verlinde_dim_trig",
]
