"""Pfaffian ideals of tangent cones to Schubert varieties in even orthogonal
Grassmannians: index sets, v-chains, Pfaffians, Gröbner bases and
Stanley–Reisner complexes."""

from .lattice import (
    IsotropicIndex,
    Root,
    RootSystem,
    bruhat_leq,
    enumerate_isotropic,
    roots_of,
    star,
)
from .chains import VChain, decompose, new_form, spnew
from .pfaffian import (
    AntiSkewMatrix,
    PatchMatrix,
    build_patch_matrix,
    f_tau,
    generators,
    pfaffian,
    ring_for,
)
from .simplicial import SimplicialComplex

__version__ = "0.1.0"

__all__ = [
    "AntiSkewMatrix", "IsotropicIndex", "PatchMatrix", "Root", "RootSystem",
    "SimplicialComplex", "VChain", "bruhat_leq", "build_patch_matrix", "decompose",
    "enumerate_isotropic", "f_tau", "generators", "new_form", "pfaffian", "ring_for",
    "roots_of", "spnew", "star",
]
