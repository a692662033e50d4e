"""
weightkit 有限表现模模块

Finitely presented modules: normal forms, homomorphisms, Hom/Ext¹/Tor₁
"""

from .fpmodule import FpModule, NormalForm, is_isomorphic, normalize
from .hom import ModuleHom, BijectivityCertificate, hom_map_bijective, verify_bijectivity_certificate
from .functors import (
    ProjectiveDimension,
    hom_module,
    ext1,
    tor1,
    projective_dimension,
    hom_presentation,
    ext1_presentation,
    tor1_presentation,
    hom_induced,
    precomposition_map,
)
from .sequences import ShortExactSequence

__all__ = [
    "FpModule",
    "NormalForm",
    "is_isomorphic",
    "normalize",
    "ModuleHom",
    "BijectivityCertificate",
    "hom_map_bijective",
    "verify_bijectivity_certificate",
    "ProjectiveDimension",
    "hom_module",
    "ext1",
    "tor1",
    "projective_dimension",
    "hom_presentation",
    "ext1_presentation",
    "tor1_presentation",
    "hom_induced",
    "precomposition_map",
    "ShortExactSequence",
]
