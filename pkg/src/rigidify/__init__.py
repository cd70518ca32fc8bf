"""Rigidification of finite simplicial sets into simplicial categories.

The library computes the mapping spaces of the rigidified category of a
finite simplicial set by enumerating necklace maps and their canonical
flagged forms, provides cube models for necklace targets, exact integral
homology for desk-scale verification, and a truncated coherent nerve.
"""

from .complexes import (
    ContractViolation,
    GeneratedComplex,
    OrderedComplex,
    OrderViolation,
    PreorderRelation,
    SimplexKey,
    degeneracy,
    face,
    from_maximal_chains,
    f_vector,
    is_ordered,
    is_simple_inclusion,
    preceq,
    product,
    standard,
    subcomplex_keys,
    vertex_chain,
)
from .necklaces import (
    Necklace,
    NecklaceMap,
    NecklaceMorphism,
    POINT,
    enumerate_injective_maps,
    image_necklace,
    outer_simplex,
    preferred_form,
    spine,
    wedge,
)
from .mapping import (
    CubePoset,
    FlaggedTriple,
    MappingComplex,
    MappingSimplex,
    canonicalize,
    compose_simplices,
    cube_face,
    flankify,
    identity_simplex,
    induced_map,
    mapping_space,
    mapping_space_truncated,
    necklace_mapping_space,
    simplex_degeneracy,
    simplex_face,
)
from .category import SimplicialCategoryPresentation, categorify
from .homology import HomologyResult, homology, is_homology_point, pi0
from .comonad import LevelCount, chain_count, comonad_level
from .horns import inner_horn_report, truncate_complex
from .nerve import CoherentNerveLevel, coherent_nerve_truncated, nerve_truncation

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
