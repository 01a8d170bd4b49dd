"""Exact computations in the Adelman category of an additive category.

The shipped instances are free abelian groups of finite rank (``ZFree``)
and finitely presented abelian groups (``ZMod``).
"""

from .adel import (Adel, AdelMorphism, AdelObject, HomotopyWitness, adel_functor,
                   adel_transformation, apply_adel_functor, epsilon)
from .category import (AbelianCategory, AdditiveCategory, AdditiveFunctor, Transformation,
                       identity_functor, identity_transformation, scalar_transformation)
from .errors import (AdelmanError, DimensionError, IllTypedError, NotInvertibleError,
                     NotWellDefinedError, PreconditionError)
from .homology import (HomologyData, hat_functor, hat_transformation, homology_data,
                       homology_morphism, homology_object)
from .linalg import ZMatrix, hnf, kernel_basis, snf, solve_homotopy, solve_left
from .zfree import FreeMorphism, FreeObject, ZFree, free, mor, zfree_capability
from .zmod import (E, GroupMorphism, InvariantFactors, PresentedGroup, ZMod, embed_free,
                   invariant_factors, is_zero_group, make_group, make_group_morphism,
                   zmod_capability)

__all__ = [name for name in dir() if not name.startswith("_")]
