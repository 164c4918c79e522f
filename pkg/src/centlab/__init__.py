"""Centralizer structure, Cpo-groups and isoclinism of small finite groups."""
from .centralizers import cent_count, cent_set, centralizer, is_cpo
from .group import (
    FiniteGroup,
    Subgroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_cayley_table,
    pgl2,
    quaternion8,
    quotient,
    semidirect_cyclic,
    symmetric,
)
from .isoclinism import find_isoclinism, is_isomorphic
from .kernels import BACKEND
from .spec import parse_spec, realize

__version__ = "0.1.0"
