"""Coinversion LLT polynomials: tableau and vertex-model engines, exact
polynomial algebra, and machine verification of their identities."""

from .algebra import LaurentPoly, VarSet
from .shapes import (
    SkewShapeTuple,
    boundary_vector,
    column_range,
    complement,
    d_stat,
    dtilde_stat,
    inv_stat,
    m_bruteforce,
    m_formula,
    n_stat,
    rotate,
)
from .tableaux import (
    TableauTuple,
    coinv,
    complement_bijection,
    enumerate_ssyt,
    hl_modified,
    hl_transformed,
    inv,
    llt,
    llt_coinv,
    llt_inv,
)
from .lattice import (
    LatticeConfig,
    LatticeSpec,
    build_box_lattice,
    build_lattice,
    config_to_ssyt,
    enumerate_configs,
    l_weight,
    lstar_weight,
    partition_function,
    rotate_config,
    ssyt_to_config,
)
from .yangbaxter import (
    ef_weight,
    l_recursive,
    lstar_ybe_check,
    r_recursive,
    r_weight,
    ybe_check,
    ybe_droite,
    ybe_gauche,
)

__all__ = [name for name in dir() if not name.startswith("_")]
