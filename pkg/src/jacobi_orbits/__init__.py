"""Exact adjoint-orbit machinery for the Jacobi group SL(2,R) x| H(R).

Arithmetic (group law, embeddings, bracket, adjoint action), exact orbit
invariants and classification over the reals and the complexified side,
sl2/KS-triple constructions with the Cayley transform, and a seeded
randomized audit of the orbit-theory claims the package implements.
"""

from .complex_orbits import (
    KcElem,
    OrbitMatch,
    PcElem,
    WeightCoords,
    classify_kc,
    is_nilpotent_pc,
    kc_action,
    same_kc_orbit,
    weight_coords,
)
from .jacobi import (
    AlgebraElement,
    GroupElement,
    Invariants,
    SiegelJacobiPoint,
    adjoint,
    bracket,
    embed_algebra,
    embed_group,
    group_inv,
    group_mul,
    invariants,
    is_nilpotent,
    orbit_dimension,
    power_identity_check,
    sj_action,
)
from .labels import Label, label
from .real_orbits import (
    ConjugationWitness,
    Representative,
    canonical_rep,
    classify,
    render_label,
    witness,
)
from .sampling import SamplerConfig, Stream
from .scalars import GaussRational, Rat, gauss, rat
from .sl2 import (
    Sl2Elem,
    Triple,
    cayley,
    classify_pc,
    classify_sl2,
    is_ks_complex,
    is_ks_real,
    ks_map,
    sl2_triple_through,
    validate_sl2_triple,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
