"""Semiintersecting set families and cliques in Xor products of Kneser graphs."""

from .affine import AffineLine, ParallelClass, PlanePoint, line_intersect, parallel_classes
from .bounds import (
    BoundReport,
    RamseySequence,
    bound_f2N,
    bound_l1,
    bound_l2,
    ramsey_upper,
    report,
    theorem_constant,
)
from .clique import CliqueResult, max_clique
from .constructions import (
    affine_construction,
    best_known_lower,
    big_n_construction,
    stacked_affine,
    weighted_pk_construction,
)
from .family import (
    FamilyParams,
    MemberSet,
    SetFamily,
    VerificationReport,
    WeightFunction,
    blow_up,
    embed,
    trivial_construction,
    verify_semiintersecting,
)
from .field import Field, gf
from .graph import (
    KneserGraph,
    XorGraph,
    build_kneser,
    build_xor_product,
    clique_to_family,
    family_to_clique,
)
from .latin import (
    MolsSquare,
    latin_family_from_mols,
    mols_from_field,
    mols_from_latin_family,
    verify_latin,
    verify_orthogonal,
)
from .solve import solve_f

__version__ = "0.1.0"
