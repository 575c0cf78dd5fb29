"""Finite-group computations around self-centralizing subgroups."""

from .classify import (
    CertificateResult,
    MembershipVerdict,
    StructureDescriptor,
    Witness,
    abelian_invariants,
    acts_fixed_point_freely,
    certify_non_membership,
    in_class_C,
    in_class_X,
    in_class_X_bruteforce,
    is_dihedral_group,
    is_self_centralizing,
    is_simple,
    is_supersolvable,
    structure,
    two_group_family,
)
from .constructors import (
    ActionSpec,
    abelian,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    extraspecial_p3,
    generalized_quaternion,
    is_fermat_prime,
    is_mersenne_prime,
    parse_group_spec,
    psl2,
    psl3,
    psl3_witness_pair,
    regular_representation,
    semidihedral,
    semidirect,
    symmetric,
)
from .fields import FieldSpec, gf
from .groups import FiniteGroup, SubgroupRef, close_generators
from .lattice import (
    SubgroupList,
    all_subgroups,
    is_cyclic,
    maximal_subgroups,
    minimal_normal_subgroups,
    normalizer,
    sylow_subgroup,
)
from .perms import Perm, compose, parse_cycles
from .presentations import (
    CosetTable,
    Presentation,
    RealizedPresentation,
    parse_presentation,
    realize,
    todd_coxeter,
)
from .verify import TheoremReport, run_manifest, verify

__all__ = [
    "ActionSpec",
    "CertificateResult",
    "CosetTable",
    "FieldSpec",
    "FiniteGroup",
    "MembershipVerdict",
    "Perm",
    "Presentation",
    "RealizedPresentation",
    "StructureDescriptor",
    "SubgroupList",
    "SubgroupRef",
    "TheoremReport",
    "Witness",
    "abelian",
    "abelian_invariants",
    "acts_fixed_point_freely",
    "all_subgroups",
    "alternating",
    "certify_non_membership",
    "close_generators",
    "compose",
    "cyclic",
    "dihedral",
    "direct_product",
    "extraspecial_p3",
    "generalized_quaternion",
    "gf",
    "in_class_C",
    "in_class_X",
    "in_class_X_bruteforce",
    "is_cyclic",
    "is_dihedral_group",
    "is_fermat_prime",
    "is_mersenne_prime",
    "is_self_centralizing",
    "is_simple",
    "is_supersolvable",
    "maximal_subgroups",
    "minimal_normal_subgroups",
    "normalizer",
    "parse_cycles",
    "parse_group_spec",
    "parse_presentation",
    "psl2",
    "psl3",
    "psl3_witness_pair",
    "realize",
    "regular_representation",
    "run_manifest",
    "semidihedral",
    "semidirect",
    "structure",
    "sylow_subgroup",
    "symmetric",
    "todd_coxeter",
    "two_group_family",
    "verify",
]
