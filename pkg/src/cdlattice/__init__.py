"""Chermak-Delgado lattices of finite permutation groups."""

from types import ModuleType

from .catalog import (
    CatalogEntry,
    CatalogError,
    ClassificationReport,
    classify_orders,
    load_bundled_catalog,
    parse_catalog,
    write_catalog,
)
from .constructions import (
    builtin_group,
    construct_primitive_group,
    frobenius_subgroup,
    general_linear_2,
    module_irreducible,
    singer_normalizer_check,
    singer_subgroup,
)
from .fields import FieldElement, FiniteField, LinearAutomorphism, build_field
from .group import (
    Group,
    GroupTooLarge,
    Permutation,
    Subgroup,
    center,
    centralizer,
    generate_group,
    is_normal,
    normalizer,
)
from .isomorphism import is_isomorphic
from .lattice import CDLattice, cd_lattice, cd_measure, is_cd_simple, verify_lattice_identities
from .normal_structure import (
    Decomposition,
    PropertyAReport,
    has_property_a,
    is_directly_indecomposable,
    prop21_check,
    sylow_lemma_suite,
    theorem1_decompose,
    theorem24_verify,
)
from .numtheory import (
    AdmissibleParams,
    excluded_order,
    is_prime,
    lemma210_enumerate,
    qpk_decompose,
    wagstaff_primes,
)
from .structure import (
    all_subgroups,
    conjugacy_classes,
    direct_product,
    is_solvable,
    normal_subgroups,
    quotient,
    sylow_count,
    sylow_subgroup,
)
from .verify import verify_paper

__all__ = sorted(n for n, v in globals().items() if not n.startswith("_") and not isinstance(v, ModuleType))
del ModuleType
