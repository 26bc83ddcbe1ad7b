"""Subgroup lattices of finite groups and truncated profinite towers.

The package is organized in layers: ``groups`` holds finite permutation
groups and homomorphisms, ``lattice`` the order-theoretic kernel,
``subgroup_lattice`` the enumeration connecting the two, ``classifiers`` the
group-structure tests, ``towers`` the truncated inverse limits, and
``harness`` / ``cli`` the verification suites and command line. The names
re-exported here are the stable public surface.
"""

from .classifiers import (
    CoprimeDecomposition,
    IwasawaTriple,
    PGroupCertificate,
    PstarCertificate,
    coprime_direct_decomposition,
    find_iwasawa_triple,
    is_P_group,
    is_Pstar_group,
    is_cyclic,
    is_hamiltonian,
    is_modular_group_structural,
    is_modular_p_group_structural,
    modular_element_structure_check,
)
from .errors import (
    ConstructionError,
    DomainError,
    FormatError,
    ProflatError,
    ResourceLimitError,
)
from .groups import (
    FiniteGroup,
    Homomorphism,
    Subgroup,
    alternating,
    center,
    closure,
    commutator_subgroup,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    format_group_record,
    frattini,
    is_nilpotent,
    is_perfect,
    normal_closure,
    normal_core,
    parse_group_records,
    permutes,
    pi,
    prime_factors,
    product_set,
    quaternion8,
    quotient,
    semidirect_cyclic,
    sylow,
    symmetric,
)
from .harness import (
    CatalogueEntry,
    CheckResult,
    SUITE_NAMES,
    build_catalogue,
    builtin_group,
    builtin_names,
    render_report,
    run_verification,
    verify_decomposability,
    verify_distributive_iff_cyclic,
    verify_modular_element_theorem,
    verify_modular_iff_iwasawa,
    verify_perfect_and_nilpotence,
    verify_width_theorem,
)
from .kernels import BACKEND
from .lattice import (
    Lattice,
    LatticeDecomposition,
    direct_decompose,
    find_isomorphisms,
    format_lattice_text,
    from_leq,
    has_diamond,
    has_pentagon,
    interval,
    is_distributive,
    is_modular,
    is_modular_element,
    modular_elements,
    parse_lattice_text,
    product_lattice,
    width,
)
from .perms import Perm
from .subgroup_lattice import SubgroupLatticeView, enumerate_subgroups
from .towers import (
    CoherentSubgroup,
    OpennessReport,
    Tower,
    TrajectoryReport,
    all_coherent_subgroups,
    builtin_tower,
    bundled_towers,
    coherent_from_top,
    constant_tower,
    cyclic_acting_tower,
    cyclic_tower,
    format_tower_text,
    is_open,
    is_procyclic,
    level_lattice_trajectory,
    parse_tower_text,
    permutable_in_limit,
    pi_star,
    product_tower,
    semidirect_tower,
    type_iv_tower,
    zp_tower,
)

__version__ = "0.1.0"
