"""Arithmetic mod p^k: units-group structure, cubic roots of unity,
FLT case-1 root pairs, the core additive theorem, and the triplet scan.
"""

from ._version import __version__
from .errors import (
    Case2Excluded,
    DigitParseError,
    ModulusMismatch,
    ModulusOverflow,
    NoCubicRoots,
    NotADivisor,
    NotARoot,
    NotAUnit,
    NotInGroup,
    PkarithError,
    SingularRoot,
    UndefinedAtMinusOne,
)
from .groups import (
    CoreSet,
    GroupStructure,
    core_elements,
    core_project,
    decompose_unit,
    fst_extension_check,
    group_structure,
    is_core_member,
    is_pth_power_residue,
    units_order,
)
from .kernel import BACKEND
from .primes import is_prime
from .residues import (
    MODULUS_BOUND,
    PAdicDigits,
    PrimePowerModulus,
    Residue,
    discrete_log,
    from_padic,
    inv_mod,
    mul_mod,
    pow_mod,
    primitive_root,
    to_padic,
)
from .roots import (
    CubicRootTriple,
    EdsReport,
    FltRootPair,
    cubic_roots_of_unity,
    eds_check,
    enumerate_core_root_pairs,
    enumerate_flt_roots_mod_p2,
    hensel_lift_poly_root,
    normalize_flt_triple,
    pth_roots,
)
from .subgroups import (
    CoreSubgroup,
    CoreTheoremReport,
    core_subgroup,
    subgroup_sum,
    verify_core_theorem,
)
from .triplets import (
    FixedPoint,
    ScanRecord,
    Triplet,
    find_core_triplets,
    orbit_of,
    scan_primes,
    t_map,
)

__all__ = [
    "__version__",
    "BACKEND",
    "MODULUS_BOUND",
    "PkarithError",
    "ModulusOverflow",
    "ModulusMismatch",
    "NotAUnit",
    "NotInGroup",
    "DigitParseError",
    "NoCubicRoots",
    "SingularRoot",
    "NotARoot",
    "Case2Excluded",
    "UndefinedAtMinusOne",
    "NotADivisor",
    "PrimePowerModulus",
    "Residue",
    "PAdicDigits",
    "mul_mod",
    "pow_mod",
    "inv_mod",
    "is_prime",
    "primitive_root",
    "discrete_log",
    "to_padic",
    "from_padic",
    "GroupStructure",
    "CoreSet",
    "group_structure",
    "units_order",
    "core_project",
    "core_elements",
    "is_core_member",
    "is_pth_power_residue",
    "decompose_unit",
    "fst_extension_check",
    "CubicRootTriple",
    "FltRootPair",
    "EdsReport",
    "cubic_roots_of_unity",
    "hensel_lift_poly_root",
    "enumerate_core_root_pairs",
    "enumerate_flt_roots_mod_p2",
    "eds_check",
    "pth_roots",
    "normalize_flt_triple",
    "CoreSubgroup",
    "CoreTheoremReport",
    "core_subgroup",
    "subgroup_sum",
    "verify_core_theorem",
    "Triplet",
    "FixedPoint",
    "ScanRecord",
    "t_map",
    "orbit_of",
    "find_core_triplets",
    "scan_primes",
]
