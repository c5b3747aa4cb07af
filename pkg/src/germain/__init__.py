"""Sophie Germain's Theorem: power residues, auxiliary primes and size bounds."""

__version__ = "0.1.0"

from .arith import (
    PrimeModulus,
    PrimitiveRoot,
    Residue,
    factorize,
    inv_mod,
    is_prime,
    mul_mod,
    pow_mod,
    primitive_root,
)
from .residues import (
    ResidueSet,
    SgtCertificate,
    SolutionReduction,
    certify_sgt,
    check_nc,
    check_p_not_residue,
    consecutive_pair_from_solution,
    residues_bruteforce,
    residues_subgroup,
)
from .search import (
    LegendreRow,
    NoAuxiliaryFound,
    ScanReport,
    candidates,
    legendre_table,
    nc_frontier,
    scan_nc,
    smallest_auxiliary,
    verify_row,
)
from .bounds import SizeBound, digits, size_lower_bound
