"""Exact eta-invariants of orientable flat Seifert fibered 3-manifolds,
integrality obstructions to geometric bounding, and hyperbolic
4-manifold volume <-> Euler characteristic conversion.

All public values are exact (arbitrary-precision rationals or cyclotomic
field elements); floating point appears only in decimal renderings.
"""

from .cyclotomic import (
    CyclotomicElement,
    Rational,
    cot_exact,
    cyclotomic_polynomial,
    rational_normalize,
    root_of_unity,
)
from .dedekind import dedekind_cot, dedekind_sawtooth, sawtooth
from .errors import (
    AmbiguousToleranceError,
    CertificationError,
    DescriptorSyntaxError,
    DomainError,
    FlatEtaError,
    NoLatticePointError,
    NotFlatError,
    ObstructionError,
    PoleError,
    UsageError,
    ValidationError,
)
from .eta import (
    MULTI_CUSP_NOTE,
    EtaResult,
    ObstructionReport,
    eta_flat,
    is_integral,
    obstruction_report,
    predicted_signature,
)
from .gaussbonnet import (
    LATTICE_COEFFICIENT,
    VolumeValue,
    chi_from_volume,
    doubled_euler,
    volume_from_chi,
)
from .seifert import (
    BaseSurface,
    CatalogEntry,
    FiberPair,
    SeifertData,
    euler_number,
    flat_catalog,
    is_flat,
    orbifold_euler_characteristic,
    validate,
)
from .cli import parse_descriptor, render_descriptor, run

__version__ = "0.1.0"

__all__ = [
    "AmbiguousToleranceError",
    "BaseSurface",
    "CatalogEntry",
    "CertificationError",
    "CyclotomicElement",
    "DescriptorSyntaxError",
    "DomainError",
    "EtaResult",
    "FiberPair",
    "FlatEtaError",
    "LATTICE_COEFFICIENT",
    "MULTI_CUSP_NOTE",
    "NoLatticePointError",
    "NotFlatError",
    "ObstructionError",
    "ObstructionReport",
    "PoleError",
    "Rational",
    "SeifertData",
    "UsageError",
    "ValidationError",
    "VolumeValue",
    "chi_from_volume",
    "cot_exact",
    "cyclotomic_polynomial",
    "dedekind_cot",
    "dedekind_sawtooth",
    "doubled_euler",
    "eta_flat",
    "euler_number",
    "flat_catalog",
    "is_flat",
    "is_integral",
    "obstruction_report",
    "orbifold_euler_characteristic",
    "parse_descriptor",
    "predicted_signature",
    "rational_normalize",
    "render_descriptor",
    "root_of_unity",
    "run",
    "sawtooth",
    "validate",
    "volume_from_chi",
]
