"""Exact spectra, spectral topologies and pointwise localization for finite commutative rings."""

from .expr import ParseError, build_ring
from .pointwise import full_pointwise_ring, pointwise_localization, universal_property_check, verify_stalks
from .ring import (
    ConsistencyError,
    FiniteRing,
    Ideal,
    RingHom,
    SearchBudgetError,
    SizeBoundError,
    enumerate_homs,
    idempotent_generator,
    is_absolutely_flat,
    pointwise_inverse,
    ring_product,
    ring_zmod,
)
from .spectrum import spec, spec_bruteforce_oracle
from .theorems import Theorem2Report, corollary9_check, run_corpus, section2_suite, theorem2_report
from .topology import FiniteTopology, SpectralPoset, flat_topology, patch_topology, zariski_topology

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "FiniteRing", "FiniteTopology", "Ideal", "ParseError", "RingHom",
    "SearchBudgetError", "SizeBoundError", "SpectralPoset", "Theorem2Report",
    "build_ring", "corollary9_check", "enumerate_homs", "flat_topology", "full_pointwise_ring",
    "idempotent_generator", "is_absolutely_flat", "patch_topology", "pointwise_inverse",
    "pointwise_localization", "ring_product", "ring_zmod", "run_corpus", "section2_suite", "spec",
    "spec_bruteforce_oracle", "theorem2_report", "universal_property_check", "verify_stalks",
    "zariski_topology",
]
