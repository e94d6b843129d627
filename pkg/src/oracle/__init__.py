"""Exact optimum and exhaustive verifiers for desk-scale instances."""

from oracle.exact import (
    COROLLARY_K_LIMIT,
    DEFAULT_K_LIMIT,
    HalvingResult,
    OracleResult,
    SwitchCheckResult,
    brute_force_opt,
    verify_component_halving,
    verify_corollary_1,
)

__all__ = [
    'COROLLARY_K_LIMIT',
    'DEFAULT_K_LIMIT',
    'HalvingResult',
    'OracleResult',
    'SwitchCheckResult',
    'brute_force_opt',
    'verify_component_halving',
    'verify_corollary_1',
]
