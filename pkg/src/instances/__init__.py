"""Adversarial and random MLST instances with their known optima."""

from instances.bundle import (
    FAMILIES,
    G1,
    G2,
    G3,
    G_PRIME,
    RANDOM_B,
    InstanceBundle,
    LocalOptimum,
)
from instances.generators import (
    TRAPS_2SWITCH,
    TRAPS_EA,
    TRAPS_ERA,
    check_g2_properties,
    g3_label_blocks,
    gen_g1,
    gen_g2,
    gen_g3,
    gen_g_prime,
    gen_random_mlst_b,
)
from instances.instance_store import (
    load_bundle,
    load_instance,
    save_bundle,
    save_instance,
    sidecar_path,
)

__all__ = [
    'FAMILIES',
    'G1',
    'G2',
    'G3',
    'G_PRIME',
    'RANDOM_B',
    'InstanceBundle',
    'LocalOptimum',
    'TRAPS_2SWITCH',
    'TRAPS_EA',
    'TRAPS_ERA',
    'check_g2_properties',
    'g3_label_blocks',
    'gen_g1',
    'gen_g2',
    'gen_g3',
    'gen_g_prime',
    'gen_random_mlst_b',
    'load_bundle',
    'load_instance',
    'save_bundle',
    'save_instance',
    'sidecar_path',
]
