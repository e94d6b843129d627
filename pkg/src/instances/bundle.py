"""
InstanceBundle: a generated graph plus what is known about its optima.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, component_count

G_PRIME = 'g-prime'
G1 = 'g1'
G2 = 'g2'
G3 = 'g3'
RANDOM_B = 'random-b'

FAMILIES = (G_PRIME, G1, G2, G3, RANDOM_B)


@dataclass(frozen=True)
class LocalOptimum:
    solution: LabelSubset
    trapped: str


@dataclass
class InstanceBundle:
    """
    Generated instance with family parameters, the known optimum (if any)
    and feasible local optima tagged with the algorithm they trap.
    """

    graph: LabeledGraph
    family: str
    params: Dict[str, Any]
    known_opt: Optional[Tuple[int, LabelSubset]] = None
    known_local_opts: List[LocalOptimum] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"Unknown instance family {self.family!r}")
        if self.known_opt is not None:
            value, witness = self.known_opt
            if len(witness) != value:
                raise ValueError(f"Optimum witness {witness} does not have {value} labels")
            if component_count(self.graph, witness) != 1:
                raise ValueError(f"Optimum witness {witness} is not feasible")
        for local in self.known_local_opts:
            if component_count(self.graph, local.solution) != 1:
                raise ValueError(f"Local optimum {local.solution} is not feasible")

    @property
    def opt_value(self) -> Optional[int]:
        return self.known_opt[0] if self.known_opt else None

    def local_optimum(self, trapped: Optional[str] = None) -> LabelSubset:
        """
        The first known local optimum, optionally the one trapping a given algorithm.

        Raises:
            LookupError: If none is known
        """
        for local in self.known_local_opts:
            if trapped is None or local.trapped == trapped:
                return local.solution
        raise LookupError(f"No known local optimum for {self.family} instance"
                          + (f" trapping {trapped}" if trapped else ''))

    def describe(self) -> str:
        g = self.graph
        text = f"{self.family} n={g.node_count} k={g.label_count} m={g.edge_count}"
        if self.known_opt:
            text += f" OPT={self.known_opt[0]}"
        return text

    def sidecar(self) -> Dict[str, Any]:
        """Metadata written next to the instance file."""
        data: Dict[str, Any] = {
            'family': self.family,
            'params': self.params,
            'known_opt': None,
            'local_optima': [
                {'bits': local.solution.bits(), 'trapped': local.trapped}
                for local in self.known_local_opts
            ],
            'metadata': self.metadata,
        }
        if self.known_opt:
            data['known_opt'] = {'value': self.known_opt[0], 'bits': self.known_opt[1].bits()}
        return data

    @classmethod
    def from_sidecar(cls, graph: LabeledGraph, data: Dict[str, Any]) -> 'InstanceBundle':
        known_opt = None
        if data.get('known_opt'):
            known_opt = (data['known_opt']['value'], LabelSubset.from_bits(data['known_opt']['bits']))
        return cls(
            graph=graph,
            family=data['family'],
            params=data.get('params', {}),
            known_opt=known_opt,
            known_local_opts=[
                LocalOptimum(LabelSubset.from_bits(entry['bits']), entry['trapped'])
                for entry in data.get('local_optima', [])
            ],
            metadata=data.get('metadata', {}),
        )
