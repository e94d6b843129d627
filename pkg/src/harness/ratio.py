"""
Approximation-ratio checks against a known or computed optimum.
"""

from typing import Optional

from evolutionary.records import Ratio, ratio_limit
from exceptions import InfeasibleSolutionError
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, component_count
from oracle.exact import DEFAULT_K_LIMIT, brute_force_opt


def check_ratio(g: LabeledGraph, solution: LabelSubset, r: Ratio,
                opt: Optional[int] = None, k_limit: int = DEFAULT_K_LIMIT) -> bool:
    """
    True iff |solution| <= ceil(r * OPT).

    Args:
        g: The instance
        solution: A feasible label subset
        r: Approximation ratio, exact for ints, strings like '3/2' and Fractions
        opt: Known optimum; brute-forced when None
        k_limit: Largest k the oracle accepts

    Raises:
        InfeasibleSolutionError: If solution is not feasible
        TooManyLabelsError: If OPT must be computed and k > k_limit
    """
    components = component_count(g, solution)
    if components != 1:
        raise InfeasibleSolutionError(f"Labels {solution} leave {components} components")
    if opt is None:
        opt = brute_force_opt(g, k_limit).opt_value
    return len(solution) <= ratio_limit(r, opt)
