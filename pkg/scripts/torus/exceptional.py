from __future__ import annotations

from dataclasses import dataclass
from scripts.torus import LatticeClass
from scripts.torus.points import Configuration, endo_kernel, point_order
from scripts.torus.ring import RingElement, elements_up_to_norm, is_reduced_associate, ring_norm


@dataclass(frozen=True)
class ExceptionalWitness:
    ''' alpha collapses q_i and q_j and its kernel translated to q_i stays inside the configuration '''
    i: int
    j: int
    alpha: RingElement
    norm: int


def is_exceptional_necessary(lattice: LatticeClass, configuration: Configuration) -> bool:
    ''' Some difference q_j - q_i has order at most m '''
    m = len(configuration)
    return any(
        point_order(configuration[j] - configuration[i]) <= m
        for i in range(m)
        for j in range(m)
        if i != j
    )


def is_exceptional_exact(lattice: LatticeClass, configuration: Configuration) -> ExceptionalWitness | None:
    """
    Searches alpha with 2 <= norm(alpha) <= m, one per class of associates,
    by norm then (a, b). Associates share kernels, so nothing is lost.
    Indices in the witness are 1-based.
    """
    m = len(configuration)
    points = set(configuration)
    differences = {
        (i, j): configuration[j] - configuration[i]
        for i in range(m)
        for j in range(m)
        if i != j
    }
    for alpha in elements_up_to_norm(lattice, m, min_norm=2):
        if not is_reduced_associate(lattice, alpha):
            continue
        kernel = endo_kernel(lattice, alpha)
        members = set(kernel)
        for (i, j), difference in differences.items():
            if difference not in members:
                continue
            if all(shift + configuration[i] in points for shift in kernel):
                return ExceptionalWitness(i + 1, j + 1, alpha, ring_norm(lattice, alpha))
    return None
