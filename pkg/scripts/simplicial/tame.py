from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping
from sympy.combinatorics import Permutation
from scripts.groups.permutations import preimage
from scripts.simplicial import NormalKind
from scripts.simplicial.differences import Difference, canonical_difference, check_difference
from scripts.simplicial.simplices import is_simplex, make_simplex, normalize_simplex
from scripts.torus import LatticeClass
from scripts.torus.automorphisms import TorusAutomorphism, aut_apply
from scripts.torus.points import Configuration
from scripts.torus.ring import RingElement, is_unit, marker, marker_group, ring_mul


class NotASimplexError(ValueError):
    ''' The image of the probe simplex is not a simplex of the difference complex '''


@dataclass(frozen=True)
class TameDescriptor:
    permutation: Permutation
    marker: int
    kind: NormalKind


def _check_tame_data(lattice: LatticeClass, unit: RingElement, sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError(f"Sign must be +1 or -1, got {sign}")
    if not is_unit(lattice, unit):
        raise ValueError(f"{unit} is not a unit of the {lattice.value} ring")


def induced_vertex_map(
    lattice: LatticeClass, n: int, permutation: Permutation, unit: RingElement, sign: int, vertex: Difference
) -> Difference:
    ''' Pullback of e_{m;i,j} along q -> sigma(±u·q + c): the vertex (±m·u)(q_{sigma^-1(i)} - q_{sigma^-1(j)}) '''
    _check_tame_data(lattice, unit, sign)
    check_difference(lattice, vertex)
    if permutation.size != n:
        raise ValueError(f"Permutation acts on {permutation.size} points, expected {n}")
    coefficient = ring_mul(lattice, unit.scale(sign), marker(lattice, vertex.marker))
    return canonical_difference(lattice, coefficient, preimage(permutation, vertex.i), preimage(permutation, vertex.j))


def probe_simplex(n: int) -> tuple[Difference, ...]:
    ''' The top normal simplex with marker 1 '''
    return tuple(Difference(0, 1, j) for j in range(2, n + 1))


def tame_descriptor(n: int, lattice: LatticeClass, images: Mapping[Difference, Difference]) -> TameDescriptor:
    """
    Recovers (permutation, marker, Delta/Nabla) from the images of the probe
    simplex under a simplicial map. The permutation is only determined up to
    the stabilizer of the normal form, the permutations fixing 1.
    """
    probe = probe_simplex(n)
    if set(images) != set(probe):
        raise ValueError(f"Images must be given for exactly {[str(v) for v in probe]}")
    values = [check_difference(lattice, images[vertex]) for vertex in probe]
    if len(set(values)) != len(values):
        raise ValueError("Images of distinct probe vertices coincide; the map does not preserve dimension")
    if not is_simplex(lattice, values):
        raise NotASimplexError(f"{[str(v) for v in values]} is not a simplex")
    form = normalize_simplex(make_simplex(values), n, lattice)
    return TameDescriptor(form.permutation, form.marker, form.kind)


def expected_descriptor(lattice: LatticeClass, unit: RingElement, sign: int) -> tuple[int, NormalKind]:
    ''' Marker and form a tame map with data (±u) must produce; Delta iff sign·u is canonical '''
    _check_tame_data(lattice, unit, sign)
    coefficient = unit.scale(sign)
    form = NormalKind.DELTA if coefficient in marker_group(lattice).canonical else NormalKind.NABLA
    return canonical_difference(lattice, coefficient, 1, 2).marker, form


def agrees_up_to_stabilizer(recovered: Permutation, permutation: Permutation) -> bool:
    ''' recovered·sigma^-1 fixes 1, i.e. recovered(sigma^-1(1)) = 1 '''
    return recovered.array_form[preimage(permutation, 1) - 1] == 0


def tame_configuration_map(
    lattice: LatticeClass, permutation: Permutation, automorphism: TorusAutomorphism, configuration: Configuration
) -> Configuration:
    ''' f(q) = sigma(A·q), whose k-th point is A·q_{sigma^-1(k)} '''
    moved = aut_apply(lattice, automorphism, configuration)
    return Configuration(tuple(moved.point(preimage(permutation, k)) for k in range(1, len(configuration) + 1)))
