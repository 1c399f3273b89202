from __future__ import annotations

import pytest
from scripts.simplicial.differences import Difference, evaluate_difference, vertex_set
from scripts.simplicial.simplices import proper_remainder_graph, symmetric_group
from scripts.simplicial.tame import (
    NotASimplexError, agrees_up_to_stabilizer, expected_descriptor, induced_vertex_map, probe_simplex,
    tame_configuration_map, tame_descriptor,
)
from scripts.torus import LatticeClass
from scripts.torus.automorphisms import TorusAutomorphism
from scripts.torus.points import random_configuration, random_point
from scripts.torus.ring import marker_group


@pytest.mark.parametrize("n", [3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_descriptor_recovers_the_tame_data(lattice, n):
    probe = probe_simplex(n)
    for permutation in symmetric_group(n):
        for unit in marker_group(lattice).units:
            for sign in (1, -1):
                images = {v: induced_vertex_map(lattice, n, permutation, unit, sign, v) for v in probe}
                descriptor = tame_descriptor(n, lattice, images)
                assert (descriptor.marker, descriptor.kind) == expected_descriptor(lattice, unit, sign)
                assert agrees_up_to_stabilizer(descriptor.permutation, permutation)


@pytest.mark.parametrize("lattice", [LatticeClass.GENERIC, LatticeClass.SQUARE])
@pytest.mark.parametrize("n", [4, pytest.param(5, marks=pytest.mark.slow)])
def test_induced_map_is_an_injective_simplicial_map(lattice, n):
    vertices = vertex_set(n, lattice)
    graph = proper_remainder_graph(n, lattice)
    for permutation in symmetric_group(n):
        for unit in marker_group(lattice).units:
            for sign in (1, -1):
                image = {v: induced_vertex_map(lattice, n, permutation, unit, sign, v) for v in vertices}
                assert len(set(image.values())) == len(vertices)
                assert all(graph.has_edge(image[first], image[second]) for first, second in graph.edges)


def test_induced_map_matches_the_configuration_map(lattice, rng):
    n = 4
    group = symmetric_group(n)
    for _ in range(10):
        configuration = random_configuration(rng, n, 12)
        permutation = group[rng.randrange(len(group))]
        units = marker_group(lattice).units
        automorphism = TorusAutomorphism(units[rng.randrange(len(units))], random_point(rng, 12))
        image = tame_configuration_map(lattice, permutation, automorphism, configuration)
        for vertex in vertex_set(n, lattice):
            pulled = induced_vertex_map(lattice, n, permutation, automorphism.unit, 1, vertex)
            assert evaluate_difference(lattice, vertex, image) == evaluate_difference(lattice, pulled, configuration)


def test_descriptor_errors():
    lattice = LatticeClass.GENERIC
    probe = probe_simplex(3)
    with pytest.raises(NotASimplexError):
        tame_descriptor(3, lattice, {probe[0]: Difference(0, 1, 2), probe[1]: Difference(0, 2, 3)})
    with pytest.raises(ValueError):
        tame_descriptor(3, lattice, {probe[0]: Difference(0, 1, 2), probe[1]: Difference(0, 1, 2)})
    with pytest.raises(ValueError):
        tame_descriptor(3, lattice, {probe[0]: Difference(0, 1, 2)})


def test_induced_map_validation():
    permutation = symmetric_group(3)[0]
    vertex = Difference(0, 1, 2)
    with pytest.raises(ValueError):
        induced_vertex_map(LatticeClass.SQUARE, 3, permutation, marker_group(LatticeClass.SQUARE).units[0], 2, vertex)
    with pytest.raises(ValueError):
        induced_vertex_map(LatticeClass.GENERIC, 4, permutation, marker_group(LatticeClass.GENERIC).units[0], 1, vertex)
