from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
import networkx as nx
from sympy.combinatorics import Permutation
from tqdm import tqdm
from settings import SHOW_PROGRESS, logging
from scripts.groups.permutations import from_one_line
from scripts.simplicial import EdgeSource, NormalKind
from scripts.simplicial.differences import (
    Difference, check_difference, proper_remainder_oracle, proper_remainder_rule, vertex_set,
)
from scripts.torus import LatticeClass
from scripts.torus.ring import marker_group

# A simplex is a sorted tuple of pairwise adjacent vertices
Simplex = tuple[Difference, ...]


def make_simplex(vertices) -> Simplex:
    simplex = tuple(sorted(set(vertices)))
    if not simplex:
        raise ValueError("A simplex needs at least one vertex")
    return simplex


def adjacent(lattice: LatticeClass, first: Difference, second: Difference, source: EdgeSource = EdgeSource.ORACLE) -> bool:
    if source == EdgeSource.RULE:
        return proper_remainder_rule(first, second)
    return proper_remainder_oracle(lattice, first, second) is not None


def is_simplex(lattice: LatticeClass, vertices, source: EdgeSource = EdgeSource.ORACLE) -> bool:
    return all(adjacent(lattice, first, second, source) for first, second in combinations(make_simplex(vertices), 2))


@lru_cache(maxsize=None)
def proper_remainder_graph(n: int, lattice: LatticeClass, source: EdgeSource = EdgeSource.ORACLE) -> nx.Graph:
    ''' 1-skeleton of the difference complex; cached, callers must not mutate it '''
    vertices = vertex_set(n, lattice)
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(
        (first, second)
        for first, second in combinations(vertices, 2)
        if adjacent(lattice, first, second, source)
    )
    logging.info(f"Proper-remainder graph n={n} {lattice.value} ({source.value}): "
                 f"{graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges")
    return graph


def enumerate_simplices(n: int, lattice: LatticeClass, dimension: int, source: EdgeSource = EdgeSource.ORACLE) -> list[Simplex]:
    ''' All simplices of the flag complex with dimension+1 vertices, in canonical order '''
    if dimension < 0:
        return []
    graph = proper_remainder_graph(n, lattice, source)
    found = []
    for clique in nx.enumerate_all_cliques(graph):
        if len(clique) > dimension + 1:
            break
        if len(clique) == dimension + 1:
            found.append(make_simplex(clique))
    return sorted(found)


def max_dimension(n: int, lattice: LatticeClass, source: EdgeSource = EdgeSource.ORACLE) -> int:
    return max(len(clique) for clique in nx.find_cliques(proper_remainder_graph(n, lattice, source))) - 1


# ─────────────────────────────────────────────────────────────
# SYMMETRIC GROUP ACTION
# ─────────────────────────────────────────────────────────────

def sn_act(permutation: Permutation, target: Difference | Simplex, n: int | None = None):
    ''' sigma·e_{m;i,j} = e_{m;sigma(i),sigma(j)}, extended to simplices vertexwise; sigma must have degree n when n is given '''
    if n is not None and permutation.size != n:
        raise ValueError(f"Permutation of degree {permutation.size} cannot act on vertices for n={n}")
    if isinstance(target, Difference):
        if max(target.i, target.j) > permutation.size:
            raise ValueError(f"{target} has an index beyond the permutation degree {permutation.size}")
        image = permutation.array_form
        return Difference(target.marker, image[target.i - 1] + 1, image[target.j - 1] + 1)
    return make_simplex(sn_act(permutation, vertex) for vertex in target)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(list(images)) for images in permutations(range(n)))


def normal_simplices(n: int, lattice: LatticeClass, dimension: int) -> list[Simplex]:
    """
    Delta^s_m = {e_{m;1,2}, ..., e_{m;1,s+2}} and Nabla^s_m = {e_{m;2,1}, ..., e_{m;s+2,1}}.
    In dimension 0 only Delta is normal.
    """
    if not 0 <= dimension <= n - 2:
        return []
    normals = []
    for k in range(len(marker_group(lattice).canonical)):
        normals.append(make_simplex(Difference(k, 1, j) for j in range(2, dimension + 3)))
        if dimension > 0:
            normals.append(make_simplex(Difference(k, j, 1) for j in range(2, dimension + 3)))
    return sorted(normals)


@dataclass(frozen=True)
class Orbit:
    representative: Simplex
    size: int
    normal: tuple[Simplex, ...]


@dataclass(frozen=True)
class OrbitReport:
    n: int
    lattice: LatticeClass
    dimension: int
    orbits: tuple[Orbit, ...]
    total: int

    @property
    def expected_count(self) -> int:
        units = len(marker_group(self.lattice))
        return units if self.dimension > 0 else units // 2


def orbit_classify(n: int, lattice: LatticeClass, dimension: int, source: EdgeSource = EdgeSource.ORACLE) -> OrbitReport:
    """
    Splits the simplices of one dimension into S_n-orbits. Representatives are
    orbit minima in canonical order; each orbit lists the normal simplices it holds.
    """
    simplices = enumerate_simplices(n, lattice, dimension, source)
    normals = set(normal_simplices(n, lattice, dimension))
    group = symmetric_group(n)
    seen: set[Simplex] = set()
    orbits = []
    for simplex in tqdm(simplices, desc=f"Orbits of {dimension}-simplices", disable=not SHOW_PROGRESS):
        if simplex in seen:
            continue
        orbit = {sn_act(permutation, simplex, n) for permutation in group}
        seen |= orbit
        orbits.append(Orbit(min(orbit), len(orbit), tuple(sorted(orbit & normals))))
    report = OrbitReport(n, lattice, dimension, tuple(orbits), len(simplices))
    logging.info(f"n={n} {lattice.value} dimension {dimension}: {len(simplices)} simplices in {len(orbits)} orbits")
    return report


# ─────────────────────────────────────────────────────────────
# NORMAL FORMS
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class NormalForm:
    permutation: Permutation
    kind: NormalKind
    marker: int
    dimension: int

    def simplex(self) -> Simplex:
        last = self.dimension + 3
        if self.kind == NormalKind.DELTA:
            return make_simplex(Difference(self.marker, 1, j) for j in range(2, last))
        return make_simplex(Difference(self.marker, j, 1) for j in range(2, last))


def normalize_simplex(simplex: Simplex, n: int, lattice: LatticeClass | None = None) -> NormalForm:
    """
    Lexicographically smallest sigma (one-line notation) with sigma·simplex normal.
    sigma sends the shared index to 1, the other support indices into 2..s+2 and
    the rest into s+3..n, each index taking the least free value of its block.
    """
    simplex = make_simplex(simplex)
    if lattice:
        for vertex in simplex:
            check_difference(lattice, vertex)
    if len({vertex.marker for vertex in simplex}) != 1:
        raise ValueError(f"Mixed markers in {[str(v) for v in simplex]}; only single-marker simplices have normal forms")
    if max(max(vertex.i, vertex.j) for vertex in simplex) > n:
        raise ValueError(f"Simplex uses indices beyond n={n}")
    dimension = len(simplex) - 1
    if len({vertex.i for vertex in simplex}) == 1:
        kind, shared, others = NormalKind.DELTA, simplex[0].i, {vertex.j for vertex in simplex}
    elif len({vertex.j for vertex in simplex}) == 1:
        kind, shared, others = NormalKind.NABLA, simplex[0].j, {vertex.i for vertex in simplex}
    else:
        raise ValueError(f"{[str(v) for v in simplex]} shares no index across all vertices")

    free = {"shared": [1], "support": list(range(2, dimension + 3)), "rest": list(range(dimension + 3, n + 1))}
    images = []
    for index in range(1, n + 1):
        block = "shared" if index == shared else "support" if index in others else "rest"
        images.append(free[block].pop(0))
    return NormalForm(from_one_line(images), kind, simplex[0].marker, dimension)

