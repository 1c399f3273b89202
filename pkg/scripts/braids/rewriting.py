from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from tqdm import tqdm
from sympy.combinatorics import Permutation
from settings import DEGREE_BOUND, SHOW_PROGRESS, logging
from scripts.groups.permutations import PermHomomorphism, identity
from scripts.groups.smith import AbelianInvariants, abelian_invariants
from scripts.groups.words import Generator, Letter, Presentation, Word, free_reduce, substitute


class TransversalStrategy(Enum):
    BFS = "bfs"
    DFS = "dfs"


# ─────────────────────────────────────────────────────────────
# COSET TABLE
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class CosetTable:
    """
    Right action of the generators on the cosets of a kernel, one row per coset.
    Coset 0 is the kernel itself; action[c][g] is the coset of (coset c)·g.
    """
    presentation: Presentation
    action: tuple[tuple[int, ...], ...]
    inverse_action: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.action)

    def act(self, coset: int, step: Letter) -> int:
        generator, exponent = step
        return (self.action if exponent == 1 else self.inverse_action)[coset][generator]

    def trace(self, coset: int, word: Word) -> int:
        for step in word:
            coset = self.act(coset, step)
        return coset


def image_elements(homomorphism: PermHomomorphism, bound: int = DEGREE_BOUND) -> list[Permutation]:
    ''' Elements of the image group in breadth-first order from the identity over the generator images '''
    order = int(homomorphism.image_group().order())
    if order > bound:
        raise ValueError(f"Image group of order {order} exceeds the degree bound {bound}")
    elements = [identity(homomorphism.degree)]
    seen = {elements[0]}
    queue = deque(elements)
    while queue:
        element = queue.popleft()
        for permutation in homomorphism.images:
            if (candidate := element * permutation) not in seen:
                seen.add(candidate)
                elements.append(candidate)
                queue.append(candidate)
    return elements


def regular_coset_table(p: Presentation, homomorphism: PermHomomorphism, bound: int = DEGREE_BOUND) -> CosetTable:
    """
    Coset table of the kernel of a verified homomorphism onto a finite permutation
    group: cosets are the image elements, generators act by right multiplication.
    """
    if not homomorphism.verified:
        raise ValueError("Coset tables need a verified homomorphism")
    if homomorphism.domain != p:
        raise ValueError("Homomorphism is defined on a different presentation")

    elements = image_elements(homomorphism, bound)
    position = {element: index for index, element in enumerate(elements)}
    action = tuple(
        tuple(position[element * permutation] for permutation in homomorphism.images)
        for element in elements
    )
    inverse_action = tuple(
        tuple(position[element * ~permutation] for permutation in homomorphism.images)
        for element in elements
    )
    table = CosetTable(p, action, inverse_action)

    for coset in range(table.degree):
        for index, word in enumerate(p.relators):
            if table.trace(coset, word) != coset:
                raise ValueError(f"Relator {index} does not close at coset {coset}")
    logging.info(f"Coset table of degree {table.degree} over {p.rank} generators")
    return table


# ─────────────────────────────────────────────────────────────
# SCHREIER TRANSVERSAL
# ─────────────────────────────────────────────────────────────

def _letter_order(rank: int) -> list[Letter]:
    return [(generator, exponent) for generator in range(rank) for exponent in (1, -1)]


def schreier_transversal(table: CosetTable, strategy: TransversalStrategy = TransversalStrategy.BFS) -> list[Word]:
    """
    Prefix-closed coset representatives, representative 0 empty.
    BFS gives shortlex-minimal representatives; DFS follows the same letter order depth first.
    """
    letters = _letter_order(table.presentation.rank)
    representatives: list[Word | None] = [None] * table.degree
    representatives[0] = Word()

    if strategy == TransversalStrategy.BFS:
        queue = deque([0])
        while queue:
            coset = queue.popleft()
            for step in letters:
                target = table.act(coset, step)
                if representatives[target] is None:
                    representatives[target] = free_reduce(representatives[coset].letters + (step,))
                    queue.append(target)
    else:
        stack = [(0, iter(letters))]
        while stack:
            coset, pending = stack[-1]
            for step in pending:
                target = table.act(coset, step)
                if representatives[target] is None:
                    representatives[target] = free_reduce(representatives[coset].letters + (step,))
                    stack.append((target, iter(letters)))
                    break
            else:
                stack.pop()

    if any(word is None for word in representatives):
        raise ValueError("Coset table is not connected")
    return representatives


# ─────────────────────────────────────────────────────────────
# REIDEMEISTER-SCHREIER
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SubgroupPresentation:
    ''' Kernel presentation on the nontrivial Schreier generators, tagged with its base presentation and transversal '''
    presentation: Presentation
    schreier_words: tuple[Word, ...]
    representatives: tuple[Word, ...]
    rewritten_count: int
    empty_count: int
    base: Presentation
    strategy: TransversalStrategy

    @property
    def degree(self) -> int:
        return len(self.representatives)


def schreier_generators(table: CosetTable, representatives: list[Word]) -> dict[tuple[int, int], Word]:
    ''' x_{c,g} = rep(c)·g·rep(c·g)^-1 for every pair whose word is not freely trivial, in (coset, generator) order '''
    generators = {}
    for coset in range(table.degree):
        for generator in range(table.presentation.rank):
            target = table.act(coset, (generator, 1))
            word = free_reduce(
                representatives[coset].letters + ((generator, 1),) + representatives[target].inverse().letters
            )
            if not word.is_identity():
                generators[(coset, generator)] = word
    return generators


def _rewrite(table: CosetTable, coset: int, word: Word, index: dict[tuple[int, int], int]) -> Word:
    letters = []
    for generator, exponent in word:
        if exponent == 1:
            if (key := (coset, generator)) in index:
                letters.append((index[key], 1))
            coset = table.action[coset][generator]
        else:
            coset = table.inverse_action[coset][generator]
            if (key := (coset, generator)) in index:
                letters.append((index[key], -1))
    return free_reduce(letters)


def rewrite_subgroup_presentation(
    table: CosetTable,
    strategy: TransversalStrategy = TransversalStrategy.BFS,
    simplify: bool = False,
) -> SubgroupPresentation:
    """
    Rewrites every relator conjugated to every coset in the Schreier generators.
    Relators are ordered by (coset, base relator); the ones that reduce to the
    empty word are dropped and counted.
    """
    base = table.presentation
    representatives = schreier_transversal(table, strategy)
    generators = schreier_generators(table, representatives)
    index = {key: position for position, key in enumerate(generators)}
    names = [f"{base.names[generator]}_{coset}" for coset, generator in generators]

    relators, empty = [], 0
    pairs = [(coset, word) for coset in range(table.degree) for word in base.relators]
    for coset, word in tqdm(pairs, desc="Rewriting relators", disable=not SHOW_PROGRESS):
        rewritten = _rewrite(table, coset, word, index)
        if rewritten.is_identity():
            empty += 1
        else:
            relators.append(rewritten)

    subgroup = Presentation(tuple(Generator(name) for name in names), tuple(relators))
    result = SubgroupPresentation(
        subgroup, tuple(generators.values()), tuple(representatives), len(pairs), empty, base, strategy
    )
    logging.info(f"Schreier rewriting: {len(names)} generators, {len(relators)} relators ({empty} empty)")
    return simplify_presentation(result) if simplify else result


def simplify_presentation(subgroup: SubgroupPresentation) -> SubgroupPresentation:
    ''' Deletes generators killed by relators of length one, repeatedly '''
    p = subgroup.presentation
    words = list(subgroup.schreier_words)
    names = p.names
    relators = list(p.relators)

    while killed := sorted({word.letters[0][0] for word in relators if len(word) == 1}):
        survivors = [g for g in range(len(names)) if g not in killed]
        renumber = {old: new for new, old in enumerate(survivors)}
        images = {g: (Word() if g in killed else Word(((renumber[g], 1),))) for g in range(len(names))}
        relators = [word for word in (substitute(word, images) for word in relators) if not word.is_identity()]
        names = [names[g] for g in survivors]
        words = [words[g] for g in survivors]
        logging.debug(f"Simplification removed {len(killed)} generators")

    simplified = Presentation(tuple(Generator(name) for name in names), tuple(relators))
    return SubgroupPresentation(
        simplified, tuple(words), subgroup.representatives, subgroup.rewritten_count, subgroup.empty_count,
        subgroup.base, subgroup.strategy,
    )


def expand_word(subgroup: SubgroupPresentation, word: Word) -> Word:
    ''' Writes a word in the Schreier generators back in the base generators '''
    return substitute(word, list(subgroup.schreier_words))


def kernel_abelianization(
    p: Presentation,
    homomorphism: PermHomomorphism,
    strategy: TransversalStrategy = TransversalStrategy.BFS,
    bound: int = DEGREE_BOUND,
) -> AbelianInvariants:
    table = regular_coset_table(p, homomorphism, bound)
    subgroup = rewrite_subgroup_presentation(table, strategy)
    return abelian_invariants(subgroup.presentation)
