from __future__ import annotations

from dataclasses import dataclass, field, replace
from sympy.combinatorics import Permutation, PermutationGroup
from settings import logging
from scripts.groups.words import Presentation, Word

# Permutations are sympy objects on 0..n-1; everything user facing is 1-based.
# Products follow sympy: p*q applies p first, so words are evaluated left to right.


def identity(degree: int) -> Permutation:
    return Permutation(list(range(degree)))


def transposition(degree: int, i: int, j: int) -> Permutation:
    ''' The swap (i j) on 1..degree '''
    if not (1 <= i <= degree and 1 <= j <= degree) or i == j:
        raise ValueError(f"Invalid transposition ({i} {j}) on {degree} points")
    return Permutation(i - 1, j - 1, size=degree)


def from_one_line(images: list[int]) -> Permutation:
    ''' Builds a permutation from its 1-based one-line notation [p(1), ..., p(n)] '''
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
    return Permutation([value - 1 for value in images])


def one_line(permutation: Permutation) -> list[int]:
    return [value + 1 for value in permutation.array_form]


def image(permutation: Permutation, point: int) -> int:
    return permutation.array_form[point - 1] + 1


def preimage(permutation: Permutation, point: int) -> int:
    return image(~permutation, point)


def cycle_notation(permutation: Permutation) -> str:
    cycles = permutation.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(point + 1) for point in cycle) + ")" for cycle in cycles)


@dataclass(frozen=True)
class PermHomomorphism:
    ''' Assignment of a permutation of 1..degree to every generator of a presentation '''
    domain: Presentation
    degree: int
    images: tuple[Permutation, ...]
    verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.images) != self.domain.rank:
            raise ValueError(f"Got {len(self.images)} images for {self.domain.rank} generators")
        for name, permutation in zip(self.domain.names, self.images):
            if permutation.size != self.degree:
                raise ValueError(f"Image of {name} acts on {permutation.size} points, expected {self.degree}")

    def image_of(self, name: str) -> Permutation:
        return self.images[self.domain.index(name)]

    def image_group(self) -> PermutationGroup:
        return PermutationGroup(list(self.images))


@dataclass(frozen=True)
class HomomorphismCheck:
    violations: tuple[int, ...]
    order: int | None = None
    transitive: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def evaluate_perm(homomorphism: PermHomomorphism, word: Word) -> Permutation:
    ''' Evaluates a word letter by letter from the left '''
    if word.max_generator() >= homomorphism.domain.rank:
        raise ValueError(f"Word uses generator {word.max_generator()} outside rank {homomorphism.domain.rank}")
    result = identity(homomorphism.degree)
    for generator, exponent in word:
        permutation = homomorphism.images[generator]
        result = result * (permutation if exponent == 1 else ~permutation)
    return result


def verify_perm_hom(homomorphism: PermHomomorphism) -> HomomorphismCheck:
    violations = tuple(
        index
        for index, word in enumerate(homomorphism.domain.relators)
        if not evaluate_perm(homomorphism, word).is_Identity
    )
    if violations:
        logging.warning(f"Relators {list(violations)} do not map to the identity")
        return HomomorphismCheck(violations)
    group = homomorphism.image_group()
    return HomomorphismCheck((), order=int(group.order()), transitive=bool(group.is_transitive()))


def verified(homomorphism: PermHomomorphism) -> PermHomomorphism:
    ''' Returns the homomorphism flagged as verified, or raises listing the violated relators '''
    if homomorphism.verified:
        return homomorphism
    check = verify_perm_hom(homomorphism)
    if not check.ok:
        raise ValueError(f"Not a homomorphism: relators {list(check.violations)} are violated")
    return replace(homomorphism, verified=True)
