from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping
from scripts.groups import RESERVED_CHARACTERS

# A letter is (generator index, exponent) with exponent +1 or -1
Letter = tuple[int, int]


@dataclass(frozen=True)
class Generator:
    name: str

    def __post_init__(self):
        if not self.name or any(char in RESERVED_CHARACTERS for char in self.name):
            raise ValueError(f"Invalid generator name {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Word:
    ''' A freely reduced word; build it with free_reduce '''
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for index, (generator, exponent) in enumerate(self.letters):
            if exponent not in (1, -1) or generator < 0:
                raise ValueError(f"Invalid letter {(generator, exponent)} at position {index}")
            if index and self.letters[index - 1] == (generator, -exponent):
                raise ValueError(f"Word is not freely reduced at position {index}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        return free_reduce(self.letters + other.letters)

    def __pow__(self, exponent: int) -> Word:
        base = self if exponent >= 0 else self.inverse()
        return free_reduce(base.letters * abs(exponent))

    def inverse(self) -> Word:
        return Word(tuple((generator, -exponent) for generator, exponent in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def max_generator(self) -> int:
        return max((generator for generator, _ in self.letters), default=-1)


def free_reduce(letters: Iterable[Letter], rank: int | None = None) -> Word:
    """
    Cancels adjacent inverse pairs with a stack until none remain.
    When rank is given every generator index must lie in range(rank).
    """
    stack: list[Letter] = []
    for generator, exponent in letters:
        if exponent not in (1, -1):
            raise ValueError(f"Exponent must be +1 or -1, got {exponent}")
        if generator < 0 or (rank is not None and generator >= rank):
            raise ValueError(f"Generator index {generator} out of range for rank {rank}")
        if stack and stack[-1] == (generator, -exponent):
            stack.pop()
        else:
            stack.append((generator, exponent))
    return Word(tuple(stack))


def letter(generator: int, exponent: int = 1) -> Word:
    return Word(((generator, exponent),))


def product(words: Iterable[Word]) -> Word:
    letters: list[Letter] = []
    for word in words:
        letters.extend(word.letters)
    return free_reduce(letters)


def commutator(left: Word, right: Word) -> Word:
    return product([left, right, left.inverse(), right.inverse()])


def relator(left: Word, right: Word) -> Word:
    ''' Emits the relation left = right as the relator left * right^-1 '''
    return left * right.inverse()


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Generator, ...]
    relators: tuple[Word, ...] = ()
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        names = [generator.name for generator in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate generator names in {names}")
        for index, word in enumerate(self.relators):
            if word.max_generator() >= self.rank:
                raise ValueError(f"Relator {index} uses a generator outside rank {self.rank}")
        if self.labels and len(self.labels) != len(self.relators):
            raise ValueError(f"Got {len(self.labels)} labels for {len(self.relators)} relators")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> list[str]:
        return [generator.name for generator in self.generators]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"Unknown generator {name!r}") from None

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else ""

    def word(self, *tokens: tuple[str, int]) -> Word:
        ''' Builds a word from (name, exponent) pairs '''
        return free_reduce(((self.index(name), exponent) for name, exponent in tokens), self.rank)


def presentation(names: Iterable[str], relators: Iterable[Word] = (), labels: Iterable[str] = ()) -> Presentation:
    return Presentation(tuple(Generator(name) for name in names), tuple(relators), tuple(labels))


def substitute(word: Word, images: Mapping[int, Word] | list[Word]) -> Word:
    ''' Replaces every generator by its image word, inverting for negative exponents '''
    letters: list[Letter] = []
    for generator, exponent in word:
        image = images[generator]
        letters.extend(image.letters if exponent == 1 else image.inverse().letters)
    return free_reduce(letters)


def exponent_sums(word: Word, rank: int) -> list[int]:
    sums = [0] * rank
    for generator, exponent in word:
        sums[generator] += exponent
    return sums

