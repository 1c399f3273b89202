from dataclasses import dataclass

from settings import logging
from scripts.braids import *
from scripts.groups.permutations import PermHomomorphism, identity, transposition, verified
from scripts.groups.words import Presentation, Word, commutator, letter, presentation, product, relator


def sigma_names(n: int) -> list[str]:
    return [f"{SIGMA_PREFIX}{i}" for i in range(1, n)]


def _check_strands(n: int) -> None:
    if n < 2:
        raise ValueError(f"Braid groups need at least 2 strands, got n={n}")


def _artin_relators(n: int) -> tuple[list[Word], list[str]]:
    ''' Far commutation then braid relations; sigma_i is generator index i-1 '''
    s = lambda i: letter(i - 1)
    relators, labels = [], []
    for i in range(1, n):
        for j in range(i + 2, n):
            relators.append(commutator(s(i), s(j)))
            labels.append(f"{COMMUTE} s{i} s{j}")
    for i in range(1, n - 1):
        relators.append(relator(s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)))
        labels.append(f"{BRAID} s{i} s{i + 1}")
    return relators, labels


def artin_presentation(n: int) -> Presentation:
    _check_strands(n)
    relators, labels = _artin_relators(n)
    return presentation(sigma_names(n), relators, labels)


def zariski_presentation(n: int) -> Presentation:
    """
    Braid group of the torus on generators s1..s{n-1}, a1, a2.

    Besides the Artin relations: s_i commutes with a1 and a2 for i = 2..n-1,
    (s1^-1 a_k)^2 = (a_k s1^-1)^2, the long relation
    s1..s{n-2} s{n-1}^2 s{n-2}..s1 = a1 a2^-1 a1^-1 a2, and the twist
    a2 s1^-1 a1^-1 s1 a2^-1 s1^-1 a1 s1 = s1^2.
    Each relation L = R is stored as the reduced word L R^-1.
    """
    _check_strands(n)
    relators, labels = _artin_relators(n)
    s = lambda i: letter(i - 1)
    a = lambda k: letter(n - 2 + k)
    inv = lambda word: word.inverse()

    for k in (1, 2):
        for i in range(2, n):
            relators.append(relator(s(i) * a(k), a(k) * s(i)))
            labels.append(f"{COMMUTE_LOOP} s{i} a{k}")

    for k in (1, 2):
        relators.append(relator((inv(s(1)) * a(k)) ** 2, (a(k) * inv(s(1))) ** 2))
        labels.append(f"{SQUARE} a{k}")

    ascending = product(s(i) for i in range(1, n - 1))
    relators.append(relator(
        product([ascending, s(n - 1) ** 2, product(s(i) for i in range(n - 2, 0, -1))]),
        product([a(1), inv(a(2)), inv(a(1)), a(2)]),
    ))
    labels.append(LONG)

    relators.append(relator(
        product([a(2), inv(s(1)), inv(a(1)), s(1), inv(a(2)), inv(s(1)), a(1), s(1)]),
        s(1) ** 2,
    ))
    labels.append(TWIST)

    result = presentation(sigma_names(n) + list(LOOP_NAMES), relators, labels)
    logging.info(f"Built torus braid presentation for n={n}: {result.rank} generators, {len(relators)} relators")
    return result


def build_presentation(family: BraidFamily, n: int) -> Presentation:
    return zariski_presentation(n) if family == BraidFamily.TORUS else artin_presentation(n)


def mu_assignment(p: Presentation, n: int) -> PermHomomorphism:
    ''' Sends s_i to the transposition (i i+1) and every other generator to the identity '''
    sigmas = sigma_names(n)
    if [name for name in p.names if name.startswith(SIGMA_PREFIX)] != sigmas:
        raise ValueError(f"Presentation generators {p.names} do not match s1..s{n - 1}")
    images = [
        transposition(n, sigmas.index(name) + 1, sigmas.index(name) + 2) if name in sigmas else identity(n)
        for name in p.names
    ]
    return PermHomomorphism(p, n, tuple(images))


def mu_homomorphism(p: Presentation, n: int) -> PermHomomorphism:
    return verified(mu_assignment(p, n))


def artin_inclusion_words(n: int) -> list[Word]:
    ''' Image words in the torus braid generators of the planar generators s1..s{n-1} '''
    _check_strands(n)
    return [letter(i) for i in range(n - 1)]


@dataclass(frozen=True)
class NormalSeriesReport:
    ''' 1 = P_{0;n} < P_{1;n-1} < ... < P_{n-1;1} < P_{n;0} = P_n(T^2), with the successive quotients '''
    n: int
    chain: tuple[str, ...]
    factors: tuple[str, ...]


def normal_series_factors(n: int, convention: SeriesConvention = SeriesConvention.PRINTED) -> NormalSeriesReport:
    """
    Normal series of the pure torus braid group, bottom to top. PRINTED lists
    the quotients F_m for m = n-1..1, FIBRATION lists the rank m+1 free groups
    of a torus with m punctures, F_n..F_2; both end with the single Z^2.
    """
    _check_strands(n)
    shift = 0 if convention == SeriesConvention.PRINTED else 1
    chain = ("1",) + tuple(f"P_{{{n - m};{m}}}" for m in range(n - 1, -1, -1))
    factors = tuple(f"F{m + shift}" for m in range(n - 1, 0, -1)) + ("Z^2",)
    return NormalSeriesReport(n, chain, factors)
