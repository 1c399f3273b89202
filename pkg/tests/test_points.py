from __future__ import annotations

from fractions import Fraction
import pytest
from scripts.torus import LatticeClass
from scripts.torus.points import (
    Configuration, LinearForm, TorusPoint, apply_endo, difference_eval, endo_kernel, parse_configuration,
    point_order, random_configuration, reducing_translations, sum_map, symmetric_form, translate,
)
from scripts.torus.ring import RingElement, elements_up_to_norm, ring_norm
from tests.conftest import point


def test_points_reduce_mod_one():
    p = TorusPoint(Fraction(3, 2), Fraction(-1, 4))
    assert (p.x, p.y) == (Fraction(1, 2), Fraction(3, 4))
    assert str(p) == "1/2:3/4"
    assert (p - p).is_zero()


def test_kernel_is_a_subgroup_of_order_the_norm(lattice):
    for alpha in elements_up_to_norm(lattice, 12):
        kernel = endo_kernel(lattice, alpha)
        assert len(kernel) == ring_norm(lattice, alpha)
        members = set(kernel)
        assert len(members) == len(kernel)
        assert all(p + q in members for p in kernel for q in kernel)
        assert all(-p in members for p in kernel)
        for element in kernel:
            assert apply_endo(lattice, alpha, element).is_zero()


def test_known_kernels():
    assert endo_kernel(LatticeClass.SQUARE, RingElement(1, 1)) == (point(0, 0), point(Fraction(1, 2), Fraction(1, 2)))
    assert len(endo_kernel(LatticeClass.GENERIC, RingElement(2))) == 4
    assert endo_kernel(LatticeClass.HEXAGONAL, RingElement(1)) == (point(0, 0),)
    with pytest.raises(ValueError):
        endo_kernel(LatticeClass.SQUARE, RingElement(0))
    with pytest.raises(ValueError):
        apply_endo(LatticeClass.SQUARE, RingElement(0), point(0, 0))


def test_point_order():
    assert point_order(point(Fraction(1, 2), Fraction(1, 3))) == 6
    assert point_order(point(0, 0)) == 1


def test_configurations():
    configuration = parse_configuration("0:0, 1/2:0 ,0:1/2")
    assert len(configuration) == 3
    assert configuration.point(2) == point(Fraction(1, 2), 0)
    with pytest.raises(ValueError):
        parse_configuration("0:0,1:1")
    with pytest.raises(ValueError):
        parse_configuration("0:0,1/2")
    with pytest.raises(ValueError):
        configuration.point(4)


def test_difference_eval(lattice):
    configuration = parse_configuration("1/3:0,0:1/4")
    assert difference_eval(lattice, RingElement(1), 1, 2, configuration) == point(Fraction(1, 3), Fraction(3, 4))
    assert difference_eval(lattice, RingElement(-1), 2, 1, configuration) == point(Fraction(1, 3), Fraction(3, 4))
    with pytest.raises(ValueError):
        difference_eval(lattice, RingElement(1), 1, 1, configuration)
    with pytest.raises(ValueError):
        difference_eval(lattice, RingElement(2), 1, 2, configuration)


def test_reducing_translations(rng):
    configuration = random_configuration(rng, 4, 12)
    translations = reducing_translations(configuration)
    assert len(set(translations)) == 16
    for shift in translations:
        assert sum_map(translate(configuration, shift)).is_zero()


def test_symmetric_forms_ignore_order(lattice, rng):
    k = RingElement(2) if lattice == LatticeClass.GENERIC else RingElement(1, 1)
    constant = point(Fraction(1, 5), Fraction(2, 7))
    form = symmetric_form(k, constant, 4)
    assert form.is_symmetric(4)
    configuration = random_configuration(rng, 4, 12)
    shuffled = Configuration(tuple(reversed(configuration.points)))
    value = form.evaluate(lattice, configuration)
    assert value == form.evaluate(lattice, shuffled)
    assert value == apply_endo(lattice, k, sum_map(configuration)) + constant
    skewed = LinearForm(((1, RingElement(1)), (2, RingElement(-1))))
    assert not skewed.is_symmetric(2)
