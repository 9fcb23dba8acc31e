from fractions import Fraction
from math import factorial

import pytest

from bunsod.coinv import (
    S_MODELS,
    QuotientPresentation,
    character_S,
    coinvariant_hilbert,
    coinvariant_presentation,
    elementary_symmetric,
    graded_character_R,
    gtgen_check,
    hom_mult,
    q_factorial,
)
from bunsod.liecore import SL2Character, irrep_character, tensor_power_character


def test_hilbert_examples():
    assert coinvariant_hilbert(1) == [1]
    assert coinvariant_hilbert(2) == [1, 1]
    assert coinvariant_hilbert(3) == [1, 2, 2, 1]


@pytest.mark.parametrize("m", range(1, 5))
def test_hilbert_is_q_factorial(m):
    hilb = coinvariant_hilbert(m)
    assert hilb == q_factorial(m)
    assert sum(hilb) == factorial(m)


def test_q_factorial_independent():
    assert q_factorial(4) == [1, 3, 5, 6, 5, 3, 1]


def test_m2_quotient_basis():
    pres = coinvariant_presentation(2)
    # t1 + t2 lies in the ideal, so t1 reduces to -t2
    assert pres.normal_form({(1, 0): Fraction(1)}) == {(0, 1): Fraction(-1)}
    assert pres.normal_form({(1, 0): Fraction(1), (0, 1): Fraction(1)}) == {}
    assert pres.standard[1] == ((0, 1),)


@pytest.mark.parametrize("m", range(1, 5))
def test_truncation_suffices(m):
    pres = coinvariant_presentation(m)
    assert pres.truncation == m * (m - 1) // 2 + 1
    assert pres.top_degree == m * (m - 1) // 2
    assert pres.standard[pres.truncation] == ()


def test_truncation_too_small_detected():
    gens = [elementary_symmetric(3, k) for k in range(1, 4)]
    with pytest.raises(ArithmeticError):
        QuotientPresentation.build(3, gens, 2)


def test_out_of_range():
    for bad in (0, 5):
        with pytest.raises(ValueError):
            coinvariant_hilbert(bad)
        with pytest.raises(ValueError):
            graded_character_R(bad)
    with pytest.raises(ValueError):
        gtgen_check(4)
    with pytest.raises(ValueError):
        character_S(7)
    with pytest.raises(ValueError):
        character_S(2, "bogus")


def test_R_examples():
    assert dict(graded_character_R(1).pieces) == {0: irrep_character(1)}
    assert dict(graded_character_R(2).pieces) == {0: irrep_character(2), 1: irrep_character(0)}
    r3 = graded_character_R(3)
    assert r3.total() == irrep_character(3) + irrep_character(1) + irrep_character(1)
    assert r3.total().dim == 8


@pytest.mark.parametrize("m", range(1, 5))
def test_R_sums_to_tensor_power(m):
    module = graded_character_R(m)
    assert module.total() == tensor_power_character(m)
    # the top component occurs exactly once, in degree 0
    assert module.degrees_of(m) == {0: 1}


@pytest.mark.parametrize("m", range(1, 5))
def test_filtration_grading_puts_top_component_last(m):
    module = graded_character_R(m, "filtration")
    top = max(module.pieces)
    assert module.degrees_of(m) == {m * (m - 1) // 2: 1}
    assert top == m * (m - 1) // 2
    assert module.total() == tensor_power_character(m)


def test_R4_fake_degrees():
    pieces = {d: v for d, v in graded_character_R(4).to_dict().items()}
    assert pieces == {
        "0": {"4": 1},
        "1": {"2": 1},
        "2": {"2": 1, "0": 1},
        "3": {"2": 1},
        "4": {"0": 1},
    }


def test_S_examples():
    for model in S_MODELS:
        assert character_S(1, model) == irrep_character(1)
    assert character_S(2, "quotient-by-t") == irrep_character(2)
    assert character_S(2, "fiber-tensor") == tensor_power_character(2)


@pytest.mark.parametrize("n", range(7))
def test_quotient_model_is_symmetric_power(n):
    assert character_S(n, "quotient-by-t") == irrep_character(n)


def test_hom_mult_examples():
    for m in range(1, 7):
        for n in range(m):
            assert hom_mult(m, irrep_character(n)) == 0
        assert hom_mult(m, tensor_power_character(m)) == 1
    assert hom_mult(1, tensor_power_character(3)) == 2


@pytest.mark.parametrize("model", S_MODELS)
def test_hom_vanishing(model):
    for m in range(1, 7):
        for n in range(m):
            assert hom_mult(m, character_S(n, model)) == 0


def test_hom_mult_rejects_non_characters():
    with pytest.raises(ValueError):
        hom_mult(0, SL2Character({2: 1, -2: 1}))


@pytest.mark.parametrize("m", range(1, 4))
def test_generation(m):
    assert gtgen_check(m)
