import random
from fractions import Fraction

import pytest

from blockalg.groups import DYADIC, INTEGERS, LEX_Z2
from blockalg.lie import CENTRAL, BlockAlgebra, Generator, LieElement, PolyForm
from blockalg.polynomial import Poly, X, x_power

alg = BlockAlgebra(INTEGERS)


def L(a, i, coeff=1):
    return LieElement.term(Generator(a, i), Fraction(coeff))


def test_generator_index_invariant():
    with pytest.raises(ValueError):
        Generator(1, -2)


def test_bracket_examples():
    assert alg.bracket_basis(Generator(1, 0), Generator(-1, 0)) == L(0, 0, -2)
    assert not alg.bracket_basis(Generator(3, 2), Generator(3, 2))
    assert alg.bracket_basis(Generator(1, -1), Generator(-1, -1)) == LieElement.term(
        CENTRAL
    )
    # the weight-zero modes commute
    assert not alg.bracket_basis(Generator(0, 3), Generator(0, 7))


def test_bracket_with_central_vanishes():
    rng = random.Random(0)
    for _ in range(50):
        g = Generator(rng.randint(-5, 5), rng.randint(-1, 5))
        assert not alg.bracket_basis(g, CENTRAL)
        assert not alg.bracket_basis(CENTRAL, g)


def test_bilinearity_examples():
    assert not alg.bracket(LieElement.zero(), L(1, 0))
    assert alg.bracket(L(1, 0, 2), L(-1, 0, 3)) == L(0, 0, -12)
    e = L(1, 0) + LieElement.term(CENTRAL)
    assert alg.bracket(e, L(-1, 0)) == L(0, 0, -2)


def test_bilinearity_random():
    rng = random.Random(1)
    for _ in range(100):
        a = Generator(rng.randint(-4, 4), rng.randint(-1, 4))
        b = Generator(rng.randint(-4, 4), rng.randint(-1, 4))
        c = Generator(rng.randint(-4, 4), rng.randint(-1, 4))
        x, y = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
        lhs = alg.bracket(x * LieElement.term(a) + y * LieElement.term(b), LieElement.term(c))
        rhs = x * alg.bracket_basis(a, c) + y * alg.bracket_basis(b, c)
        assert lhs == rhs


def test_weight_of():
    assert alg.weight_of(L(5, 3)) == 5
    assert alg.weight_of(LieElement.term(CENTRAL)) == 0
    assert alg.weight_of(L(1, 0) + L(2, 0)) is None
    assert alg.weight_of(LieElement.zero()) is None


def test_grading_of_brackets():
    rng = random.Random(2)
    for _ in range(200):
        a = Generator(rng.randint(-4, 4), rng.randint(-1, 4))
        b = Generator(rng.randint(-4, 4), rng.randint(-1, 4))
        br = alg.bracket_basis(a, b)
        if br:
            assert alg.weight_of(br) == a.alpha + b.alpha


def test_from_poly_examples():
    # x^2 (t^3 - 1) and the bare coordinate x
    assert alg.from_poly(PolyForm(2, x_power(3) - 1)) == L(2, 2) + L(2, -1, -1)
    assert alg.from_poly(PolyForm(1, Poly([1]))) == L(1, -1)


def test_poly_roundtrip():
    rng = random.Random(3)
    for _ in range(100):
        forms = [
            PolyForm(
                alpha,
                Poly([Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 5))]),
            )
            for alpha in rng.sample(range(-6, 7), rng.randint(1, 3))
        ]
        forms = [f for f in forms if f.poly]
        e = LieElement.zero()
        for f in forms:
            e = e + alg.from_poly(f)
        back = alg.to_poly(e)
        again = LieElement.zero()
        for f in back:
            again = again + alg.from_poly(f)
        assert again == e


def test_to_poly_rejects_central():
    with pytest.raises(ValueError):
        alg.to_poly(LieElement.term(CENTRAL))


def test_realization_needs_integers():
    dalg = BlockAlgebra(DYADIC)
    with pytest.raises(ValueError):
        dalg.from_poly(PolyForm(Fraction(1, 2), X))


def test_realization_bracket_agrees():
    rng = random.Random(4)
    for _ in range(500):
        a, i = rng.randint(-6, 6), rng.randint(-1, 6)
        b, j = rng.randint(-6, 6), rng.randint(-1, 6)
        lhs = alg.bracket_basis(Generator(a, i), Generator(b, j))
        rhs = alg.realization_bracket(
            PolyForm(a, x_power(i + 1)), PolyForm(b, x_power(j + 1))
        )
        assert lhs == rhs


def test_lex_bracket_coefficients_live_in_the_extension():
    lalg = BlockAlgebra(LEX_Z2)
    br = lalg.bracket_basis(Generator((1, 0), 0), Generator((0, 1), 0))
    (sym, coeff), = br.items()
    assert sym == Generator((1, 1), 0)
    # (i+1)b - (j+1)a = (0,1) - (1,0) = (-1,1) -> 1 - w
    assert coeff == Poly([1, -1])


def test_element_json_roundtrip():
    rng = random.Random(5)
    for group in (INTEGERS, DYADIC, LEX_Z2):
        for _ in range(100):
            terms = {
                Generator(group.random_element(rng, 6), rng.randint(-1, 6)): Fraction(
                    rng.randint(-9, 9), rng.randint(1, 9)
                )
                for _ in range(rng.randint(0, 4))
            }
            if rng.random() < 0.3:
                terms[CENTRAL] = Fraction(rng.randint(1, 5))
            e = LieElement(terms)
            assert LieElement.from_json(e.to_json(group), group) == e


def test_canonical_printing():
    e = L(1, 0) + LieElement.term(CENTRAL, Fraction(2))
    assert str(e) == "L(1,0) + 2*c"
    assert str(L(0, 0, -2)) == "-2*L(0,0)"
    assert str(LieElement.zero()) == "0"
    assert str(L(2, -1, Fraction(-3, 4))) == "-3/4*L(2,-1)"
