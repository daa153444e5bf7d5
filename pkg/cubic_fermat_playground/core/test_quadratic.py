import random
from fractions import Fraction

import pytest

from .exceptions import FieldMismatchError
from .exceptions import NotOnVarietyError
from .exceptions import PreconditionError
from .quadratic import BASIS_OMEGA
from .quadratic import BASIS_SQRT
from .quadratic import clear_denominators
from .quadratic import IntegralForm
from .quadratic import primitive_triple
from .quadratic import quadratic_field
from .quadratic import QuadField
from .quadratic import satisfies_fermat


def random_element(rng: random.Random, field: QuadField):
    def q() -> Fraction:
        return Fraction(rng.randint(-50, 50), rng.randint(1, 12))

    return field.element(q(), q())


def test_field_normalization() -> None:
    assert quadratic_field(12).d == 3
    assert quadratic_field(-50).d == -2
    for bad in (0, 1, 4, 9):
        with pytest.raises(PreconditionError):
            quadratic_field(bad)
    with pytest.raises(PreconditionError):
        QuadField(12)


def test_basis_tag() -> None:
    assert quadratic_field(5).basis == BASIS_OMEGA
    assert quadratic_field(-3).basis == BASIS_OMEGA
    assert quadratic_field(2).basis == BASIS_SQRT
    assert quadratic_field(-1).basis == BASIS_SQRT


def test_conjugate() -> None:
    k2 = quadratic_field(2)
    assert k2.element(14, 34).conjugate() == k2.element(14, -34)
    k3 = quadratic_field(3)
    assert k3.element(5).conjugate() == k3.element(5)
    i = quadratic_field(-1).sqrt_d
    assert i.conjugate() == -i
    assert i * i == -1


def test_cube() -> None:
    k = quadratic_field(2)
    e = k.element(18, 17)
    assert e.cube() == k.element(37044, 26350)
    assert e.cube() == e * e * e
    assert e.cube() + e.conjugate().cube() == 42**3
    assert k.element(1).cube() == 1


def test_cube_matches_multiplication() -> None:
    rng = random.Random(3)
    for d in (2, 5, -1, -3, 7, -15):
        field = quadratic_field(d)
        for _ in range(30):
            e = random_element(rng, field)
            assert e.cube() == e * e * e == e**3


def test_conjugation_is_automorphism() -> None:
    rng = random.Random(4)
    for d in (2, 5, -1, -7, 13):
        field = quadratic_field(d)
        for _ in range(50):
            e, f = random_element(rng, field), random_element(rng, field)
            assert (e * f).conjugate() == e.conjugate() * f.conjugate()
            assert (e + f).conjugate() == e.conjugate() + f.conjugate()
            assert e.conjugate().conjugate() == e


def test_inverse() -> None:
    rng = random.Random(5)
    for d in (2, 5, -1, -3):
        field = quadratic_field(d)
        for _ in range(50):
            e = random_element(rng, field)
            if not e:
                continue
            assert e * e.inverse() == 1
            assert e / e == 1
    with pytest.raises(ZeroDivisionError):
        quadratic_field(2).element(0).inverse()


def test_mixed_fields() -> None:
    a, b = quadratic_field(2).sqrt_d, quadratic_field(3).sqrt_d
    for operation in (
        lambda: a + b,
        lambda: a - b,
        lambda: a * b,
        lambda: a / b,
        lambda: b + a,
    ):
        with pytest.raises(FieldMismatchError):
            operation()
    with pytest.raises(TypeError):
        a + 1.5
    with pytest.raises(TypeError):
        a * "2"


def test_integrality() -> None:
    k5 = quadratic_field(5)
    e = k5.element(Fraction(1, 2), Fraction(3, 2))
    assert e.is_integral()
    form = e.to_integral_form()
    assert form == IntegralForm(BASIS_OMEGA, (-1, 3))
    assert form.to_element(k5) == e
    assert not quadratic_field(2).element(Fraction(1, 2), 1).is_integral()
    assert not k5.element(Fraction(1, 3)).is_integral()
    assert not k5.element(Fraction(1, 2)).is_integral()


def test_integral_form_round_trip() -> None:
    for d in (5, -3, 13, -7, 21):
        field = quadratic_field(d)
        for r in range(-4, 5):
            for s in range(-4, 5):
                e = r + s * field.omega
                assert e.is_integral()
                assert e.to_integral_form().coordinates == (r, s)
                assert e.to_integral_form().to_element(field) == e


def test_clear_denominators_golden_triple() -> None:
    k = quadratic_field(2)
    x = k.element(3, Fraction(17, 6))
    y = k.element(3, Fraction(-17, 6))
    z = k.element(7)
    (cx, cy, cz), scale = clear_denominators(x, y, z, 1)
    assert scale == 6
    assert (cx, cy, cz) == (k.element(18, 17), k.element(18, -17), k.element(42))


def test_clear_denominators_integral_input_unchanged() -> None:
    k = quadratic_field(5)
    x = y = z = k.element(Fraction(1, 2), Fraction(1, 2))
    assert clear_denominators(x, y, z, 2) == ((x, y, z), 1)


def test_clear_denominators_mixed_denominators() -> None:
    k = quadratic_field(5)
    e = k.element(Fraction(1, 2), Fraction(1, 3))
    (cx, cy, cz), scale = clear_denominators(e, e, e, 2)
    assert scale == 6
    assert cx == k.element(3, 2)
    assert all(c.is_integral() for c in (cx, cy, cz))


def test_clear_denominators_rejects_non_solution() -> None:
    k = quadratic_field(2)
    with pytest.raises(NotOnVarietyError):
        clear_denominators(k.element(1), k.element(1), k.element(1), 1)
    with pytest.raises(PreconditionError):
        clear_denominators(k.element(0), k.element(0), k.element(0), 1)


def test_clear_denominators_random_rescaling() -> None:
    rng = random.Random(6)
    k = quadratic_field(2)
    known = [
        ((k.element(18, 17), k.element(18, -17), k.element(42)), 1),
        ((k.element(1), k.element(1), k.element(1)), 2),
        ((k.element(72), k.element(0), k.element(72)), 1),
    ]
    for _ in range(120):
        (x, y, z), kk = rng.choice(known)
        factor = random_element(rng, k)
        if not factor:
            continue
        scaled = (factor * x, factor * y, factor * z)
        assert satisfies_fermat(*scaled, kk)
        cleared, scale = clear_denominators(*scaled, kk)
        assert scale >= 1
        assert satisfies_fermat(*cleared, kk)
        assert all(e.is_integral() for e in cleared)


def test_primitive_triple() -> None:
    k = quadratic_field(2)
    triple = (k.element(36, 34), k.element(36, -34), k.element(84))
    primitive, content = primitive_triple(*triple)
    assert content == 2
    assert primitive == (k.element(18, 17), k.element(18, -17), k.element(42))
