"""
Symmetric functions in Schur coordinates.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcount.exceptions import DegreeCapExceededError, InvalidInputError, SizeMismatchError, UnknownFunctionError
from qcount.partitions import Partition, conjugate, partitions_of
from qcount.ratfunc import ONE, T, ZERO, RatFunc, q_multinomial
from qcount.symfunc import (
    Basis,
    SymFunc,
    character,
    combine,
    from_basis,
    from_json,
    hall_inner,
    multiply,
    omega,
    product_of,
    to_basis,
    to_json,
    z_factor,
)


def s(*parts):
    return from_basis(Basis.S, parts)


@st.composite
def symfuncs(draw, degree):
    """Sparse combinations of a few basis elements with small polynomial coefficients."""
    tag = draw(st.sampled_from([Basis.S, Basis.H, Basis.P, Basis.WHITTAKER]))
    shapes = draw(st.lists(st.sampled_from(partitions_of(degree)), min_size=1, max_size=3, unique=True))
    coeffs = {
        lam: RatFunc.from_coeffs(draw(st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=3)))
        for lam in shapes
    }
    return combine(tag, degree, coeffs)


@st.composite
def degrees(draw, count, total=6):
    """`count` positive degrees adding up to at most `total`."""
    chosen = []
    for i in range(count):
        chosen.append(draw(st.integers(min_value=1, max_value=total - sum(chosen) - (count - i - 1))))
    return chosen


@pytest.mark.unit
class TestBasis:
    def test_parse(self):
        assert Basis.parse("Wdual") is Basis.WHITTAKER_DUAL
        assert Basis.parse("h").is_classical
        assert not Basis.parse("Hmod").is_classical

    def test_unknown(self):
        with pytest.raises(UnknownFunctionError):
            Basis.parse("q")


@pytest.mark.unit
class TestSymFunc:
    """Construction, equality and linear structure."""

    def test_zero_coefficients_are_dropped(self):
        f = SymFunc(2, {(2,): ONE, (1, 1): ZERO})
        assert set(f.coeffs) == {Partition((2,))}
        assert f.coefficient((1, 1)) == ZERO

    def test_wrong_degree(self):
        with pytest.raises(SizeMismatchError):
            SymFunc(2, {(3,): ONE})

    def test_linear_structure(self):
        f = s(2) * T + s(1, 1)
        assert f - f == SymFunc.zero(2)
        assert (f + f) / 2 == f
        assert -f + f == SymFunc.zero(5)

    def test_adding_different_degrees(self):
        with pytest.raises(SizeMismatchError):
            s(2) + s(1)


@pytest.mark.unit
class TestClassicalBases:
    """Transition data through Schur."""

    def test_degree_two(self):
        assert from_basis(Basis.H, (1, 1)) == s(2) + s(1, 1)
        assert from_basis(Basis.E, (2,)) == s(1, 1)
        assert from_basis(Basis.P, (2,)) == s(2) - s(1, 1)
        assert from_basis(Basis.P, (1, 1)) == s(2) + s(1, 1)
        assert from_basis(Basis.M, (1, 1)) == s(1, 1)
        assert from_basis(Basis.M, (2,)) == s(2) - s(1, 1)

    def test_characters(self):
        assert character((2, 1), (1, 1, 1)) == 2
        assert character((2, 1), (3,)) == -1
        assert character((2, 1), (2, 1)) == 0
        assert character((3,), (2, 1)) == 1

    def test_z_factor(self):
        assert z_factor((2, 1, 1)) == 4
        assert z_factor((3,)) == 3

    def test_coefficients_in_m(self):
        assert to_basis(from_basis(Basis.H, (1, 1)), Basis.M) == {Partition((2,)): ONE, Partition((1, 1)): 2 * ONE}

    @pytest.mark.parametrize("tag", list(Basis))
    def test_every_basis_reconstructs(self, tag):
        """combine(tag, to_basis(f, tag)) == f."""
        f = s(2, 1, 1) + s(4) * T - s(2, 2) * 3
        assert combine(tag, 4, to_basis(f, tag)) == f

    def test_schur_orthonormal(self):
        for lam in partitions_of(4):
            for mu in partitions_of(4):
                assert hall_inner(s(*lam), s(*mu)) == (ONE if lam == mu else ZERO)

    def test_h_and_m_are_dual(self):
        for lam in partitions_of(4):
            for mu in partitions_of(4):
                value = hall_inner(from_basis(Basis.H, lam), from_basis(Basis.M, mu))
                assert value == (ONE if lam == mu else ZERO)

    def test_omega_swaps_h_and_e(self):
        for lam in partitions_of(4):
            assert omega(from_basis(Basis.H, lam)) == from_basis(Basis.E, lam)
            assert omega(omega(s(*lam))) == s(*lam)


@pytest.mark.unit
class TestProducts:
    def test_h1_squared(self):
        h1 = from_basis(Basis.H, (1,))
        assert multiply(h1, h1) == s(2) + s(1, 1)

    def test_products_of_h(self):
        lam = Partition((2, 1, 1))
        factors = [from_basis(Basis.H, (part,)) for part in lam]
        assert product_of(factors) == from_basis(Basis.H, lam)

    def test_unit(self):
        assert SymFunc.one() * s(2, 1) == s(2, 1)

    @settings(max_examples=25, deadline=None)
    @given(st.data())
    def test_commutative(self, data):
        a, b = data.draw(degrees(2))
        f, g = data.draw(symfuncs(a)), data.draw(symfuncs(b))
        assert multiply(f, g) == multiply(g, f)

    @settings(max_examples=15, deadline=None)
    @given(st.data())
    def test_associative(self, data):
        a, b, c = data.draw(degrees(3))
        f, g, h = data.draw(symfuncs(a)), data.draw(symfuncs(b)), data.draw(symfuncs(c))
        assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))

    @settings(max_examples=25, deadline=None)
    @given(st.data())
    def test_omega_is_an_isometric_involution(self, data):
        n = data.draw(st.integers(min_value=1, max_value=6))
        f, g = data.draw(symfuncs(n)), data.draw(symfuncs(n))
        assert omega(omega(f)) == f
        assert hall_inner(omega(f), omega(g)) == hall_inner(f, g)

    def test_scalar_multinomial_in_m(self):
        """h_1^n has m-coefficients the multinomials; at t=1 the q-multinomial."""
        f = product_of([from_basis(Basis.H, (1,))] * 3)
        coeffs = to_basis(f, Basis.M)
        for lam in partitions_of(3):
            assert coeffs[lam] == q_multinomial(3, lam).eval_at(1)

    def test_degree_cap(self, small_degree_cap):
        with pytest.raises(DegreeCapExceededError):
            from_basis(Basis.H, (4,))
        with pytest.raises(DegreeCapExceededError):
            multiply(s(2), s(2))


@pytest.mark.unit
class TestJson:
    def test_schema(self):
        payload = to_json(s(2) * T)
        assert payload == {
            "degree": 2,
            "basis": "s",
            "coeffs": [{"part": [2], "value": {"num": ["0/1", "1/1"], "den": ["1/1"]}}],
        }

    def test_reads_back_in_another_basis(self):
        f = from_basis(Basis.WHITTAKER, (2, 1)) + s(3) * T
        assert from_json(to_json(f, Basis.H)) == f

    def test_bad_payload(self):
        with pytest.raises(InvalidInputError):
            from_json({"basis": "s"})

    def test_conjugate_keys_under_omega(self):
        f = s(3, 1) * T
        assert omega(f).coefficient(conjugate(Partition((3, 1)))) == T
