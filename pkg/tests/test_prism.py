import pytest
from hypothesis import given
from hypothesis import strategies as st

from tfstar.errors import ContractViolation
from tfstar.prism import (
    CyclicIdeal,
    PrismKind,
    PrismScalar,
    kernel_cokernel,
    q_analog,
    render_module,
    render_scalar,
    scalar_mul,
    specialize,
)

T, C = PrismKind.TRANSVERSAL, PrismKind.CRYSTALLINE


def scalars(kind):
    if kind is PrismKind.CRYSTALLINE:
        return st.builds(PrismScalar.p_power, st.integers(0, 6))
    return st.builds(
        lambda d: PrismScalar.from_exponents(PrismKind.TRANSVERSAL, d),
        st.dictionaries(st.integers(0, 5), st.integers(1, 4), max_size=4),
    )


class TestQAnalog:
    def test_zero_is_one(self, kind):
        assert q_analog(0, kind).is_one

    def test_two_transversal(self):
        assert q_analog(2, T) == PrismScalar(T, ((0, 1), (1, 1)))
        assert render_scalar(q_analog(2, T)) == "xi phi(xi)"

    def test_three_crystalline(self):
        assert q_analog(3, C) == PrismScalar.p_power(3)

    @given(st.integers(0, 8))
    def test_recursion(self, n):
        assert q_analog(n + 1, T) == scalar_mul(q_analog(n, T), PrismScalar.phi_power(n))
        assert q_analog(n + 1, C) == scalar_mul(q_analog(n, C), PrismScalar.p_power(1))


class TestScalarAlgebra:
    def test_mul(self):
        x = PrismScalar.from_exponents(T, {0: 2})
        y = PrismScalar.phi_power(1)
        assert render_scalar(scalar_mul(x, y)) == "xi^2 phi(xi)"

    def test_unit(self, kind):
        one = PrismScalar.one(kind)
        x = q_analog(2, kind)
        assert scalar_mul(x, one) == x

    def test_kind_mismatch(self):
        with pytest.raises(ContractViolation):
            scalar_mul(PrismScalar.one(T), PrismScalar.one(C))

    def test_specialize_sums_exponents(self):
        x = PrismScalar.from_exponents(T, {0: 1, 1: 2})
        assert specialize(x) == PrismScalar.p_power(3)

    @given(scalars(T), scalars(T))
    def test_specialize_is_multiplicative(self, x, y):
        assert specialize(scalar_mul(x, y)) == scalar_mul(specialize(x), specialize(y))


class TestKernelCokernel:
    def test_unit_map_kills_row(self):
        kernel, quotient = kernel_cokernel(PrismScalar.one(T), (3, 3))
        assert kernel == PrismScalar.phi_power(3, 3)
        assert quotient.is_zero_module

    def test_transversal_two_generator_quotient(self):
        kernel, quotient = kernel_cokernel(PrismScalar.phi_power(2), (1, 2))
        assert kernel == PrismScalar.phi_power(1, 2)
        assert render_module(quotient) == "A/(phi(xi)^2, phi^2(xi))"

    def test_crystalline_valuations(self):
        kernel, quotient = kernel_cokernel(PrismScalar.p_power(1), (0, 2))
        assert kernel == PrismScalar.p_power(1)
        assert quotient == CyclicIdeal.of(PrismScalar.p_power(1))

    def test_transversal_precondition(self):
        with pytest.raises(ContractViolation):
            kernel_cokernel(PrismScalar.phi_power(1), (1, 2))

    @given(st.integers(0, 8), st.integers(1, 8))
    def test_crystalline_length_accounting(self, s, d):
        kernel, quotient = kernel_cokernel(PrismScalar.p_power(s), (0, d))
        assert kernel.pk + quotient.gens[0].pk == d


class TestIdeals:
    def test_free(self):
        assert CyclicIdeal.free().is_free
        assert render_module(CyclicIdeal.free()) == "A"

    def test_zero_module(self):
        assert CyclicIdeal.of(PrismScalar.one(T), PrismScalar.phi_power(1)).is_zero_module

    def test_render(self):
        assert render_module(CyclicIdeal.of(PrismScalar.p_power(3))) == "A/p^3"

    def test_at_most_two_generators(self):
        with pytest.raises(ContractViolation):
            CyclicIdeal.of(*(PrismScalar.p_power(i + 1) for i in range(3)))
