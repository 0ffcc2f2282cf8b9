import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import reps
from tfstar.errors import ContractViolation, NamesIncomparable
from tfstar.gold import (
    GoldMonomial,
    canonicalize_top,
    degree,
    divide_names,
    monomial_mul,
    normalize,
    render_monomial,
    theta,
)
from tfstar.prism import PrismKind, PrismScalar
from tfstar.rep import VirtualRep, equal_as_gradings

T, C = PrismKind.TRANSVERSAL, PrismKind.CRYSTALLINE


def monomials():
    exps = st.dictionaries(st.integers(0, 4), st.integers(-3, 3), max_size=3)
    ulam = st.dictionaries(st.integers(-1, 4), st.integers(-3, 3), max_size=2)
    return st.builds(
        lambda a, u, l: GoldMonomial.make(a=a, u=u, ulam=l), exps, exps, ulam
    )


class TestMul:
    def test_identity(self):
        x = GoldMonomial.make(a={2: 1}, u={0: -1})
        assert monomial_mul(GoldMonomial.one(), x) == x

    def test_no_implicit_reduction(self):
        m = monomial_mul(GoldMonomial.make(a={2: 1}), GoldMonomial.make(u={2: 1}))
        assert m == GoldMonomial.make(a={2: 1}, u={2: 1})

    def test_exponent_arithmetic(self):
        m = GoldMonomial.make(a={0: 2}, u={1: -1})
        assert monomial_mul(m, GoldMonomial.make(u={1: 1})).u_dict() == {}

    def test_suspension_floor(self):
        s = GoldMonomial.make(suspension=-1)
        with pytest.raises(ContractViolation):
            monomial_mul(s, s)

    @given(monomials(), monomials(), monomials())
    def test_commutative_associative(self, x, y, z):
        assert monomial_mul(x, y) == monomial_mul(y, x)
        assert monomial_mul(monomial_mul(x, y), z) == monomial_mul(x, monomial_mul(y, z))


class TestDegree:
    def test_length_one_generator(self):
        # u_0^{d_0} u_{lambda_0}^{d_inf} lives in (d_0; d_inf)
        m = GoldMonomial.make(u={0: 3}, ulam={0: 2})
        assert equal_as_gradings(degree(m), VirtualRep((3,), 2))

    def test_gold_pair_is_scalar(self):
        m = GoldMonomial.make(a={2: 1}, u={2: 1})
        assert equal_as_gradings(degree(m), VirtualRep((0,), 0))

    def test_bokstedt_generator(self):
        assert degree(GoldMonomial.make(ulam={-1: 1})) == VirtualRep((1,), 1)

    def test_suspension_becomes_shift(self):
        m = GoldMonomial.make(u={0: 1}, suspension=-1)
        assert degree(m).shift == -1

    @given(reps(shifts=(0,)), st.data())
    def test_theta_has_requested_degree(self, rep, data):
        r = data.draw(st.integers(-1, rep.length - 1))
        assert equal_as_gradings(degree(theta(rep, r)), rep)


class TestTheta:
    def test_all_a_form(self):
        alpha = VirtualRep((2, 1, -2, 3), 1)
        assert theta(alpha, 3) == GoldMonomial.make(
            a={0: -2, 1: -1, 2: 2, 3: -3}, ulam={3: 1}
        )

    def test_mixed_form(self):
        alpha = VirtualRep((2, 1, -2, 3), 1)
        assert theta(alpha, 0) == GoldMonomial.make(
            a={0: -2}, u={1: 1, 2: -2, 3: 3}, ulam={3: 1}
        )

    def test_zero_rep(self):
        assert theta(VirtualRep((0,), 0), 0) == GoldMonomial.one()

    def test_range(self):
        with pytest.raises(ContractViolation):
            theta(VirtualRep((1,), 0), 1)

    def test_all_u_form(self):
        alpha = VirtualRep((1, -2), 3)
        assert theta(alpha, -1) == GoldMonomial.make(u={0: 1, 1: -2}, ulam={1: 3})


class TestNormalize:
    def test_single_pair(self):
        scalar, rest = normalize(GoldMonomial.make(a={2: 1}, u={2: 1}))
        assert scalar == PrismScalar.phi_power(2) and rest == GoldMonomial.one()

    def test_partial_pair(self):
        scalar, rest = normalize(GoldMonomial.make(a={0: 3}, u={0: 1}))
        assert scalar == PrismScalar.phi_power(0) and rest == GoldMonomial.make(a={0: 2})

    def test_nothing_to_reduce(self):
        m = GoldMonomial.make(u={1: 2})
        assert normalize(m) == (PrismScalar.one(T), m)

    @given(monomials())
    def test_degree_preserved(self, m):
        _, rest = normalize(m)
        assert equal_as_gradings(degree(m), degree(rest))


class TestDivideNames:
    def test_equal_names(self, kind):
        m = GoldMonomial.make(a={0: -1}, u={3: 2})
        assert divide_names(m, m, kind).is_one

    def test_single_gold_pair(self):
        num = GoldMonomial.make(a={3: 1}, u={3: 1})
        assert divide_names(num, GoldMonomial.one(), T) == PrismScalar.phi_power(3)

    def test_unpaired_ratio_fails(self, kind):
        m = GoldMonomial.make(a={0: -1})
        num = monomial_mul(m, GoldMonomial.make(u={3: 1}))
        den = monomial_mul(m, GoldMonomial.make(a={3: 1}))
        with pytest.raises(NamesIncomparable):
            divide_names(num, den, kind)

    def test_transversal_rejects_negative_pair(self):
        num = GoldMonomial.make(a={1: -1, 2: 1}, u={1: -1, 2: 1})
        with pytest.raises(NamesIncomparable):
            divide_names(num, GoldMonomial.one(), T)

    def test_crystalline_shuffles_pairs_across_indices(self):
        # (a_1 u_1)^{-1} (a_2 u_2)^{2} = p in the crystalline name monoid
        num = GoldMonomial.make(a={1: -1, 2: 2}, u={1: -1, 2: 2})
        assert divide_names(num, GoldMonomial.one(), C) == PrismScalar.p_power(1)

    def test_crystalline_rejects_negative_total(self):
        num = GoldMonomial.make(a={1: -1}, u={1: -1})
        with pytest.raises(NamesIncomparable):
            divide_names(num, GoldMonomial.one(), C)

    def test_theta_ratio_identity(self):
        # theta_s / theta_r = prod phi^i(xi)^{d_i} over s < i <= r
        alpha = VirtualRep((1, 2, -1, 3), 0)
        with pytest.raises(NamesIncomparable):
            divide_names(theta(alpha, 3), theta(alpha, 1), T)  # d_3 = 3 > 0 blocks
        assert divide_names(theta(alpha, 1), theta(alpha, 3), C) == PrismScalar.p_power(2)

    def test_suspension_mismatch(self):
        with pytest.raises(ContractViolation):
            divide_names(GoldMonomial.make(suspension=-1), GoldMonomial.one(), T)

    @given(monomials(), st.dictionaries(st.integers(0, 4), st.integers(1, 3), max_size=3))
    def test_product_of_pairs_divides(self, y, pairs):
        x = GoldMonomial.make(a=pairs, u=pairs)
        got = divide_names(monomial_mul(x, y), y, T)
        assert got == PrismScalar.from_exponents(T, pairs)


class TestCanonicalizeTop:
    def test_single_step(self):
        # u_{lambda_1} = u_2 u_{lambda_2}
        m = GoldMonomial.make(ulam={1: 1})
        assert canonicalize_top(m, 2) == GoldMonomial.make(u={2: 1}, ulam={2: 1})

    def test_degree_preserved(self):
        m = GoldMonomial.make(a={0: -1}, ulam={1: 2})
        assert equal_as_gradings(degree(m), degree(canonicalize_top(m, 3)))

    def test_above_top_rejected(self):
        with pytest.raises(ContractViolation):
            canonicalize_top(GoldMonomial.make(ulam={3: 1}), 2)


class TestRender:
    def test_theorem_form(self):
        m = GoldMonomial.make(a={0: -2}, u={1: 1, 2: -2, 3: 3}, ulam={3: 1}, suspension=-1)
        assert render_monomial(m) == "S^-1 a_0^-2 u_1 u_2^-2 u_3^3 u_l3"

    def test_identity(self):
        assert render_monomial(GoldMonomial.one()) == "1"

    def test_bokstedt_index(self):
        assert render_monomial(GoldMonomial.make(ulam={-1: 2})) == "u_l-1^2"
