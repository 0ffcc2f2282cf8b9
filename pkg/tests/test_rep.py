import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import reps
from tfstar.errors import ContractViolation, ParseError
from tfstar.rep import (
    VirtualRep,
    add_lambda,
    add_rep,
    equal_as_gradings,
    fixed_part,
    from_irreducible,
    irreducible_coeffs,
    lambda_rep,
    pad_rep,
    parse_rep,
    render_rep,
)


class TestParse:
    def test_theorem_example(self):
        assert parse_rep("(1,1,-1,2,-1,1;0)") == VirtualRep((1, 1, -1, 2, -1, 1), 0)

    def test_zero(self):
        assert parse_rep("(0;0)") == VirtualRep((0,), 0)

    def test_chart_caption(self):
        assert parse_rep("(3,0,2,1,-1;-1)") == VirtualRep((3, 0, 2, 1, -1), -1)

    def test_whitespace(self):
        assert parse_rep(" ( 1 , -2 ; 3 ) ") == VirtualRep((1, -2), 3)

    @pytest.mark.parametrize(
        "bad",
        ["", "(1,2)", "(;0)", "(1,;0)", "(1;0", "1;0)", "(1;0))", "(a;0)", "(1;0) x"],
    )
    def test_malformed(self, bad):
        with pytest.raises(ParseError) as err:
            parse_rep(bad)
        assert err.value.position >= 0

    def test_shift_defaults_to_zero(self):
        assert parse_rep("(2;1)").shift == 0

    @given(reps(shifts=(0,)))
    def test_round_trip(self, rep):
        assert parse_rep(render_rep(rep)) == rep


class TestIrreducible:
    def test_length_one(self):
        # (d_0; d_inf) decomposes as (d_0 - d_inf) lambda_0 + d_inf lambda_inf
        dec = irreducible_coeffs(VirtualRep((3,), 1))
        assert dec.coeffs == (2,) and dec.k_inf == 1

    def test_by_hand(self):
        dec = irreducible_coeffs(VirtualRep((1, -1), 0))
        assert dec.coeffs == (2, -1) and dec.k_inf == 0

    def test_zero(self):
        dec = irreducible_coeffs(VirtualRep((0, 0, 0), 0))
        assert dec.coeffs == (0, 0, 0) and dec.k_inf == 0

    @given(reps())
    def test_round_trip(self, rep):
        assert from_irreducible(irreducible_coeffs(rep), rep.shift) == rep

    @given(reps())
    def test_summation_oracle(self, rep):
        # d_r = k_inf + sum(k_i for i >= r), the defining identity
        dec = irreducible_coeffs(rep)
        for r in range(rep.length):
            assert rep.dims[r] == dec.k_inf + sum(dec.coeffs[r:])

    @given(reps())
    def test_padding_appends_zero_coefficient(self, rep):
        dec = irreducible_coeffs(pad_rep(rep, rep.length + 1))
        assert dec.coeffs[-1] == 0


class TestFixedPart:
    def test_identity_at_zero(self):
        rep = VirtualRep((2, 1, -2, 3), 1)
        assert fixed_part(rep, 0) == rep

    def test_drops_prefix(self):
        assert fixed_part(VirtualRep((2, 1, -2, 3), 1), 2) == VirtualRep((-2, 3), 1)

    def test_range_error(self):
        with pytest.raises(ContractViolation):
            fixed_part(VirtualRep((1,), 0), 1)

    @given(reps(), st.data())
    def test_shifts_indices(self, rep, data):
        r = data.draw(st.integers(0, rep.length - 1))
        part = fixed_part(rep, r)
        for k in range(part.length):
            assert part.dims[k] == rep.dims[k + r]


class TestArithmetic:
    def test_add_lambda_zero(self):
        assert add_lambda(VirtualRep((0,), 0), 0) == VirtualRep((1,), 0)

    def test_add_lambda_inside(self):
        assert add_lambda(VirtualRep((2, 1), -1), 1) == VirtualRep((3, 2), -1)

    def test_add_lambda_pads(self):
        assert add_lambda(VirtualRep((2,), 1), 2) == VirtualRep((3, 2, 2), 1)

    def test_pad(self):
        assert pad_rep(VirtualRep((1, -1), 0), 3) == VirtualRep((1, -1, 0), 0)

    def test_pad_shrink_rejected(self):
        with pytest.raises(ContractViolation):
            pad_rep(VirtualRep((1, 2), 0), 1)

    def test_add_rep_rejects_shift(self):
        with pytest.raises(ContractViolation):
            add_rep(VirtualRep((1,), 0, -1), VirtualRep((1,), 0))

    @given(reps(shifts=(0,)), st.integers(0, 5))
    def test_add_lambda_agrees_with_add_rep(self, rep, i):
        assert equal_as_gradings(add_lambda(rep, i), add_rep(rep, lambda_rep(i)))

    @given(reps())
    def test_padding_is_grading_equality(self, rep):
        assert equal_as_gradings(rep, pad_rep(rep, rep.length + 2))
        assert pad_rep(rep, rep.length + 2) != rep  # encodings stay distinct
