import pytest
from hypothesis import given, settings

from conftest import reps
from tfstar.closedform import closed_tf
from tfstar.gold import GoldMonomial, degree, theta
from tfstar.hotfss import e1_page, rename_kernel_generator, resolve_extensions, run_pages, tf
from tfstar.prism import PrismKind, PrismScalar, render_module, specialize
from tfstar.rep import VirtualRep, equal_as_gradings, parse_rep

T, C = PrismKind.TRANSVERSAL, PrismKind.CRYSTALLINE


def odd(rep):
    return VirtualRep(rep.dims, rep.d_inf, -1)


def row_strings(page):
    out = {}
    for f in range(len(page.rows) - 1, -1, -1):
        s = page.rows[f]
        if s is not None:
            out[f] = (render_module(s.ideal), str(s.generator))
    return out


class TestE1:
    def test_even_dinf_chart(self):
        page = e1_page(parse_rep("(2,1,-2,3;1)"), T)
        assert row_strings(page) == {
            4: ("A/xi^2", "S^-1 a_0^-2 u_1 u_2^-2 u_3^3 u_l3"),
            3: ("A/phi(xi)", "S^-1 a_0^-2 a_1^-1 u_2^-2 u_3^3 u_l3"),
            1: ("A/phi^3(xi)^3", "S^-1 a_0^-2 a_1^-1 a_2^2 a_3^-3 u_l3"),
            0: ("A", "a_0^-2 a_1^-1 a_2^2 a_3^-3 u_l3"),
        }

    def test_negative_dinf_chart(self):
        page = e1_page(parse_rep("(3,0,2,1,-1;-1)"), T)
        assert row_strings(page) == {
            5: ("A/xi^3", "S^-1 a_0^-3 u_2^2 u_3 u_4^-1 u_l4^-1"),
            3: ("A/phi^2(xi)^2", "S^-1 a_0^-3 a_2^-2 u_3 u_4^-1 u_l4^-1"),
            2: ("A/phi^3(xi)", "S^-1 a_0^-3 a_2^-2 a_3^-1 u_4^-1 u_l4^-1"),
        }

    def test_zero_rep(self):
        page = e1_page(VirtualRep((0,), 0), T)
        assert row_strings(page) == {0: ("A", "1")}

    @settings(max_examples=60)
    @given(reps(shifts=(0,)))
    def test_crystalline_page_is_specialized_transversal(self, rep):
        pt = e1_page(rep, T)
        pc = e1_page(rep, C)
        for f in range(1, len(pt.rows)):
            s, c = pt.rows[f], pc.rows[f]
            assert (s is None) == (c is None)
            if s is not None:
                assert tuple(specialize(g) for g in s.ideal.gens) == c.ideal.gens
                assert s.generator == c.generator


class TestRename:
    def test_transversal_full_replacement(self):
        g = GoldMonomial.make(a={0: -1, 1: -2, 2: 1}, u={3: 3})
        out = rename_kernel_generator(g, 1, PrismScalar.phi_power(1, 2))
        assert out == GoldMonomial.make(a={0: -1, 2: 1}, u={1: 2, 3: 3})

    def test_crystalline_partial_replacement(self):
        g = GoldMonomial.make(a={2: -2})
        out = rename_kernel_generator(g, 2, PrismScalar.p_power(1))
        assert out == GoldMonomial.make(a={2: -1}, u={2: 1})

    def test_degree_zero_rewrite(self):
        g = theta(parse_rep("(1,2,-1,3;0)"), 3)
        out = rename_kernel_generator(g, 3, PrismScalar.phi_power(3, 3))
        assert equal_as_gradings(degree(g), degree(out))


class TestRunPages:
    def test_transversal_einf_chart(self):
        alpha = parse_rep("(1,2,-1,3;0)")
        pages = run_pages(alpha, T)
        assert len(pages) == alpha.length + 1
        assert row_strings(pages[-1]) == {
            4: ("A/(xi, phi^2(xi))", "S^-1 a_0^-1 u_1^2 u_2^-1 u_3^3"),
            3: ("A/(phi(xi)^2, phi^2(xi))", "S^-1 a_0^-1 a_1^-2 u_2^-1 u_3^3"),
            0: ("A", "a_2 u_0 u_1^2 u_3^3"),
        }
        assert pages[-1].extension_links == ((4, 3),)

    def test_length_two_transversal(self):
        pages = run_pages(parse_rep("(1,-1;0)"), T)
        assert row_strings(pages[-1]) == {
            2: ("A/(xi, phi(xi))", "S^-1 a_0^-1 u_1^-1"),
            0: ("A", "a_1 u_0"),
        }

    def test_length_two_crystalline(self):
        pages = run_pages(parse_rep("(1,-1;0)"), C)
        assert row_strings(pages[-1]) == {
            2: ("A/p", "S^-1 a_0^-1 u_1^-1"),
            0: ("A", "a_0^-1 a_1"),
        }

    def test_crystalline_einf_chart(self):
        pages = run_pages(parse_rep("(1,-1,2,-1,1;0)"), C)
        assert row_strings(pages[-1]) == {
            5: ("A/p", "S^-1 a_0^-1 u_1^-1 u_2^2 u_3^-1 u_4"),
            3: ("A/p", "S^-1 a_0^-1 a_1 a_2^-2 u_3^-1 u_4"),
            0: ("A", "a_0^-1 a_1 a_2^-1 a_3 u_2 u_4"),
        }
        assert pages[-1].extension_links == ((5, 3),)

    def test_no_differentials_when_dinf_negative(self):
        alpha = parse_rep("(3,1,-1,1,0,2;-1)")
        pages = run_pages(alpha, T)
        assert row_strings(pages[0]) == row_strings(pages[-1])
        assert pages[-1].extension_links == ((6, 5), (3, 1))


class TestResolveExtensions:
    def test_transversal_braces(self):
        alpha = parse_rep("(3,1,-1,1,0,2;-1)")
        group = resolve_extensions(run_pages(alpha, T)[-1], alpha, T)
        assert [
            (render_module(s.ideal), str(s.generator)) for s in group.summands
        ] == [
            ("A/xi^3 phi(xi)", "S^-1 a_0^-3 a_1^-1 u_2^-1 u_3 u_5^2 u_l5^-1"),
            ("A/phi^3(xi) phi^5(xi)^2", "S^-1 a_0^-3 a_1^-1 a_2 a_3^-1 a_5^-2 u_l5^-1"),
        ]

    def test_crystalline_skips_a_level(self):
        # levels 0 and 4 glue across the level-2 row, which stays separate
        alpha = parse_rep("(1,-1,2,-1,1;-1)")
        group = resolve_extensions(run_pages(alpha, C)[-1], alpha, C)
        assert [
            (render_module(s.ideal), str(s.generator)) for s in group.summands
        ] == [
            ("A/p^2", "S^-1 a_0^-1 a_1 a_2^-2 a_3 a_4^-1 u_l4^-1"),
            ("A/p^2", "S^-1 a_0^-1 a_1 a_2^-2 u_3^-1 u_4 u_l4^-1"),
        ]


class TestTf:
    def test_even_transversal(self):
        group = tf(parse_rep("(1,1,-1,2,-1,1;0)"), T)
        assert group.summands[0].generator == GoldMonomial.make(
            a={2: 1, 4: 1}, u={0: 1, 1: 1, 3: 2, 5: 1}
        )

    def test_odd_crystalline(self):
        group = tf(odd(parse_rep("(1,1,-1,2,-1,1;0)")), C)
        assert [(render_module(s.ideal), str(s.generator)) for s in group.summands] == [
            ("A/p^2", "S^-1 a_0^-1 a_1^-1 a_2 a_3^-2 u_4^-1 u_5")
        ]

    def test_double_negative_vanishes(self, kind):
        rep = VirtualRep((-2,), -1)
        assert tf(rep, kind).is_zero and tf(odd(rep), kind).is_zero

    @settings(max_examples=60, deadline=None)
    @given(reps())
    def test_agrees_with_closed_form(self, kind, rep):
        assert tf(rep, kind).multiset_key() == closed_tf(rep, kind).multiset_key()

    @settings(max_examples=60, deadline=None)
    @given(reps())
    def test_parity_of_summands(self, kind, rep):
        group = tf(rep, kind)
        if rep.shift == 0:
            assert len(group.summands) <= 1
            assert all(s.ideal.is_free for s in group.summands)
        else:
            assert all(not s.ideal.is_free for s in group.summands)
            assert all(s.generator.suspension == -1 for s in group.summands)
