from math import comb

import pytest

from dfixed import (
    DSequence,
    MonomialIdeal,
    PrincipalInput,
    corners,
    parse_monomial,
    prefix_frobenius,
    principal_ideal,
    reg_bound,
    reg_formula,
    reg_report_formula,
    reg_sequential,
    reg_stability,
    variable,
)

D = DSequence([1, 2, 4, 12])


def make_input(text, n, d=D):
    return PrincipalInput.from_monomial(parse_monomial(text, n), d)


class TestFormula:
    def test_pure_power_golden(self):
        assert reg_formula(make_input("x3^21", 3)).value == 34

    def test_factored_golden(self):
        rep = reg_formula(make_input("x1^2*x2^16*x3^9", 3))
        assert rep.value == 32
        assert rep.d_values == (23, 30)

    def test_trivial_chain(self):
        inp = PrincipalInput.from_monomial(variable(3, 3, 7), DSequence([1]))
        assert reg_formula(inp).value == 7

    def test_pure_first_variable(self):
        inp = PrincipalInput.from_monomial(variable(1, 1, 5), D)
        assert reg_formula(inp).value == 5

    def test_wrong_top_variable_rejected(self):
        with pytest.raises(ValueError, match="last variable"):
            reg_formula(make_input("x2^9", 3))

    def test_bound(self):
        assert reg_bound(make_input("x3^21", 3)) == 63
        assert reg_bound(make_input("x1^2*x2^16*x3^9", 3)) == 81
        inp = PrincipalInput.from_monomial(variable(3, 3, 1), DSequence([1]))
        assert reg_bound(inp) == 3


class TestSequential:
    def test_pure_power(self):
        I = principal_ideal(make_input("x3^21", 3))
        assert reg_sequential(I).value == 34

    def test_two_blocks(self):
        I = principal_ideal(make_input("x2^9*x3^16", 3))
        rep = reg_sequential(I)
        assert rep.value == 34
        assert rep.d_values == (11, 34)

    def test_single_variable(self):
        I = MonomialIdeal(1, [variable(1, 1, 6)])
        assert reg_sequential(I).value == 6

    def test_non_borel_rejected(self):
        with pytest.raises(ValueError, match="Borel"):
            reg_sequential(MonomialIdeal(2, [parse_monomial("x2", 2)]))


class TestStability:
    def test_pure_power(self):
        I = principal_ideal(make_input("x3^21", 3))
        assert reg_stability(I) == 34

    def test_stable_square(self):
        assert reg_stability(prefix_frobenius(2, 1, 2) ** 2) == 2

    def test_trivial_chain_power(self):
        inp = PrincipalInput.from_monomial(variable(2, 2, 5), DSequence([1]))
        assert reg_stability(principal_ideal(inp)) == 5


class TestMultiBlockAgreement:
    """All routes agree on two-block inputs; stability stays an upper
    bound there (it is only proven exact for pure powers)."""

    @pytest.mark.parametrize("text", ["x2^9*x3^16", "x2^16*x3^9", "x2^5*x3^5"])
    def test_routes_agree(self, text):
        from dfixed import betti_table, reg_from_betti

        inp = make_input(text, 3)
        ideal = principal_ideal(inp)
        formula = reg_formula(inp).value
        assert reg_sequential(ideal).value == formula
        table = betti_table(ideal, reg_bound=formula)
        assert reg_from_betti(table) == formula
        assert reg_stability(ideal) >= formula


class TestFourVariables:
    """Three blocks in four variables drive the full wedge-4 Koszul
    complex and a three-step chain."""

    def test_all_routes_and_corners(self):
        from dfixed import betti_table, extremal_from_betti, reg_from_betti

        inp = PrincipalInput(
            d=DSequence([1, 2, 4]), n=4, blocks=((2, 3), (3, 5), (4, 6))
        )
        ideal = principal_ideal(inp)
        rep = reg_formula(inp)
        assert rep.value == 17 and rep.d_values == (3, 10, 17)
        assert reg_sequential(ideal).value == 17
        table = betti_table(ideal, reg_bound=17)
        assert reg_from_betti(table) == 17
        survivors = sorted(
            (c.position, c.row, c.beta) for c in corners(inp) if c.survives
        )
        assert survivors == extremal_from_betti(table)


class TestSocleTopDegreeLaw:
    """The socle tops out one below the regularity."""

    def test_pure_powers(self):
        from dfixed import socle_max_degree

        for chain in [(1, 2, 4, 12), (1, 3, 9)]:
            for n in (2, 3):
                for alpha in (1, 5, 9, 21):
                    inp = PrincipalInput.from_monomial(
                        variable(n, n, alpha), DSequence(chain)
                    )
                    assert socle_max_degree(inp) == reg_formula(inp).value - 1

    @pytest.mark.parametrize("text", ["x2^9*x3^16", "x2^16*x3^9", "x2^5*x3^5"])
    def test_two_blocks(self, text):
        from dfixed import socle_max_degree

        inp = make_input(text, 3)
        assert socle_max_degree(inp) == inp.reg_term(inp.r) - 1


class TestCorners:
    def test_pure_power_single_corner(self):
        got = corners(make_input("x3^21", 3))
        assert len(got) == 1
        corner = got[0]
        assert (corner.position, corner.row, corner.beta) == (3, 33, 1)
        assert corner.survives

    def test_two_block_candidates(self):
        got = corners(make_input("x2^16*x3^9", 3))
        assert [(c.position, c.row) for c in got] == [(3, 29), (2, 22)]
        assert [c.survives for c in got] == [True, False]

    def test_rows_are_reg_terms_minus_one(self):
        inp = make_input("x2^16*x3^9", 3)
        got = {c.position: c.row for c in corners(inp)}
        assert got == {2: inp.reg_term(1) - 1, 3: inp.reg_term(2) - 1}

    def test_power_of_maximal(self):
        inp = PrincipalInput.from_monomial(variable(3, 3, 4), DSequence([1]))
        (corner,) = corners(inp)
        assert (corner.position, corner.row) == (3, 3)
        assert corner.beta == comb(3 + 4 - 2, 2)

    def test_report_carries_corners(self):
        rep = reg_report_formula(make_input("x3^21", 3))
        assert rep.value == 34
        assert rep.corners and rep.corners[0].row == 33
        record = rep.to_record()
        assert record["corners"][0]["position"] == 3

    def test_dominant_inner_block_keeps_both_corners(self):
        # x2^20*x3: the first block's term (23) beats the last one's (21),
        # so the regularity is witnessed at an inner chain step and both
        # candidates are genuine corners
        from dfixed import betti_table, extremal_from_betti, reg_from_betti

        inp = make_input("x2^20*x3", 3)
        rep = reg_formula(inp)
        assert rep.value == 23 and rep.d_values == (23, 21)
        ideal = principal_ideal(inp)
        assert reg_sequential(ideal).value == 23
        got = corners(inp)
        assert [(c.position, c.row, c.survives) for c in got] == [
            (3, 20, True),
            (2, 22, True),
        ]
        table = betti_table(ideal, reg_bound=23)
        assert reg_from_betti(table) == 23
        assert extremal_from_betti(table) == sorted(
            (c.position, c.row, c.beta) for c in got
        )
