import pytest

from dfixed import (
    DSequence,
    MonomialIdeal,
    PrincipalInput,
    closure,
    is_borel_type,
    is_dfixed,
    is_stable,
    min_stable_truncation,
    parse_monomial,
    prefix_frobenius,
    principal_ideal,
    sequential_chain,
    variable,
)

D = DSequence([1, 2, 4, 12])


def make_input(text, n, d=D):
    return PrincipalInput.from_monomial(parse_monomial(text, n), d)


class TestPrincipalInput:
    def test_digit_matrix(self):
        inp = make_input("x2^9*x3^16", 3)
        assert inp.r == 2
        assert inp.digits(1) == (1, 0, 2, 0)
        assert inp.digits(2) == (0, 0, 1, 1)
        assert inp.top_digit(1) == 2
        assert inp.top_digit(2) == 3

    def test_reg_terms(self):
        inp = make_input("x2^16*x3^9", 3)
        assert inp.reg_term(1) == 23
        assert inp.reg_term(2) == 30

    def test_bad_blocks(self):
        with pytest.raises(ValueError):
            PrincipalInput(d=D, n=3, blocks=((2, 4), (2, 1)))
        with pytest.raises(ValueError):
            PrincipalInput(d=D, n=2, blocks=((3, 4),))
        with pytest.raises(ValueError):
            PrincipalInput(d=D, n=2, blocks=((1, 0),))

    def test_monomial_round_trip(self):
        u = parse_monomial("x1^2*x3^5", 3)
        assert PrincipalInput.from_monomial(u, D).monomial() == u


class TestProductFormula:
    def test_pure_power_expansion(self):
        I = principal_ideal(make_input("x3^21", 3))
        expected = (
            prefix_frobenius(3, 1, 3)
            * prefix_frobenius(3, 4, 3) ** 2
            * prefix_frobenius(3, 12, 3)
        )
        assert I == expected
        assert len(I.gens) == 54

    def test_multi_block_expansion(self):
        I = principal_ideal(make_input("x1^2*x2^9*x3^16", 3))
        expected = (
            MonomialIdeal(3, [parse_monomial("x1^2", 3)])
            * prefix_frobenius(2, 1, 3)
            * prefix_frobenius(2, 4, 3) ** 2
            * prefix_frobenius(3, 4, 3)
            * prefix_frobenius(3, 12, 3)
        )
        assert I == expected

    def test_trivial_chain_gives_power_of_maximal(self):
        inp = PrincipalInput.from_monomial(variable(2, 2, 3), DSequence([1]))
        assert principal_ideal(inp) == prefix_frobenius(2, 1, 2) ** 3


class TestClosure:
    def test_matches_product_formula(self):
        u = parse_monomial("x3^21", 3)
        assert closure([u], D) == principal_ideal(make_input("x3^21", 3))

    def test_first_variable_is_already_closed(self):
        u = parse_monomial("x1^5", 3)
        assert closure([u], D) == MonomialIdeal(3, [u])

    def test_single_step_exchange(self):
        u = parse_monomial("x2", 2)
        assert closure([u], D) == prefix_frobenius(2, 1, 2)

    def test_multi_generator_output_is_dfixed_and_borel(self):
        gens = [parse_monomial("x2^2", 3), parse_monomial("x3", 3)]
        C = closure(gens, D)
        assert is_dfixed(C, D)
        assert is_borel_type(C)
        again = closure(list(C.gens), D)
        assert again == C

    def test_needs_generators(self):
        with pytest.raises(ValueError):
            closure([], D)


class TestPredicates:
    def test_maximal_ideal_is_dfixed(self):
        assert is_dfixed(prefix_frobenius(2, 1, 2), D)

    def test_offset_variable_is_not(self):
        assert not is_dfixed(MonomialIdeal(2, [parse_monomial("x2", 2)]), D)

    def test_products_are_dfixed(self):
        for text in ("x3^21", "x2^9*x3^16", "x1^2*x2^9*x3^16"):
            assert is_dfixed(principal_ideal(make_input(text, 3)), D)

    def test_stability(self):
        assert is_stable(prefix_frobenius(2, 1, 2) ** 2)
        assert not is_stable(MonomialIdeal(2, [parse_monomial("x2^2", 2)]))

    def test_truncation_at_reg_is_stable(self):
        I = principal_ideal(make_input("x3^21", 3))
        assert is_stable(I.truncate(34))
        assert not is_stable(I.truncate(33))

    def test_borel_type(self):
        assert is_borel_type(MonomialIdeal.unit(2))
        assert not is_borel_type(MonomialIdeal(2, [parse_monomial("x2", 2)]))
        assert is_borel_type(principal_ideal(make_input("x2^9*x3^16", 3)))

    def test_zero_ideal_rejected(self):
        for pred in (is_stable, is_borel_type):
            with pytest.raises(ValueError):
                pred(MonomialIdeal.zero(2))
        with pytest.raises(ValueError):
            is_dfixed(MonomialIdeal.zero(2), D)


class TestSequentialChain:
    def test_two_block_chain(self):
        I = principal_ideal(make_input("x2^9*x3^16", 3))
        chain = sequential_chain(I)
        assert chain.length == 2
        assert chain.pivots == (3, 2)
        expected_step = principal_ideal(make_input("x2^9", 2)).extend(3)
        assert chain.ideals[1] == expected_step
        assert chain.ideals[2].is_unit

    def test_chain_matches_partial_products(self):
        # dropping trailing blocks one at a time reproduces the chain
        inp = make_input("x2^5*x3^5", 3)
        I = principal_ideal(inp)
        chain = sequential_chain(I)
        assert chain.length == 2
        partial = principal_ideal(make_input("x2^5", 2)).extend(3)
        assert chain.ideals[1] == partial

    def test_pure_power_collapses_in_one_step(self):
        I = principal_ideal(make_input("x3^21", 3))
        chain = sequential_chain(I)
        assert chain.length == 1
        assert chain.pivots == (3,)

    def test_single_variable_ring(self):
        I = MonomialIdeal(1, [variable(1, 1, 4)])
        chain = sequential_chain(I)
        assert chain.length == 1
        assert chain.pivots == (1,)

    def test_quotient_data_lives_in_subring(self):
        chain = sequential_chain(principal_ideal(make_input("x2^9*x3^16", 3)))
        (j0, j0sat), (j1, j1sat) = chain.quotients
        assert j0.n == 3 and j0sat.n == 3
        assert j1.n == 2 and j1sat.n == 2
        assert j1sat.contains_ideal(j1)

    def test_rejects_unit_and_zero(self):
        with pytest.raises(ValueError):
            sequential_chain(MonomialIdeal.unit(2))
        with pytest.raises(ValueError):
            sequential_chain(MonomialIdeal.zero(2))


class TestStableTruncation:
    def test_worked_example(self):
        I = principal_ideal(make_input("x3^21", 3))
        assert min_stable_truncation(I) == 34

    def test_already_stable_at_generation_degree(self):
        for k in (1, 2, 3):
            I = prefix_frobenius(2, 1, 2) ** k
            assert min_stable_truncation(I) == k

    def test_single_variable(self):
        I = MonomialIdeal(1, [variable(1, 1, 6)])
        assert min_stable_truncation(I) == 6

    def test_no_stable_truncation_errors(self):
        I = MonomialIdeal(2, [parse_monomial("x2", 2)])
        with pytest.raises(ValueError, match="no stable truncation"):
            min_stable_truncation(I)
