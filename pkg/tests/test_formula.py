import pytest
from hypothesis import given

from core.errors import AtomRangeError, ConfigurationError, FormulaSyntaxError
from core.formula import (
    Atom,
    AtomUniverse,
    BigAnd,
    BigOr,
    Neg,
    biconditional_splits,
    canonical,
    check_atoms,
    compare,
    conj,
    conjunction_splits,
    diagram,
    disj,
    disjunction_splits,
    iff,
    implication_splits,
    implies,
    literals,
    parse_formula,
    print_formula,
    subformulas,
)
from strategies import formulas, universe_and_formula

U2 = AtomUniverse(2)
U3 = AtomUniverse(3)
a0, a1, a2 = Atom(0), Atom(1), Atom(2)


class TestCanonicalForm:
    def test_arguments_are_sorted_and_deduplicated(self):
        assert BigOr([a1, a0, a1]) == BigOr([a0, a1])
        assert BigOr([a1, a0, a1]).key == "(or a0 a1)"
        assert len(BigAnd([a2, a2]).args) == 1

    def test_negations_sort_before_atoms(self):
        assert BigOr([a0, Neg(a0)]).key == "(or (not a0) a0)"

    def test_empty_connectives(self):
        assert BigOr([]).key == "(or)"
        assert BigAnd([]).key == "(and)"

    def test_bad_nodes(self):
        with pytest.raises(ValueError):
            Atom(-1)
        with pytest.raises(TypeError):
            Neg("a0")

    def test_universe_rejects_negative_mu(self):
        with pytest.raises(ConfigurationError):
            AtomUniverse(-1)

    @given(universe_and_formula())
    def test_canonical_is_identity_on_built_formulas(self, pair):
        _, formula = pair
        assert canonical(formula) == formula
        assert hash(canonical(formula)) == hash(formula)

    @given(universe_and_formula())
    def test_printed_text_parses_back(self, pair):
        universe, formula = pair
        assert parse_formula(print_formula(formula), universe) == formula


class TestParsing:
    def test_sugar(self):
        assert parse_formula("(imp a0 a1)", U2) == BigOr([Neg(a0), a1])
        assert parse_formula("(iff a0 a1)", U2) == iff(a0, a1)
        assert parse_formula("(and a1 a0 a1)", U2) == BigAnd([a0, a1])

    def test_whitespace_is_free(self):
        assert parse_formula("  ( or\n a0\ta1 )  ", U2) == disj(a0, a1)

    @pytest.mark.parametrize(
        "text",
        ["", "(", "(or a0", "a0)", "(xor a0 a1)", "(not a0 a1)", "(imp a0)", "b0", "()", "a0 a1"],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(FormulaSyntaxError):
            parse_formula(text, U2)

    def test_syntax_error_position(self):
        with pytest.raises(FormulaSyntaxError) as caught:
            parse_formula("(or a0 (foo a1))", U2)
        assert caught.value.position == 8

    def test_atom_out_of_range(self):
        with pytest.raises(AtomRangeError):
            parse_formula("(or a0 a2)", U2)

    def test_check_atoms(self):
        check_atoms(BigOr([a0, a1]), U2)
        with pytest.raises(AtomRangeError):
            check_atoms(Neg(a2), U2)


class TestOrder:
    @given(formulas(3), formulas(3))
    def test_compare_is_antisymmetric(self, left, right):
        assert compare(left, right) == -compare(right, left)
        assert (compare(left, right) == 0) == (left == right)

    def test_literals_order(self):
        assert [str(f) for f in literals(U2)] == ["(not a0)", "(not a1)", "a0", "a1"]


class TestStructure:
    def test_atoms_and_depth(self):
        formula = BigAnd([Neg(a2), BigOr([a0])])
        assert formula.atoms() == frozenset({0, 2})
        assert formula.depth() == 2
        assert a0.depth() == 0

    def test_subformulas_preorder(self):
        nodes = list(subformulas(BigOr([a0, Neg(a1)])))
        assert nodes == [BigOr([a0, Neg(a1)]), Neg(a1), a1, a0]

    def test_diagram(self):
        assert diagram([0], U2) == BigAnd([a0, Neg(a1)])
        assert diagram([], U2) == BigAnd([Neg(a0), Neg(a1)])


class TestSplits:
    def test_implication_split_round_trips(self):
        assert (a0, a1) in implication_splits(implies(a0, a1))

    def test_ambiguous_implication(self):
        splits = implication_splits(BigOr([Neg(a0), Neg(a1)]))
        assert set(splits) == {(a0, Neg(a1)), (a1, Neg(a0))}

    def test_collapsed_implication(self):
        collapsed = implies(a0, Neg(a0))
        assert collapsed == BigOr([Neg(a0)])
        assert implication_splits(collapsed) == [(a0, Neg(a0))]

    def test_non_implications(self):
        assert implication_splits(a0) == []
        assert implication_splits(BigOr([a0, a1])) == []
        assert implication_splits(BigOr([Neg(a0), a1, a2])) == []

    def test_binary_splits(self):
        assert conjunction_splits(conj(a0, a0)) == [(a0, a0)]
        assert set(disjunction_splits(disj(a0, a1))) == {(a0, a1), (a1, a0)}
        assert conjunction_splits(BigAnd([a0, a1, a2])) == []

    def test_biconditional_splits(self):
        assert (a0, a1) in biconditional_splits(iff(a0, a1))
        assert (a1, a0) in biconditional_splits(iff(a0, a1))
        assert biconditional_splits(iff(a0, a0)) == [(a0, a0)]
        assert biconditional_splits(conj(a0, a1)) == []

    @given(formulas(3, 4), formulas(3, 4))
    def test_every_implication_is_recognized(self, left, right):
        assert (left, right) in implication_splits(implies(left, right))

    @given(formulas(3, 4), formulas(3, 4))
    def test_every_biconditional_is_recognized(self, left, right):
        assert (left, right) in biconditional_splits(iff(left, right))
