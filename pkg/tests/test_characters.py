from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

import oracles
from amenability import algebra as alg
from amenability.characters import (
    CharacterSearchOverflow,
    InvalidCharacter,
    characters_of,
    declared_only,
    find_rational_characters,
    is_character,
)
from amenability.corpus import by_name, corpus
from strategies import algebras


def _rational_oracle(a):
    return {tuple(Fraction(int(x.p), int(x.q)) for x in v)
            for v in oracles.characters(a) if all(x.is_rational for x in v)}


@pytest.mark.parametrize("entry", [e for e in corpus() if e.algebra.dim <= 6], ids=lambda e: e.name)
def test_corpus_matches_polynomial_solve(entry):
    a = entry.algebra
    found = find_rational_characters(a)
    assert set(found.characters) == _rational_oracle(a)
    assert found.complete == (len(found) == len(oracles.characters(a)))


@pytest.mark.parametrize("name,count", [("Z3", 0), ("Q2", 2), ("T2", 2), ("M2", 0), ("QC2", 2), ("Qx4", 1)])
def test_counts(name, count):
    cs = characters_of(by_name(name))
    assert len(cs) == count and cs.complete


def test_triangular_characters_are_diagonal_evaluations():
    # basis e11, e12, e22
    assert characters_of(by_name("T2")).characters == ((0, 0, 1), (1, 0, 0))


def test_quadratic_field_is_incomplete():
    cs = characters_of(by_name("Qsqrt2"))
    assert cs.characters == () and not cs.complete and cs.nonempty is None


@settings(max_examples=25, deadline=None)
@given(algebras(4))
def test_generated_against_polynomial_solve(a):
    found = find_rational_characters(a)
    for phi in found:
        assert is_character(a, phi) and any(phi)
    try:
        allchars = oracles.characters(a)
    except (ValueError, NotImplementedError):
        return
    rational = {v for v in allchars if all(x.is_rational for x in v)}
    assert len(found) == len(rational)
    assert found.complete == (len(found) == len(allchars))


def test_tensor_of_pointwise_has_four():
    assert len(characters_of(alg.tensor(by_name("Q2"), by_name("Q2")))) == 4


def test_zero_functional_is_in_delta_zero():
    assert is_character(by_name("M2"), (0, 0, 0, 0))


def test_overflow_cap():
    with pytest.raises(CharacterSearchOverflow) as info:
        find_rational_characters(by_name("Q3"), cap=2)
    assert "2" in str(info.value)


class TestDeclared:
    def test_bad_declaration_names_index(self):
        a = by_name("Q2").with_characters([(1, 0), (1, 1)], complete=False)
        with pytest.raises(InvalidCharacter) as info:
            declared_only(a)
        assert info.value.index == 1

    def test_zero_declaration_rejected(self):
        a = by_name("Q2").with_characters([(0, 0)], complete=False)
        with pytest.raises(InvalidCharacter):
            characters_of(a)

    def test_declared_completeness_overrides(self):
        a = by_name("Qsqrt2").with_characters([], complete=True)
        assert characters_of(a).complete

    def test_declared_only_skips_search(self):
        a = by_name("Q2").with_characters([(1, 0)], complete=False)
        cs = declared_only(a)
        assert cs.characters == ((1, 0),) and not cs.complete

    def test_merge_with_search(self):
        a = by_name("Q2").with_characters([(1, 0)], complete=False)
        cs = characters_of(a)
        assert len(cs) == 2 and cs.complete


def test_sympy_solution_counts_are_sane():
    # guard on the oracle itself: Q[sqrt 2] has exactly the two embeddings
    assert len(oracles.characters(by_name("Qsqrt2"))) == 2
    assert {v[1] for v in oracles.characters(by_name("Qsqrt2"))} == {sp.sqrt(2), -sp.sqrt(2)}


class TestConstructionInvariants:
    @settings(max_examples=20, deadline=None)
    @given(algebras(4), algebras(4))
    def test_direct_sum(self, a, b):
        ca, cb = characters_of(a).characters, characters_of(b).characters
        expected = {tuple(phi) + (0,) * b.dim for phi in ca} | {(0,) * a.dim + tuple(psi) for psi in cb}
        assert set(characters_of(alg.direct_sum(a, b)).characters) == expected

    @settings(max_examples=20, deadline=None)
    @given(algebras(4), algebras(4))
    def test_lau_product(self, a, b):
        cb = characters_of(b).characters
        if not cb:
            return
        theta = cb[0]
        found = set(characters_of(alg.lau_product(a, b, theta)).characters)
        assert (0,) * a.dim + tuple(theta) in found
        for phi in characters_of(a).characters:
            assert tuple(phi) + tuple(theta) in found

    @settings(max_examples=15, deadline=None)
    @given(algebras(3), algebras(3))
    def test_tensor(self, a, b):
        found = set(characters_of(alg.tensor(a, b)).characters)
        for phi in characters_of(a).characters:
            for psi in characters_of(b).characters:
                assert tuple(x * y for x in phi for y in psi) in found
