from fractions import Fraction

import pytest

from wordproblem.presentations import (
    GroupPresentation,
    SemigroupPresentation,
    catalog,
    format_presentation,
    max_piece_ratio,
    parse_presentation,
    symmetrize,
)
from wordproblem.words import format_word, invert, is_cyclically_reduced, parse_word


def w(text):
    return parse_word(text)


def oracle_max_piece_ratio(sym_words):
    """Independent brute force: longest common prefix over all pairs of
    distinct symmetrized relators, as plain strings."""
    texts = [format_word(u) for u in sym_words]
    best = Fraction(0)
    for i, u in enumerate(texts):
        for j, v in enumerate(texts):
            if i == j:
                continue
            k = 0
            while k < min(len(u), len(v)) and u[k] == v[k]:
                k += 1
            if k:
                best = max(best, Fraction(k, min(len(u), len(v))))
    return best


class TestSymmetrize:
    def test_shift_invariant_relator(self):
        p = GroupPresentation(1, (w("aaa"),))
        assert set(symmetrize(p).words) == {w("aaa"), w("AAA")}

    def test_torus_has_eight(self):
        sym = symmetrize(catalog("torus"))
        assert len(sym.words) == 8
        assert len(set(sym.words)) == 8

    def test_genus_two_has_sixteen(self):
        sym = symmetrize(catalog("surface", genus=2))
        assert len(sym.words) == 16

    def test_closure_and_size_bound(self):
        for name, kwargs in (("surface", {"genus": 2}), ("dihedral5", {}), ("trefoil", {})):
            p = catalog(name, **kwargs)
            sym = symmetrize(p)
            assert len(sym.words) <= 2 * sum(len(r) for r in p.relators)
            words = set(sym.words)
            for u in words:
                assert is_cyclically_reduced(u)
                assert invert(u) in words
                assert u[1:] + u[:1] in words


class TestMaxPieceRatio:
    def test_surface_values(self):
        for g in (2, 3, 4):
            sym = symmetrize(catalog("surface", genus=g))
            ratio = max_piece_ratio(sym)
            assert ratio == Fraction(1, 4 * g)
            assert ratio == oracle_max_piece_ratio(sym.words)
            assert ratio < Fraction(1, 6)

    def test_torus_fails_small_cancellation(self):
        sym = symmetrize(catalog("torus"))
        ratio = max_piece_ratio(sym)
        assert ratio == Fraction(1, 4)
        assert ratio == oracle_max_piece_ratio(sym.words)
        assert not ratio < Fraction(1, 6)

    def test_proper_power_relator_against_oracle(self):
        # (ab)^7: all four symmetrized words differ in their first letter,
        # so the prefix formulation finds no piece at all
        p = GroupPresentation(2, (w("ab" * 7),))
        sym = symmetrize(p)
        assert len(sym.words) == 4
        ratio = max_piece_ratio(sym)
        assert ratio == oracle_max_piece_ratio(sym.words) == Fraction(0)

    def test_empty_set_rejected(self):
        from wordproblem.presentations import SymmetrizedRelators

        with pytest.raises(ValueError):
            max_piece_ratio(SymmetrizedRelators(()))


class TestCatalog:
    def test_surface_two(self):
        p = catalog("surface", genus=2)
        assert p.n_gens == 4
        assert len(p.relators) == 1
        assert len(p.relators[0]) == 8
        assert format_word(p.relators[0]) == "abABcdCD"

    def test_dihedral5(self):
        p = catalog("dihedral5")
        assert [format_word(r) for r in p.relators] == ["aaaaa", "bb", "baba"]

    def test_ceijtin(self):
        p = catalog("ceijtin")
        assert isinstance(p, SemigroupPresentation)
        assert p.alphabet_size == 5
        assert p.equations == (
            ("ac", "ca"),
            ("ad", "da"),
            ("bc", "cb"),
            ("bd", "db"),
            ("ce", "eca"),
            ("de", "edb"),
            ("cdca", "cdcae"),
            ("caaa", "aaa"),
            ("daaa", "aaa"),
        )

    def test_higman_truncated_single_exponent(self):
        p = catalog("higman_truncated", exponents=(1,))
        assert [format_word(r) for r in p.relators] == ["AbaCDc"]
        assert len(p.relators[0]) == 6

    def test_trefoil(self):
        p = catalog("trefoil")
        assert [format_word(r) for r in p.relators] == ["aaBBB"]

    def test_free_abelian(self):
        p = catalog("free_abelian", rank=3)
        assert p.n_gens == 3
        assert len(p.relators) == 3

    def test_unknown_and_invalid(self):
        with pytest.raises(ValueError):
            catalog("nonsense")
        with pytest.raises(ValueError):
            catalog("surface", genus=0)
        with pytest.raises(ValueError):
            catalog("dihedral5", genus=3)


class TestNormalization:
    def test_relators_are_normalized(self):
        p = GroupPresentation(2, (w("abABA" + "a"),))  # not cyclically reduced
        for r in p.relators:
            assert is_cyclically_reduced(r)

    def test_empty_relators_are_dropped(self):
        p = GroupPresentation(2, (w("aA"), w("ab")))
        assert [format_word(r) for r in p.relators] == ["ab"]

    def test_out_of_range_relator_letter(self):
        with pytest.raises(ValueError):
            GroupPresentation(1, (w("ab"),))

    def test_useless_equation_flagged(self):
        p = SemigroupPresentation(2, (("ab", "ab"), ("a", "b")))
        assert p.trivial_equations() == [0]


class TestTextFormat:
    def test_group_round_trip(self):
        for name, kwargs in (
            ("surface", {"genus": 2}),
            ("torus", {}),
            ("dihedral5", {}),
            ("free_abelian", {"rank": 3}),
            ("trefoil", {}),
            ("higman_truncated", {"exponents": (1, 2)}),
        ):
            p = catalog(name, **kwargs)
            assert parse_presentation(format_presentation(p)) == p

    def test_semigroup_round_trip(self):
        p = catalog("ceijtin")
        assert parse_presentation(format_presentation(p)) == p

    def test_rejects_unknown_letters(self):
        with pytest.raises(ValueError):
            parse_presentation("gens: a b\nrel: abc\n")
        with pytest.raises(ValueError):
            parse_presentation("gens: a b\neq: ax = a\n")

    def test_rejects_non_consecutive_generators(self):
        with pytest.raises(ValueError):
            parse_presentation("gens: x y\nrel: xy\n")

    def test_rejects_mixed_kinds(self):
        with pytest.raises(ValueError):
            parse_presentation("gens: a b\nrel: ab\neq: a = b\n")

    def test_comments_and_blank_lines(self):
        p = parse_presentation("# a comment\n\ngens: a\nrel: aaa  # inline\n")
        assert p == GroupPresentation(1, (w("aaa"),))
