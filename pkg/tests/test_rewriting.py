import random

import pytest

from wordproblem.presentations import catalog
from wordproblem.rewriting import (
    DerivationTrace,
    RewriteSystem,
    SystemKind,
    apply_rule,
    format_system,
    from_semigroup,
    parse_system,
    replay_trace,
    rewrite_bounded,
    search_equivalence,
    successors,
    thue_closure,
)
from wordproblem.search import SearchStatus

CEIJTIN = from_semigroup(catalog("ceijtin"))


def naive_successors(w, sys):
    """Independent scanner: try every rule at every position by slicing."""
    out = []
    for pos in range(len(w)):
        for idx, (lhs, rhs) in enumerate(sys.rules):
            if w[pos : pos + len(lhs)] == lhs:
                out.append((w[:pos] + rhs + w[pos + len(lhs):], idx, pos))
    dedup = []
    seen = set()
    for word, idx, pos in out:
        if word not in seen:
            seen.add(word)
            dedup.append((word, idx, pos))
    return dedup


def random_system(rng, alphabet_size, n_rules, max_side, length_preserving=False):
    letters = [chr(ord("a") + i) for i in range(alphabet_size)]
    rules = []
    while len(rules) < n_rules:
        llen = rng.randint(1, max_side)
        rlen = llen if length_preserving else rng.randint(0, max_side)
        lhs = "".join(rng.choice(letters) for _ in range(llen))
        rhs = "".join(rng.choice(letters) for _ in range(rlen))
        if (lhs, rhs) not in rules:
            rules.append((lhs, rhs))
    return RewriteSystem(alphabet_size, tuple(rules))


class TestApplyRule:
    def test_commuting_letters(self):
        sys = RewriteSystem(5, (("ac", "ca"),))
        assert apply_rule("ac", sys, 0, 0) == "ca"

    def test_erasing_prefix(self):
        sys = RewriteSystem(5, (("caaa", "aaa"),))
        assert apply_rule("caaa", sys, 0, 0) == "aaa"

    def test_identity_rule(self):
        sys = RewriteSystem(1, (("a", "a"),))
        assert apply_rule("aa", sys, 0, 1) == "aa"

    def test_errors(self):
        sys = RewriteSystem(2, (("ab", "ba"),))
        with pytest.raises(IndexError):
            apply_rule("ab", sys, 5, 0)
        with pytest.raises(ValueError):
            apply_rule("ab", sys, 0, 1)


class TestSuccessors:
    def test_ceijtin_examples(self):
        results = {word for word, _, _ in successors("ac", CEIJTIN)}
        assert "ca" in results
        assert successors("", CEIJTIN) == []
        results = {word for word, _, _ in successors("aaa", CEIJTIN)}
        assert results == {"caaa", "daaa"}

    def test_agrees_with_naive_scanner(self):
        rng = random.Random(31)
        for _ in range(200):
            sys = random_system(rng, 3, rng.randint(1, 4), 3)
            w = "".join(rng.choice("abc") for _ in range(rng.randint(0, 8)))
            assert successors(w, sys) == naive_successors(w, sys)

    def test_deterministic_order(self):
        sys = RewriteSystem(2, (("a", "b"), ("aa", "b")))
        assert successors("aa", sys) == [("ba", 0, 0), ("b", 1, 0), ("ab", 0, 1)]


class TestThueClosure:
    def test_single_swap(self):
        sys = RewriteSystem(3, (("ab", "c"),))
        closed = thue_closure(sys)
        assert closed.rules == (("ab", "c"), ("c", "ab"))
        assert closed.kind is SystemKind.THUE

    def test_symmetric_fixed_point(self):
        sys = RewriteSystem(2, (("ab", "ba"), ("ba", "ab")))
        assert thue_closure(sys).rules == sys.rules

    def test_ceijtin_rule_count(self):
        assert len(CEIJTIN.rules) == 18

    def test_thue_invariant_enforced(self):
        with pytest.raises(ValueError):
            RewriteSystem(2, (("ab", "ba"),), SystemKind.THUE)

    def test_empty_lhs_rejected(self):
        with pytest.raises(ValueError):
            RewriteSystem(2, (("", "a"),))


class TestSearchEquivalence:
    def test_one_step_proofs(self):
        for source, target in (("caaa", "aaa"), ("ac", "ca")):
            outcome = search_equivalence(source, target, CEIJTIN, 10)
            assert outcome.status is SearchStatus.PROVEN
            assert len(outcome.trace.steps) == 1
            assert replay_trace(CEIJTIN, outcome.trace) == target

    def test_reflexivity_with_minimal_budget(self):
        outcome = search_equivalence("ab", "ab", CEIJTIN, 1)
        assert outcome.status is SearchStatus.PROVEN
        assert outcome.trace.steps == ()

    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError):
            search_equivalence("a", "b", CEIJTIN, 0)

    def test_singleton_class_refuted(self):
        # no rule applies to "b", so its class is fully enumerated at once
        outcome = search_equivalence("aaa", "b", CEIJTIN, 1000)
        assert outcome.status is SearchStatus.REFUTED_EXHAUSTED

    def test_budget_exhaustion(self):
        outcome = search_equivalence("aaa", "aaaa", CEIJTIN, 200)
        assert outcome.status is SearchStatus.BUDGET_EXHAUSTED
        assert outcome.stats.expanded == 200

    def test_symmetry_of_status_and_stats(self):
        rng = random.Random(32)
        pairs = [("aaa", "b"), ("caaa", "aaa"), ("aaa", "aaaa"), ("ce", "eca")]
        for _ in range(30):
            length = rng.randint(1, 5)
            pairs.append(
                (
                    "".join(rng.choice("abcde") for _ in range(length)),
                    "".join(rng.choice("abcde") for _ in range(rng.randint(1, 5))),
                )
            )
        for budget in (1, 7, 50, 400):
            for u, v in pairs:
                fwd = search_equivalence(u, v, CEIJTIN, budget)
                bwd = search_equivalence(v, u, CEIJTIN, budget)
                assert fwd.status == bwd.status
                assert fwd.stats == bwd.stats

    def test_proven_traces_replay(self):
        rng = random.Random(33)
        for _ in range(100):
            sys = thue_closure(random_system(rng, 3, 3, 3, length_preserving=True))
            u = "".join(rng.choice("abc") for _ in range(rng.randint(0, 4)))
            v = "".join(rng.choice("abc") for _ in range(rng.randint(0, 4)))
            outcome = search_equivalence(u, v, sys, 3000)
            if outcome.status is SearchStatus.PROVEN:
                assert outcome.trace.start == u
                assert replay_trace(sys, outcome.trace) == v

    def test_length_preserving_never_proves_across_lengths(self):
        rng = random.Random(34)
        for _ in range(100):
            sys = thue_closure(random_system(rng, 3, 3, 3, length_preserving=True))
            u = "".join(rng.choice("abc") for _ in range(3))
            v = "".join(rng.choice("abc") for _ in range(5))
            outcome = search_equivalence(u, v, sys, 3000)
            assert outcome.status is not SearchStatus.PROVEN

    def test_semithue_is_forward_only(self):
        sys = RewriteSystem(3, (("ab", "c"),))
        fwd = search_equivalence("ab", "c", sys, 100)
        assert fwd.status is SearchStatus.PROVEN
        bwd = search_equivalence("c", "ab", sys, 100)
        assert bwd.status is SearchStatus.REFUTED_EXHAUSTED

    def test_determinism(self):
        first = search_equivalence("cdca", "cdcae", CEIJTIN, 500)
        second = search_equivalence("cdca", "cdcae", CEIJTIN, 500)
        assert first == second


class TestReplay:
    def test_replay_checks_occurrences(self):
        trace = DerivationTrace("ac", ((0, 1),), "ca")
        with pytest.raises(ValueError):
            replay_trace(CEIJTIN, trace)

    def test_replay_checks_end(self):
        trace = DerivationTrace("ac", ((0, 0),), "ac")
        with pytest.raises(ValueError):
            replay_trace(CEIJTIN, trace)


class TestRewriteBounded:
    def test_runs_until_fixed_point(self):
        sys = RewriteSystem(5, (("caaa", "aaa"), ("daaa", "aaa")))
        trace = rewrite_bounded("cdaaa", sys, 10)
        assert trace.end == "aaa"
        assert replay_trace(sys, trace) == "aaa"

    def test_respects_step_limit(self):
        sys = RewriteSystem(1, (("a", "aa"),))
        trace = rewrite_bounded("a", sys, 5)
        assert len(trace.steps) == 5


class TestTextFormat:
    def test_round_trip(self):
        for sys in (CEIJTIN, RewriteSystem(3, (("ab", ""),))):
            assert parse_system(format_system(sys)) == sys

    def test_empty_rhs_as_one(self):
        sys = parse_system("alpha: a b\nrule: ab -> 1\n")
        assert sys.rules == (("ab", ""),)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            parse_system("alpha: a b\nrule: 1 -> a\n")
        with pytest.raises(ValueError):
            parse_system("alpha: a b\nrule: ax -> a\n")
        with pytest.raises(ValueError):
            parse_system("rule: a -> b\n")
        with pytest.raises(ValueError):
            parse_system("alpha: a b\nkind: sideways\n")
