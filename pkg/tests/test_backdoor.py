import pytest

from afbackdoor import (
    ArgumentationFramework,
    FragmentClass,
    detect,
    detect_acyc,
    detect_bip,
    detect_bruteforce,
    detect_sym,
    distance,
    recognize,
)

from conftest import random_af

SPECIALIZED = (FragmentClass.ACYC, FragmentClass.SYM, FragmentClass.BIP)


class TestBruteforce:
    def test_five_acyc(self, five_af):
        found = detect_bruteforce(five_af, FragmentClass.ACYC, 2)
        assert found.sorted_members() == ("2", "4")
        assert found.certified_minimum
        assert detect_bruteforce(five_af, FragmentClass.ACYC, 1) is None

    def test_already_in_class(self):
        af = ArgumentationFramework("ab", [("a", "b")])
        assert detect_bruteforce(af, FragmentClass.ACYC, 5).members == frozenset()

    def test_five_bip(self, five_af):
        assert detect_bruteforce(five_af, FragmentClass.BIP, 1).members == {"2"}

    def test_negative_budget_rejected(self, five_af):
        with pytest.raises(ValueError):
            detect_bruteforce(five_af, FragmentClass.ACYC, -1)


class TestSpecialized:
    def test_sym_five(self, five_af):
        # the asymmetric pairs form a triangle: two vertices are needed,
        # and the lexicographic tie-break picks {2,4}
        assert detect_sym(five_af, 2).members == {"2", "4"}
        assert detect_sym(five_af, 1) is None
        assert detect_sym(five_af, 5).members == {"2", "4"}

    def test_sym_on_symmetric_framework(self):
        af = ArgumentationFramework("ab", [("a", "b"), ("b", "a")])
        assert detect_sym(af, 0).members == frozenset()

    def test_acyc_five(self, five_af):
        assert detect_acyc(five_af, 2).members == {"2", "4"}
        assert detect_acyc(five_af, 1) is None

    def test_acyc_two_cycle_lexicographic(self):
        af = ArgumentationFramework("ab", [("a", "b"), ("b", "a")])
        assert detect_acyc(af, 1).members == {"a"}

    def test_acyc_on_acyclic_framework(self):
        af = ArgumentationFramework("abc", [("a", "b"), ("b", "c")])
        assert detect_acyc(af, 0).members == frozenset()

    def test_bip_five(self, five_af):
        assert detect_bip(five_af, 1).members == {"2"}

    def test_bip_on_bipartite_framework(self):
        af = ArgumentationFramework("ab", [("a", "b")])
        assert detect_bip(af, 0).members == frozenset()

    def test_bip_triangle_single_vertex(self):
        af = ArgumentationFramework(
            "abc", [("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"),
                    ("c", "a"), ("a", "c")])
        assert detect_bip(af, 1).members == {"a"}

    def test_bip_forces_self_attackers(self):
        af = ArgumentationFramework("ab", [("a", "a"), ("a", "b")])
        assert detect_bip(af, 1).members == {"a"}
        assert detect_bip(af, 0) is None


class TestDetectDispatch:
    def test_noeven_goes_through_bruteforce(self, five_af):
        found = detect(five_af, FragmentClass.NOEVEN, 2)
        assert found.members == {"1", "3"}
        assert recognize(five_af.without(found.members), FragmentClass.NOEVEN)

    def test_acyc_zero_budget_on_acyclic(self):
        af = ArgumentationFramework("ab", [("a", "b")])
        assert detect(af, FragmentClass.ACYC, 0).members == frozenset()

    def test_sym_generous_budget(self, five_af):
        assert detect(five_af, FragmentClass.SYM, 5).size == 2


class TestDistance:
    def test_five_distances(self, five_af):
        assert distance(five_af, FragmentClass.ACYC) == 2
        assert distance(five_af, FragmentClass.NOEVEN) == 2
        assert distance(five_af, FragmentClass.BIP) == 1
        assert distance(five_af, FragmentClass.SYM) == 2

    def test_in_class_distance_zero(self):
        af = ArgumentationFramework("abc", [("a", "b")])
        for fragment in FragmentClass:
            assert distance(af, fragment) == 0


class TestAgainstBruteforce:
    @pytest.mark.parametrize("seed", range(40))
    def test_specialized_match_bruteforce_exactly(self, seed):
        af = random_af(1 + seed % 9, (0.1, 0.25, 0.4)[seed % 3],
                       seed=800 + seed, self_attacks=True)
        for fragment in SPECIALIZED:
            fast = detect(af, fragment, len(af))
            slow = detect_bruteforce(af, fragment, len(af))
            assert fast.members == slow.members, fragment

    @pytest.mark.parametrize("seed", range(20))
    def test_not_found_agreement(self, seed):
        af = random_af(2 + seed % 7, 0.35, seed=900 + seed, self_attacks=True)
        for fragment in SPECIALIZED:
            true_distance = distance(af, fragment)
            for budget in range(true_distance + 2):
                fast = detect(af, fragment, budget)
                slow = detect_bruteforce(af, fragment, budget)
                assert (fast is None) == (slow is None) == (budget < true_distance)

    @pytest.mark.parametrize("seed", range(15))
    def test_soundness_and_budget_monotonicity(self, seed):
        af = random_af(2 + seed % 8, 0.3, seed=1000 + seed, self_attacks=True)
        for fragment in FragmentClass:
            base = detect(af, fragment, len(af))
            assert recognize(af.without(base.members), fragment)
            for extra in (1, 3):
                again = detect(af, fragment, base.size + extra)
                assert again.size == base.size
