import pytest

from afbackdoor import (
    ArgumentationFramework,
    OracleGuardError,
    Semantics,
    canonical_extensions,
    credulous_oracle,
    enumerate_all,
    enumerate_oracle,
    satisfies,
    skeptical_oracle,
)
from afbackdoor.oracle import GUARD_ENV_VAR

from conftest import all_subsets, random_af


def as_sets(family):
    return {frozenset(ext) for ext in family}


class TestEnumerate:
    def test_five_complete(self, five_af):
        assert as_sets(enumerate_oracle(five_af, Semantics.COM)) == {
            frozenset(), frozenset({"1", "3", "5"})}

    def test_five_stable(self, five_af):
        assert as_sets(enumerate_oracle(five_af, Semantics.STB)) == {
            frozenset({"1", "3", "5"})}

    def test_single_unattacked_argument(self):
        af = ArgumentationFramework(["a"])
        for semantics in Semantics:
            expected = {frozenset(), frozenset({"a"})} \
                if semantics is Semantics.ADM else {frozenset({"a"})}
            assert as_sets(enumerate_oracle(af, semantics)) == expected

    def test_canonical_order(self, five_af):
        family = enumerate_oracle(five_af, Semantics.ADM)
        assert list(family) == list(canonical_extensions(family))
        assert family[0] == frozenset()

    def test_guard_refuses(self):
        af = ArgumentationFramework([f"a{i}" for i in range(25)])
        with pytest.raises(OracleGuardError):
            enumerate_oracle(af, Semantics.COM)
        assert enumerate_oracle(af, Semantics.STB, guard=25)

    def test_guard_env_override(self, monkeypatch):
        af = ArgumentationFramework(["a", "b"], [("a", "b")])
        monkeypatch.setenv(GUARD_ENV_VAR, "1")
        with pytest.raises(OracleGuardError):
            enumerate_oracle(af, Semantics.COM)

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_satisfies_definition(self, seed):
        af = random_af(1 + seed % 7, 0.25, seed=40 + seed, self_attacks=True)
        families = enumerate_all(af)
        for semantics in Semantics:
            expected = {s for s in all_subsets(af)
                        if satisfies(af, s, semantics)}
            assert as_sets(families[semantics]) == expected, semantics


class TestAcceptance:
    def test_five_credulous_complete(self, five_af):
        for name in ("1", "3", "5"):
            assert credulous_oracle(five_af, Semantics.COM, name)
        for name in ("2", "4"):
            assert not credulous_oracle(five_af, Semantics.COM, name)

    def test_five_skeptical_complete_all_false(self, five_af):
        for name in five_af.arguments:
            assert not skeptical_oracle(five_af, Semantics.COM, name)

    def test_five_skeptical_stable(self, five_af):
        assert skeptical_oracle(five_af, Semantics.STB, "3")

    def test_self_attacker_never_credulous(self):
        af = ArgumentationFramework(["a", "b"], [("a", "a"), ("b", "a")])
        assert not credulous_oracle(af, Semantics.ADM, "a")

    def test_empty_stable_family_is_vacuously_skeptical(self):
        af = ArgumentationFramework(["a"], [("a", "a")])
        assert enumerate_oracle(af, Semantics.STB) == ()
        assert skeptical_oracle(af, Semantics.STB, "a")

    def test_unknown_argument(self, five_af):
        with pytest.raises(ValueError):
            credulous_oracle(five_af, Semantics.COM, "9")


class TestFamilyStructure:
    @pytest.mark.parametrize("seed", range(20))
    def test_containment_chain(self, seed):
        af = random_af(1 + seed % 7, 0.3, seed=70 + seed, self_attacks=True)
        fam = {sem: as_sets(ext) for sem, ext in enumerate_all(af).items()}
        assert fam[Semantics.STB] <= fam[Semantics.SEM]
        assert fam[Semantics.SEM] <= fam[Semantics.PRF]
        assert fam[Semantics.PRF] <= fam[Semantics.COM]
        assert fam[Semantics.COM] <= fam[Semantics.ADM]

    @pytest.mark.parametrize("seed", range(20))
    def test_preferred_are_maximal_admissible(self, seed):
        af = random_af(1 + seed % 7, 0.25, seed=130 + seed)
        adm = as_sets(enumerate_oracle(af, Semantics.ADM))
        maximal = {s for s in adm if not any(s < t for t in adm)}
        assert as_sets(enumerate_oracle(af, Semantics.PRF)) == maximal

    @pytest.mark.parametrize("seed", range(20))
    def test_semi_stable_are_range_maximal_admissible(self, seed):
        af = random_af(1 + seed % 7, 0.25, seed=190 + seed)
        adm = as_sets(enumerate_oracle(af, Semantics.ADM))
        ranges = {s: af.range_of(s) for s in adm}
        maximal = {s for s in adm
                   if not any(ranges[s] < ranges[t] for t in adm)}
        assert as_sets(enumerate_oracle(af, Semantics.SEM)) == maximal

    @pytest.mark.parametrize("seed", range(8))
    def test_empty_set_always_admissible_so_skeptical_adm_false(self, seed):
        af = random_af(1 + seed, 0.3, seed=260 + seed, self_attacks=True)
        assert frozenset() in as_sets(enumerate_oracle(af, Semantics.ADM))
        for name in af.arguments:
            assert not skeptical_oracle(af, Semantics.ADM, name)

    @pytest.mark.parametrize("seed", range(8))
    def test_semi_stable_family_never_empty(self, seed):
        af = random_af(1 + seed, 0.4, seed=300 + seed, self_attacks=True)
        assert enumerate_oracle(af, Semantics.SEM)
