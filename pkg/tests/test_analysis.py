"""Certification engine against brute-force oracles."""
import itertools
import random
from fractions import Fraction

import pytest

from dpcover import analysis, constructions
from dpcover.core import Coloring, Family, make_partial_map
from dpcover.dyadic import ONE, ZERO, Dyadic
from dpcover.errors import OutOfUniverseError, UniverseTooLargeError

from oracles import (
    all_assignments,
    random_family,
    slow_colorable,
    slow_colorings,
    slow_parity_rhs,
    slow_weight,
)


def fam(*entry_lists):
    return Family.of([make_partial_map(entries) for entries in entry_lists])


def to_fraction(d: Dyadic) -> Fraction:
    return Fraction(d.numerator, 1 << d.exponent)


class TestFindColoring:
    def test_matches_slow_oracle_on_random_families(self, rng):
        for _ in range(100):
            family = random_family(rng)
            report = analysis.find_coloring(family, count=True)
            colorings = slow_colorings(family)
            assert report.colorable == bool(colorings)
            assert report.coloring_count == len(colorings)
            if colorings:
                expected_bits = min(
                    sum(f[v] << i for i, v in enumerate(family.universe))
                    for f in colorings
                )
                assert report.witness.bits == expected_bits

    def test_witness_is_smallest_code(self):
        family = fam([(0, 0)], [(1, 0), (2, 0)])
        report = analysis.find_coloring(family)
        assert report.witness.bits == 3
        assert report.enumerated == 4
        counted = analysis.find_coloring(family, count=True)
        assert counted.coloring_count == 3
        assert counted.enumerated == 8

    def test_noncolorable_enumerates_everything(self):
        report = analysis.find_coloring(constructions.binary_family(2).family)
        assert not report.colorable
        assert report.witness is None
        assert report.enumerated == 8

    def test_empty_family_is_colorable(self):
        report = analysis.find_coloring(Family.of([]))
        assert report.colorable
        assert report.witness.bits == 0
        assert report.enumerated == 1

    def test_workers_give_identical_reports(self):
        family = constructions.unary_upper_even(4).family
        one = analysis.find_coloring(family, count=True, chunk_size=32)
        two = analysis.find_coloring(family, count=True, workers=2, chunk_size=32)
        assert one == two
        colorable = constructions.parity_gadget(4).family
        one = analysis.find_coloring(colorable, count=True, chunk_size=16)
        two = analysis.find_coloring(colorable, count=True, workers=2, chunk_size=16)
        assert one == two

    def test_universe_limit(self, monkeypatch):
        big = fam(*([(v, 0)] for v in range(8)))
        with pytest.raises(UniverseTooLargeError):
            analysis.find_coloring(big, limit=7)
        monkeypatch.setenv("DPCOVER_ENUM_LIMIT", "7")
        with pytest.raises(UniverseTooLargeError):
            analysis.find_coloring(big)
        monkeypatch.setenv("DPCOVER_ENUM_LIMIT", "8")
        report = analysis.find_coloring(big)
        assert report.colorable
        assert report.witness.bits == 255  # all ones is the only avoider

    def test_avoiding_codes_ascending_and_complete(self, rng):
        for _ in range(25):
            family = random_family(rng)
            codes = analysis.avoiding_codes(family)
            assert list(codes) == sorted(codes)
            assert len(codes) == len(slow_colorings(family))


class TestSampling:
    def test_deterministic_in_family_trials_seed(self):
        family = constructions.unary_upper_even(4).family
        a = analysis.sample_noncolorability(family, 500, seed=7)
        b = analysis.sample_noncolorability(family, 500, seed=7)
        assert a == b
        c = analysis.sample_noncolorability(family, 500, seed=8)
        assert (a.trials, a.seed) != (c.trials, c.seed)

    def test_empty_family_every_trial_is_a_counterexample(self):
        report = analysis.sample_noncolorability(Family.of([]), 50, seed=1)
        assert report.counterexamples == 50
        assert report.first_counterexample is not None

    def test_colorable_family_finds_counterexamples(self):
        family = constructions.parity_gadget(3).family
        report = analysis.sample_noncolorability(family, 2000, seed=3)
        assert report.counterexamples > 0
        assert report.first_counterexample is not None

    def test_counterexamples_avoid_every_map(self, rng):
        for _ in range(20):
            family = random_family(rng)
            report = analysis.sample_noncolorability(family, 200, seed=11)
            if report.first_counterexample is not None:
                f = report.first_counterexample.as_dict()
                for m in family.maps:
                    assert any(f[v] != bit for v, bit in m.entries)

    def test_large_binary_family_samples_clean(self):
        family = constructions.binary_family(16).family
        report = analysis.sample_noncolorability(family, 1000, seed=0x5EED)
        assert report.counterexamples == 0


class TestWeight:
    def test_matches_slow_oracle(self, rng):
        for _ in range(200):
            family = random_family(rng, max_maps=8)
            assert to_fraction(analysis.weight(family)) == slow_weight(family)

    def test_map_weight(self):
        assert analysis.map_weight(make_partial_map([(0, 0)])) == Dyadic(1, 1)
        assert analysis.map_weight(make_partial_map([])) == ONE
        assert analysis.map_weight(make_partial_map([(0, 0), (5, 1), (9, 0)])) == Dyadic(1, 3)

    def test_certificate_thresholds(self):
        three_triples = fam([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 1), (2, 1)], [(0, 0), (1, 1), (2, 0)])
        assert analysis.weight(three_triples) == Dyadic(3, 3)
        assert analysis.weight_lower_bound_certificate(three_triples) == "colorable-guaranteed"
        assert slow_colorable(three_triples)
        assert analysis.weight_lower_bound_certificate(constructions.binary_family(3).family) == "inconclusive"

    def test_certificate_is_sound_on_random_families(self, rng):
        for _ in range(100):
            family = random_family(rng)
            if analysis.weight_lower_bound_certificate(family) == "colorable-guaranteed":
                assert slow_colorable(family)

    def test_small_cover_certificate(self):
        # A valid 2-fold cover of e edges weighs e * 2^(1-r), so few edges
        # force weight below one.
        g = constructions.lift_to_cover(constructions.unary_upper_even(2).family)
        trimmed = Family.of(g.family.maps[:4])
        assert analysis.weight(trimmed) < ONE
        assert analysis.weight_lower_bound_certificate(trimmed) == "colorable-guaranteed"


class TestSubFamily:
    def test_empty_subset_selects_everything_even(self):
        family = constructions.k43_cover().family
        even, odd = analysis.sub_family(family, ())
        assert even == family
        assert len(odd) == 0

    def test_subset_outside_every_domain(self):
        family = constructions.k43_cover().family
        even, odd = analysis.sub_family(family, (0, 1, 2, 3))
        assert len(even) == len(odd) == 0

    def test_split_by_parity_on_shared_triple(self):
        family = constructions.k54_neq_cover().family
        even, odd = analysis.sub_family(family, (0, 1, 2))
        qualifying = [m for m in family.maps if {0, 1, 2} <= set(m.domain)]
        assert len(qualifying) == 4
        assert set(even.maps) | set(odd.maps) == set(qualifying)
        for m in even.maps:
            assert (m.as_dict()[0] + m.as_dict()[1] + m.as_dict()[2]) % 2 == 0
        for m in odd.maps:
            assert (m.as_dict()[0] + m.as_dict()[1] + m.as_dict()[2]) % 2 == 1

    def test_matches_direct_enumeration(self, rng):
        for _ in range(50):
            family = random_family(rng)
            universe = family.universe
            if not universe:
                continue
            size = rng.randint(1, min(3, len(universe)))
            s = tuple(rng.sample(universe, size))
            even, odd = analysis.sub_family(family, s)
            for m in family.maps:
                d = m.as_dict()
                if set(s) <= d.keys():
                    target = odd if sum(d[v] for v in s) % 2 else even
                    assert m in target
                else:
                    assert m not in even and m not in odd


class TestParityIdentity:
    def test_holds_on_random_families_and_subsets(self, rng):
        for _ in range(60):
            family = random_family(rng, max_vertices=6)
            universe = family.universe
            table = analysis.MultiplicityTable(family)
            for size in range(0, len(universe) + 1):
                for s in itertools.combinations(universe, size):
                    res = analysis.parity_identity(family, s, table=table)
                    assert res.holds

    def test_rhs_matches_fraction_oracle(self, rng):
        for _ in range(25):
            family = random_family(rng, max_vertices=5, max_maps=5)
            universe = family.universe
            if not universe:
                continue
            for _ in range(4):
                size = rng.randint(1, len(universe))
                s = tuple(sorted(rng.sample(universe, size)))
                res = analysis.parity_identity(family, s)
                oracle = slow_parity_rhs(family, s, res.ambient)
                assert to_fraction(res.rhs) == oracle
                assert to_fraction(res.lhs) == oracle

    def test_lhs_uses_weights_of_the_split(self, rng):
        for _ in range(25):
            family = random_family(rng, max_vertices=6)
            universe = family.universe
            if not universe:
                continue
            s = (universe[0],)
            even, odd = analysis.sub_family(family, s)
            res = analysis.parity_identity(family, s)
            assert res.lhs == analysis.weight(even) - analysis.weight(odd)

    def test_weight_one_families_balance_on_every_nonempty_subset(self):
        family = constructions.binary_family(3).family
        for size in range(1, 4):
            for s in itertools.combinations(family.universe, size):
                res = analysis.parity_identity(family, s)
                assert res.holds
                assert res.lhs == ZERO

    def test_ambient_extension_scales_rhs_consistently(self):
        family = fam([(0, 0)])
        inside = analysis.parity_identity(family, (0,))
        extended = analysis.parity_identity(family, (0,), ambient=(0, 1, 2))
        assert inside.holds and extended.holds
        assert inside.lhs == extended.lhs

    def test_shared_table_reuse(self):
        family = constructions.k43_cover().family
        table = analysis.MultiplicityTable(family)
        for s in ((0,), (0, 1), (3,)):
            res = analysis.parity_identity(family, s, table=table)
            assert res.holds
        with pytest.raises(OutOfUniverseError):
            analysis.parity_identity(family, (9,), table=table)

    def test_single_map_signed_extension_count(self, rng):
        """For one map, the signed count of its extensions collapses to a
        power of two with the sign of the map's values on the subset, and to
        zero when the subset leaves the domain."""
        for _ in range(50):
            n = rng.randint(1, 6)
            universe = tuple(range(n))
            k = rng.randint(0, n)
            dom = sorted(rng.sample(universe, k))
            phi = {v: rng.randint(0, 1) for v in dom}
            size = rng.randint(0, n)
            s = set(rng.sample(universe, size))
            signed = 0
            for f in all_assignments(universe):
                if all(f[v] == b for v, b in phi.items()):
                    signed += -1 if sum(f[v] for v in s) % 2 else 1
            if s <= set(dom):
                want = (1 << (n - k)) * (-1 if sum(phi[v] for v in s) % 2 else 1)
            else:
                want = 0
            assert signed == want


class TestMultiplicityTable:
    def test_counts_match_cover_multiplicity(self, rng):
        for _ in range(25):
            family = random_family(rng, max_vertices=5)
            table = analysis.MultiplicityTable(family)
            for bits in range(1 << len(table.ambient)):
                coloring = Coloring(table.ambient, bits)
                assert table.multiplicity(bits) == analysis.cover_multiplicity(family, coloring)

    def test_histogram_totals(self):
        family = constructions.binary_family(3).family
        table = analysis.MultiplicityTable(family)
        hist = table.histogram()
        assert hist == {1: 128}
        assert table.min() == table.max() == 1

    def test_ambient_must_contain_universe(self):
        family = fam([(0, 0), (5, 1)])
        with pytest.raises(OutOfUniverseError):
            analysis.MultiplicityTable(family, ambient=(0, 1))
        table = analysis.MultiplicityTable(family, ambient=(0, 1, 5))
        assert table.ambient == (0, 1, 5)

    def test_limit_guard(self):
        family = fam(*([(v, 0)] for v in range(6)))
        with pytest.raises(UniverseTooLargeError):
            analysis.MultiplicityTable(family, limit=5)


class TestCoverMultiplicity:
    def test_weight_one_family_has_multiplicity_one_everywhere(self):
        family = constructions.binary_family(3).family
        for f in all_assignments(family.universe):
            coloring = Coloring.from_assignment(f)
            assert analysis.cover_multiplicity(family, coloring) == 1

    def test_k43_all_zeros(self):
        family = constructions.k43_cover().family
        coloring = Coloring(family.universe, 0)
        assert analysis.cover_multiplicity(family, coloring) == 1

    def test_empty_family(self):
        assert analysis.cover_multiplicity(Family.of([]), Coloring((0,), 1)) == 0


class TestWeightOneAudit:
    def test_binary_families_are_consistent(self):
        for r in (2, 3):
            audit = analysis.weight_one_audit(constructions.binary_family(r).family)
            assert audit.consistent
            assert audit.family_weight == ONE
            assert audit.verdict == "consistent"

    def test_weight_clause(self):
        audit = analysis.weight_one_audit(fam([(0, 0)]))
        clauses = {v.clause for v in audit.violations}
        assert "weight-is-one" in clauses

    def test_hand_built_weight_one_family_is_consistent(self):
        family = fam([(0, 0)], [(0, 1), (1, 0)], [(0, 1), (1, 1)])
        audit = analysis.weight_one_audit(family)
        assert audit.consistent
        assert audit.first_violation is None

    def test_weight_one_but_colorable(self):
        # Two singleton maps on distinct vertices weigh one yet leave the
        # all-ones coloring uncovered, so every downstream clause trips.
        family = fam([(0, 0)], [(1, 0)])
        audit = analysis.weight_one_audit(family)
        assert audit.family_weight == ONE
        clauses = [v.clause for v in audit.violations]
        assert clauses == ["no-coloring", "multiplicity-one", "parity-balance"]
        assert audit.verdict == "violated:no-coloring"

    def test_noncolorable_but_overweight(self):
        # Adding a redundant map to a weight-one family keeps it
        # non-colorable while breaking weight, multiplicity, and balance.
        base = constructions.binary_family(2).family
        family = Family.of(base.maps + (make_partial_map([(0, 0), (1, 0)]),))
        audit = analysis.weight_one_audit(family)
        clauses = [v.clause for v in audit.violations]
        assert clauses == ["weight-is-one", "multiplicity-one", "parity-balance"]
        assert "no-coloring" not in clauses

    def test_parity_clause_reports_offending_subset(self):
        audit = analysis.weight_one_audit(fam([(0, 0)]))
        parity = [v for v in audit.violations if v.clause == "parity-balance"]
        assert parity and "S=" in parity[0].detail
        assert audit.verdict == "violated:weight-is-one"

    def test_limit_guard(self, monkeypatch):
        family = constructions.binary_family(3).family
        with pytest.raises(UniverseTooLargeError):
            analysis.weight_one_audit(family, limit=6)
        monkeypatch.setenv("DPCOVER_AUDIT_LIMIT", "6")
        with pytest.raises(UniverseTooLargeError):
            analysis.weight_one_audit(family)


class TestDomination:
    def test_weight_one_noncolorable_families_have_no_orphans(self):
        for family in (
            constructions.binary_family(2).family,
            constructions.binary_family(3).family,
            constructions.binary_family(4).family,
            constructions.k43_cover().family,
        ):
            assert analysis.weight(family) == ONE
            assert analysis.domination_orphans(family) == ()

    def test_removing_a_map_creates_an_avoider(self):
        family = constructions.binary_family(3).family
        smaller = Family.of(family.maps[1:])
        assert analysis.weight(smaller) < ONE
        assert slow_colorable(smaller)

    def test_orphans_found_when_domains_are_incomparable(self):
        family = fam([(0, 0), (1, 0)], [(2, 0), (3, 0)])
        assert analysis.domination_orphans(family) == family.maps

    def test_nested_domains_have_no_orphan_below(self):
        family = fam([(0, 0)], [(0, 1), (1, 0)])
        orphans = analysis.domination_orphans(family)
        assert orphans == (make_partial_map([(0, 1), (1, 0)]),)


class TestComplementPairParity:
    def test_even_uniformity_never_mismatches(self, rng):
        for _ in range(40):
            r = rng.choice([2, 4])
            n = rng.randint(r, 7)
            maps = []
            seen = set()
            for _ in range(rng.randint(1, 4)):
                dom = tuple(sorted(rng.sample(range(n), r)))
                if dom in seen:
                    continue
                seen.add(dom)
                phi = make_partial_map([(v, rng.randint(0, 1)) for v in dom])
                maps += [phi, phi.complement()]
            family = Family.of(maps)
            assert analysis.complement_pair_parity_mismatches(family) == ()

    def test_odd_uniformity_always_mismatches(self):
        phi = make_partial_map([(0, 0), (1, 0), (2, 1)])
        family = Family.of([phi, phi.complement()])
        assert analysis.complement_pair_parity_mismatches(family) == ((0, 1, 2),)

    def test_non_complementary_pairs_ignored(self):
        family = fam([(0, 0), (1, 0)], [(0, 0), (1, 1)])
        assert analysis.complement_pair_parity_mismatches(family) == ()


class TestClaimChecking:
    def test_each_kind_passes_and_fails(self):
        family = constructions.k43_cover().family
        passing = [
            {"kind": "map-count", "value": 8},
            {"kind": "universe-size", "value": 4},
            {"kind": "uniform", "r": 3},
            {"kind": "binary"},
            {"kind": "valid-cover", "edges": 4},
            {"kind": "weight", "value": "1"},
            {"kind": "no-coloring"},
            {"kind": "multiplicity-histogram", "histogram": {"1": 16}},
        ]
        for claim in passing:
            result = analysis.check_claim(family, claim)
            assert result.ok, (claim, result.message)
        failing = [
            {"kind": "map-count", "value": 9},
            {"kind": "universe-size", "value": 5},
            {"kind": "uniform", "r": 4},
            {"kind": "unary"},
            {"kind": "valid-cover", "edges": 5},
            {"kind": "weight", "value": "1/2"},
            {"kind": "colorable"},
            {"kind": "coloring-count", "value": 3},
            {"kind": "multiplicity-histogram", "histogram": {"1": 15}},
        ]
        for claim in failing:
            result = analysis.check_claim(family, claim)
            assert not result.ok, claim
            assert result.message

    def test_quantified_kinds_on_colorable_gadgets(self):
        neq = constructions.k54_neq_cover().family
        assert analysis.check_claim(neq, {"kind": "forces-distinct", "vertices": [3, 4]}).ok
        assert not analysis.check_claim(neq, {"kind": "forces-equal", "vertices": [3, 4]}).ok
        eq = constructions.k54_eq_cover().family
        assert analysis.check_claim(eq, {"kind": "forces-equal", "vertices": [3, 4]}).ok
        par = constructions.parity_gadget(2).family
        assert analysis.check_claim(
            par, {"kind": "pair-disagreement", "pairs": [[0, 2], [1, 3]]}
        ).ok
        assert analysis.check_claim(par, {"kind": "odd-ones", "vertices": [0, 1]}).ok
        assert not analysis.check_claim(par, {"kind": "odd-ones", "vertices": [0]}).ok
        assert analysis.check_claim(
            par,
            {"kind": "transversal-domains", "pairs": [[0, 2], [1, 3]]},
        ).ok
        copy = constructions.copy_gadget((0, 1, 2), (3, 4, 5)).family
        assert analysis.check_claim(
            copy, {"kind": "constant-implies-constant", "src": [0, 1, 2], "dst": [3, 4, 5]}
        ).ok
        assert not analysis.check_claim(
            copy, {"kind": "constant-implies-constant", "src": [3, 4, 5], "dst": [0, 1, 2]}
        ).ok
        two = constructions.two_edge_gadget().family
        assert analysis.check_claim(
            two, {"kind": "never-both-constant", "left": [0, 1, 2], "right": [3, 4, 5]}
        ).ok
        nine = constructions.nine_edge_gadget().family
        assert analysis.check_claim(
            nine, {"kind": "constant-side", "left": [0, 1, 2], "right": [3, 4, 5]}
        ).ok

    def test_sampled_claim(self):
        family = constructions.binary_family(3).family
        good = analysis.check_claim(
            family, {"kind": "sampled-no-coloring", "trials": 100, "seed": 5}
        )
        assert good.ok
        colorable = constructions.parity_gadget(3).family
        bad = analysis.check_claim(
            colorable, {"kind": "sampled-no-coloring", "trials": 2000, "seed": 5}
        )
        assert not bad.ok

    def test_vertices_outside_universe_fail_cleanly(self):
        family = constructions.k54_neq_cover().family
        result = analysis.check_claim(family, {"kind": "forces-distinct", "vertices": [3, 99]})
        assert not result.ok
        assert "outside the universe" in result.message

    def test_unknown_kind_fails(self):
        result = analysis.check_claim(Family.of([]), {"kind": "mystery"})
        assert not result.ok
        assert "unknown claim kind" in result.message

    def test_check_claims_order_preserved(self):
        family = constructions.k43_cover().family
        claims = [{"kind": "map-count", "value": 8}, {"kind": "unary"}]
        results = analysis.check_claims(family, claims)
        assert [r.kind for r in results] == ["map-count", "unary"]
        assert results[0].ok and not results[1].ok
