import json

import pytest

from blfsig import fibration as fib
from blfsig import ratlin, surface
from blfsig.fibration import (
    ConsistencyError, FibrationSpec, LefschetzDatum, RoundRegion,
    chain_twist_datum, family_spec,
)
from blfsig.surface import TypeI, TypeII
from blfsig.verify import random_valid_spec
from blfsig.words import ChainTwist, Word, chain_word, gen_word


class TestLefschetzData:
    def test_conjugator_realizes_chain_twist(self):
        for g in (1, 2, 3):
            for i in range(1, 2 * g + 2):
                datum = chain_twist_datum(i, g)
                M = surface.word_to_matrix(datum.word())
                want = surface.twist_matrix(surface.chain_class(i, g), g)
                assert (M == want).all(), (g, i)

    def test_separating_datum_acts_trivially(self):
        d = LefschetzDatum(TypeII(1), chain_word(2, [1, 3]))
        assert (surface.word_to_matrix(d.word()) == ratlin.identity(4)).all()


class TestFamilies:
    def test_mgn_counts(self):
        s = family_spec("mgn", 1, 1)
        assert len(s.lefschetz) == 8 and len(s.rounds) == 1
        assert all(isinstance(d.cycle, TypeI) for d in s.lefschetz)
        assert isinstance(s.rounds[0].cycle, TypeI)

    def test_mgn_flags(self):
        assert family_spec("mgn", 2, 2).spin
        assert not family_spec("mgn", 2, 1).spin
        assert family_spec("mgn", 1, 1).simply_connected

    def test_tilde_counts_and_flags(self):
        s = family_spec("mgn_tilde", 2, 1)
        assert len(s.lefschetz) == 28
        assert s.spin  # g even
        assert not family_spec("mgn_tilde", 3, 1).spin

    def test_parameter_ranges(self):
        with pytest.raises(ValueError):
            family_spec("mgn", 0, 1)
        with pytest.raises(ValueError):
            family_spec("mgn_tilde", 1, 1)
        with pytest.raises(ValueError):
            family_spec("mgn", 1, 0)
        with pytest.raises(ValueError):
            family_spec("nope", 1, 1)

    def test_signatures_small(self):
        assert fib.total_signature(family_spec("mgn", 1, 1)) == -4
        assert fib.total_signature(family_spec("mgn", 2, 3)) == -24
        assert fib.total_signature(family_spec("mgn_tilde", 2, 1)) == -16

    def test_euler_small(self):
        assert fib.euler_characteristic(family_spec("mgn", 1, 1)) == 10
        assert fib.euler_characteristic(family_spec("mgn_tilde", 2, 1)) == 26


class TestValidation:
    def test_family_passes(self):
        for spec in (family_spec("mgn", 1, 1), family_spec("mgn", 2, 1),
                     family_spec("mgn_tilde", 2, 1)):
            rep = fib.validate(spec)
            assert rep.ok, [str(i) for i in rep.issues]

    def test_trivial_bundle_passes(self):
        spec = FibrationSpec((2,))
        assert fib.validate(spec).ok
        assert fib.total_signature(spec) == 0
        assert fib.euler_characteristic(spec) == -4

    def test_generator_context_failure(self):
        # t_{2g} is not in the stabiliser generating set of a type I cycle
        bad = FibrationSpec((2,), (), (RoundRegion(0, TypeI(), gen_word(2, ChainTwist(4))),))
        rep = fib.validate(bad)
        assert not rep.ok
        assert any("t4" in str(i) for i in rep.issues)

    def test_mismatched_round_monodromy(self):
        # Hurwitz part empty, fold monodromy a nontrivial transvection power
        bad = FibrationSpec((1,), (), (RoundRegion(0, TypeI(), gen_word(1, ChainTwist(3), -4)),))
        rep = fib.validate(bad)
        assert not rep.ok

    def test_left_handed_twist_rejected(self):
        class NegDatum(LefschetzDatum):
            def word(self):
                return gen_word(1, ChainTwist(3), -1)

        bad = FibrationSpec((1,), (NegDatum(TypeI(), Word(1)),), ())
        rep = fib.validate(bad)
        assert any("transvection" in str(i) for i in rep.issues)

    def test_inessential_lefschetz_cycle(self):
        bad = FibrationSpec((2,), (LefschetzDatum(TypeII(2), Word(2)),), ())
        rep = fib.validate(bad)
        assert any("essential" in str(i) for i in rep.issues)

    def test_fold_on_genus_zero_component(self):
        # the first fold drops component 0 to genus 0, the second cannot apply
        bad = FibrationSpec((1,), (), (
            RoundRegion(0, TypeI(), Word(1)),
            RoundRegion(0, TypeI(), Word(0)),
        ))
        rep = fib.validate(bad)
        assert not rep.ok

    def test_unrealizable_input_caught_by_integrality(self):
        # passes homological validation (separating twists are invisible)
        # but no fibration exists: the signature formula is not an integer
        g, h = 2, 1
        mono = chain_word(g, range(1, 2 * h + 1), 4 * h + 2)
        spec = FibrationSpec((g,), (), (RoundRegion(0, TypeII(h), mono),))
        assert fib.validate(spec).ok
        with pytest.raises(ConsistencyError):
            fib.total_signature(spec)

    def test_single_lefschetz_non_integer(self):
        spec = FibrationSpec((1,), (chain_twist_datum(1, 1),), ())
        with pytest.raises(ConsistencyError):
            fib.total_signature(spec)


class TestMeyerPath:
    def test_families_agree(self):
        for spec in (family_spec("mgn", 1, 1), family_spec("mgn", 1, 2),
                     family_spec("mgn", 2, 1), family_spec("mgn_tilde", 2, 1)):
            assert fib.signature_meyer_path(spec) == fib.total_signature(spec)

    def test_trivial_bundle(self):
        assert fib.signature_meyer_path(FibrationSpec((3,))) == 0

    def test_pure_lefschetz_degeneration(self):
        # (t_1 t_2)^6 = 1 at genus 1: twelve fishtail fibers over the sphere,
        # no folds; both pipelines must give 12 * (-2/3) = -8
        data = tuple(chain_twist_datum(i, 1) for _ in range(6) for i in (1, 2))
        spec = FibrationSpec((1,), data, (), simply_connected=True)
        rep = fib.validate(spec)
        assert rep.ok, [str(i) for i in rep.issues]
        assert fib.total_signature(spec) == -8
        assert fib.signature_meyer_path(spec) == -8
        assert fib.euler_characteristic(spec) == 12
        homeo = fib.homeomorphism_report(-8, 12, False, True)
        assert homeo.summands == ((1, "CP2"), (9, "CP2bar"))

    def test_random_specs_agree(self, rng):
        for _ in range(15):
            spec = random_valid_spec(rng, max_genus=3)
            assert fib.validate(spec).ok
            assert fib.total_signature(spec) == fib.signature_meyer_path(spec)


class TestSeparatingFold:
    def spec(self):
        g, h = 2, 1
        mono = chain_word(g, range(1, 2 * h + 1), 4 * h + 2) * \
            chain_word(g, range(2 * h + 2, 2 * g + 2), -(4 * (g - h) + 2))
        return FibrationSpec((g,), (), (RoundRegion(0, TypeII(h), mono),))

    def test_validates_and_vanishes(self):
        spec = self.spec()
        assert fib.validate(spec).ok
        assert fib.total_signature(spec) == 0
        assert fib.signature_meyer_path(spec) == 0

    def test_component_bookkeeping(self):
        stages = fib.component_stages(self.spec())
        assert stages[0] == [2]
        assert stages[-1] == [1, 1]
        assert fib.euler_characteristic(self.spec()) == -2


class TestDisconnectedFiber:
    def test_untouched_component_only_shifts_euler(self):
        base = family_spec("mgn", 2, 1)
        spec = FibrationSpec((2, 3), base.lefschetz, base.rounds)
        assert fib.validate(spec).ok
        assert fib.total_signature(spec) == -8
        assert fib.signature_meyer_path(spec) == -8
        # top: (2-4) + (2-6); bottom: (2-2) + (2-6); 16 Lefschetz points
        assert fib.euler_characteristic(spec) == -6 + 16 - 4
        rep = fib.compute_report(spec)
        assert any("carry no folds" in n for n in rep.notes)


class TestHomeomorphismReport:
    def test_non_spin(self):
        rep = fib.homeomorphism_report(-4, 10, False, True)
        assert rep.summands == ((2, "CP2"), (6, "CP2bar"))
        assert rep.display == "#2CP² # 6CP̄²"

    def test_spin_with_negative_signature(self):
        rep = fib.homeomorphism_report(-16, 30, True, True)
        assert rep.summands == ((1, "E2"), (3, "S2xS2"))
        assert rep.display == "E(2) # 3(S²×S²)"
        rep = fib.homeomorphism_report(-16, 26, True, True)
        assert rep.display == "E(2) # (S²×S²)"

    def test_spin_zero_signature(self):
        assert fib.homeomorphism_report(0, 4, True, True).display == "S²×S²"
        assert fib.homeomorphism_report(0, 2, True, True).display == "S⁴"

    def test_not_simply_connected(self):
        assert fib.homeomorphism_report(-4, 10, False, False).status == "indeterminate"

    def test_rokhlin_violation(self):
        with pytest.raises(ConsistencyError):
            fib.homeomorphism_report(-8, 14, True, True)

    def test_negative_b2(self):
        with pytest.raises(ConsistencyError):
            fib.homeomorphism_report(-6, 6, False, True)

    def test_recomposition(self):
        for sig, euler, spin in [(-4, 10, False), (-16, 30, True), (0, 4, True),
                                 (-8, 12, False), (-36, 46, False)]:
            rep = fib.homeomorphism_report(sig, euler, spin, True)
            b2p = sum(k * {"CP2": 1, "CP2bar": 0, "S2xS2": 1, "E2": 3}[b]
                      for k, b in rep.summands)
            b2m = sum(k * {"CP2": 0, "CP2bar": 1, "S2xS2": 1, "E2": 19}[b]
                      for k, b in rep.summands)
            assert b2p + b2m == euler - 2
            assert b2p - b2m == sig


class TestAbelianization:
    def test_type_one(self):
        assert fib.abelianization(1, TypeI()) == "Z ⊕ Z/2"
        assert fib.abelianization(2, TypeI()) == "Z ⊕ (Z/2)²"
        assert fib.abelianization(5, TypeI()) == "Z ⊕ (Z/2)²"

    def test_type_two_values(self):
        assert fib.abelianization(2, TypeII(1)) == "Z ⊕ Z/12"
        assert fib.abelianization(3, TypeII(1)) == "Z ⊕ Z/4"

    def test_torsion_matches_gcd(self):
        from math import gcd
        for g in range(2, 9):
            for h in range(1, g):
                want = gcd(4 * h * (2 * h + 1), 4 * (g - h) * (2 * (g - h) + 1))
                assert fib.separating_torsion(g, h) == want

    def test_range_errors(self):
        with pytest.raises(ValueError):
            fib.abelianization(2, TypeII(2))
        with pytest.raises(ValueError):
            fib.separating_torsion(1, 1)


class TestJson:
    def test_round_trip_family(self):
        spec = family_spec("mgn", 2, 1)
        doc = json.loads(json.dumps(fib.spec_to_json(spec)))
        spec2 = fib.spec_from_json(doc)
        assert fib.validate(spec2).ok
        assert fib.total_signature(spec2) == fib.total_signature(spec) == -8
        assert fib.euler_characteristic(spec2) == fib.euler_characteristic(spec)
        assert spec2.spin == spec.spin

    def test_round_trip_separating(self):
        g, h = 3, 1
        mono = chain_word(g, range(1, 2 * h + 1), 4 * h + 2) * \
            chain_word(g, range(2 * h + 2, 2 * g + 2), -(4 * (g - h) + 2))
        spec = FibrationSpec((g,), (), (RoundRegion(0, TypeII(h), mono),))
        doc = fib.spec_to_json(spec)
        spec2 = fib.spec_from_json(doc)
        assert spec2.rounds[0].cycle == TypeII(1)
        assert fib.total_signature(spec2) == 0

    def test_version_enforced(self):
        doc = fib.spec_to_json(family_spec("mgn", 1, 1))
        doc["spec_version"] = 99
        with pytest.raises(ValueError):
            fib.spec_from_json(doc)

    def test_report_dict_json_round_trip(self):
        rep = fib.compute_report(family_spec("mgn", 1, 1))
        doc = rep.to_dict()
        assert json.loads(json.dumps(doc)) == doc
        assert doc["signature"] == -4
        assert doc["sigma_terms"][0][1] == "-2/3"


class TestReport:
    def test_family_report(self):
        rep = fib.compute_report(family_spec("mgn", 1, 1))
        assert rep.signature == -4 and rep.euler == 10
        assert rep.two_paths_agree
        assert rep.homeomorphism.summands == ((2, "CP2"), (6, "CP2bar"))

    def test_report_rejects_invalid(self):
        bad = FibrationSpec((2,), (), (RoundRegion(0, TypeI(), gen_word(2, ChainTwist(4))),))
        with pytest.raises(ConsistencyError):
            fib.compute_report(bad)
