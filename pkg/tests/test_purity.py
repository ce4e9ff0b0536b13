"""Purity predicates, module-class predicates and their witnesses"""
from functools import reduce

import pytest

from src.algebra import (
    BudgetExceededError,
    ContainmentError,
    Ideal,
    InfiniteModuleError,
    ModulePresentation,
    Outcome,
    PolicyError,
    PreconditionError,
    QuantificationPolicy,
    Ring,
    check_colon_transfer,
    check_pid_factorization,
    check_product_characterization,
    check_wsas_identity,
    ideal_product,
    is_fully_cancellation,
    is_fully_n_pure,
    is_multiplication_module,
    is_n_pure,
    is_n_pure_ideal,
    is_pure,
    is_ribenboim_pure,
    is_weakly_strongly_2_absorbing_second,
    maximal_n_pure_within,
    maximal_pure_submodules,
    submodule_span,
    whole_module,
    zero_submodule,
)
from src.algebra.oracle import OracleModule, oracle_intersect, oracle_scale, to_element_set, whole
from src.algebra.purity import (
    PurityLevel,
    acting_ideals,
    check_intersection_identity,
    default_policy,
    product_identity,
)


def replay(submodule, ideals):
    """Both sides of the n-purity identity evaluated on explicit element sets"""
    module = OracleModule.of(submodule.parent)
    n_set, m_set = to_element_set(submodule, module), whole(module)
    total = reduce(ideal_product, ideals)
    lhs = oracle_scale(total, n_set)
    rhs = oracle_scale(total, m_set)
    if len(ideals) == 1:
        return lhs.members, oracle_intersect(rhs, n_set).members
    for ideal in ideals:
        rhs = oracle_intersect(rhs, oracle_scale(ideal, n_set))
    return lhs.members, rhs.members


def generators(ideals):
    return [i.generator for i in ideals]


class TestLevelAndPolicy:
    def test_level_must_be_positive(self):
        with pytest.raises(ValueError):
            PurityLevel(0)

    def test_level_names(self):
        assert str(PurityLevel(1)) == "pure"
        assert str(PurityLevel(3)) == "3-pure"

    def test_default_policies(self, z8, integers):
        assert default_policy(z8) == QuantificationPolicy.exhaustive()
        assert default_policy(ModulePresentation.cyclic(8, Ring.integers())) == QuantificationPolicy.residue(8)
        assert not default_policy(integers).is_decisive

    def test_residue_ideals_are_deduplicated(self):
        module = ModulePresentation.cyclic(8, Ring.integers())
        ideals = acting_ideals(module, QuantificationPolicy.residue(8))
        assert generators(ideals) == [0, 9, 2, 4]

    @pytest.mark.parametrize("exponent", [2, 4, 12])
    def test_residue_policy_must_cover_the_exponent(self, exponent):
        module = ModulePresentation.cyclic(8, Ring.integers())
        sub = submodule_span(module, [[2]])
        with pytest.raises(PolicyError):
            is_pure(sub, module, QuantificationPolicy.residue(exponent))
        with pytest.raises(PolicyError):
            is_n_pure(sub, module, 2, QuantificationPolicy.residue(exponent))

    def test_residue_policy_on_a_multiple_of_the_exponent(self):
        module = ModulePresentation.cyclic(8, Ring.integers())
        sub = submodule_span(module, [[2]])
        verdict = is_pure(sub, module, QuantificationPolicy.residue(16))
        assert verdict.failed
        assert is_pure(sub, module).failed

    def test_residue_policy_needs_a_finite_module(self, integers, span):
        with pytest.raises(PolicyError):
            is_pure(span(integers, [2]), integers, QuantificationPolicy.residue(8))

    def test_budget_reaches_enumerating_predicates(self, z12):
        with pytest.raises(BudgetExceededError):
            is_fully_n_pure(z12, 2, budget=4)
        with pytest.raises(BudgetExceededError):
            maximal_pure_submodules(whole_module(z12), z12, budget=4)
        assert is_fully_n_pure(z12, 2, budget=12).outcome is not Outcome.UNKNOWN

    def test_policy_must_fit_the_ring(self, z4, span):
        with pytest.raises(PolicyError):
            is_pure(span(z4, [2]), z4, QuantificationPolicy.bounded(4))

    def test_submodule_of_another_module(self, z4, z8, span):
        with pytest.raises(ContainmentError):
            is_pure(span(z4, [2]), z8)

    def test_verdicts_are_not_booleans(self, z4, span):
        verdict = is_pure(span(z4, [2]), z4)
        with pytest.raises(TypeError):
            bool(verdict)


class TestPure:
    def test_two_in_z4_is_not_pure(self, z4, span):
        verdict = is_pure(span(z4, [2]), z4)
        assert verdict.outcome is Outcome.FAILS
        assert generators(verdict.witness["ideals"]) == [2]
        assert verdict.witness["lhs"] == zero_submodule(z4)
        assert verdict.witness["rhs"] == span(z4, [2])

    def test_zero_and_whole_are_pure(self, z12):
        assert is_pure(zero_submodule(z12), z12).held
        assert is_pure(whole_module(z12), z12).held

    def test_direct_summand_is_pure(self):
        module = ModulePresentation.from_orders([2, 4], Ring.mod(4))
        assert is_pure(submodule_span(module, [[1, 0]]), module).held

    def test_coprime_part_is_pure(self, z12, span):
        assert is_pure(span(z12, [3]), z12).held

    def test_ribenboim(self, z4, span):
        verdict = is_ribenboim_pure(span(z4, [2]), z4)
        assert verdict.failed
        assert verdict.witness["element"] == 2
        assert is_ribenboim_pure(zero_submodule(z4), z4).held
        assert is_ribenboim_pure(whole_module(z4), z4).held


class TestNPure:
    def test_two_in_z4_is_2_pure(self, z4, span):
        assert is_n_pure(span(z4, [2]), z4, 2).held

    def test_two_in_z8_is_not_2_pure(self, z8, span):
        verdict = is_n_pure(span(z8, [2]), z8, 2)
        assert verdict.failed
        assert generators(verdict.witness["ideals"]) == [2, 2]
        assert verdict.witness["lhs"] == zero_submodule(z8)
        assert verdict.witness["rhs"] == span(z8, [4])

    def test_two_in_z8_is_3_pure(self, z8, span):
        assert is_n_pure(span(z8, [2]), z8, 3).held

    @pytest.mark.parametrize("n", range(2, 6))
    def test_powers_of_two(self, n):
        module = ModulePresentation.cyclic(2 ** n)
        sub = submodule_span(module, [[2]])
        assert is_n_pure(sub, module, n).held
        assert is_n_pure(sub, module, n - 1).failed

    @pytest.mark.parametrize("n", range(2, 5))
    def test_even_integers_are_not_n_pure(self, integers, span, n):
        verdict = is_n_pure(span(integers, [2]), integers, n, QuantificationPolicy.bounded(8))
        assert verdict.failed
        assert generators(verdict.witness["ideals"]) == [2] * n

    def test_bounded_scan_without_witness_is_unknown(self, integers):
        verdict = is_n_pure(whole_module(integers), integers, 2, QuantificationPolicy.bounded(8))
        assert verdict.outcome is Outcome.UNKNOWN
        assert verdict.bound == 8

    def test_default_policy_over_z_is_bounded(self, integers):
        verdict = is_n_pure(zero_submodule(integers), integers)
        assert verdict.outcome is Outcome.UNKNOWN

    def test_finite_module_over_z_is_decided(self):
        module = ModulePresentation.cyclic(8, Ring.integers())
        sub = submodule_span(module, [[2]])
        assert generators(is_n_pure(sub, module, 2).witness["ideals"]) == [2, 2]
        # 9Z is a proper ideal of Z acting as the identity on Z8
        assert generators(is_n_pure(sub, module, 3).witness["ideals"]) == [9, 2, 2]

    def test_level_one_is_purity(self, z4, span):
        assert is_n_pure(span(z4, [2]), z4, 1).failed

    def test_ideal_purity(self):
        assert is_n_pure_ideal(Ideal(Ring.mod(4), 2), 2).held
        assert is_n_pure_ideal(Ideal(Ring.mod(8), 2), 2).failed
        assert is_n_pure_ideal(Ideal(Ring.mod(8), 2), 3).held

    @pytest.mark.parametrize("m, gen, n", [(8, 2, 2), (16, 2, 3), (12, 2, 1), (4, 2, 1)])
    def test_witness_replays_through_the_oracle(self, m, gen, n):
        module = ModulePresentation.cyclic(m)
        sub = submodule_span(module, [[gen]])
        verdict = is_n_pure(sub, module, n)
        assert verdict.failed
        lhs, rhs = replay(sub, verdict.witness["ideals"])
        assert lhs != rhs

    def test_witness_replays_over_a_sum(self):
        module = ModulePresentation.from_orders([8, 4], Ring.integers())
        assert is_n_pure(submodule_span(module, [[2, 1], [4, 0]]), module, 2).held
        sub = submodule_span(module, [[2, 0]])
        verdict = is_n_pure(sub, module, 2)
        # 4<(2,0)> = 0 while 2N ∩ 4M = <(4,0)>
        assert verdict.failed
        assert generators(verdict.witness["ideals"]) == [2, 2]
        lhs, rhs = replay(sub, verdict.witness["ideals"])
        assert lhs != rhs

    def test_intersection_identity(self, z4, z8, span):
        assert check_intersection_identity(span(z4, [2]), 2).held
        verdict = check_intersection_identity(span(z8, [2]), 2)
        assert verdict.failed
        assert verdict.witness["rhs"] == span(z8, [4])


class TestFullyNPure:
    def test_z4(self, z4):
        assert is_fully_n_pure(z4, 2).held

    def test_z8(self, z8, span):
        verdict = is_fully_n_pure(z8, 2)
        assert verdict.failed
        assert verdict.witness["submodule"] == span(z8, [2])

    def test_prime_field(self):
        for n in (1, 2, 3):
            assert is_fully_n_pure(ModulePresentation.cyclic(7), n).held

    def test_zero_module(self):
        assert is_fully_n_pure(ModulePresentation.build(Ring.integers(), 1, [[1]]), 2).held

    def test_infinite_module(self, integers):
        with pytest.raises(InfiniteModuleError):
            is_fully_n_pure(integers, 2)


class TestModuleClasses:
    def test_cyclic_is_multiplication(self, z12):
        verdict = is_multiplication_module(z12)
        assert verdict.held
        assert verdict.detail["reason"] == "cyclic"

    def test_klein_group_is_not_multiplication(self):
        module = ModulePresentation.from_orders([2, 2])
        verdict = is_multiplication_module(module)
        assert verdict.failed
        witness = verdict.witness["submodule"]
        assert witness != verdict.witness["image"]
        assert verdict.witness["colon"].generator == 2

    def test_zero_module_is_multiplication(self):
        assert is_multiplication_module(ModulePresentation.build(Ring.integers(), 1, [[1]])).held

    def test_z4_is_not_fully_cancellation(self, z4, span):
        verdict = is_fully_cancellation(z4)
        assert verdict.failed
        assert generators(verdict.witness["ideals"]) == [2]
        assert verdict.witness["first"] == zero_submodule(z4)
        assert verdict.witness["second"] == span(z4, [2])

    def test_prime_field_is_fully_cancellation(self):
        assert is_fully_cancellation(ModulePresentation.cyclic(5)).held


class TestWeaklyStrongly2AbsorbingSecond:
    @pytest.mark.parametrize("p", [2, 3])
    def test_prime_fields(self, p):
        module = ModulePresentation.cyclic(p)
        assert is_weakly_strongly_2_absorbing_second(whole_module(module), module).held
        assert check_wsas_identity(whole_module(module), module).held

    def test_whole_module(self, z4):
        assert is_weakly_strongly_2_absorbing_second(whole_module(z4), z4).held
        assert check_wsas_identity(whole_module(z4), z4).held

    def test_simple_submodule(self, z8, span):
        assert is_weakly_strongly_2_absorbing_second(span(z8, [4]), z8).held
        assert check_wsas_identity(span(z8, [4]), z8).held

    def test_witness(self, span):
        module = ModulePresentation.cyclic(16)
        verdict = is_weakly_strongly_2_absorbing_second(span(module, [2]), module)
        assert verdict.failed
        assert verdict.witness["elements"] == (2, 2)
        assert verdict.witness["submodule"] == span(module, [8])

    def test_identity_needs_the_property(self, span):
        module = ModulePresentation.cyclic(16)
        with pytest.raises(PreconditionError):
            check_wsas_identity(span(module, [2]), module)

    def test_zero_is_excluded(self, z4):
        with pytest.raises(PreconditionError):
            is_weakly_strongly_2_absorbing_second(zero_submodule(z4), z4)

    def test_needs_a_finite_ring(self):
        module = ModulePresentation.cyclic(4, Ring.integers())
        with pytest.raises(PolicyError):
            is_weakly_strongly_2_absorbing_second(whole_module(module), module)


class TestPidFactorization:
    def test_whole_z12(self, z12):
        assert check_pid_factorization(whole_module(z12), [(2, 2), (3, 1)]).held

    def test_single_factor(self, z8, span):
        assert check_pid_factorization(span(z8, [2]), [(2, 1)]).held

    def test_unit_acting_prime(self, z8, span):
        assert check_pid_factorization(span(z8, [2]), [(2, 1), (3, 1)]).held

    @pytest.mark.parametrize("prime_powers", [
        [],
        [(2, 1), (2, 2)],
        [(4, 1)],
        [(2, 0)],
    ])
    def test_malformed_factorisations(self, z12, prime_powers):
        with pytest.raises(PreconditionError):
            check_pid_factorization(whole_module(z12), prime_powers)


class TestMaximalSubmodules:
    def test_z4(self, z4):
        assert maximal_pure_submodules(whole_module(z4), z4) == [zero_submodule(z4)]

    def test_zero_bound(self, z4):
        assert maximal_pure_submodules(zero_submodule(z4), z4) == [zero_submodule(z4)]
        assert maximal_pure_submodules(zero_submodule(z4), z4, strict=False) == [zero_submodule(z4)]

    def test_vector_space_lines(self):
        module = ModulePresentation.from_orders([2, 2], Ring.mod(2))
        found = maximal_pure_submodules(whole_module(module), module)
        assert len(found) == 3
        assert all(s.parent.cardinality() == 4 and len(s.generators()) == 1 for s in found)

    def test_non_strict_admits_the_bound(self, z4):
        found = maximal_pure_submodules(whole_module(z4), z4, strict=False)
        assert whole_module(z4) in found

    def test_infinite(self, integers):
        with pytest.raises(InfiniteModuleError):
            maximal_pure_submodules(whole_module(integers), integers)

    def test_maximal_n_pure(self, z4, z8, span):
        assert maximal_n_pure_within(span(z4, [2]), z4, 2) == span(z4, [2])
        assert maximal_n_pure_within(zero_submodule(z8), z8, 2) == zero_submodule(z8)
        assert maximal_n_pure_within(span(z8, [2]), z8, 2) == span(z8, [4])


class TestProductCharacterization:
    def test_z4(self, z4):
        verdict = check_product_characterization(z4, 2)
        assert verdict.held
        assert verdict.detail["identity"] is Outcome.HOLDS
        assert verdict.detail["fully_n_pure"] is Outcome.HOLDS

    def test_z8(self, z8):
        verdict = check_product_characterization(z8, 2)
        assert verdict.held
        assert verdict.detail["identity"] is Outcome.FAILS
        assert verdict.detail["fully_n_pure"] is Outcome.FAILS

    @pytest.mark.parametrize("n", [2, 3])
    def test_prime_field(self, n):
        assert check_product_characterization(ModulePresentation.cyclic(5), n).held

    def test_z8_at_level_3(self, z8):
        assert check_product_characterization(z8, 3).held

    def test_unrestricted_tuples_break_at_level_3(self, z8):
        assert product_identity(z8, 3).held
        assert product_identity(z8, 3, unrestricted=True).failed

    def test_needs_multiplication(self):
        module = ModulePresentation.from_orders([2, 2])
        with pytest.raises(PreconditionError):
            check_product_characterization(module, 2)

    def test_identity_starts_at_level_2(self, z4):
        with pytest.raises(PreconditionError):
            product_identity(z4, 1)


class TestColonTransfer:
    def test_z12(self, z12, span):
        verdict = check_colon_transfer(span(z12, [2]), z12, 2)
        assert verdict.held
        assert verdict.detail["colon"].generator == 2

    def test_zero_in_the_ring(self, z12):
        verdict = check_colon_transfer(zero_submodule(z12), z12, 2)
        assert verdict.held
        assert verdict.detail["outcome"] is Outcome.HOLDS

    def test_integers_bounded(self, integers, span):
        verdict = check_colon_transfer(span(integers, [2]), integers, 2, QuantificationPolicy.bounded(8))
        assert verdict.held
        assert verdict.detail["outcome"] is Outcome.FAILS
        module_witness = verdict.detail["submodule_verdict"].witness["ideals"]
        ideal_witness = verdict.detail["ideal_verdict"].witness["ideals"]
        assert generators(module_witness) == generators(ideal_witness) == [2, 2]

    def test_needs_faithful(self):
        module = ModulePresentation.cyclic(4, Ring.integers())
        with pytest.raises(PreconditionError):
            check_colon_transfer(whole_module(module), module, 2)

    def test_needs_multiplication(self):
        module = ModulePresentation.from_orders([2, 2], Ring.mod(2))
        with pytest.raises(PreconditionError):
            check_colon_transfer(whole_module(module), module, 2)
