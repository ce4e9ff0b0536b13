"""Claim scans and witness mining over module families"""
import pytest

from src.algebra import (
    CLAIMS,
    ModulePresentation,
    PreconditionError,
    Ring,
    ScanLimits,
    UnknownClaimError,
    conjecture_scan,
    witness_mine,
)
from src.algebra.enumeration import FamilyMember
from src.algebra.scans import describe_scan


def assert_clean(report):
    assert report.scanned_instances > 0
    assert report.violations == [], describe_scan(report)


def found(witnesses):
    return {(w.module, w.submodule) for w in witnesses}


def test_every_claim_is_registered():
    assert set(CLAIMS) == {
        "pure-implies-2pure", "hierarchy", "sufficient-intersection", "sufficient-pure-scaling",
        "wsas-identity", "transitive", "hereditary", "quotient-lifting", "pid-factorization",
        "squarefree-coprime-product", "local-global", "chain-closure", "colon-transfer",
        "product-characterization", "maximal-n-pure", "finite-maximal-pure",
        "af-implies-ribenboim", "fields-fully-pure", "oracle-equivalence",
    }


def test_unknown_claim():
    with pytest.raises(UnknownClaimError):
        conjecture_scan("purity-is-everything", "cyclic:2-4")


def test_unknown_family():
    with pytest.raises(UnknownClaimError):
        conjecture_scan("hierarchy", "quaternions:8")


def test_threads_do_not_change_the_report():
    single = conjecture_scan("hierarchy", "pairs:24", ScanLimits(max_level=3))
    threaded = conjecture_scan("hierarchy", "pairs:24", ScanLimits(max_level=3), threads=4)
    assert single.to_dict() == threaded.to_dict()
    assert single.to_dict()["elapsed"] is None


def test_progress_sees_every_member():
    seen = []
    conjecture_scan("pure-implies-2pure", "cyclic:2-6", progress=seen.append)
    assert seen == [f"Z{m} over Z/{m}" for m in range(2, 7)]


class TestOracleEquivalence:
    @pytest.mark.slow
    @pytest.mark.parametrize("family", ["cyclic:2-64", "cyclic-z:2-64", "pairs:64", "pairs-mod:64"])
    def test_lattice_and_oracle_agree(self, family):
        assert_clean(conjecture_scan("oracle-equivalence", family, ScanLimits(level=3)))


class TestHierarchy:
    @pytest.mark.slow
    @pytest.mark.parametrize("family", ["cyclic:2-64", "pairs:64"])
    def test_pure_implies_2_pure(self, family):
        assert_clean(conjecture_scan("pure-implies-2pure", family))

    @pytest.mark.slow
    @pytest.mark.parametrize("family", ["cyclic:2-64", "pairs:64"])
    def test_levels_are_nested(self, family):
        assert_clean(conjecture_scan("hierarchy", family, ScanLimits(max_level=4)))

    def test_af_implies_ribenboim(self):
        assert_clean(conjecture_scan("af-implies-ribenboim", "cyclic:2-32"))

    def test_fields_are_fully_pure(self):
        assert_clean(conjecture_scan("fields-fully-pure", "primes:2-31", ScanLimits(max_level=3)))


class TestSufficientConditions:
    @pytest.mark.parametrize("level", [2, 3])
    def test_intersection_identity(self, level):
        report = conjecture_scan("sufficient-intersection", "cyclic:2-32", ScanLimits(level=level))
        assert_clean(report)
        assert report.observations["identity_holds"] > 0

    def test_pure_scalings(self):
        report = conjecture_scan("sufficient-pure-scaling", "cyclic:2-32")
        assert_clean(report)
        assert report.observations["premise_holds"] > 0

    def test_pure_scalings_over_z(self):
        assert_clean(conjecture_scan("sufficient-pure-scaling", "pairs:32"))

    def test_wsas_identity(self):
        report = conjecture_scan("wsas-identity", "cyclic:2-16")
        assert_clean(report)
        assert report.observations["wsas_submodules"] > 0

    def test_wsas_identity_skips_z_modules(self):
        assert conjecture_scan("wsas-identity", "cyclic-z:2-8").scanned_instances == 0


class TestStructuralClaims:
    def test_transitive(self):
        assert_clean(conjecture_scan("transitive", "cyclic:2-24"))

    def test_quotient_lifting(self):
        assert_clean(conjecture_scan("quotient-lifting", "cyclic:2-24"))

    def test_hereditary_on_cyclic_modules(self):
        assert_clean(conjecture_scan("hereditary", "cyclic:2-24"))

    def test_hereditary_counterexample(self):
        module = ModulePresentation.from_orders([8, 4], Ring.integers())
        report = conjecture_scan("hereditary", [FamilyMember("Z8+Z4 over Z", module)])
        # K = <(2,1),(4,0)> in canonical form, N = <(0,2)>
        assert ("<(2,1), (0,2)>", "<(0,2)>") in {v.submodules for v in report.violations}
        violation = next(v for v in report.violations if v.submodules == ("<(2,1), (0,2)>", "<(0,2)>"))
        assert violation.ideals
        assert violation.confirmed is True
        assert {"ideals", "confirmed"} <= set(violation.to_dict())

    def test_chain_closure(self):
        assert_clean(conjecture_scan("chain-closure", "cyclic:2-16"))


class TestFactorisation:
    @pytest.mark.slow
    def test_pid_factorization(self):
        assert_clean(conjecture_scan("pid-factorization", "cyclic:2-60"))

    def test_explicit_prime_powers(self):
        limits = ScanLimits(prime_powers=((2, 2), (3, 1)))
        assert_clean(conjecture_scan("pid-factorization", "cyclic-z:2-24", limits))

    @pytest.mark.parametrize("pair", [(2, 3), (2, 5), (3, 5), (6, 5)])
    def test_squarefree_coprime_product(self, pair):
        assert_clean(conjecture_scan("squarefree-coprime-product", "cyclic:2-60", ScanLimits(pair=pair)))

    @pytest.mark.parametrize("pair", [(2, 4), (4, 3)])
    def test_squarefree_coprime_product_preconditions(self, pair):
        with pytest.raises(PreconditionError):
            conjecture_scan("squarefree-coprime-product", "cyclic:2-4", ScanLimits(pair=pair))


class TestLocalGlobal:
    @pytest.mark.slow
    @pytest.mark.parametrize("family", ["cyclic:2-64", "cyclic-z:2-64", "pairs:64"])
    def test_agreement_at_level_2(self, family):
        assert_clean(conjecture_scan("local-global", family))

    def test_agreement_for_purity(self):
        assert_clean(conjecture_scan("local-global", "pairs:36", ScanLimits(level=1)))

    @pytest.mark.parametrize("family", ["cyclic-z:8-8", "cyclic:24-24"])
    def test_breaks_at_level_3(self, family):
        report = conjecture_scan("local-global", family, ScanLimits(level=3))
        assert any(v.submodules == ("<(2)>",) for v in report.violations)
        assert all(v.confirmed is True for v in report.violations)


class TestColonAndProducts:
    @pytest.mark.slow
    @pytest.mark.parametrize("level", [2, 3])
    def test_colon_transfer(self, level):
        report = conjecture_scan("colon-transfer", "cyclic:2-100", ScanLimits(level=level))
        assert_clean(report)

    def test_colon_transfer_skips_unfaithful_modules(self):
        assert conjecture_scan("colon-transfer", "cyclic-z:2-8").scanned_instances == 0

    @pytest.mark.parametrize("level", [2, 3])
    def test_product_characterization(self, level):
        assert_clean(conjecture_scan("product-characterization", "cyclic:2-36", ScanLimits(level=level)))

    def test_product_characterization_unrestricted(self):
        report = conjecture_scan("product-characterization", "cyclic:8-8",
                                 ScanLimits(level=3, unrestricted=True))
        assert len(report.violations) == 1


class TestMaximalSubmodules:
    @pytest.mark.parametrize("family", ["cyclic:2-64", "pairs:36"])
    def test_maximal_n_pure(self, family):
        assert_clean(conjecture_scan("maximal-n-pure", family))

    def test_finite_maximal_pure(self):
        first = conjecture_scan("finite-maximal-pure", "cyclic:2-16")
        second = conjecture_scan("finite-maximal-pure", "cyclic:2-16")
        assert first.violations == []
        assert first.observations["maximal_pure"] > 0
        assert first.to_dict() == second.to_dict()


class TestMining:
    def test_z4_at_level_2(self):
        assert ("Z4 over Z/4", "<(2)>") in found(witness_mine("n-pure-not-(n-1)-pure", "cyclic:2-16"))

    def test_z8_at_level_3(self):
        witnesses = witness_mine("n-pure-not-(n-1)-pure", "cyclic:2-16", ScanLimits(level=3))
        assert ("Z8 over Z/8", "<(2)>") in found(witnesses)
        assert all(w.level == 3 for w in witnesses)

    @pytest.mark.parametrize("level", [2, 3])
    def test_nothing_over_prime_fields(self, level):
        assert witness_mine("n-pure-not-(n-1)-pure", "primes:2-31", ScanLimits(level=level)) == []

    def test_unknown_pattern(self):
        with pytest.raises(UnknownClaimError):
            witness_mine("pure-not-pure", "cyclic:2-4")

    def test_level_must_be_at_least_2(self):
        with pytest.raises(PreconditionError):
            witness_mine("n-pure-not-(n-1)-pure", "cyclic:2-4", ScanLimits(level=1))
